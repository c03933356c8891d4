#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "hilb3/weight.hpp"

using hilb3::Rational;
using hilb3::Specialization;
using hilb3::VirtualCharacter;
using hilb3::Weight;

TEST_CASE("weight arithmetic and printing") {
  const Weight a = Weight::w() - Rational(2) * Weight::z();
  CHECK(a.to_string() == "w-2z");
  CHECK((-a).to_string() == "-w+2z");
  CHECK((Rational(1, 2) * Weight::w() - Weight::z()).to_string() == "(1/2)w-z");
  CHECK(Weight().to_string() == "0");
  CHECK((a - a).is_zero());
}

TEST_CASE("evaluation is linear") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> pick(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const Weight a(Rational(pick(rng), 7), Rational(pick(rng), 3));
    const Weight b(Rational(pick(rng), 5), Rational(pick(rng), 2));
    const Rational s(pick(rng), 11);
    const Specialization spec{Rational(pick(rng), 13), Rational(pick(rng), 17)};
    CHECK(evaluate(a + b, spec) == evaluate(a, spec) + evaluate(b, spec));
    CHECK(evaluate(s * a, spec) == s * evaluate(a, spec));
  }
}

TEST_CASE("evaluate_nonzero rejects a vanishing weight") {
  const Specialization spec{Rational(2), Rational(1)};
  CHECK_THROWS_AS(evaluate_nonzero(Weight::w() - Rational(2) * Weight::z(), spec),
                  hilb3::DegenerateSpecialization);
  CHECK(evaluate_nonzero(Weight::w(), spec) == Rational(2));
}

TEST_CASE("virtual character merges terms") {
  VirtualCharacter c;
  c.add(Weight::w(), 2);
  c.add(Weight::z());
  c.add(Weight());
  c.add(Weight::w(), -1);
  CHECK(c.rank() == 3);
  CHECK(c.multiplicity(Weight::w()) == 1);
  CHECK(c.fixed_rank() == 1);
  CHECK(c.moving_part().rank() == 2);
  const Specialization spec{Rational(3), Rational(5)};
  CHECK(c.euler_class(spec) == Rational(15));

  VirtualCharacter d;
  d.add(Weight::z());
  d.add(Weight::w());
  d.add(Weight());
  CHECK(c == d);
  c.add(d, -1);
  CHECK(c.terms().empty());
}

TEST_CASE("negative multiplicities divide") {
  VirtualCharacter c;
  c.add(Weight::w(), -2);
  CHECK(c.euler_class({Rational(3), Rational(1)}) == Rational(1, 9));
}

TEST_CASE("sampler is deterministic and avoids forbidden weights") {
  const std::vector<Weight> forbidden = {Weight::w(), Weight::z(), Weight::w() - Weight::z(),
                                         Weight::w() + Weight::z()};
  hilb3::SpecializationSampler a(42);
  hilb3::SpecializationSampler b(42);
  std::vector<Specialization> seen;
  for (int k = 0; k < 20; ++k) {
    const Specialization p = a.next(forbidden);
    CHECK(p == b.next(forbidden));
    for (const Weight& f : forbidden) {
      CHECK_FALSE(evaluate(f, p).is_zero());
    }
    for (const Specialization& q : seen) {
      CHECK(p.w_value * q.z_value != p.z_value * q.w_value);
    }
    seen.push_back(p);
  }
  CHECK(hilb3::sample_specialization(42, forbidden) == seen.front());
  hilb3::SpecializationSampler other(43);
  CHECK_FALSE(other.next(forbidden) == seen.front());
}

TEST_CASE("sampler rejects the zero weight") {
  const std::vector<Weight> forbidden = {Weight()};
  hilb3::SpecializationSampler s(0);
  CHECK_THROWS_AS(s.next(forbidden), std::invalid_argument);
}
