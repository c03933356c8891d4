#include "hilb3/weight.hpp"

#include <array>

namespace hilb3 {

Weight& Weight::operator+=(const Weight& o) {
  coeff_w_ += o.coeff_w_;
  coeff_z_ += o.coeff_z_;
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  coeff_w_ -= o.coeff_w_;
  coeff_z_ -= o.coeff_z_;
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  coeff_w_ *= s;
  coeff_z_ *= s;
  return *this;
}

namespace {

void append_term(std::string& out, const Rational& c, char var) {
  if (c.is_zero()) {
    return;
  }
  if (c.sign() < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  const Rational a = c.abs();
  if (a != Rational(1)) {
    out += a.is_integer() ? a.to_string() : "(" + a.to_string() + ")";
  }
  out += var;
}

}  // namespace

std::string Weight::to_string() const {
  std::string out;
  append_term(out, coeff_w_, 'w');
  append_term(out, coeff_z_, 'z');
  return out.empty() ? "0" : out;
}

Rational evaluate(const Weight& weight, const Specialization& spec) {
  return weight.coeff_w() * spec.w_value + weight.coeff_z() * spec.z_value;
}

Rational evaluate_nonzero(const Weight& weight, const Specialization& spec) {
  Rational v = evaluate(weight, spec);
  if (v.is_zero()) {
    throw DegenerateSpecialization("weight " + weight.to_string() + " vanishes at (w,z) = (" +
                                   spec.w_value.to_string() + "," + spec.z_value.to_string() +
                                   ")");
  }
  return v;
}

void VirtualCharacter::add(const Weight& weight, int multiplicity) {
  if (multiplicity == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(weight, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

void VirtualCharacter::add(const VirtualCharacter& other, int sign) {
  for (const auto& [weight, mult] : other.terms_) {
    add(weight, sign * mult);
  }
}

int VirtualCharacter::rank() const {
  int r = 0;
  for (const auto& [weight, mult] : terms_) {
    r += mult;
  }
  return r;
}

VirtualCharacter VirtualCharacter::moving_part() const {
  VirtualCharacter m;
  for (const auto& [weight, mult] : terms_) {
    if (!weight.is_zero()) {
      m.terms_.emplace(weight, mult);
    }
  }
  return m;
}

int VirtualCharacter::fixed_rank() const { return multiplicity(Weight{}); }

int VirtualCharacter::multiplicity(const Weight& weight) const {
  auto it = terms_.find(weight);
  return it == terms_.end() ? 0 : it->second;
}

Rational VirtualCharacter::euler_class(const Specialization& spec) const {
  Rational num(1);
  Rational den(1);
  for (const auto& [weight, mult] : terms_) {
    if (weight.is_zero()) {
      continue;
    }
    const Rational v = evaluate_nonzero(weight, spec).pow(mult > 0 ? mult : -mult);
    (mult > 0 ? num : den) *= v;
  }
  return num / den;
}

namespace {

constexpr std::array<int, 25> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                         43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace

std::uint64_t SpecializationSampler::uniform(std::uint64_t bound) { return rng_() % bound; }

Rational SpecializationSampler::draw(int excluded_prime, int& prime_out) {
  int p = 0;
  do {
    p = kPrimes[uniform(kPrimes.size())];
  } while (p == excluded_prime);
  prime_out = p;
  const long q = static_cast<long>(uniform(100)) + 1;
  const long s = uniform(2) == 0 ? 1 : -1;
  return Rational(s * p, q);
}

Specialization SpecializationSampler::next(std::span<const Weight> forbidden) {
  for (const Weight& f : forbidden) {
    if (f.is_zero()) {
      throw std::invalid_argument("sample_specialization: forbidden list contains the zero weight");
    }
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    int pw = 0;
    int pz = 0;
    Specialization s;
    s.w_value = draw(0, pw);
    s.z_value = draw(pw, pz);

    bool ok = true;
    for (const Weight& f : forbidden) {
      if (evaluate(f, s).is_zero()) {
        ok = false;
        break;
      }
    }
    for (const Specialization& prev : issued_) {
      if (!ok) {
        break;
      }
      // proportional points carry no new information for homogeneous quantities
      if (s.w_value * prev.z_value == s.z_value * prev.w_value) {
        ok = false;
      }
    }
    if (ok) {
      issued_.push_back(s);
      return s;
    }
  }
  throw std::runtime_error("sample_specialization: no nondegenerate point after " +
                           std::to_string(kMaxAttempts) + " draws");
}

Specialization sample_specialization(std::uint64_t seed, std::span<const Weight> forbidden) {
  return SpecializationSampler(seed).next(forbidden);
}

}  // namespace hilb3
