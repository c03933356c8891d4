#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilb3/rational.hpp"

namespace hilb3 {

/// Additive avatar of a torus character: the linear form a*w + b*z.
///
/// The character lambda^p mu^q of the chart-0 torus coordinates corresponds to
/// p*w + q*z. Fractional coefficients occur for characters of multiple covers.
class Weight {
 public:
  Weight() = default;
  Weight(Rational coeff_w, Rational coeff_z)
      : coeff_w_(std::move(coeff_w)), coeff_z_(std::move(coeff_z)) {}

  static Weight w() { return {1, 0}; }
  static Weight z() { return {0, 1}; }

  const Rational& coeff_w() const { return coeff_w_; }
  const Rational& coeff_z() const { return coeff_z_; }

  bool is_zero() const { return coeff_w_.is_zero() && coeff_z_.is_zero(); }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
  Weight operator-() const { return {-coeff_w_, -coeff_z_}; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.coeff_w_ <=> b.coeff_w_; c != 0) {
      return c;
    }
    return a.coeff_z_ <=> b.coeff_z_;
  }

  /// Human-readable form such as "-w+2z", "(1/2)w-z" or "0".
  std::string to_string() const;

 private:
  Rational coeff_w_;
  Rational coeff_z_;
};

/// A point of the (w,z)-plane at which weights are evaluated.
struct Specialization {
  Rational w_value;
  Rational z_value;

  friend bool operator==(const Specialization&, const Specialization&) = default;
};

/// Thrown when a weight that must be invertible evaluates to zero.
class DegenerateSpecialization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational evaluate(const Weight& weight, const Specialization& spec);

/// evaluate(), but throws DegenerateSpecialization on a zero value.
Rational evaluate_nonzero(const Weight& weight, const Specialization& spec);

/// Virtual torus representation: a signed multiset of weights.
///
/// Equal weights are merged and zero multiplicities dropped, so two characters
/// compare equal iff they are equal as virtual representations.
class VirtualCharacter {
 public:
  VirtualCharacter() = default;

  void add(const Weight& weight, int multiplicity = 1);
  void add(const VirtualCharacter& other, int sign = 1);

  const std::map<Weight, int>& terms() const { return terms_; }

  /// Sum of multiplicities over all terms (the virtual dimension).
  int rank() const;
  /// Sub-multiset of nonzero weights.
  VirtualCharacter moving_part() const;
  /// Multiplicity of the zero weight.
  int fixed_rank() const;
  /// Total multiplicity with which `weight` occurs (0 if absent).
  int multiplicity(const Weight& weight) const;

  /// Product over moving terms of evaluate(weight)^multiplicity.
  Rational euler_class(const Specialization& spec) const;

  friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;

 private:
  std::map<Weight, int> terms_;
};

/// Deterministic sampler of nondegenerate rational specializations.
///
/// Values are +-p/q with p a prime below 100 (distinct primes for w and z)
/// and q in [1, 100]. Successive calls on one sampler yield further points;
/// points proportional to an earlier one are skipped.
class SpecializationSampler {
 public:
  static constexpr int kMaxAttempts = 10000;

  explicit SpecializationSampler(std::uint64_t seed) : rng_(seed) {}

  /// Throws std::invalid_argument if `forbidden` contains the zero weight and
  /// std::runtime_error if no admissible point is found in kMaxAttempts draws.
  Specialization next(std::span<const Weight> forbidden);

 private:
  std::uint64_t uniform(std::uint64_t bound);
  Rational draw(int excluded_prime, int& prime_out);

  std::mt19937_64 rng_;
  std::vector<Specialization> issued_;
};

/// First point of SpecializationSampler(seed).
Specialization sample_specialization(std::uint64_t seed, std::span<const Weight> forbidden);

}  // namespace hilb3
