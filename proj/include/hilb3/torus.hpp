#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilb3/weight.hpp"

namespace hilb3 {

/// Torus-fixed point of the Hilbert scheme of 3 points on the plane.
///
/// Punctual(i, k) is Q_{i,k}, the monomial ideal of colength 3 at P_i with
/// k = 0, 1, 2 for (u^2,uv,v^2), (u^3,v), (u,v^3). Pair(i, j, s) is
/// R_{i,j}^{(s)} = xi_{i,s} + P_j with xi_{i,1} = (u,v^2), xi_{i,2} = (u^2,v).
/// The triple point P_0+P_1+P_2 lies on no contracted curve and is omitted.
class FixedPoint {
 public:
  enum class Kind : std::uint8_t { Punctual, Pair };

  /// Throw std::out_of_range on bad indices.
  static FixedPoint punctual(int chart, int k);
  static FixedPoint pair(int chart, int other, int sheet);

  Kind kind() const { return kind_; }
  bool is_punctual() const { return kind_ == Kind::Punctual; }
  int chart() const { return chart_; }
  /// k for Punctual(i,k).
  int punctual_index() const { return a_; }
  /// j for Pair(i,j,s).
  int other_chart() const { return a_; }
  /// s for Pair(i,j,s).
  int sheet() const { return b_; }

  /// "Q(i,k)" or "R(i,j,s)".
  std::string name() const;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;

 private:
  FixedPoint(Kind kind, int chart, int a, int b)
      : kind_(kind), chart_(static_cast<std::int8_t>(chart)), a_(static_cast<std::int8_t>(a)),
        b_(static_cast<std::int8_t>(b)) {}

  Kind kind_;
  std::int8_t chart_;
  std::int8_t a_;
  std::int8_t b_;
};

/// All 21 fixed points: Q(i,k) in (i,k) order, then R(i,j,s).
std::vector<FixedPoint> all_fixed_points();

/// (w_i, z_i): the weights of the local coordinates (u_i, v_i) at P_i.
std::pair<Weight, Weight> torus_weights(int chart);

/// Weight of the character lambda_i^a mu_i^b.
Weight chart_character(int chart, const Rational& a, const Rational& b);

/// c_1(O(1)|_{P_i}): 0, w, z.
Weight g_class(int chart);

/// Tangent representation of the Hilbert scheme at p (six weights).
VirtualCharacter tangent_rep(const FixedPoint& p);

/// Product of the six tangent weights at p. Throws DegenerateSpecialization.
Rational euler_tangent(const FixedPoint& p, const Specialization& spec);

/// Equivariant c_1 of the tautological bundle E_0 or E_1 at p.
Weight c1_taut(int bundle, const FixedPoint& p);

/// Torus-invariant curve contracted by the Hilbert-Chow morphism.
///
/// Pair(i, j) is C_{i,j} = M_2(P_i) + P_j; Punctual(i, k, l) is C^{(i)}_{k,l}
/// inside M_3(P_i).
class InvariantCurve {
 public:
  enum class Kind : std::uint8_t { Pair, Punctual };

  static InvariantCurve pair(int chart, int other);
  static InvariantCurve punctual(int chart, int k, int l);

  Kind kind() const { return kind_; }
  bool is_punctual() const { return kind_ == Kind::Punctual; }
  int chart() const { return chart_; }
  /// j for Pair(i,j).
  int other_chart() const { return a_; }
  /// (k, l) for Punctual(i,k,l).
  int first_index() const { return a_; }
  int second_index() const { return b_; }

  std::pair<FixedPoint, FixedPoint> endpoints() const;
  bool has_endpoint(const FixedPoint& p) const;
  /// Tangent weight of the curve at an endpoint; std::invalid_argument otherwise.
  Weight tangent_at(const FixedPoint& p) const;
  /// Homology class as a multiple of beta_3.
  int beta_multiple() const;

  /// "C(i,j)" or "C(i;k,l)".
  std::string name() const;

  friend bool operator==(const InvariantCurve&, const InvariantCurve&) = default;
  friend auto operator<=>(const InvariantCurve&, const InvariantCurve&) = default;

 private:
  InvariantCurve(Kind kind, int chart, int a, int b)
      : kind_(kind), chart_(static_cast<std::int8_t>(chart)), a_(static_cast<std::int8_t>(a)),
        b_(static_cast<std::int8_t>(b)) {}

  Kind kind_;
  std::int8_t chart_;
  std::int8_t a_;
  std::int8_t b_;
};

/// The 15 contracted invariant curves: 6 C(i,j), then 9 C(i;k,l).
std::vector<InvariantCurve> curve_catalog();

/// Contracted curve joining two distinct fixed points, if any.
std::optional<InvariantCurve> curve_between(const FixedPoint& a, const FixedPoint& b);

}  // namespace hilb3
