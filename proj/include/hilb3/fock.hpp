#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilb3/rational.hpp"

namespace hilb3 {

/// Homology classes of P^2: point x, line l, surface X.
enum class SurfaceClass : std::uint8_t { Surface, Line, Point };

/// Real homology degree |c|: 0, 2, 4 for x, l, X.
int surface_degree(SurfaceClass c);
/// Intersection pairing on P^2: <x,X> = <l,l> = 1, all else 0.
Rational surface_pairing(SurfaceClass a, SurfaceClass b);
/// "x", "l" or "X".
std::string surface_name(SurfaceClass c);

/// K_X^2 and K_X . l for X = P^2.
inline constexpr long kCanonicalSquare = 9;
inline constexpr long kCanonicalDotLine = -3;

struct FockFactor {
  int n;
  SurfaceClass c;

  friend bool operator==(const FockFactor&, const FockFactor&) = default;
};

/// Nakajima monomial a_{-n_1}(c_1)...a_{-n_k}(c_k)|0> on X^[3].
///
/// Factors are kept in a canonical order (X, l, x; larger n first), so equal
/// monomials compare equal regardless of how they were written.
class FockMonomial {
 public:
  /// Throws std::invalid_argument unless every n >= 1 and sum n = 3.
  explicit FockMonomial(std::vector<FockFactor> factors);

  const std::vector<FockFactor>& factors() const { return factors_; }
  int length() const { return static_cast<int>(factors_.size()); }
  /// Sum over factors of 2n - 2 + |c|.
  int homology_degree() const;
  /// Parts n_i in decreasing order.
  std::vector<int> partition() const;

  /// ASCII form such as "a_{-1}(X)a_{-1}(l)^2".
  std::string name() const;

  friend bool operator==(const FockMonomial& a, const FockMonomial& b) { return a.key() == b.key(); }
  friend auto operator<=>(const FockMonomial& a, const FockMonomial& b) { return a.key() <=> b.key(); }

 private:
  std::vector<int> key() const;
  std::vector<FockFactor> factors_;
};

/// Shorthand: a(n, c) for the single factor a_{-n}(c).
FockFactor a(int n, SurfaceClass c);

/// Rational combination of monomials.
class FockVector {
 public:
  FockVector() = default;
  FockVector(const FockMonomial& m, const Rational& coeff = 1);  // NOLINT: monomials are vectors

  const std::map<FockMonomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const FockMonomial& m) const;

  FockVector& operator+=(const FockVector& o);
  friend FockVector operator+(FockVector x, const FockVector& y) { return x += y; }
  friend FockVector operator*(const Rational& s, const FockVector& v);
  friend FockVector operator-(FockVector x, const FockVector& y) { return x += Rational(-1) * y; }

  std::string to_string() const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  std::map<FockMonomial, Rational> terms_;
};

/// A named element of a homology basis.
struct BasisElement {
  std::string name;
  FockVector value;
};

/// The standard basis of H_degree(X^[3]) for degree 2, 4, 6, 8, 10, in order;
/// degrees 0 and 12 give [p] and [X^[3]]. Throws std::invalid_argument for
/// other degrees.
std::vector<BasisElement> basis(int degree);

/// [p] = a_{-1}(x)^3 and [X^[3]] = (1/6) a_{-1}(X)^3.
FockVector point_class();
FockVector fundamental_class();

/// Monomial pairing: zero unless the partitions agree, else
/// (-1)^{3-k} times the sum over partition-respecting bijections of
/// prod n_i <c_i, c'_sigma(i)>.
Rational pairing(const FockMonomial& m1, const FockMonomial& m2);
/// Bilinear extension.
Rational pairing(const FockVector& v1, const FockVector& v2);

/// Gram matrix G[a][b] = pairing(basis(degree)[a], basis(12-degree)[b]).
std::vector<std::vector<Rational>> gram_matrix(int degree);

/// Delta^a in span basis(12-degree) with pairing(Delta_a, Delta^b) = delta_ab.
/// Throws std::runtime_error on a singular Gram matrix.
std::vector<FockVector> dual_basis(int degree);

/// <alpha>_{0,d} for alpha the Poincare dual of an element of basis(4).
Rational one_point(const FockMonomial& m, int d);
/// Bilinear extension of one_point to combinations of basis(4) monomials.
Rational one_point(const FockVector& v, int d);

/// Keyed by index pairs into basis(6) x basis(8); all 30 entries present.
using TwoPointTable = std::map<std::pair<int, int>, Rational>;
TwoPointTable two_point_table(int d, const Rational& f_d);

/// Keyed by sorted index triples into basis(8); all 35 unordered triples.
using ThreePointTable = std::map<std::array<int, 3>, Rational>;
/// f[k] = f(k+1) for k < d. Throws std::invalid_argument if f is too short.
ThreePointTable three_point_table(int d, const std::vector<Rational>& f);

/// Three-point invariant extended linearly to combinations of basis(8).
Rational three_point(const ThreePointTable& table, const FockVector& a, const FockVector& b,
                     const FockVector& c);

struct WdvvSides {
  Rational lhs;
  Rational rhs;
};

/// Both sides of the composition law for c1, c1, A, A with A = a_{-3}(X),
/// assembled from the cup identities, one-point values, dual basis and the
/// tables. f[k] = f(k+1).
WdvvSides wdvv_sides(int d, const std::vector<Rational>& f);
bool wdvv_consistency(int d, const std::vector<Rational>& f);

struct CupIdentity {
  std::string lhs;
  FockVector rhs;
};

/// Cup-product identities quoted as data, in a fixed order:
/// c1(E0)^2, D_l^2, D_l^2 . a_{-1}(X)a_{-2}(l), a_{-1}(X)^2a_{-1}(x) . a_{-1}(X)a_{-2}(l),
/// c1(E0), c1(E1).
std::vector<CupIdentity> cup_identities();

/// D_l = (1/2) a_{-1}(l)a_{-1}(X)^2 and B_3 = a_{-2}(X)a_{-1}(X).
FockVector divisor_line();
FockVector divisor_boundary();

}  // namespace hilb3
