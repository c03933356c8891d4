#include "hilb3/fock.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hilb3 {

using SC = SurfaceClass;

int surface_degree(SurfaceClass c) {
  switch (c) {
    case SC::Point:
      return 0;
    case SC::Line:
      return 2;
    default:
      return 4;
  }
}

Rational surface_pairing(SurfaceClass x, SurfaceClass y) {
  return surface_degree(x) + surface_degree(y) == 4 ? Rational(1) : Rational(0);
}

std::string surface_name(SurfaceClass c) {
  switch (c) {
    case SC::Point:
      return "x";
    case SC::Line:
      return "l";
    default:
      return "X";
  }
}

FockFactor a(int n, SurfaceClass c) { return FockFactor{n, c}; }

FockMonomial::FockMonomial(std::vector<FockFactor> factors) : factors_(std::move(factors)) {
  int weight = 0;
  for (const FockFactor& f : factors_) {
    if (f.n < 1) {
      throw std::invalid_argument("FockMonomial: creation operators need n >= 1");
    }
    weight += f.n;
  }
  if (weight != 3) {
    throw std::invalid_argument("FockMonomial: total weight must be 3");
  }
  std::sort(factors_.begin(), factors_.end(), [](const FockFactor& x, const FockFactor& y) {
    if (x.c != y.c) {
      return x.c < y.c;
    }
    return x.n > y.n;
  });
}

int FockMonomial::homology_degree() const {
  int deg = 0;
  for (const FockFactor& f : factors_) {
    deg += 2 * f.n - 2 + surface_degree(f.c);
  }
  return deg;
}

std::vector<int> FockMonomial::partition() const {
  std::vector<int> parts;
  for (const FockFactor& f : factors_) {
    parts.push_back(f.n);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::string FockMonomial::name() const {
  std::string out;
  for (std::size_t k = 0; k < factors_.size();) {
    std::size_t r = k;
    while (r < factors_.size() && factors_[r] == factors_[k]) {
      ++r;
    }
    out += "a_{-" + std::to_string(factors_[k].n) + "}(" + surface_name(factors_[k].c) + ")";
    if (r - k > 1) {
      out += "^" + std::to_string(r - k);
    }
    k = r;
  }
  return out;
}

std::vector<int> FockMonomial::key() const {
  std::vector<int> k;
  for (const FockFactor& f : factors_) {
    k.push_back(static_cast<int>(f.c));
    k.push_back(-f.n);
  }
  return k;
}

FockVector::FockVector(const FockMonomial& m, const Rational& coeff) {
  if (!coeff.is_zero()) {
    terms_.emplace(m, coeff);
  }
}

Rational FockVector::coefficient(const FockMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }
  return *this;
}

FockVector operator*(const Rational& s, const FockVector& v) {
  FockVector out;
  if (s.is_zero()) {
    return out;
  }
  for (const auto& [m, c] : v.terms_) {
    out.terms_.emplace(m, s * c);
  }
  return out;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (c.sign() < 0) {
      out += out.empty() ? "-" : " - ";
    } else if (!out.empty()) {
      out += " + ";
    }
    const Rational mag = c.abs();
    if (mag != Rational(1)) {
      out += "(" + mag.to_string() + ")";
    }
    out += m.name();
  }
  return out;
}

namespace {

FockMonomial mono(std::initializer_list<FockFactor> fs) { return FockMonomial(std::vector<FockFactor>(fs)); }

BasisElement named(const FockMonomial& m) { return {m.name(), FockVector(m)}; }

}  // namespace

FockVector point_class() { return mono({a(1, SC::Point), a(1, SC::Point), a(1, SC::Point)}); }

FockVector fundamental_class() {
  return FockVector(mono({a(1, SC::Surface), a(1, SC::Surface), a(1, SC::Surface)}), Rational(1, 6));
}

FockVector divisor_line() {
  return FockVector(mono({a(1, SC::Line), a(1, SC::Surface), a(1, SC::Surface)}), Rational(1, 2));
}

FockVector divisor_boundary() { return mono({a(2, SC::Surface), a(1, SC::Surface)}); }

std::vector<BasisElement> basis(int degree) {
  switch (degree) {
    case 0:
      return {{"[p]", point_class()}};
    case 2:
      return {{"beta_3", mono({a(2, SC::Point), a(1, SC::Point)})},
              {"beta_l", mono({a(1, SC::Line), a(1, SC::Point), a(1, SC::Point)})}};
    case 4:
      return {named(mono({a(1, SC::Surface), a(1, SC::Point), a(1, SC::Point)})),
              named(mono({a(2, SC::Line), a(1, SC::Point)})),
              named(mono({a(1, SC::Line), a(1, SC::Line), a(1, SC::Point)})),
              named(mono({a(1, SC::Line), a(2, SC::Point)})), named(mono({a(3, SC::Point)}))};
    case 6:
      return {named(mono({a(2, SC::Surface), a(1, SC::Point)})),
              named(mono({a(1, SC::Surface), a(2, SC::Point)})),
              named(mono({a(1, SC::Surface), a(1, SC::Line), a(1, SC::Point)})),
              named(mono({a(3, SC::Line)})), named(mono({a(2, SC::Line), a(1, SC::Line)})),
              named(mono({a(1, SC::Line), a(1, SC::Line), a(1, SC::Line)}))};
    case 8:
      return {named(mono({a(3, SC::Surface)})), named(mono({a(2, SC::Surface), a(1, SC::Line)})),
              named(mono({a(1, SC::Surface), a(2, SC::Line)})),
              named(mono({a(1, SC::Surface), a(1, SC::Line), a(1, SC::Line)})),
              named(mono({a(1, SC::Surface), a(1, SC::Surface), a(1, SC::Point)}))};
    case 10:
      return {{"B_3", divisor_boundary()}, {"D_l", divisor_line()}};
    case 12:
      return {{"[X^[3]]", fundamental_class()}};
    default:
      throw std::invalid_argument("basis: degree must be an even number in 0..12");
  }
}

Rational pairing(const FockMonomial& m1, const FockMonomial& m2) {
  if (m1.partition() != m2.partition()) {
    return 0;
  }
  const auto& f1 = m1.factors();
  const auto& f2 = m2.factors();
  const int k = m1.length();
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  Rational total(0);
  do {
    Rational term(1);
    for (int i = 0; i < k && !term.is_zero(); ++i) {
      const FockFactor& x = f1[static_cast<std::size_t>(i)];
      const FockFactor& y = f2[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
      if (x.n != y.n) {
        term = 0;
        break;
      }
      term *= Rational(x.n) * surface_pairing(x.c, y.c);
    }
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return (3 - k) % 2 == 0 ? total : -total;
}

Rational pairing(const FockVector& v1, const FockVector& v2) {
  Rational total(0);
  for (const auto& [m1, c1] : v1.terms()) {
    for (const auto& [m2, c2] : v2.terms()) {
      total += c1 * c2 * pairing(m1, m2);
    }
  }
  return total;
}

std::vector<std::vector<Rational>> gram_matrix(int degree) {
  const std::vector<BasisElement> left = basis(degree);
  const std::vector<BasisElement> right = basis(12 - degree);
  std::vector<std::vector<Rational>> g(left.size(), std::vector<Rational>(right.size()));
  for (std::size_t r = 0; r < left.size(); ++r) {
    for (std::size_t c = 0; c < right.size(); ++c) {
      g[r][c] = pairing(left[r].value, right[c].value);
    }
  }
  return g;
}

std::vector<FockVector> dual_basis(int degree) {
  const std::vector<std::vector<Rational>> g = gram_matrix(degree);
  const std::size_t n = g.size();
  if (n == 0 || g.front().size() != n) {
    throw std::runtime_error("dual_basis: Gram matrix is not square");
  }
  // Gauss-Jordan on [G | I]; the inverse H satisfies G H = I, so
  // Delta^a = sum_b H[b][a] E_b pairs with Delta_c to delta_ca
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m[r][c] = g[r][c];
    }
    m[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) {
      ++pivot;
    }
    if (pivot == n) {
      throw std::runtime_error("dual_basis: singular Gram matrix in degree " + std::to_string(degree));
    }
    std::swap(m[pivot], m[col]);
    const Rational inv = m[col][col].inverse();
    for (Rational& x : m[col]) {
      x *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) {
        continue;
      }
      const Rational factor = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) {
        m[r][c] -= factor * m[col][c];
      }
    }
  }
  const std::vector<BasisElement> right = basis(12 - degree);
  std::vector<FockVector> duals(n);
  for (std::size_t a_idx = 0; a_idx < n; ++a_idx) {
    for (std::size_t b = 0; b < n; ++b) {
      duals[a_idx] += m[b][n + a_idx] * right[b].value;
    }
  }
  return duals;
}

namespace {

int index_in(const std::vector<BasisElement>& elems, const FockMonomial& m, const char* what) {
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (elems[k].value == FockVector(m)) {
      return static_cast<int>(k);
    }
  }
  throw std::invalid_argument(std::string(what) + ": " + m.name() + " is not a basis monomial");
}

}  // namespace

Rational one_point(const FockMonomial& m, int d) {
  if (d < 1) {
    throw std::invalid_argument("one_point: degree must be positive");
  }
  const int idx = index_in(basis(4), m, "one_point");
  // only a_{-2}(l)a_{-1}(x) has a nonzero one-point invariant
  return idx == 1 ? Rational(2 * kCanonicalDotLine, static_cast<long>(d) * d) : Rational(0);
}

Rational one_point(const FockVector& v, int d) {
  Rational total(0);
  for (const auto& [m, c] : v.terms()) {
    total += c * one_point(m, d);
  }
  return total;
}

TwoPointTable two_point_table(int d, const Rational& f_d) {
  if (d < 1) {
    throw std::invalid_argument("two_point_table: degree must be positive");
  }
  TwoPointTable t;
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 5; ++c) {
      t[{r, c}] = 0;
    }
  }
  t[{0, 2}] = Rational(12, d);
  t[{4, 1}] = Rational(12, d);
  t[{3, 0}] = f_d / Rational(d);
  return t;
}

ThreePointTable three_point_table(int d, const std::vector<Rational>& f) {
  if (d < 1) {
    throw std::invalid_argument("three_point_table: degree must be positive");
  }
  if (f.size() < static_cast<std::size_t>(d)) {
    throw std::invalid_argument("three_point_table: need f(1), ..., f(d)");
  }
  ThreePointTable t;
  for (int x = 0; x < 5; ++x) {
    for (int y = x; y < 5; ++y) {
      for (int z = y; z < 5; ++z) {
        t[{x, y, z}] = 0;
      }
    }
  }
  const Rational& fd = f[static_cast<std::size_t>(d - 1)];
  Rational sum(0);
  Rational convolution(0);
  for (int d1 = 1; d1 < d; ++d1) {
    sum += f[static_cast<std::size_t>(d1 - 1)];
    convolution += f[static_cast<std::size_t>(d1 - 1)] * f[static_cast<std::size_t>(d - d1 - 1)];
  }
  t[{1, 1, 2}] = -24;
  t[{0, 0, 1}] = -2 * fd;
  t[{0, 0, 2}] = -2 * fd;
  t[{0, 0, 0}] = Rational(-162) - 15 * fd + 6 * sum + Rational(1, 3) * convolution;
  return t;
}

Rational three_point(const ThreePointTable& table, const FockVector& x, const FockVector& y,
                     const FockVector& z) {
  const std::vector<BasisElement> b8 = basis(8);
  Rational total(0);
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      for (const auto& [mz, cz] : z.terms()) {
        std::array<int, 3> key{index_in(b8, mx, "three_point"), index_in(b8, my, "three_point"),
                               index_in(b8, mz, "three_point")};
        std::sort(key.begin(), key.end());
        total += cx * cy * cz * table.at(key);
      }
    }
  }
  return total;
}

std::vector<CupIdentity> cup_identities() {
  const FockMonomial a3X = mono({a(3, SC::Surface)});
  const FockMonomial a1X2a1x = mono({a(1, SC::Surface), a(1, SC::Surface), a(1, SC::Point)});
  const FockMonomial a1Xa1l2 = mono({a(1, SC::Surface), a(1, SC::Line), a(1, SC::Line)});
  const FockMonomial a1Xa2l = mono({a(1, SC::Surface), a(2, SC::Line)});
  const FockMonomial a2la1x = mono({a(2, SC::Line), a(1, SC::Point)});
  const FockMonomial a1la2x = mono({a(1, SC::Line), a(2, SC::Point)});

  // a_{-2}(K_X) = (K_X . l) a_{-2}(l) on P^2
  const FockVector c1_sq = FockVector(a3X) - FockVector(a1X2a1x) + Rational(-1, 2) * FockVector(a1Xa1l2) +
                           Rational(-kCanonicalDotLine, 2) * FockVector(a1Xa2l);
  const FockVector dl_sq = FockVector(a1Xa1l2) + Rational(1, 2) * FockVector(a1X2a1x);
  const FockVector c1_e0 = Rational(-1, 2) * divisor_boundary();
  return {
      {"c1(E0)^2", c1_sq},
      {"D_l^2", dl_sq},
      {"D_l^2 . a_{-1}(X)a_{-2}(l)", FockVector(a2la1x) + Rational(4) * FockVector(a1la2x)},
      {"a_{-1}(X)^2a_{-1}(x) . a_{-1}(X)a_{-2}(l)", Rational(2) * FockVector(a2la1x)},
      {"c1(E0)", c1_e0},
      {"c1(E1)", divisor_line() + c1_e0},
  };
}

WdvvSides wdvv_sides(int d, const std::vector<Rational>& f) {
  if (d < 1 || f.size() < static_cast<std::size_t>(d)) {
    throw std::invalid_argument("wdvv_sides: need d >= 1 and f(1), ..., f(d)");
  }
  const std::vector<CupIdentity> cups = cup_identities();
  const FockVector& c1_sq = cups[0].rhs;
  const FockVector& c1 = cups[4].rhs;
  const FockVector a3X = FockMonomial({a(3, SC::Surface)});
  const Rational c1_dot_beta = pairing(basis(2)[0].value, c1);
  const Rational k2(kCanonicalSquare);
  const Rational kl(kCanonicalDotLine);

  // <c1^2, A, A> + d^2 <A.A> + sum_{d1+d2=d} sum_a <c1,c1,Delta_a>_{d1} <Delta^a,A,A>_{d2}
  Rational lhs = three_point(three_point_table(d, f), c1_sq, a3X, a3X);
  lhs += 24 * k2 + 18 * kl;  // d^2 <A.A>_{0,d}, independent of d
  const std::vector<BasisElement> b4 = basis(4);
  const std::vector<FockVector> duals = dual_basis(4);
  for (int d1 = 1; d1 < d; ++d1) {
    const ThreePointTable t2 = three_point_table(d - d1, f);
    const Rational cc = (c1_dot_beta * d1).pow(2);
    for (std::size_t k = 0; k < b4.size(); ++k) {
      lhs += cc * one_point(b4[k].value, d1) * three_point(t2, duals[k], a3X, a3X);
    }
  }

  const Rational& fd = f[static_cast<std::size_t>(d - 1)];
  Rational convolution(0);
  for (int d1 = 1; d1 < d; ++d1) {
    convolution += f[static_cast<std::size_t>(d1 - 1)] * f[static_cast<std::size_t>(d - d1 - 1)];
  }
  const Rational rhs = 6 * kl * fd + Rational(1, 3) * convolution;
  return {lhs, rhs};
}

bool wdvv_consistency(int d, const std::vector<Rational>& f) {
  const WdvvSides s = wdvv_sides(d, f);
  return s.lhs == s.rhs;
}

}  // namespace hilb3
