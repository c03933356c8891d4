#include "hilb3/torus.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace hilb3 {

namespace {

void check_chart(int i, const char* what) {
  if (i < 0 || i > 2) {
    throw std::out_of_range(std::string(what) + ": chart index " + std::to_string(i) +
                            " outside {0,1,2}");
  }
}

struct Exponent {
  int a;
  int b;
};

// Tangent characters lambda_i^a mu_i^b at the punctual points.
constexpr Exponent kTangentQ[3][6] = {
    {{-1, 0}, {-1, 0}, {0, -1}, {0, -1}, {-2, 1}, {1, -2}},
    {{-1, 2}, {-1, 1}, {-1, 0}, {0, -3}, {0, -2}, {0, -1}},
    {{-3, 0}, {-2, 0}, {-1, 0}, {2, -1}, {1, -1}, {0, -1}},
};

// The chart-i part of the tangent characters at R^{(1)}, R^{(2)}; the chart-j
// part is lambda_j^{-1} + mu_j^{-1} in both cases.
constexpr Exponent kTangentR[2][4] = {
    {{-1, 1}, {-1, 0}, {0, -2}, {0, -1}},
    {{-2, 0}, {-1, 0}, {1, -1}, {0, -1}},
};

Weight character(int chart, int a, int b) { return chart_character(chart, a, b); }

}  // namespace

FixedPoint FixedPoint::punctual(int chart, int k) {
  check_chart(chart, "FixedPoint::punctual");
  if (k < 0 || k > 2) {
    throw std::out_of_range("FixedPoint::punctual: k outside {0,1,2}");
  }
  return FixedPoint(Kind::Punctual, chart, k, 0);
}

FixedPoint FixedPoint::pair(int chart, int other, int sheet) {
  check_chart(chart, "FixedPoint::pair");
  check_chart(other, "FixedPoint::pair");
  if (chart == other) {
    throw std::out_of_range("FixedPoint::pair: charts must differ");
  }
  if (sheet != 1 && sheet != 2) {
    throw std::out_of_range("FixedPoint::pair: sheet outside {1,2}");
  }
  return FixedPoint(Kind::Pair, chart, other, sheet);
}

std::string FixedPoint::name() const {
  if (is_punctual()) {
    return "Q(" + std::to_string(chart_) + "," + std::to_string(a_) + ")";
  }
  return "R(" + std::to_string(chart_) + "," + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

std::vector<FixedPoint> all_fixed_points() {
  std::vector<FixedPoint> out;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      out.push_back(FixedPoint::punctual(i, k));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) {
        out.push_back(FixedPoint::pair(i, j, 1));
        out.push_back(FixedPoint::pair(i, j, 2));
      }
    }
  }
  return out;
}

std::pair<Weight, Weight> torus_weights(int chart) {
  check_chart(chart, "torus_weights");
  switch (chart) {
    case 0:
      return {Weight::w(), Weight::z()};
    case 1:
      return {-Weight::w(), Weight::z() - Weight::w()};
    default:
      return {-Weight::z(), Weight::w() - Weight::z()};
  }
}

Weight chart_character(int chart, const Rational& a, const Rational& b) {
  const auto [wi, zi] = torus_weights(chart);
  return a * wi + b * zi;
}

Weight g_class(int chart) {
  check_chart(chart, "g_class");
  switch (chart) {
    case 0:
      return {};
    case 1:
      return Weight::w();
    default:
      return Weight::z();
  }
}

VirtualCharacter tangent_rep(const FixedPoint& p) {
  VirtualCharacter t;
  const int i = p.chart();
  if (p.is_punctual()) {
    for (const Exponent& e : kTangentQ[p.punctual_index()]) {
      t.add(character(i, e.a, e.b));
    }
    return t;
  }
  for (const Exponent& e : kTangentR[p.sheet() - 1]) {
    t.add(character(i, e.a, e.b));
  }
  const int j = p.other_chart();
  t.add(character(j, -1, 0));
  t.add(character(j, 0, -1));
  return t;
}

Rational euler_tangent(const FixedPoint& p, const Specialization& spec) {
  return tangent_rep(p).euler_class(spec);
}

Weight c1_taut(int bundle, const FixedPoint& p) {
  if (bundle != 0 && bundle != 1) {
    throw std::out_of_range("c1_taut: bundle must be 0 or 1");
  }
  const int i = p.chart();
  const auto [wi, zi] = torus_weights(i);
  Weight e0;
  Weight shift;
  if (p.is_punctual()) {
    switch (p.punctual_index()) {
      case 0:
        e0 = zi + wi;
        break;
      case 1:
        e0 = Rational(3) * zi;
        break;
      default:
        e0 = Rational(3) * wi;
        break;
    }
    shift = Rational(3) * g_class(i);
  } else {
    e0 = p.sheet() == 1 ? zi : wi;
    shift = Rational(2) * g_class(i) + g_class(p.other_chart());
  }
  return bundle == 0 ? e0 : e0 + shift;
}

InvariantCurve InvariantCurve::pair(int chart, int other) {
  check_chart(chart, "InvariantCurve::pair");
  check_chart(other, "InvariantCurve::pair");
  if (chart == other) {
    throw std::out_of_range("InvariantCurve::pair: charts must differ");
  }
  return InvariantCurve(Kind::Pair, chart, other, 0);
}

InvariantCurve InvariantCurve::punctual(int chart, int k, int l) {
  check_chart(chart, "InvariantCurve::punctual");
  if (!(0 <= k && k < l && l <= 2)) {
    throw std::out_of_range("InvariantCurve::punctual: need 0 <= k < l <= 2");
  }
  return InvariantCurve(Kind::Punctual, chart, k, l);
}

std::pair<FixedPoint, FixedPoint> InvariantCurve::endpoints() const {
  if (is_punctual()) {
    return {FixedPoint::punctual(chart_, a_), FixedPoint::punctual(chart_, b_)};
  }
  return {FixedPoint::pair(chart_, a_, 1), FixedPoint::pair(chart_, a_, 2)};
}

bool InvariantCurve::has_endpoint(const FixedPoint& p) const {
  const auto [first, second] = endpoints();
  return p == first || p == second;
}

Weight InvariantCurve::tangent_at(const FixedPoint& p) const {
  const auto [first, second] = endpoints();
  // character of the tangent line at the first endpoint; kernels of these
  // characters cut out the curves
  Exponent e{-1, 1};
  if (is_punctual()) {
    if (a_ == 0 && b_ == 1) {
      e = {1, -2};
    } else if (a_ == 0 && b_ == 2) {
      e = {-2, 1};
    }
  }
  const Weight at_first = character(chart_, e.a, e.b);
  if (p == first) {
    return at_first;
  }
  if (p == second) {
    return -at_first;
  }
  throw std::invalid_argument("InvariantCurve::tangent_at: " + p.name() + " is not an endpoint of " +
                              name());
}

int InvariantCurve::beta_multiple() const { return is_punctual() && a_ == 1 && b_ == 2 ? 3 : 1; }

std::string InvariantCurve::name() const {
  if (is_punctual()) {
    return "C(" + std::to_string(chart_) + ";" + std::to_string(a_) + "," + std::to_string(b_) + ")";
  }
  return "C(" + std::to_string(chart_) + "," + std::to_string(a_) + ")";
}

std::vector<InvariantCurve> curve_catalog() {
  std::vector<InvariantCurve> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) {
        out.push_back(InvariantCurve::pair(i, j));
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      for (int l = k + 1; l < 3; ++l) {
        out.push_back(InvariantCurve::punctual(i, k, l));
      }
    }
  }
  return out;
}

std::optional<InvariantCurve> curve_between(const FixedPoint& a, const FixedPoint& b) {
  if (a == b || a.kind() != b.kind() || a.chart() != b.chart()) {
    return std::nullopt;
  }
  if (a.is_punctual()) {
    const int k = std::min(a.punctual_index(), b.punctual_index());
    const int l = std::max(a.punctual_index(), b.punctual_index());
    return InvariantCurve::punctual(a.chart(), k, l);
  }
  if (a.other_chart() != b.other_chart()) {
    return std::nullopt;
  }
  return InvariantCurve::pair(a.chart(), a.other_chart());
}

}  // namespace hilb3
