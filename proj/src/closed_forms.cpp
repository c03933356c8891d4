#include "hilb3/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "hilb3/torus.hpp"

namespace hilb3::closed {

namespace {

struct Chart {
  Rational w;
  Rational z;
  Rational g;
};

Chart chart_values(int i, const Specialization& spec) {
  const auto [wi, zi] = torus_weights(i);
  return {evaluate(wi, spec), evaluate(zi, spec), evaluate(g_class(i), spec)};
}

void check_degree(int d, const char* what) {
  if (d < 1 || d > 4) {
    throw std::out_of_range(std::string(what) + ": printed only for 1 <= d <= 4");
  }
}

Rational quotient(const Rational& num, const Rational& den) {
  if (den.is_zero()) {
    throw DegenerateSpecialization("closed form denominator vanishes");
  }
  return num / den;
}

Rational f01_wz(int d, const Rational& w, const Rational& z) {
  const Rational common = w * (w - 2 * z).pow(2) * (w - z) * (2 * w - z) * z * z;
  switch (d) {
    case 1:
      return quotient(w + z, w * (w - 2 * z).pow(2) * (w - z) * z * z);
    case 2:
      return quotient(2 * w * w + 7 * w * z + 5 * z * z, 2 * common);
    case 3:
      return quotient(2 * (w + z) * (w + 4 * z), 3 * common);
    default:
      return quotient(2 * w * w + 7 * w * z + 5 * z * z, 4 * common);
  }
}

Rational f01_split_wz(int d, const Rational& w, const Rational& z) {
  const Rational f1 = f01_wz(1, w, z);
  if (d == 1) {
    return f1;
  }
  const Rational tail = quotient(3 * (w + z), w * (w - 2 * z).pow(2) * (w - z) * (2 * w - z) * z);
  return Rational(1, d) * f1 + (d == 4 ? Rational(1, 2) : Rational(1)) * tail;
}

}  // namespace

Rational e_sum(int d, int i, int j, const Specialization& spec) {
  check_degree(d, "e_sum");
  const Chart ci = chart_values(i, spec);
  const Chart cj = chart_values(j, spec);
  return quotient(ci.w + ci.z, d * ci.w * cj.w * (ci.w - ci.z).pow(2) * ci.z * cj.z);
}

Rational s_prime_display(int d, int i, int j, const Specialization& spec) {
  check_degree(d, "s_prime_display");
  const Chart ci = chart_values(i, spec);
  const Chart cj = chart_values(j, spec);
  return quotient((2 * ci.g + cj.g) * (ci.w + ci.z).pow(3), d * ci.w * cj.w * ci.z * cj.z);
}

Rational f01(int d, int i, const Specialization& spec) {
  check_degree(d, "f01");
  const Chart c = chart_values(i, spec);
  return f01_wz(d, c.w, c.z);
}

Rational f01_split(int d, int i, const Specialization& spec) {
  check_degree(d, "f01_split");
  const Chart c = chart_values(i, spec);
  return f01_split_wz(d, c.w, c.z);
}

Rational f02(int d, int i, const Specialization& spec) {
  check_degree(d, "f02");
  const Chart c = chart_values(i, spec);
  return f01_wz(d, c.z, c.w);
}

Rational f12(int d, int i, const Specialization& spec) {
  check_degree(d, "f12");
  if (d == 1) {
    return 0;
  }
  const Chart c = chart_values(i, spec);
  const Rational& w = c.w;
  const Rational& z = c.z;
  const Rational b = quotient(w + z, w * (w - 2 * z) * (w - z).pow(2) * (2 * w - z) * z);
  return d == 4 ? Rational(1, 2) * b : b;
}

Rational t_prime_display(int d, int i, const Specialization& spec) {
  check_degree(d, "t_prime_display");
  static constexpr long kMiddle[] = {-6, 12, 21, 12};
  const Chart c = chart_values(i, spec);
  const Rational& w = c.w;
  const Rational& z = c.z;
  const Rational m(kMiddle[d - 1]);
  const Rational cubic = w.pow(3) + m * w * w * z + m * w * z * z + z.pow(3);
  return quotient(-3 * c.g * cubic, d * w * w * z * z);
}

Rational t_prime_recursion(int d, int i, const Specialization& spec) {
  check_degree(d, "t_prime_recursion");
  const Rational t1 = t_prime_display(1, i, spec);
  if (d == 1) {
    return t1;
  }
  const Chart c = chart_values(i, spec);
  const Rational tail = quotient(27 * c.g * (c.w + c.z), c.w * c.z);
  return Rational(1, d) * t1 - (d == 4 ? Rational(1, 2) : Rational(1)) * tail;
}

Rational gamma_display(int i, int j, int k, const Specialization& spec) {
  const Chart c = chart_values(i, spec);
  const Rational& w = c.w;
  const Rational& z = c.z;
  if (j == 0 && k == 1) {
    return -3 * c.g * (w * w + 2 * w * z - 8 * z * z).pow(2);
  }
  if (j == 0 && k == 2) {
    return -3 * c.g * (-8 * w * w + 2 * w * z + z * z).pow(2);
  }
  if (j == 1 && k == 2) {
    return -243 * c.g * (w * w - z * z).pow(2);
  }
  throw std::out_of_range("gamma_display: (j,k) must be (0,1), (0,2) or (1,2)");
}

}  // namespace hilb3::closed
