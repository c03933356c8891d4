#pragma once

#include "hilb3/weight.hpp"

/// Printed closed forms for degrees 1..4, evaluated at a specialization.
/// Functions throw std::out_of_range for d outside 1..4 and
/// DegenerateSpecialization on a vanishing denominator.
namespace hilb3::closed {

/// e_{d,i,j} = (w_i+z_i) / (d w_i w_j (w_i-z_i)^2 z_i z_j).
Rational e_sum(int d, int i, int j, const Specialization& spec);

/// The printed S'_{d,i,j} = (2g_i+g_j)(w_i+z_i)^3 / (d w_i w_j z_i z_j).
Rational s_prime_display(int d, int i, int j, const Specialization& spec);

/// First displayed form of f_{d,i,0,1}.
Rational f01(int d, int i, const Specialization& spec);
/// Second form: (1/d) f_{1,i,0,1} plus a correction term.
Rational f01_split(int d, int i, const Specialization& spec);
/// f_{d,i,0,1} with w_i and z_i exchanged.
Rational f02(int d, int i, const Specialization& spec);
/// f_{d,i,1,2} exactly as printed.
Rational f12(int d, int i, const Specialization& spec);

/// First displayed form of T'_{d,i}.
Rational t_prime_display(int d, int i, const Specialization& spec);
/// Recursion form (1/d) T'_{1,i} - c_d 27 g_i (w_i+z_i)/(w_i z_i).
Rational t_prime_recursion(int d, int i, const Specialization& spec);

/// Printed gamma_{i,j,k} for (j,k) in {(0,1),(0,2),(1,2)}.
Rational gamma_display(int i, int j, int k, const Specialization& spec);

}  // namespace hilb3::closed
