#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hilb3/graphs.hpp"
#include "hilb3/weight.hpp"

namespace hilb3 {

enum class CohomologyClass { A, B };

/// Restriction of A = (c1(E1)-c1(E0)) c1(E0)^2 or B = c1(E0)^2 to p.
Rational class_value(CohomologyClass which, const FixedPoint& p, const Specialization& spec);

/// Overall sign in front of the S' assembly. Assembly is -(2g_i+g_j)(...),
/// Printed the opposite sign of the closed-form display.
enum class SPrimeSign { Assembly, Printed };

/// Enumerated graphs of every family at one degree, reused across points.
class DegreeGraphs {
 public:
  explicit DegreeGraphs(int d);

  int degree() const { return d_; }
  const std::vector<StableGraph>& of(const GraphFamily& family) const;

 private:
  int d_;
  std::vector<std::pair<GraphFamily, std::vector<StableGraph>>> families_;
};

/// S'_{d,i,j} = sign * (Delta A)(Delta B) e_{d,i,j} with Delta over R(i,j,1), R(i,j,2).
Rational s_prime(const DegreeGraphs& graphs, int i, int j, const Specialization& spec,
                 SPrimeSign sign = SPrimeSign::Assembly, unsigned threads = 1);
Rational s_prime(int d, int i, int j, const Specialization& spec,
                 SPrimeSign sign = SPrimeSign::Assembly, unsigned threads = 1);

/// -(A|Q(i,j) - A|Q(i,k))(B|Q(i,j) - B|Q(i,k)).
Rational gamma_T(int i, int j, int k, const Specialization& spec);

/// gamma_{i,0,1} f_{d,i,0,1} + gamma_{i,0,2} f_{d,i,0,2} + gamma_{i,1,2} f_{d,i,1,2}.
Rational t_prime(const DegreeGraphs& graphs, int i, const Specialization& spec, unsigned threads = 1);
Rational t_prime(int d, int i, const Specialization& spec, unsigned threads = 1);

struct PairParts {
  Rational s_part;
  Rational t_part;
  Rational total;
};

/// <A,B>_{0,d} evaluated at one point, split into the S and T sums.
PairParts pair_ab_at(const DegreeGraphs& graphs, const Specialization& spec,
                     SPrimeSign sign = SPrimeSign::Assembly, unsigned threads = 1);

struct InvariantResult {
  int d = 0;
  Rational ab_value;
  Rational invariant;
  std::vector<std::pair<Specialization, Rational>> per_spec_values;
  bool constant_ok = false;
};

/// Evaluates <A,B>_{0,d} at `points` specializations drawn from `seed`.
/// constant_ok is false if they disagree; ab_value is then the first value.
InvariantResult pair_ab(int d, std::uint64_t seed = 0, int points = 3, unsigned threads = 1);

/// <PD(a_{-3}(l)), PD(a_{-3}(X))>_{0,d} = pair_ab(d) / 3. Throws
/// std::runtime_error if the specializations disagree.
Rational invariant_a3(int d, std::uint64_t seed = 0, int points = 3, unsigned threads = 1);

struct IdentityCheck {
  std::string name;
  int d = 0;
  int points = 0;
  int agreeing = 0;
  bool passed = false;
};

/// Pointwise comparison of the engine against every printed closed form of
/// degree d (1..4) at `points` specializations. Failures are reported.
std::vector<IdentityCheck> verify_closed_forms(int d, std::uint64_t seed = 0, int points = 5,
                                               unsigned threads = 1);

}  // namespace hilb3
