#include "hilb3/invariants.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>

#include "hilb3/closed_forms.hpp"
#include "hilb3/localization.hpp"

namespace hilb3 {

namespace {

Rational s_from_sum(int i, int j, const Rational& e, const Specialization& spec, SPrimeSign sign) {
  const FixedPoint r1 = FixedPoint::pair(i, j, 1);
  const FixedPoint r2 = FixedPoint::pair(i, j, 2);
  const Rational da = class_value(CohomologyClass::A, r1, spec) - class_value(CohomologyClass::A, r2, spec);
  const Rational db = class_value(CohomologyClass::B, r1, spec) - class_value(CohomologyClass::B, r2, spec);
  const Rational s = da * db * e;
  return sign == SPrimeSign::Assembly ? -s : s;
}

Rational t_from_sums(int i, const Rational& f01, const Rational& f02, const Rational& f12,
                     const Specialization& spec) {
  return gamma_T(i, 0, 1, spec) * f01 + gamma_T(i, 0, 2, spec) * f02 + gamma_T(i, 1, 2, spec) * f12;
}

// All 15 family sums at one point, in all_families() order.
struct FamilySums {
  std::vector<GraphFamily> families = all_families();
  std::vector<Rational> values;

  FamilySums(const DegreeGraphs& graphs, const Specialization& spec, unsigned threads) {
    for (const GraphFamily& f : families) {
      values.push_back(graph_sum(graphs.of(f), spec, threads));
    }
  }

  const Rational& at(const GraphFamily& family) const {
    for (std::size_t k = 0; k < families.size(); ++k) {
      if (families[k] == family) {
        return values[k];
      }
    }
    throw std::logic_error("FamilySums: unknown family");
  }
};

}  // namespace

Rational class_value(CohomologyClass which, const FixedPoint& p, const Specialization& spec) {
  const Rational e0 = evaluate(c1_taut(0, p), spec);
  if (which == CohomologyClass::B) {
    return e0 * e0;
  }
  return (evaluate(c1_taut(1, p), spec) - e0) * e0 * e0;
}

DegreeGraphs::DegreeGraphs(int d) : d_(d) {
  if (d < 1) {
    throw std::invalid_argument("DegreeGraphs: degree must be positive");
  }
  for (const GraphFamily& f : all_families()) {
    families_.emplace_back(f, enumerate(f, d));
  }
}

const std::vector<StableGraph>& DegreeGraphs::of(const GraphFamily& family) const {
  for (const auto& [f, graphs] : families_) {
    if (f == family) {
      return graphs;
    }
  }
  throw std::logic_error("DegreeGraphs: unknown family " + family.name());
}

Rational s_prime(const DegreeGraphs& graphs, int i, int j, const Specialization& spec, SPrimeSign sign,
                 unsigned threads) {
  const Rational e = graph_sum(graphs.of(GraphFamily::S(i, j)), spec, threads);
  return s_from_sum(i, j, e, spec, sign);
}

Rational s_prime(int d, int i, int j, const Specialization& spec, SPrimeSign sign, unsigned threads) {
  const Rational e = graph_sum(GraphFamily::S(i, j), d, spec, threads);
  return s_from_sum(i, j, e, spec, sign);
}

Rational gamma_T(int i, int j, int k, const Specialization& spec) {
  const FixedPoint qj = FixedPoint::punctual(i, j);
  const FixedPoint qk = FixedPoint::punctual(i, k);
  const Rational da = class_value(CohomologyClass::A, qj, spec) - class_value(CohomologyClass::A, qk, spec);
  const Rational db = class_value(CohomologyClass::B, qj, spec) - class_value(CohomologyClass::B, qk, spec);
  return -(da * db);
}

Rational t_prime(const DegreeGraphs& graphs, int i, const Specialization& spec, unsigned threads) {
  return t_from_sums(i, graph_sum(graphs.of(GraphFamily::T(i, 0, 1)), spec, threads),
                     graph_sum(graphs.of(GraphFamily::T(i, 0, 2)), spec, threads),
                     graph_sum(graphs.of(GraphFamily::T(i, 1, 2)), spec, threads), spec);
}

Rational t_prime(int d, int i, const Specialization& spec, unsigned threads) {
  return t_from_sums(i, graph_sum(GraphFamily::T(i, 0, 1), d, spec, threads),
                     graph_sum(GraphFamily::T(i, 0, 2), d, spec, threads),
                     graph_sum(GraphFamily::T(i, 1, 2), d, spec, threads), spec);
}

PairParts pair_ab_at(const DegreeGraphs& graphs, const Specialization& spec, SPrimeSign sign,
                     unsigned threads) {
  PairParts parts;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) {
        parts.s_part += s_prime(graphs, i, j, spec, sign, threads);
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    parts.t_part += t_prime(graphs, i, spec, threads);
  }
  parts.total = parts.s_part + parts.t_part;
  return parts;
}

InvariantResult pair_ab(int d, std::uint64_t seed, int points, unsigned threads) {
  if (points < 1) {
    throw std::invalid_argument("pair_ab: need at least one specialization");
  }
  const DegreeGraphs graphs(d);
  const std::vector<Weight> forbidden = forbidden_weights(d);
  SpecializationSampler sampler(seed);
  InvariantResult result;
  result.d = d;
  result.constant_ok = true;
  for (int p = 0; p < points; ++p) {
    const Specialization spec = sampler.next(forbidden);
    const Rational total = pair_ab_at(graphs, spec, SPrimeSign::Assembly, threads).total;
    if (!result.per_spec_values.empty() && total != result.per_spec_values.front().second) {
      result.constant_ok = false;
    }
    result.per_spec_values.emplace_back(spec, total);
  }
  result.ab_value = result.per_spec_values.front().second;
  result.invariant = result.ab_value / Rational(3);
  return result;
}

Rational invariant_a3(int d, std::uint64_t seed, int points, unsigned threads) {
  const InvariantResult r = pair_ab(d, seed, points, threads);
  if (!r.constant_ok) {
    throw std::runtime_error("invariant_a3: <A,B> differs between specializations at d = " +
                             std::to_string(d));
  }
  return r.invariant;
}

std::vector<IdentityCheck> verify_closed_forms(int d, std::uint64_t seed, int points, unsigned threads) {
  if (d < 1 || d > 4) {
    throw std::out_of_range("verify_closed_forms: closed forms are printed only for 1 <= d <= 4");
  }
  if (points < 1) {
    throw std::invalid_argument("verify_closed_forms: need at least one specialization");
  }
  const DegreeGraphs graphs(d);
  std::unique_ptr<DegreeGraphs> graphs2;
  if (d >= 3) {
    graphs2 = std::make_unique<DegreeGraphs>(2);
  }

  struct Pending {
    std::string name;
    std::function<bool(const FamilySums&, const FamilySums*, const Specialization&)> holds;
  };
  std::vector<Pending> pending;
  const std::string ds = std::to_string(d);

  for (const GraphFamily& fam : all_families()) {
    if (fam.kind() != GraphFamily::Kind::S) {
      continue;
    }
    const int i = fam.chart();
    const int j = fam.first();
    const std::string tag = ds + "," + std::to_string(i) + "," + std::to_string(j);
    pending.push_back({"e_{" + tag + "} = (w_i+z_i)/(d w_i w_j (w_i-z_i)^2 z_i z_j)",
                       [=](const FamilySums& s, const FamilySums*, const Specialization& spec) {
                         return s.at(fam) == closed::e_sum(d, i, j, spec);
                       }});
    pending.push_back({"S'_{" + tag + "} = -(printed display)",
                       [=](const FamilySums& s, const FamilySums*, const Specialization& spec) {
                         return s_from_sum(i, j, s.at(fam), spec, SPrimeSign::Assembly) ==
                                -closed::s_prime_display(d, i, j, spec);
                       }});
  }

  for (int i = 0; i < 3; ++i) {
    const std::string tag = ds + "," + std::to_string(i);
    const GraphFamily t01 = GraphFamily::T(i, 0, 1);
    const GraphFamily t02 = GraphFamily::T(i, 0, 2);
    const GraphFamily t12 = GraphFamily::T(i, 1, 2);
    pending.push_back({"f_{" + tag + ",0,1} = printed display",
                       [=](const FamilySums& s, const FamilySums*, const Specialization& spec) {
                         return s.at(t01) == closed::f01(d, i, spec);
                       }});
    pending.push_back({"f_{" + tag + ",0,1} = printed (1/d) f_1 + remainder form",
                       [=](const FamilySums& s, const FamilySums*, const Specialization& spec) {
                         return s.at(t01) == closed::f01_split(d, i, spec);
                       }});
    pending.push_back({"f_{" + tag + ",0,2} = f_{" + tag + ",0,1} with w_i <-> z_i",
                       [=](const FamilySums& s, const FamilySums*, const Specialization& spec) {
                         return s.at(t02) == closed::f02(d, i, spec);
                       }});
    pending.push_back({"f_{" + tag + ",1,2} = printed display",
                       [=](const FamilySums& s, const FamilySums*, const Specialization& spec) {
                         return s.at(t12) == closed::f12(d, i, spec);
                       }});
    pending.push_back({"f_{" + tag + ",1,2} = -(printed display)",
                       [=](const FamilySums& s, const FamilySums*, const Specialization& spec) {
                         return s.at(t12) == -closed::f12(d, i, spec);
                       }});
    pending.push_back({"T'_{" + tag + "} = printed display",
                       [=](const FamilySums& s, const FamilySums*, const Specialization& spec) {
                         return t_from_sums(i, s.at(t01), s.at(t02), s.at(t12), spec) ==
                                closed::t_prime_display(d, i, spec);
                       }});
    pending.push_back({"T'_{" + tag + "} = printed recursion form",
                       [=](const FamilySums& s, const FamilySums*, const Specialization& spec) {
                         return t_from_sums(i, s.at(t01), s.at(t02), s.at(t12), spec) ==
                                closed::t_prime_recursion(d, i, spec);
                       }});
    for (const auto& [j, k] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      pending.push_back({"gamma_{" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                             "} = printed display",
                         [=](const FamilySums&, const FamilySums*, const Specialization& spec) {
                           return gamma_T(i, j, k, spec) == closed::gamma_display(i, j, k, spec);
                         }});
    }
    if (d >= 3) {
      const Rational factor = d == 3 ? Rational(1) : Rational(1, 2);
      pending.push_back({"f_{" + tag + ",1,2} = " + (d == 3 ? std::string("") : std::string("(1/2) ")) +
                             "f_{2," + std::to_string(i) + ",1,2} (engine)",
                         [=](const FamilySums& s, const FamilySums* s2, const Specialization&) {
                           return s.at(t12) == factor * s2->at(t12);
                         }});
    }
  }

  std::vector<IdentityCheck> out(pending.size());
  for (std::size_t k = 0; k < pending.size(); ++k) {
    out[k] = IdentityCheck{pending[k].name, d, points, 0, false};
  }
  const std::vector<Weight> forbidden = forbidden_weights(std::max(d, 2));
  SpecializationSampler sampler(seed);
  for (int p = 0; p < points; ++p) {
    const Specialization spec = sampler.next(forbidden);
    const FamilySums sums(graphs, spec, threads);
    std::unique_ptr<FamilySums> sums2;
    if (graphs2) {
      sums2 = std::make_unique<FamilySums>(*graphs2, spec, threads);
    }
    for (std::size_t k = 0; k < pending.size(); ++k) {
      out[k].agreeing += pending[k].holds(sums, sums2.get(), spec) ? 1 : 0;
    }
  }
  for (IdentityCheck& c : out) {
    c.passed = c.agreeing == c.points;
  }
  return out;
}

}  // namespace hilb3
