#include "hilb3/localization.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace hilb3 {

namespace {

struct Term {
  int a;
  int b;
  int mult;
};

struct ChiDisplay {
  std::vector<Term> fixed;
  std::vector<Term> group;
  Term base;  // mult unused
};

// Characters lambda_i^a mu_i^b of the chi displays. The C(i,j) display also
// carries lambda_j^{-1} + mu_j^{-1}, added separately.
const ChiDisplay& display_for(const InvariantCurve& curve) {
  static const ChiDisplay pair{
      {{0, 0, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, 0, 1}, {0, -1, 1}, {-1, -1, -1}},
      {{0, 0, 1}, {-1, 1, 1}, {-2, 0, -1}, {-1, -1, -1}},
      {1, -1, 0}};
  static const ChiDisplay c01{
      {{0, 0, 1}, {-1, 2, 1}, {1, -2, 1}, {-1, 1, 1}, {0, -1, 1}, {-1, 0, 1}, {0, -1, 1}, {-1, -1, -1}},
      {{-1, 2, 1}, {0, 0, 1}, {-1, 1, 1}, {-2, 1, -1}, {-1, -1, -1}, {-1, 0, -1}},
      {1, -2, 0}};
  static const ChiDisplay c02{
      {{0, 0, 1}, {2, -1, 1}, {-2, 1, 1}, {1, -1, 1}, {-1, 0, 1}, {0, -1, 1}, {-1, 0, 1}, {-1, -1, -1}},
      {{2, -1, 1}, {0, 0, 1}, {1, -1, 1}, {1, -2, -1}, {-1, -1, -1}, {0, -1, -1}},
      {-2, 1, 0}};
  static const ChiDisplay c12{
      {{-1, 0, 1}, {0, -1, 1}, {-1, 1, 1}, {0, 0, 1}, {1, -1, 1}, {-1, 2, 1}, {0, 1, 1}, {1, 0, 1},
       {2, -1, 1}, {-1, -1, -1}, {-2, -1, -1}, {-1, -2, -1}},
      {{0, 0, 1}, {-1, 2, 1}, {0, 1, 1}, {1, 0, 1}, {-1, 1, 1}, {-2, 0, -1}, {-1, -1, -1}, {-3, 0, -1},
       {-2, -1, -1}, {-1, -2, -1}},
      {1, -1, 0}};
  if (!curve.is_punctual()) {
    return pair;
  }
  if (curve.first_index() == 0) {
    return curve.second_index() == 1 ? c01 : c02;
  }
  return c12;
}

// Per-specialization memo of the factors shared between graphs.
class Evaluator {
 public:
  explicit Evaluator(const Specialization& spec) : spec_(spec) {}

  const Rational& tangent(const FixedPoint& p) {
    auto it = tangent_.find(p);
    if (it == tangent_.end()) {
      it = tangent_.emplace(p, euler_tangent(p, spec_)).first;
    }
    return it->second;
  }

  const Rational& edge(const InvariantCurve& c, int degree) {
    auto key = std::make_pair(c, degree);
    auto it = edge_.find(key);
    if (it == edge_.end()) {
      it = edge_.emplace(key, edge_euler(c, degree, spec_)).first;
    }
    return it->second;
  }

  Rational contribution(const StableGraph& g) {
    const std::vector<FlagData> fl = flags(g);
    Rational num(1);
    Rational den(1);
    for (const GraphEdge& e : g.edges) {
      den *= edge(e.curve, e.degree);
    }
    std::vector<std::vector<Rational>> omegas(g.vertices.size());
    for (const FlagData& f : fl) {
      num *= tangent(g.vertices[static_cast<std::size_t>(f.vertex)].label);
      omegas[static_cast<std::size_t>(f.vertex)].push_back(evaluate_nonzero(f.omega, spec_));
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      den *= tangent(g.vertices[v].label);
      const int val = static_cast<int>(omegas[v].size());
      const int n = g.special_points(static_cast<int>(v));
      if (val == 2 && n == 2) {
        const Rational s = omegas[v][0] + omegas[v][1];
        if (s.is_zero()) {
          throw DegenerateSpecialization("omega sum vanishes at a valence-2 vertex");
        }
        den *= s;
      } else if (val == 1 && n == 1) {
        den /= omegas[v][0];
      } else if (n >= 3) {
        num *= vertex_psi_integral(omegas[v], n);
      }
    }
    return num / (den * Rational(automorphism_order(g)));
  }

 private:
  Specialization spec_;
  std::map<FixedPoint, Rational> tangent_;
  std::map<std::pair<InvariantCurve, int>, Rational> edge_;
};

}  // namespace

EdgeChi chi_edge(const InvariantCurve& curve, int degree) {
  if (degree < 1) {
    throw std::invalid_argument("chi_edge: degree must be positive");
  }
  const int i = curve.chart();
  const ChiDisplay& disp = display_for(curve);
  VirtualCharacter chi;
  for (const Term& t : disp.fixed) {
    chi.add(chart_character(i, t.a, t.b), t.mult);
  }
  if (!curve.is_punctual()) {
    chi.add(chart_character(curve.other_chart(), -1, 0));
    chi.add(chart_character(curve.other_chart(), 0, -1));
  }
  const Weight base = chart_character(i, disp.base.a, disp.base.b);
  for (int m = 1; m < degree; ++m) {
    const Weight shift = Rational(m, degree) * base;
    for (const Term& t : disp.group) {
      chi.add(chart_character(i, t.a, t.b) + shift, t.mult);
    }
  }
  return EdgeChi{curve, degree, std::move(chi)};
}

Rational edge_euler(const InvariantCurve& curve, int degree, const Specialization& spec) {
  return chi_edge(curve, degree).character.euler_class(spec);
}

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) {
    throw std::invalid_argument("pochhammer: negative length");
  }
  Rational r(1);
  for (int k = 0; k < n; ++k) {
    r *= a + Rational(k);
  }
  return r;
}

Rational edge_euler_closed(int chart, int other, int degree, const Specialization& spec) {
  if (degree < 1) {
    throw std::invalid_argument("edge_euler_closed: degree must be positive");
  }
  const auto [wi_, zi_] = torus_weights(chart);
  const auto [wj_, zj_] = torus_weights(other);
  const Rational wi = evaluate(wi_, spec);
  const Rational zi = evaluate(zi_, spec);
  const Rational wj = evaluate(wj_, spec);
  const Rational zj = evaluate(zj_, spec);
  const Rational de(degree);

  Rational fact(1);
  for (int k = 2; k < degree; ++k) {
    fact *= Rational(k);
  }
  const Rational sign = degree % 2 == 1 ? Rational(1) : Rational(-1);
  const Rational num = sign * fact * fact * wi * wj * zi * zj * (wi - zi) * (wi - zi);
  const Rational p1 = pochhammer(Rational(1) + Rational(2) * de * wi / (zi - wi), degree - 1);
  const Rational p2 = pochhammer(Rational(1) - de * (wi + zi) / (wi - zi), degree - 1);
  const Rational den = (wi + zi) * p1 * p2;
  if (den.is_zero()) {
    throw DegenerateSpecialization("edge_euler_closed: vanishing denominator");
  }
  return num / den;
}

Rational vertex_psi_integral(std::span<const Rational> omegas, int n) {
  if (n < 3) {
    throw std::invalid_argument("vertex_psi_integral: n must be at least 3");
  }
  if (omegas.empty()) {
    throw std::invalid_argument("vertex_psi_integral: no flags");
  }
  Rational prod(1);
  Rational sum(0);
  for (const Rational& om : omegas) {
    if (om.is_zero()) {
      throw std::invalid_argument("vertex_psi_integral: zero omega");
    }
    const Rational inv = om.inverse();
    prod *= inv;
    sum += inv;
  }
  return prod * sum.pow(n - 3);
}

std::vector<FlagData> flags(const StableGraph& g) {
  std::vector<FlagData> out;
  out.reserve(2 * g.edges.size());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const GraphEdge& edge = g.edges[static_cast<std::size_t>(e)];
    for (int v : {edge.u, edge.v}) {
      const FixedPoint& label = g.vertices[static_cast<std::size_t>(v)].label;
      out.push_back(FlagData{v, e, Rational(1, edge.degree) * edge.curve.tangent_at(label),
                             g.special_points(v)});
    }
  }
  return out;
}

Rational graph_contribution(const StableGraph& g, const Specialization& spec) {
  return Evaluator(spec).contribution(g);
}

Rational graph_sum(std::span<const StableGraph> graphs, const Specialization& spec, unsigned threads) {
  const std::size_t n = graphs.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  std::vector<Rational> values(n);
  if (workers == 1) {
    Evaluator ev(spec);
    for (std::size_t k = 0; k < n; ++k) {
      values[k] = ev.contribution(graphs[k]);
    }
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          Evaluator ev(spec);
          for (std::size_t k = w; k < n; k += workers) {
            values[k] = ev.contribution(graphs[k]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) {
      t.join();
    }
    for (const std::exception_ptr& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }
  Rational total(0);
  for (const Rational& v : values) {
    total += v;
  }
  return total;
}

Rational graph_sum(const GraphFamily& family, int d, const Specialization& spec, unsigned threads) {
  const std::vector<StableGraph> graphs = enumerate(family, d);
  return graph_sum(graphs, spec, threads);
}

std::vector<Weight> forbidden_weights(int d_max) {
  std::set<Weight> out;
  auto put = [&out](const Weight& w) {
    if (!w.is_zero()) {
      out.insert(w);
    }
  };
  for (const FixedPoint& p : all_fixed_points()) {
    const VirtualCharacter t = tangent_rep(p);
    for (const auto& [w, mult] : t.terms()) {
      put(w);
    }
  }
  const std::vector<InvariantCurve> curves = curve_catalog();
  for (const InvariantCurve& c : curves) {
    for (int de = 1; de <= d_max; ++de) {
      const EdgeChi chi = chi_edge(c, de);
      for (const auto& [w, mult] : chi.character.terms()) {
        put(w);
      }
    }
  }
  // omegas and the omega sums at valence-2 vertices
  for (const FixedPoint& p : all_fixed_points()) {
    std::vector<Weight> tangents;
    for (const InvariantCurve& c : curves) {
      if (c.has_endpoint(p)) {
        tangents.push_back(c.tangent_at(p));
      }
    }
    for (std::size_t a = 0; a < tangents.size(); ++a) {
      for (std::size_t b = a; b < tangents.size(); ++b) {
        for (int da = 1; da <= d_max; ++da) {
          for (int db = 1; db <= d_max; ++db) {
            put(Rational(1, da) * tangents[a]);
            put(Rational(1, da) * tangents[a] + Rational(1, db) * tangents[b]);
          }
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    const auto [wi, zi] = torus_weights(i);
    for (const Weight& w : {wi, zi, wi - zi, wi + zi, wi - Rational(2) * zi, Rational(2) * wi - zi,
                            wi + Rational(4) * zi, Rational(4) * wi + zi}) {
      put(w);
    }
    for (int de = 1; de <= d_max; ++de) {
      for (int m = 0; m + 1 < de; ++m) {
        put(Rational(1 + m) * (zi - wi) + Rational(2 * de) * wi);
        put(Rational(1 + m) * (wi - zi) - Rational(de) * (wi + zi));
      }
    }
  }
  return {out.begin(), out.end()};
}

unsigned default_threads() {
  if (const char* env = std::getenv("HILB3_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) {
        return static_cast<unsigned>(v);
      }
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace hilb3
