#pragma once

// Brute-force reference implementations shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hilb3/graphs.hpp"
#include "hilb3/localization.hpp"

namespace oracle {

using hilb3::Rational;

// All labelled trees on n vertices, decoded from Pruefer sequences.
inline std::vector<std::vector<std::pair<int, int>>> labelled_trees(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (n == 1) {
    out.emplace_back();
    return out;
  }
  if (n == 2) {
    out.push_back({{0, 1}});
    return out;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) {
      ++degree[static_cast<std::size_t>(x)];
    }
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
      for (int leaf = 0; leaf < n; ++leaf) {
        if (degree[static_cast<std::size_t>(leaf)] == 1) {
          edges.emplace_back(leaf, x);
          --degree[static_cast<std::size_t>(leaf)];
          --degree[static_cast<std::size_t>(x)];
          break;
        }
      }
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[static_cast<std::size_t>(v)] == 1) {
        if (u < 0) {
          u = v;
        } else {
          edges.emplace_back(u, v);
        }
      }
    }
    out.push_back(edges);
    std::size_t k = 0;
    while (k < seq.size() && ++seq[k] == n) {
      seq[k++] = 0;
    }
    if (k == seq.size()) {
      break;
    }
  }
  return out;
}

// Every decorated graph of the family on numbered vertices, with mark 1 on a
// vertex labelled marked_labels().first and mark 2 on one labelled .second.
inline void for_each_numbered(const hilb3::GraphFamily& family, int d,
                              const std::function<void(const hilb3::StableGraph&)>& visit) {
  const std::vector<hilb3::FixedPoint> labels = family.labels();
  const auto [m1, m2] = family.marked_labels();
  for (int n = 2; n <= d + 1; ++n) {
    for (const auto& tree : labelled_trees(n)) {
      std::vector<int> choice(static_cast<std::size_t>(n), 0);
      while (true) {
        hilb3::StableGraph g;
        for (int c : choice) {
          g.vertices.push_back({labels[static_cast<std::size_t>(c)], 0});
        }
        bool ok = true;
        std::vector<hilb3::InvariantCurve> curves;
        for (const auto& [u, v] : tree) {
          const auto curve = hilb3::curve_between(g.vertices[static_cast<std::size_t>(u)].label,
                                                  g.vertices[static_cast<std::size_t>(v)].label);
          if (!curve || !family.supports(*curve)) {
            ok = false;
            break;
          }
          curves.push_back(*curve);
        }
        if (ok) {
          // degrees with sum beta * d_e = d
          std::vector<int> deg(tree.size(), 1);
          std::function<void(std::size_t, int)> assign = [&](std::size_t e, int left) {
            if (e == tree.size()) {
              if (left != 0) {
                return;
              }
              hilb3::StableGraph h = g;
              for (std::size_t k = 0; k < tree.size(); ++k) {
                h.edges.push_back({tree[k].first, tree[k].second, curves[k], deg[k]});
              }
              for (int a = 0; a < n; ++a) {
                if (h.vertices[static_cast<std::size_t>(a)].label != m1) {
                  continue;
                }
                for (int b = 0; b < n; ++b) {
                  if (h.vertices[static_cast<std::size_t>(b)].label != m2) {
                    continue;
                  }
                  hilb3::StableGraph marked = h;
                  marked.vertices[static_cast<std::size_t>(a)].marks |= hilb3::kMark1;
                  marked.vertices[static_cast<std::size_t>(b)].marks |= hilb3::kMark2;
                  visit(marked);
                }
              }
              return;
            }
            const int beta = curves[e].beta_multiple();
            for (int de = 1; beta * de <= left; ++de) {
              deg[e] = de;
              assign(e + 1, left - beta * de);
            }
          };
          assign(0, d);
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == static_cast<int>(labels.size())) {
          choice[k++] = 0;
        }
        if (k == choice.size()) {
          break;
        }
      }
    }
  }
}

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

// Vertex permutations preserving labels, marks and decorated edges.
inline std::int64_t exhaustive_automorphisms(const hilb3::StableGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::map<std::pair<int, int>, std::pair<hilb3::InvariantCurve, int>> adj;
  for (const auto& e : g.edges) {
    adj.emplace(std::pair{std::min(e.u, e.v), std::max(e.u, e.v)}, std::pair{e.curve, e.degree});
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const auto& a = g.vertices[static_cast<std::size_t>(v)];
      const auto& b = g.vertices[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
      ok = a.label == b.label && a.marks == b.marks;
    }
    for (auto it = adj.begin(); it != adj.end() && ok; ++it) {
      const int pu = perm[static_cast<std::size_t>(it->first.first)];
      const int pv = perm[static_cast<std::size_t>(it->first.second)];
      const auto found = adj.find({std::min(pu, pv), std::max(pu, pv)});
      ok = found != adj.end() && found->second == it->second;
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline std::int64_t degree_product(const hilb3::StableGraph& g) {
  std::int64_t p = 1;
  for (const auto& e : g.edges) {
    p *= e.degree;
  }
  return p;
}

// Number of isomorphism classes: each class has V!/|Aut| numberings.
inline Rational class_count(const hilb3::GraphFamily& family, int d) {
  Rational total(0);
  for_each_numbered(family, d, [&](const hilb3::StableGraph& g) {
    total += Rational(exhaustive_automorphisms(g), factorial(static_cast<int>(g.vertices.size())));
  });
  return total;
}

// Graph sum over numbered graphs: the unnormalized integrand divided by
// V! * prod d_e, so no automorphism group is needed.
inline Rational graph_sum(const hilb3::GraphFamily& family, int d, const hilb3::Specialization& spec) {
  Rational total(0);
  for_each_numbered(family, d, [&](const hilb3::StableGraph& g) {
    const Rational raw = hilb3::graph_contribution(g, spec) * Rational(hilb3::automorphism_order(g));
    total += raw / Rational(factorial(static_cast<int>(g.vertices.size())) * degree_product(g));
  });
  return total;
}

// Integral over Mbar_{0,n} of prod_F 1/(omega_F - psi_F) by expanding each
// factor as sum_k psi^k / omega^{k+1} and using <psi^k...> = (n-3)!/prod k!.
inline Rational psi_integral(const std::vector<Rational>& omegas, int n) {
  const int top = n - 3;
  Rational total(0);
  std::vector<int> k(omegas.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == omegas.size()) {
      if (left != 0) {
        return;
      }
      Rational term(factorial(top));
      for (std::size_t f = 0; f < omegas.size(); ++f) {
        term /= Rational(factorial(k[f]));
        term *= omegas[f].pow(-1 - k[f]);
      }
      total += term;
      return;
    }
    for (int x = 0; x <= left; ++x) {
      k[idx] = x;
      rec(idx + 1, left - x);
    }
  };
  rec(0, top);
  return total;
}

// chi(P^1, f^*T) by K-theoretic localization on the cover: with u the
// character of the tangent line at the point over `a`,
//   chi = (T_b - u T_a) / (1 - u).
// Characters are multisets of weights; the division is exact or throws.
inline hilb3::VirtualCharacter chi_by_localization(const hilb3::InvariantCurve& curve, int degree) {
  const auto [pa, pb] = curve.endpoints();
  const hilb3::Weight u = Rational(1, degree) * curve.tangent_at(pa);
  std::map<hilb3::Weight, int> num;
  const hilb3::VirtualCharacter ta = hilb3::tangent_rep(pa);
  const hilb3::VirtualCharacter tb = hilb3::tangent_rep(pb);
  for (const auto& [w, m] : tb.terms()) {
    num[w] += m;
  }
  for (const auto& [w, m] : ta.terms()) {
    num[w + u] -= m;
  }
  // peel off the lowest term along u: c e^x = c e^x (1 - e^u) + c e^{x+u}
  auto height = [&u](const hilb3::Weight& w) {
    return w.coeff_w() * u.coeff_w() + w.coeff_z() * u.coeff_z();
  };
  hilb3::VirtualCharacter quotient;
  for (int guard = 0; guard < 10000; ++guard) {
    std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
    if (num.empty()) {
      return quotient;
    }
    auto low = std::min_element(num.begin(), num.end(),
                                [&](const auto& x, const auto& y) { return height(x.first) < height(y.first); });
    const hilb3::Weight x = low->first;
    const int c = low->second;
    quotient.add(x, c);
    num[x] -= c;
    num[x + u] += c;
  }
  throw std::runtime_error("chi_by_localization: division did not terminate");
}

}  // namespace oracle
