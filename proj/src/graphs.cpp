#include "hilb3/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hilb3 {

GraphFamily GraphFamily::S(int chart, int other) {
  (void)InvariantCurve::pair(chart, other);  // range check
  return GraphFamily(Kind::S, chart, other, 0);
}

GraphFamily GraphFamily::T(int chart, int j, int k) {
  (void)InvariantCurve::punctual(chart, j, k);
  return GraphFamily(Kind::T, chart, j, k);
}

std::vector<FixedPoint> GraphFamily::labels() const {
  if (kind_ == Kind::S) {
    return {FixedPoint::pair(chart_, a_, 1), FixedPoint::pair(chart_, a_, 2)};
  }
  return {FixedPoint::punctual(chart_, 0), FixedPoint::punctual(chart_, 1),
          FixedPoint::punctual(chart_, 2)};
}

std::pair<FixedPoint, FixedPoint> GraphFamily::marked_labels() const {
  if (kind_ == Kind::S) {
    return {FixedPoint::pair(chart_, a_, 1), FixedPoint::pair(chart_, a_, 2)};
  }
  return {FixedPoint::punctual(chart_, a_), FixedPoint::punctual(chart_, b_)};
}

bool GraphFamily::supports(const InvariantCurve& curve) const {
  if (curve.chart() != chart_) {
    return false;
  }
  if (kind_ == Kind::S) {
    return !curve.is_punctual() && curve.other_chart() == a_;
  }
  return curve.is_punctual();
}

std::string GraphFamily::name() const {
  if (kind_ == Kind::S) {
    return "S(" + std::to_string(chart_) + "," + std::to_string(a_) + ")";
  }
  return "T(" + std::to_string(chart_) + ";" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

std::vector<GraphFamily> all_families() {
  std::vector<GraphFamily> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) {
        out.push_back(GraphFamily::S(i, j));
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    out.push_back(GraphFamily::T(i, 0, 1));
    out.push_back(GraphFamily::T(i, 0, 2));
    out.push_back(GraphFamily::T(i, 1, 2));
  }
  return out;
}

int StableGraph::total_degree() const {
  int total = 0;
  for (const GraphEdge& e : edges) {
    total += e.curve.beta_multiple() * e.degree;
  }
  return total;
}

int StableGraph::valence(int vertex) const {
  int val = 0;
  for (const GraphEdge& e : edges) {
    val += (e.u == vertex) + (e.v == vertex);
  }
  return val;
}

int StableGraph::special_points(int vertex) const {
  const std::uint8_t m = vertices.at(static_cast<std::size_t>(vertex)).marks;
  return valence(vertex) + ((m & kMark1) ? 1 : 0) + ((m & kMark2) ? 1 : 0);
}

namespace {

struct Incidence {
  int neighbor;
  int edge;
};

using Adjacency = std::vector<std::vector<Incidence>>;

Adjacency adjacency(const StableGraph& g) {
  Adjacency adj(g.vertices.size());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    adj[static_cast<std::size_t>(g.edges[e].u)].push_back({g.edges[e].v, e});
    adj[static_cast<std::size_t>(g.edges[e].v)].push_back({g.edges[e].u, e});
  }
  return adj;
}

std::string vertex_token(const GraphVertex& v) {
  return v.label.name() + (v.marks ? "*" + std::to_string(v.marks) : "");
}

std::string edge_token(const GraphEdge& e) { return e.curve.name() + "^" + std::to_string(e.degree); }

// Rooted encoding; also accumulates the order of the root stabilizer.
std::string rooted(const StableGraph& g, const Adjacency& adj, int v, int parent,
                   std::int64_t* stabilizer) {
  std::vector<std::string> children;
  for (const Incidence& inc : adj[static_cast<std::size_t>(v)]) {
    if (inc.neighbor == parent) {
      continue;
    }
    children.push_back(edge_token(g.edges[static_cast<std::size_t>(inc.edge)]) +
                       rooted(g, adj, inc.neighbor, v, stabilizer));
  }
  std::sort(children.begin(), children.end());
  if (stabilizer != nullptr) {
    for (std::size_t a = 0; a < children.size();) {
      std::size_t b = a;
      while (b < children.size() && children[b] == children[a]) {
        ++b;
      }
      for (std::int64_t f = 2; f <= static_cast<std::int64_t>(b - a); ++f) {
        *stabilizer *= f;
      }
      a = b;
    }
  }
  std::string out = "(" + vertex_token(g.vertices[static_cast<std::size_t>(v)]);
  for (const std::string& c : children) {
    out += c;
  }
  return out + ")";
}

std::vector<std::string> rooted_forms(const StableGraph& g) {
  const Adjacency adj = adjacency(g);
  std::vector<std::string> forms;
  forms.reserve(g.vertices.size());
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    forms.push_back(rooted(g, adj, v, -1, nullptr));
  }
  return forms;
}

bool is_tree(const StableGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n == 0 || g.edges.size() + 1 != n) {
    return false;
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  for (const GraphEdge& e : g.edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n) {
      return false;
    }
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) {
      return false;
    }
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

void insert_unique(std::map<std::string, StableGraph>& bucket, StableGraph g) {
  std::string key = canonical_form(g);
  bucket.try_emplace(std::move(key), std::move(g));
}

}  // namespace

std::string canonical_form(const StableGraph& g) {
  if (g.vertices.empty()) {
    return "()";
  }
  const std::vector<std::string> forms = rooted_forms(g);
  return *std::min_element(forms.begin(), forms.end());
}

std::int64_t graph_automorphisms(const StableGraph& g) {
  if (g.vertices.empty()) {
    return 1;
  }
  const Adjacency adj = adjacency(g);
  std::int64_t stabilizer = 1;
  const std::string root = rooted(g, adj, 0, -1, &stabilizer);
  // in a tree, rooted isomorphism classes are exactly the automorphism orbits
  std::int64_t orbit = 0;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    orbit += rooted(g, adj, v, -1, nullptr) == root ? 1 : 0;
  }
  return orbit * stabilizer;
}

std::int64_t automorphism_order(const StableGraph& g) {
  std::int64_t order = graph_automorphisms(g);
  for (const GraphEdge& e : g.edges) {
    order *= e.degree;
  }
  return order;
}

bool validate(const StableGraph& g, const GraphFamily& family, int d) {
  if (!is_tree(g) || g.total_degree() != d) {
    return false;
  }
  const std::vector<FixedPoint> labels = family.labels();
  for (const GraphVertex& v : g.vertices) {
    if (std::find(labels.begin(), labels.end(), v.label) == labels.end()) {
      return false;
    }
    if ((v.marks & ~(kMark1 | kMark2)) != 0) {
      return false;
    }
  }
  for (const GraphEdge& e : g.edges) {
    if (e.degree < 1 || !family.supports(e.curve)) {
      return false;
    }
    const auto [a, b] = e.curve.endpoints();
    const FixedPoint& lu = g.vertices[static_cast<std::size_t>(e.u)].label;
    const FixedPoint& lv = g.vertices[static_cast<std::size_t>(e.v)].label;
    if (!((lu == a && lv == b) || (lu == b && lv == a))) {
      return false;
    }
  }
  int holder1 = -1;
  int holder2 = -1;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const std::uint8_t m = g.vertices[static_cast<std::size_t>(v)].marks;
    if (m & kMark1) {
      if (holder1 >= 0) {
        return false;
      }
      holder1 = v;
    }
    if (m & kMark2) {
      if (holder2 >= 0) {
        return false;
      }
      holder2 = v;
    }
  }
  if (holder1 < 0 || holder2 < 0) {
    return false;
  }
  const FixedPoint& l1 = g.vertices[static_cast<std::size_t>(holder1)].label;
  const FixedPoint& l2 = g.vertices[static_cast<std::size_t>(holder2)].label;
  const auto [m1, m2] = family.marked_labels();
  return (l1 == m1 && l2 == m2) || (l1 == m2 && l2 == m1);
}

std::vector<StableGraph> enumerate(const GraphFamily& family, int d) {
  if (d < 1) {
    throw std::invalid_argument("enumerate: degree must be positive");
  }
  const std::vector<FixedPoint> labels = family.labels();

  // unmarked trees bucketed by total degree, grown one leaf at a time
  std::vector<std::map<std::string, StableGraph>> by_degree(static_cast<std::size_t>(d) + 1);
  for (const FixedPoint& p : labels) {
    insert_unique(by_degree[0], StableGraph{{GraphVertex{p, 0}}, {}});
  }
  for (int deg = 0; deg < d; ++deg) {
    for (const auto& [key, g] : by_degree[static_cast<std::size_t>(deg)]) {
      for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        const FixedPoint& from = g.vertices[static_cast<std::size_t>(v)].label;
        for (const FixedPoint& to : labels) {
          const std::optional<InvariantCurve> curve = curve_between(from, to);
          if (!curve || !family.supports(*curve)) {
            continue;
          }
          const int beta = curve->beta_multiple();
          for (int de = 1; deg + beta * de <= d; ++de) {
            StableGraph grown = g;
            grown.vertices.push_back(GraphVertex{to, 0});
            grown.edges.push_back(GraphEdge{v, static_cast<int>(g.vertices.size()), *curve, de});
            insert_unique(by_degree[static_cast<std::size_t>(deg + beta * de)], std::move(grown));
          }
        }
      }
    }
  }

  const auto [m1, m2] = family.marked_labels();
  std::map<std::string, StableGraph> marked;
  for (const auto& [key, g] : by_degree[static_cast<std::size_t>(d)]) {
    for (std::size_t a = 0; a < g.vertices.size(); ++a) {
      if (g.vertices[a].label != m1) {
        continue;
      }
      for (std::size_t b = 0; b < g.vertices.size(); ++b) {
        if (g.vertices[b].label != m2) {
          continue;
        }
        StableGraph h = g;
        h.vertices[a].marks |= kMark1;
        h.vertices[b].marks |= kMark2;
        insert_unique(marked, std::move(h));
      }
    }
  }

  std::vector<std::pair<std::string, StableGraph>> sorted(marked.begin(), marked.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return x.second.vertices.size() < y.second.vertices.size();
  });
  std::vector<StableGraph> out;
  out.reserve(sorted.size());
  for (auto& entry : sorted) {
    out.push_back(std::move(entry.second));
  }
  return out;
}

}  // namespace hilb3
