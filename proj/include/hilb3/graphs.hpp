#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hilb3/torus.hpp"

namespace hilb3 {

/// Which stable graphs a localization sum runs over.
///
/// S(i, j): edges on C(i,j), marked labels R(i,j,1) and R(i,j,2).
/// T(i; j, k): edges on the three punctual curves of chart i, marked labels
/// Q(i,j) and Q(i,k) with j < k.
class GraphFamily {
 public:
  enum class Kind : std::uint8_t { S, T };

  static GraphFamily S(int chart, int other);
  static GraphFamily T(int chart, int j, int k);

  Kind kind() const { return kind_; }
  int chart() const { return chart_; }
  int first() const { return a_; }
  int second() const { return b_; }

  /// Fixed points a vertex may carry.
  std::vector<FixedPoint> labels() const;
  /// Labels of the vertices carrying mark 1 and mark 2 in the representative.
  std::pair<FixedPoint, FixedPoint> marked_labels() const;
  bool supports(const InvariantCurve& curve) const;

  /// "S(i,j)" or "T(i;j,k)".
  std::string name() const;

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;

 private:
  GraphFamily(Kind kind, int chart, int a, int b) : kind_(kind), chart_(chart), a_(a), b_(b) {}

  Kind kind_;
  int chart_;
  int a_;
  int b_;
};

/// The 6 S families followed by the 9 T families.
std::vector<GraphFamily> all_families();

inline constexpr std::uint8_t kMark1 = 1;
inline constexpr std::uint8_t kMark2 = 2;

struct GraphVertex {
  FixedPoint label;
  std::uint8_t marks = 0;  // bitmask of kMark1, kMark2
};

struct GraphEdge {
  int u = 0;
  int v = 0;
  InvariantCurve curve;
  int degree = 1;
};

/// Decorated genus-0 graph describing a component of the fixed locus of the
/// two-pointed stable map space.
struct StableGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  /// Sum over edges of beta_multiple * degree.
  int total_degree() const;
  /// Number of incident edges.
  int valence(int vertex) const;
  /// valence + number of marks.
  int special_points(int vertex) const;
};

/// One representative per isomorphism class, with mark 1 on the first label
/// of family.marked_labels(). Sorted by (vertex count, canonical form).
std::vector<StableGraph> enumerate(const GraphFamily& family, int d);

/// String invariant: equal iff the graphs are isomorphic preserving labels,
/// marks, edge curves and edge degrees.
std::string canonical_form(const StableGraph& g);

/// |Aut(G)| times the product of the edge degrees.
std::int64_t automorphism_order(const StableGraph& g);

/// Size of the graph automorphism group alone.
std::int64_t graph_automorphisms(const StableGraph& g);

/// Tree, endpoint labels, family support, marks on distinct family labels
/// (either orientation) and total degree d.
bool validate(const StableGraph& g, const GraphFamily& family, int d);

}  // namespace hilb3
