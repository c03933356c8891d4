#pragma once

#include <span>
#include <vector>

#include "hilb3/graphs.hpp"
#include "hilb3/weight.hpp"

namespace hilb3 {

/// chi(f^*T) for a degree d_e cover of a contracted curve.
struct EdgeChi {
  InvariantCurve curve;
  int degree;
  VirtualCharacter character;
};

/// Builds the displayed character: the fixed part plus, for m = 1..d_e-1, the
/// grouped characters shifted by (m/d_e) times the base weight.
EdgeChi chi_edge(const InvariantCurve& curve, int degree);

/// Euler class of the moving part of chi_edge(curve, degree).
Rational edge_euler(const InvariantCurve& curve, int degree, const Specialization& spec);

/// a(a+1)...(a+n-1), with P(a,0) = 1.
Rational pochhammer(const Rational& a, int n);

/// Closed form of edge_euler for C(i,j) in terms of two Pochhammer symbols.
Rational edge_euler_closed(int chart, int other, int degree, const Specialization& spec);

/// Integral over Mbar_{0,n} of prod_F 1/(omega_F - psi_F), equal to
/// prod omega^{-1} * (sum omega^{-1})^{n-3}. Requires n >= 3 and nonzero omegas.
Rational vertex_psi_integral(std::span<const Rational> omegas, int n);

/// A (vertex, edge) incidence with omega = curve tangent weight / d_e.
struct FlagData {
  int vertex;
  int edge;
  Weight omega;
  int n_of_vertex;
};

std::vector<FlagData> flags(const StableGraph& g);

/// Integral of 1/(|A_G| e(N^vir)) over the fixed-locus component of g.
Rational graph_contribution(const StableGraph& g, const Specialization& spec);

/// Sum of graph_contribution over `graphs`, evaluated on up to `threads`
/// workers and reduced in list order.
Rational graph_sum(std::span<const StableGraph> graphs, const Specialization& spec,
                   unsigned threads = 1);

/// Sum over enumerate(family, d).
Rational graph_sum(const GraphFamily& family, int d, const Specialization& spec,
                   unsigned threads = 1);

/// Weights whose vanishing would make some quantity up to degree d_max
/// undefined: tangent and chi weights, omega sums, closed-form denominators.
std::vector<Weight> forbidden_weights(int d_max);

/// HILB3_THREADS if set and positive, else the hardware concurrency.
unsigned default_threads();

}  // namespace hilb3
