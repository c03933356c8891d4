#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilb3/fock.hpp"
#include "hilb3/graphs.hpp"
#include "hilb3/invariants.hpp"

namespace hilb3::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "1";

Json to_json(const Rational& r);
Json to_json(const Specialization& spec);
Json to_json(const StableGraph& g);

/// Fixed points with tangent weights and tautological c1, then the curves.
Json catalog();

/// Representatives of enumerate(family, d) with automorphism orders.
Json graphs(const GraphFamily& family, int d);

struct GraphSumPoint {
  Specialization spec;
  Rational value;
  std::optional<Rational> closed_form;
};

struct GraphSumRun {
  GraphFamily family;
  int d = 0;
  std::vector<GraphSumPoint> points;
  /// Every point with a closed form agrees with it.
  bool closed_forms_agree = true;
};

/// graph_sum at `points` specializations; for d <= 4 each value is compared
/// with the closed form (sign-corrected for T(i;1,2)).
GraphSumRun run_graphsum(const GraphFamily& family, int d, std::uint64_t seed, int points,
                         unsigned threads);
Json graphsum(const GraphSumRun& run);
std::string graphsum_plain(const GraphSumRun& run);

Json invariant(const InvariantResult& r);
std::string invariant_plain(const InvariantResult& r);

Json verify(int d, const std::vector<IdentityCheck>& checks);
std::string verify_plain(const std::vector<IdentityCheck>& checks);

struct TableRun {
  int dmax = 0;
  /// f[k] = f(k+1) = (k+1) * invariant_a3(k+1).
  std::vector<Rational> f;
  std::vector<TwoPointTable> two_point;
  std::vector<ThreePointTable> three_point;
  std::vector<WdvvSides> wdvv;
  bool constant_ok = true;
};

/// Computes f(1..dmax) with the engine and regenerates both theorem tables.
TableRun run_tables(int dmax, std::uint64_t seed, int points, unsigned threads);
Json tables(const TableRun& run);
std::string tables_markdown(const TableRun& run);

}  // namespace hilb3::report
