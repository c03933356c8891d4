#include "hilb3/report.hpp"

#include <sstream>

#include "hilb3/closed_forms.hpp"
#include "hilb3/localization.hpp"

namespace hilb3::report {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Specialization& spec) {
  return Json{{"w", to_json(spec.w_value)}, {"z", to_json(spec.z_value)}};
}

Json to_json(const StableGraph& g) {
  Json vertices = Json::array();
  for (const GraphVertex& v : g.vertices) {
    Json marks = Json::array();
    if (v.marks & kMark1) {
      marks.push_back(1);
    }
    if (v.marks & kMark2) {
      marks.push_back(2);
    }
    vertices.push_back({{"label", v.label.name()}, {"marks", marks}});
  }
  Json edges = Json::array();
  for (const GraphEdge& e : g.edges) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"curve", e.curve.name()}, {"degree", e.degree}});
  }
  return Json{{"vertices", vertices}, {"edges", edges}, {"automorphism_order", automorphism_order(g)}};
}

Json catalog() {
  Json points = Json::array();
  for (const FixedPoint& p : all_fixed_points()) {
    Json tangent = Json::array();
    const VirtualCharacter rep = tangent_rep(p);
    for (const auto& [w, mult] : rep.terms()) {
      for (int k = 0; k < mult; ++k) {
        tangent.push_back(w.to_string());
      }
    }
    points.push_back({{"name", p.name()},
                      {"tangent", tangent},
                      {"c1_E0", c1_taut(0, p).to_string()},
                      {"c1_E1", c1_taut(1, p).to_string()}});
  }
  Json curves = Json::array();
  for (const InvariantCurve& c : curve_catalog()) {
    const auto [p, q] = c.endpoints();
    curves.push_back({{"name", c.name()},
                      {"endpoints", {p.name(), q.name()}},
                      {"tangent", {c.tangent_at(p).to_string(), c.tangent_at(q).to_string()}},
                      {"beta_multiple", c.beta_multiple()}});
  }
  return Json{{"schema", kSchema}, {"fixed_points", points}, {"curves", curves}};
}

Json graphs(const GraphFamily& family, int d) {
  Json list = Json::array();
  for (const StableGraph& g : enumerate(family, d)) {
    list.push_back(to_json(g));
  }
  return Json{{"schema", kSchema}, {"family", family.name()}, {"d", d}, {"graphs", list}};
}

namespace {

std::optional<Rational> closed_form_for(const GraphFamily& family, int d, const Specialization& spec) {
  if (d > 4) {
    return std::nullopt;
  }
  const int i = family.chart();
  if (family.kind() == GraphFamily::Kind::S) {
    return closed::e_sum(d, i, family.first(), spec);
  }
  if (family.first() == 0 && family.second() == 1) {
    return closed::f01(d, i, spec);
  }
  if (family.first() == 0 && family.second() == 2) {
    return closed::f02(d, i, spec);
  }
  return -closed::f12(d, i, spec);
}

}  // namespace

GraphSumRun run_graphsum(const GraphFamily& family, int d, std::uint64_t seed, int points,
                         unsigned threads) {
  GraphSumRun run{family, d, {}, true};
  const std::vector<StableGraph> list = enumerate(family, d);
  const std::vector<Weight> forbidden = forbidden_weights(d);
  SpecializationSampler sampler(seed);
  for (int p = 0; p < points; ++p) {
    const Specialization spec = sampler.next(forbidden);
    GraphSumPoint pt{spec, graph_sum(list, spec, threads), closed_form_for(family, d, spec)};
    if (pt.closed_form && *pt.closed_form != pt.value) {
      run.closed_forms_agree = false;
    }
    run.points.push_back(std::move(pt));
  }
  return run;
}

Json graphsum(const GraphSumRun& run) {
  Json pts = Json::array();
  for (const GraphSumPoint& p : run.points) {
    Json entry = to_json(p.spec);
    entry["value"] = to_json(p.value);
    if (p.closed_form) {
      entry["closed_form"] = to_json(*p.closed_form);
      entry["agrees"] = *p.closed_form == p.value;
    }
    pts.push_back(entry);
  }
  return Json{{"schema", kSchema},
              {"family", run.family.name()},
              {"d", run.d},
              {"points", pts},
              {"closed_forms_agree", run.closed_forms_agree}};
}

std::string graphsum_plain(const GraphSumRun& run) {
  std::ostringstream out;
  out << run.family.name() << " d=" << run.d << "\n";
  for (const GraphSumPoint& p : run.points) {
    out << "  (w,z) = (" << p.spec.w_value << ", " << p.spec.z_value << ")  sum = " << p.value;
    if (p.closed_form) {
      out << "  closed form " << (*p.closed_form == p.value ? "agrees" : "DIFFERS: " + p.closed_form->to_string());
    }
    out << "\n";
  }
  return out.str();
}

Json invariant(const InvariantResult& r) {
  Json specs = Json::array();
  for (const auto& [spec, total] : r.per_spec_values) {
    Json entry = to_json(spec);
    entry["total"] = to_json(total);
    specs.push_back(entry);
  }
  return Json{{"schema", kSchema},
              {"d", r.d},
              {"ab", to_json(r.ab_value)},
              {"invariant", to_json(r.invariant)},
              {"specializations", specs},
              {"verified_constant", r.constant_ok}};
}

std::string invariant_plain(const InvariantResult& r) {
  std::ostringstream out;
  out << "d = " << r.d << "\n";
  for (const auto& [spec, total] : r.per_spec_values) {
    out << "  (w,z) = (" << spec.w_value << ", " << spec.z_value << ")  <A,B> = " << total << "\n";
  }
  out << "<A,B> = " << r.ab_value << (r.constant_ok ? "" : "  (NOT CONSTANT)") << "\n";
  out << "invariant = " << r.invariant << "\n";
  return out.str();
}

Json verify(int d, const std::vector<IdentityCheck>& checks) {
  Json list = Json::array();
  bool all = true;
  for (const IdentityCheck& c : checks) {
    list.push_back({{"identity", c.name}, {"points", c.points}, {"agreeing", c.agreeing}, {"passed", c.passed}});
    all = all && c.passed;
  }
  return Json{{"schema", kSchema}, {"d", d}, {"checks", list}, {"all_passed", all}};
}

std::string verify_plain(const std::vector<IdentityCheck>& checks) {
  std::ostringstream out;
  for (const IdentityCheck& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.agreeing << "/" << c.points << "]\n";
  }
  return out.str();
}

TableRun run_tables(int dmax, std::uint64_t seed, int points, unsigned threads) {
  if (dmax < 1) {
    throw std::invalid_argument("run_tables: dmax must be positive");
  }
  TableRun run;
  run.dmax = dmax;
  for (int d = 1; d <= dmax; ++d) {
    const InvariantResult r = pair_ab(d, seed, points, threads);
    run.constant_ok = run.constant_ok && r.constant_ok;
    run.f.push_back(Rational(d) * r.invariant);
  }
  for (int d = 1; d <= dmax; ++d) {
    run.two_point.push_back(two_point_table(d, run.f[static_cast<std::size_t>(d - 1)]));
    run.three_point.push_back(three_point_table(d, run.f));
    run.wdvv.push_back(wdvv_sides(d, run.f));
  }
  return run;
}

namespace {

std::string joined(const std::vector<BasisElement>& b, const std::vector<int>& idx) {
  std::string out;
  for (int k : idx) {
    out += (out.empty() ? "" : ", ") + b[static_cast<std::size_t>(k)].name;
  }
  return out;
}

}  // namespace

Json tables(const TableRun& run) {
  const std::vector<BasisElement> b6 = basis(6);
  const std::vector<BasisElement> b8 = basis(8);
  Json degrees = Json::array();
  for (int d = 1; d <= run.dmax; ++d) {
    const auto k = static_cast<std::size_t>(d - 1);
    Json two = Json::array();
    for (const auto& [key, v] : run.two_point[k]) {
      if (!v.is_zero()) {
        two.push_back({{"classes", {b6[static_cast<std::size_t>(key.first)].name, b8[static_cast<std::size_t>(key.second)].name}},
                       {"value", to_json(v)}});
      }
    }
    Json three = Json::array();
    for (const auto& [key, v] : run.three_point[k]) {
      if (!v.is_zero()) {
        Json names = Json::array();
        for (int x : key) {
          names.push_back(b8[static_cast<std::size_t>(x)].name);
        }
        three.push_back({{"classes", names}, {"value", to_json(v)}});
      }
    }
    const WdvvSides& s = run.wdvv[k];
    degrees.push_back({{"d", d},
                       {"f", to_json(run.f[k])},
                       {"two_point", two},
                       {"three_point", three},
                       {"wdvv", {{"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)}, {"holds", s.lhs == s.rhs}}}});
  }
  return Json{{"schema", kSchema}, {"dmax", run.dmax}, {"verified_constant", run.constant_ok}, {"degrees", degrees}};
}

std::string tables_markdown(const TableRun& run) {
  const std::vector<BasisElement> b6 = basis(6);
  const std::vector<BasisElement> b8 = basis(8);
  std::ostringstream out;
  out << "## Two-point invariants\n\n| d | f(d) |";
  const std::vector<std::pair<int, int>> two_keys = {{0, 2}, {4, 1}, {3, 0}};
  for (const auto& [r, c] : two_keys) {
    out << " " << b6[static_cast<std::size_t>(r)].name << " , " << b8[static_cast<std::size_t>(c)].name << " |";
  }
  out << "\n|---|---|---|---|---|\n";
  for (int d = 1; d <= run.dmax; ++d) {
    const auto k = static_cast<std::size_t>(d - 1);
    out << "| " << d << " | " << run.f[k] << " |";
    for (const auto& key : two_keys) {
      out << " " << run.two_point[k].at(key) << " |";
    }
    out << "\n";
  }
  out << "\nAll other pairs of basis(6) x basis(8) vanish.\n\n## Three-point invariants\n\n| d |";
  const std::vector<std::array<int, 3>> three_keys = {{1, 1, 2}, {0, 0, 1}, {0, 0, 2}, {0, 0, 0}};
  for (const auto& key : three_keys) {
    out << " " << joined(b8, {key[0], key[1], key[2]}) << " |";
  }
  out << " WDVV |\n|---|---|---|---|---|---|\n";
  for (int d = 1; d <= run.dmax; ++d) {
    const auto k = static_cast<std::size_t>(d - 1);
    out << "| " << d << " |";
    for (const auto& key : three_keys) {
      out << " " << run.three_point[k].at(key) << " |";
    }
    out << " " << (run.wdvv[k].lhs == run.wdvv[k].rhs ? "holds" : "FAILS") << " |\n";
  }
  out << "\nAll other triples of basis(8) vanish.\n";
  return out.str();
}

}  // namespace hilb3::report
