#include "report_json.hpp"

#include "error.hpp"

namespace toric::report {

json integer(const Integer& x) { return x.get_str(); }

json vector(std::span<const Integer> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json vectors(std::span<const IntVector> vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector(v));
  return out;
}

json matrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector(m.row(r)));
  return out;
}

json group(const AbelianGroup& g) {
  json factors = vector(g.torsion());
  json out = {{"free_rank", g.free_rank()},
              {"invariant_factors", factors},
              {"rendered", g.render()}};
  if (auto n = g.order())
    out["order"] = n->get_str();
  else
    out["order"] = nullptr;
  return out;
}

json cone_inputs(const ConeSpec& spec) {
  json out = {{"generators", vectors(spec.generators)}};
  if (spec.label) out["label"] = *spec.label;
  return out;
}

json analyze(const SimplicialCone& cone) {
  return {{"dim", cone.dim()},
          {"valid", true},
          {"delta", integer(delta(cone))},
          {"generators", vectors(cone.generators())},
          {"dual_generators", vectors(dual_cone(cone))}};
}

json normal_form(const SimplicialCone& cone) {
  if (cone.dim() != 2 && cone.dim() != 3)
    fail(ErrorCode::kWrongDimension, "normal forms exist only in dimensions 2 and 3");
  const NormalForm nf = cone.dim() == 2 ? normalize_2d(cone) : normalize_3d(cone);
  const IntVector& second = nf.image.generator(1);
  json form = {{"a", integer(second[0])}, {"b", integer(second[1])}};
  if (cone.dim() == 3) {
    const IntVector& third = nf.image.generator(2);
    form["c"] = integer(third[0]);
    form["d"] = integer(third[1]);
    form["e"] = integer(third[2]);
  }
  return {{"dim", cone.dim()},
          {"transform", matrix(nf.transform.matrix())},
          {"dual_transform", matrix(dual_transform(nf.transform).matrix())},
          {"normalized_generators", vectors(nf.image.generators())},
          {"form", form}};
}

json chow(const SimplicialCone& cone, std::optional<std::size_t> codim) {
  json reports = json::array();
  auto one = [&](std::size_t k) {
    const ChowReport r = chow_group(cone, k);
    reports.push_back({{"codim", r.codim},
                       {"group", group(r.group)},
                       {"generators_count", r.generators_count},
                       {"relations_rank", r.relations_rank}});
  };
  if (codim) {
    one(*codim);
  } else {
    for (std::size_t k = 0; k <= cone.dim(); ++k) one(k);
  }
  return {{"dim", cone.dim()}, {"delta", integer(delta(cone))}, {"chow", reports}};
}

json g0(const G0Report& r) {
  json out = {{"dim", r.dim},
              {"free_rank", r.free_rank},
              {"delta", integer(r.delta)},
              {"a1", group(r.a1)},
              {"a2", r.a2 ? group(*r.a2) : json(nullptr)},
              {"f1_order", integer(r.f1_order)},
              {"source", to_string(r.source)}};
  out["f1_exact"] = r.f1_exact ? group(*r.f1_exact) : json("undetermined-extension");
  if (r.extension_candidates) {
    json cands = json::array();
    for (const auto& g : *r.extension_candidates) cands.push_back(group(g));
    out["extension_candidates"] = cands;
  } else {
    out["extension_candidates"] = nullptr;
  }
  return out;
}

json g0(const SimplicialCone& cone) {
  if (cone.dim() == 2) return g0(g0_dim2(cone));
  if (cone.dim() == 3) return g0(g0_dim3(cone));
  json out = chow(cone, std::nullopt);
  out["note"] = "G0 structure is only assembled in dimensions 2 and 3; Chow groups listed instead";
  return out;
}

json table(const std::vector<TableRow>& rows) {
  json out_rows = json::array();
  std::size_t matched = 0;
  for (const auto& row : rows) {
    if (row.matches()) ++matched;
    out_rows.push_back({{"generators", vectors(row.expected.generators)},
                        {"delta", integer(row.delta)},
                        {"expected_delta", std::to_string(row.expected.delta)},
                        {"a1", row.a1.render()},
                        {"expected_a1", row.expected.a1},
                        {"a2", row.a2.render()},
                        {"expected_a2", row.expected.a2},
                        {"match", row.matches()}});
  }
  return {{"rows", out_rows}, {"matched", matched}, {"total", rows.size()}};
}

json conjecture(const ConjectureReport& r) {
  json cex = json::array();
  for (const auto& t : r.counterexamples)
    cex.push_back({{"index", t.index},
                   {"generators", vectors(t.cone.generators())},
                   {"delta", integer(t.delta)},
                   {"a1", group(t.a1)},
                   {"a2", group(t.a2)},
                   {"a1_matches_delta", t.a1_matches_delta},
                   {"a2_divides_delta", t.a2_divides_delta}});
  return {{"dim", r.dim},
          {"trials", r.trials},
          {"seed", std::to_string(r.seed)},
          {"bound", std::to_string(r.bound)},
          {"a1_matches_delta", r.a1_matches_delta},
          {"a2_divides_delta", r.a2_divides_delta},
          {"implementation_bug", r.implementation_bug()},
          {"counterexamples", cex}};
}

json smith(const IntMatrix& input, const SmithDecomposition& snf) {
  return {{"input", matrix(input)},
          {"u", matrix(snf.u)},
          {"d", matrix(snf.d)},
          {"v", matrix(snf.v)},
          {"invariant_factors", vector(snf.invariant_factors)},
          {"rank", snf.rank()}};
}

}  // namespace toric::report
