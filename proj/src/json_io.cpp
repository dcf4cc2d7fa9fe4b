#include "vk/json_io.hpp"

#include "vk/gauss_code.hpp"

namespace vk {

ordered_json diagram_to_json(const GaussDiagram& d) {
  ordered_json comps = ordered_json::array();
  for (const auto& comp : d.components()) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : comp)
      arr.push_back({{"chord", e.chord},
                     {"passage", e.passage == Passage::Over ? "O" : "U"},
                     {"sign", d.sign(e.chord)}});
    comps.push_back(arr);
  }
  return ordered_json{{"components", comps}};
}

ordered_json writhe_to_json(const WritheVector& w) {
  ordered_json out = ordered_json::object();
  for (const auto& [n, j] : w.entries) out[std::to_string(n)] = j;
  return out;
}

ordered_json span_to_json(const SpanReport& span) {
  ordered_json pairs = ordered_json::array();
  for (const auto& p : span.pairs)
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"span", p.span()},
                     {"alpha_plus", p.alpha_plus},
                     {"alpha_minus", p.alpha_minus},
                     {"beta_plus", p.beta_plus},
                     {"beta_minus", p.beta_minus}});
  return ordered_json{{"total", span.total}, {"pairs", pairs}};
}

ordered_json ell_to_json(const EllReport& ell) {
  ordered_json pairs = ordered_json::array();
  for (const auto& p : ell.pairs) {
    ordered_json lambda = ordered_json::array();
    for (const auto& subset : p.lambda) lambda.push_back(subset);
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"ell", p.ell},
                     {"budget_exceeded", p.budget_exceeded},
                     {"lambda", lambda}});
  }
  return ordered_json{
      {"total", ell.total}, {"budget_exceeded", ell.budget_exceeded}, {"pairs", pairs}};
}

ordered_json invariants_report(const GaussDiagram& d) {
  ordered_json out;
  out["code"] = canonical_code(d);
  out["components"] = d.component_count();
  out["chords"] = d.chord_count();
  if (d.component_count() <= 1) {
    WritheVector w = writhe_vector(d);
    out["writhe"] = writhe_to_json(w);
    out["polynomial"] = affine_index_polynomial(d).str();
    auto lb = lower_bound_knot(d);
    out["lower_bound"] = {lb.virtualizations, lb.changes};
    auto mc = minimal_crossing_check(d);
    out["minimal"] = mc.minimal;
    if (mc.crossing_number) out["crossing_number"] = *mc.crossing_number;
  } else {
    ordered_json cw = ordered_json::array();
    for (const auto& w : component_writhe_vectors(d)) cw.push_back(writhe_to_json(w));
    out["component_writhe"] = cw;
    out["span"] = span_to_json(span_total(d));
    EllReport ell = ell_invariant(d);
    out["ell"] = ell.total;
    out["ell_detail"] = ell_to_json(ell);
    auto lb = lower_bound_link(d);
    out["lower_bound"] = {lb.virtualizations, lb.changes};
  }
  return out;
}

ordered_json move_to_json(const Move& m) {
  ordered_json site;
  switch (m.kind) {
    case MoveKind::R1Reduce:
      site["chord"] = m.chords[0];
      break;
    case MoveKind::R2Reduce:
      site["chords"] = {m.chords[0], m.chords[1]};
      break;
    case MoveKind::R3: {
      ordered_json pairs = ordered_json::array();
      for (const auto& l : m.pair_starts) pairs.push_back({l.comp, l.pos});
      site["pairs"] = pairs;
      site["chords"] = {m.chords[0], m.chords[1], m.chords[2]};
      break;
    }
    case MoveKind::R1Expand:
      site["at"] = {m.at.comp, m.at.pos};
      site["over_first"] = m.over_first;
      site["sign"] = m.sign;
      break;
    case MoveKind::R2Expand:
      site["at"] = {m.at.comp, m.at.pos};
      site["at2"] = {m.at2.comp, m.at2.pos};
      site["parallel"] = m.parallel;
      site["sign"] = m.sign;
      break;
  }
  bool reduce = is_reducing(m);
  return ordered_json{{"kind", to_string(m.kind)},
                      {"site", site},
                      {"direction", m.kind == MoveKind::R3 ? "none"
                                    : reduce              ? "reduce"
                                                          : "expand"}};
}

Move move_from_json(const ordered_json& j) {
  Move m;
  std::string kind = j.at("kind");
  const auto& site = j.at("site");
  if (kind == "R1-") {
    m.kind = MoveKind::R1Reduce;
    m.chords[0] = site.at("chord");
  } else if (kind == "R2-") {
    m.kind = MoveKind::R2Reduce;
    m.chords[0] = site.at("chords")[0];
    m.chords[1] = site.at("chords")[1];
  } else if (kind == "R3") {
    m.kind = MoveKind::R3;
    for (int t = 0; t < 3; ++t) {
      m.pair_starts[t].comp = site.at("pairs")[t][0];
      m.pair_starts[t].pos = site.at("pairs")[t][1];
      m.chords[t] = site.at("chords")[t];
    }
  } else if (kind == "R1+") {
    m.kind = MoveKind::R1Expand;
    m.at = {site.at("at")[0], site.at("at")[1]};
    m.over_first = site.at("over_first");
    m.sign = site.at("sign");
  } else if (kind == "R2+") {
    m.kind = MoveKind::R2Expand;
    m.at = {site.at("at")[0], site.at("at")[1]};
    m.at2 = {site.at("at2")[0], site.at("at2")[1]};
    m.parallel = site.at("parallel");
    m.sign = site.at("sign");
  } else {
    throw std::invalid_argument("unknown move kind: " + kind);
  }
  return m;
}

ordered_json trace_to_json(const MoveTrace& t) {
  ordered_json steps = ordered_json::array();
  for (const Move& m : t.steps) steps.push_back(move_to_json(m));
  return ordered_json{{"initial", raw_code(t.initial)},
                      {"steps", steps},
                      {"final", raw_code(t.final)}};
}

MoveTrace trace_from_json(const ordered_json& j) {
  MoveTrace t;
  t.initial = parse_gauss_code(j.at("initial").get<std::string>());
  for (const auto& step : j.at("steps")) t.steps.push_back(move_from_json(step));
  t.final = parse_gauss_code(j.at("final").get<std::string>());
  return t;
}

ordered_json plan_to_json(const UnknottingPlan& p) {
  return ordered_json{{"virtualize", p.virtualize}, {"change", p.change}};
}

UnknottingPlan plan_from_json(const ordered_json& j) {
  UnknottingPlan p;
  if (j.contains("virtualize"))
    p.virtualize = j.at("virtualize").get<std::vector<int>>();
  if (j.contains("change")) p.change = j.at("change").get<std::vector<int>>();
  return p;
}

ordered_json certificate_to_json(const GaussDiagram& d, const UnknottingCertificate& c) {
  return ordered_json{{"diagram", raw_code(d)},
                      {"plan", plan_to_json(c.plan)},
                      {"cost", {c.cost.virtualizations, c.cost.changes}},
                      {"trace", trace_to_json(c.trace)}};
}

ordered_json profile_to_json(const ExpectedProfile& p) {
  ordered_json chords = ordered_json::array();
  for (const auto& e : p.chords) {
    ordered_json row{{"chord", e.chord}, {"label", e.label}, {"sign", e.sign}};
    if (e.index) row["index"] = *e.index;
    chords.push_back(row);
  }
  ordered_json out{{"chords", chords}};
  if (!p.writhe.entries.empty() || p.component_writhes.empty())
    out["writhe"] = writhe_to_json(p.writhe);
  if (!p.component_writhes.empty()) {
    ordered_json cw = ordered_json::array();
    for (const auto& w : p.component_writhes) cw.push_back(writhe_to_json(w));
    out["component_writhe"] = cw;
  }
  if (p.span) out["span"] = *p.span;
  if (p.ell_total) out["ell"] = *p.ell_total;
  if (p.claimed_u)
    out["unknotting_index"] = {p.claimed_u->virtualizations, p.claimed_u->changes};
  out["plan"] = plan_to_json(p.plan);
  return out;
}

ordered_json search_result_to_json(const SearchResult& r) {
  ordered_json out;
  out["lower"] = {r.interval.lower.virtualizations, r.interval.lower.changes};
  if (r.interval.upper)
    out["upper"] = {r.interval.upper->virtualizations, r.interval.upper->changes};
  else
    out["upper"] = nullptr;
  out["skipped_inconclusive"] = r.skipped_inconclusive;
  out["cap_exceeded"] = r.cap_exceeded;
  return out;
}

ordered_json theorem_report_to_json(const TheoremReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"what", c.what},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  ordered_json out;
  out["family"] = r.spec.str();
  out["claimed"] = {r.claimed.virtualizations, r.claimed.changes};
  if (r.lower) out["lower"] = {r.lower->virtualizations, r.lower->changes};
  if (r.certified) out["certified"] = {r.certified->virtualizations, r.certified->changes};
  out["checks"] = checks;
  out["pass"] = r.pass;
  return out;
}

}  // namespace vk
