#include "triwise/report_json.hpp"

#include "triwise/error.hpp"

namespace triwise {

namespace {

Json subset_list(std::span<const Subset> members) {
  Json out = Json::array();
  for (const auto& g : members) out.push_back(to_json(g));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& value) {
  if (!value) return nullptr;
  if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, Interval>) return to_json(*value);
  else return *value;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const Interval& value, int digits) {
  return Json{{"lower", value.lower_string(digits)}, {"upper", value.upper_string(digits)}};
}

Json to_json(const Subset& value) { return value.elements(); }

Json to_json(const SizeProfile& profile) { return Json{{"n", profile.n}, {"counts", profile.counts}}; }

Json family_to_json(const SetFamily& family, bool generators) {
  Json out{{"n", family.ground_size()}, {"members", subset_list(family.members())}};
  if (generators) out["generators"] = true;
  return out;
}

SetFamily family_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("n") || !value.contains("members")) {
    throw ParseError("family JSON needs \"n\" and \"members\"");
  }
  const Json& n_field = value.at("n");
  if (!n_field.is_number_integer()) throw ParseError("family JSON: \"n\" must be an integer");
  const int n = n_field.get<int>();
  if (n < 0 || n > kMaxGroundSize) throw ParseError("family JSON: n out of range");
  std::vector<Subset> members;
  for (const auto& m : value.at("members")) {
    if (!m.is_array()) throw ParseError("family JSON: each member must be an array");
    std::vector<int> elements;
    for (const auto& e : m) {
      if (!e.is_number_integer()) throw ParseError("family JSON: elements must be integers");
      const int x = e.get<int>();
      if (x < 1 || x > n) throw ParseError("family JSON: element " + std::to_string(x) + " outside [n]");
      elements.push_back(x);
    }
    members.push_back(Subset::from_elements(n, elements));
  }
  SetFamily family(n, std::move(members));
  if (value.value("generators", false)) return up_closure(family);
  return family;
}

SetFamily family_from_json_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_array() && doc.size() == 1) doc = doc.front();
  if (doc.is_object()) {
    if (doc.contains("members")) return family_from_json(doc);
    for (const char* key : {"family", "witness"}) {
      if (doc.contains(key)) return family_from_json(doc.at(key));
    }
  }
  throw ParseError("JSON document holds no family");
}

Json to_json(const IntersectionCheck& check) {
  return Json{{"holds", check.holds}, {"witness", check.holds ? Json(nullptr) : subset_list(check.witness)}};
}

Json to_json(const SaturationTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.effective_steps) steps.push_back(Json::array({s.i, s.j}));
  return Json{{"family", family_to_json(trace.family)},
              {"effective_steps", steps},
              {"potentials", trace.potentials},
              {"shifted", is_shifted(trace.family)}};
}

Json to_json(const HitRecord& hits) {
  Json points = Json::array();
  for (std::size_t k = 0; k < hits.points.size(); ++k) {
    points.push_back(Json{{"x", hits.points[k].x}, {"y", hits.points[k].y}, {"step", hits.steps[k]}});
  }
  return Json{{"offset", hits.offset}, {"hits", points}};
}

Json to_json(const ThresholdParams& params) {
  return Json{{"t", params.t},
              {"p0", to_json(params.p0)},
              {"p0_exact", optional_json(params.p0_exact)},
              {"beta", to_json(params.beta)},
              {"t0_at_p0", to_json(params.t0_at_p0)}};
}

Json to_json(const ClaimPoint& point) {
  return Json{{"label", point.label},
              {"verdict", to_string(point.verdict)},
              {"margin", to_json(point.margin, 12)},
              {"precision", point.precision}};
}

Json to_json(const ClaimReport& report, bool include_points) {
  Json out{{"claim_id", report.id},
           {"statement", report.statement},
           {"domain", report.domain},
           {"asserted", report.asserted},
           {"verdict", to_string(report.verdict)},
           {"holds", report.holds},
           {"fails", report.fails},
           {"inconclusive", report.inconclusive},
           {"max_precision", report.max_precision}};
  if (include_points) {
    Json points = Json::array();
    for (const auto& p : report.points) points.push_back(to_json(p));
    out["points"] = std::move(points);
  }
  return out;
}

Json to_json(const SearchReport& report) {
  Json classes = Json::array();
  for (const auto& f : report.maximizer_classes) classes.push_back(family_to_json(f, true));
  return Json{{"n", report.n},
              {"t", report.t},
              {"r", report.r},
              {"p", to_json(report.p)},
              {"restricted_to_shifted", report.restricted_to_shifted},
              {"isomorphism_pruning", report.isomorphism_pruning},
              {"max_measure", to_json(report.max_measure)},
              {"reference", to_json(report.reference)},
              {"status", report.status},
              {"matches_reference", report.matches_reference},
              {"flagged", report.flagged},
              {"maximizers_isomorphic_to_f0", report.maximizers_isomorphic_to_f0},
              {"witness", family_to_json(report.witness, true)},
              {"maximizer_classes", classes},
              {"families_examined", report.families_examined},
              {"isomorphism_classes", optional_json(report.isomorphism_classes)},
              {"wall_time_seconds", report.wall_time_seconds}};
}

Json to_json(const LemmaAudit& audit) {
  return Json{{"shifted", audit.shifted},
              {"up_closed", audit.up_closed},
              {"intersecting", audit.intersecting},
              {"preconditions_hold", audit.preconditions_hold},
              {"lambda", audit.lambda},
              {"lambda_at_least_t", audit.lambda_at_least_t},
              {"every_member_hits_t", audit.every_member_hits_t},
              {"prefix_index", optional_json(audit.prefix_index)},
              {"partition", Json{{"tilde", audit.tilde}, {"dot", audit.dot}, {"ddot", audit.ddot}, {"miss", audit.miss}}},
              {"s", optional_json(audit.s)},
              {"s_contains_core", audit.s_contains_core},
              {"passed", audit.passed},
              {"failures", audit.failures}};
}

Json to_json(const StabilityConstants& k) {
  return Json{{"t", k.t},
              {"p", to_json(k.p)},
              {"p_vs_p0", k.p_vs_p0},
              {"kind", "proof-derived"},
              {"alpha", to_json(k.alpha)},
              {"eps1", to_json(k.eps1)},
              {"eps2", to_json(k.eps2)},
              {"eps2_s2", to_json(k.eps2_s2)},
              {"eps2_s3", to_json(k.eps2_s3)},
              {"eps3", to_json(k.eps3)},
              {"eps0", to_json(k.eps0)},
              {"eps0_prime", to_json(k.eps0_prime)},
              {"delta1", to_json(k.delta1)},
              {"delta2", to_json(k.delta2)},
              {"C1", to_json(k.c1)},
              {"C2", to_json(k.c2)},
              {"C", to_json(k.c)},
              {"precision", k.precision}};
}

Json to_json(const StabilityAudit& audit) {
  return Json{{"t", audit.t},
              {"p", to_json(audit.p)},
              {"shifted", audit.shifted},
              {"up_closed", audit.up_closed},
              {"intersecting", audit.intersecting},
              {"below_pt", audit.below_pt},
              {"measure", to_json(audit.measure)},
              {"eps", to_json(audit.eps)},
              {"sym_diff_f0", to_json(audit.sym_diff_f0)},
              {"sym_diff_f1", optional_json(audit.sym_diff_f1)},
              {"theorem2", audit.theorem2},
              {"theorem3", audit.theorem3},
              {"shift_index_s0", optional_json(audit.shift_index_s0)},
              {"shift_index_s1", optional_json(audit.shift_index_s1)},
              {"constants", audit.constants ? to_json(*audit.constants) : Json(nullptr)},
              {"notes", audit.notes}};
}

}  // namespace triwise
