#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "triwise/error.hpp"
#include "triwise/family_io.hpp"
#include "triwise/report_json.hpp"

namespace {

using namespace triwise;

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kInconclusive = 3 };

struct RunConfig {
  int t = 1;
  int n = 0;
  int s = 0;
  int r = 3;
  int i = 0;
  int j = 0;
  std::string p;
  std::string p_list;
  std::string family_path;
  std::string set;
  std::string output_path;
  std::string format = "json";
  std::string claim;
  std::string t_range;
  int grid = 512;
  bool points = false;
  bool shifted_only = false;
  bool no_iso_pruning = false;
  bool no_bound_pruning = false;
  mpfr_prec_t precision = kDefaultPrecision;
  mpfr_prec_t precision_cap = kDefaultPrecisionCap;
  int threads = 1;
};

int default_threads() {
  if (const char* env = std::getenv("TRIWISE_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Nested objects flatten to dotted keys; arrays of records become one CSV
/// row or text block per record.
std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  const std::vector<Json> rows = doc.is_array() ? std::vector<Json>(doc.begin(), doc.end()) : std::vector<Json>{doc};
  std::ostringstream os;
  if (format == "text") {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k) os << "\n";
      std::vector<std::pair<std::string, std::string>> kv;
      flatten(rows[k], "", kv);
      for (const auto& [key, value] : kv) os << key << ": " << value << "\n";
    }
    return os.str();
  }
  std::vector<std::string> header;
  std::vector<std::vector<std::pair<std::string, std::string>>> flat;
  for (const auto& row : rows) {
    Json shallow = Json::object();
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (!it.value().is_array()) shallow[it.key()] = it.value();
    }
    flat.emplace_back();
    flatten(shallow, "", flat.back());
    for (const auto& [key, value] : flat.back()) {
      if (std::find(header.begin(), header.end(), key) == header.end()) header.push_back(key);
    }
  }
  for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << csv_cell(header[k]);
  os << "\n";
  for (const auto& row : flat) {
    for (std::size_t k = 0; k < header.size(); ++k) {
      std::string cell;
      for (const auto& [key, value] : row) {
        if (key == header[k]) cell = value;
      }
      os << (k ? "," : "") << csv_cell(cell);
    }
    os << "\n";
  }
  return os.str();
}

void emit(const Json& doc, const RunConfig& cfg) {
  const std::string text = render(doc, cfg.format);
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw ParseError("cannot write " + cfg.output_path);
  out << text;
}

Rational need_p(const RunConfig& cfg) {
  if (cfg.p.empty()) throw ParseError("--p is required");
  Rational p = parse_rational(cfg.p);
  require_probability(p);
  return p;
}

SetFamily need_family(const RunConfig& cfg) {
  if (cfg.family_path.empty()) throw ParseError("--family is required");
  return read_family_file(cfg.family_path);
}

std::vector<Rational> parse_p_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    Rational p = parse_rational(item);
    require_probability(p);
    out.push_back(p);
  }
  if (out.empty()) throw ParseError("--p-list needs at least one value");
  return out;
}

std::vector<int> parse_elements(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item == "-") continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("bad element '" + item + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad element '" + item + "'");
    }
  }
  return out;
}

int run_measure(const RunConfig& cfg) {
  const SetFamily f = need_family(cfg);
  const Rational p = need_p(cfg);
  emit(Json{{"n", f.ground_size()},
            {"p", to_json(p)},
            {"size", f.size()},
            {"measure", to_json(p_measure(f, p))},
            {"size_profile", to_json(f.size_profile())}},
       cfg);
  return kOk;
}

int run_frontier(const RunConfig& cfg) {
  const Rational p = need_p(cfg);
  Json doc{{"s", cfg.s}, {"t", cfg.t}, {"n", cfg.n}, {"p", to_json(p)},
           {"measure", to_json(frontier_measure(cfg.s, cfg.t, p, cfg.n))}};
  if (cfg.n <= 20) {
    const SetFamily f = frontier_family(cfg.s, cfg.t, cfg.n);
    doc["size"] = f.size();
    doc["enumerated_measure"] = to_json(p_measure(f, p));
  }
  emit(doc, cfg);
  return kOk;
}

int run_intersecting(const RunConfig& cfg) {
  const SetFamily f = need_family(cfg);
  const IntersectionCheck c = check_r_wise_t_intersecting(f, cfg.r, cfg.t);
  Json doc = to_json(c);
  doc["r"] = cfg.r;
  doc["t"] = cfg.t;
  emit(doc, cfg);
  return c.holds ? kOk : kFails;
}

int run_shift(const RunConfig& cfg) {
  const SetFamily f = need_family(cfg);
  if (cfg.i || cfg.j) {
    const SetFamily g = shift_once(f, ShiftStep{cfg.i, cfg.j});
    emit(Json{{"step", Json::array({cfg.i, cfg.j})},
              {"family", family_to_json(g)},
              {"changed", !(g == f)},
              {"potential_before", shift_potential(f)},
              {"potential_after", shift_potential(g)}},
         cfg);
    return kOk;
  }
  emit(to_json(shift_saturate_traced(f)), cfg);
  return kOk;
}

int run_walk_classify(const RunConfig& cfg) {
  const Subset g = Subset::from_elements(cfg.n, parse_elements(cfg.set));
  const WalkClass c = classify(g, cfg.t);
  Json doc{{"set", to_json(g)},
           {"n", cfg.n},
           {"t", cfg.t},
           {"class", std::string(to_string(c))},
           {"max_offset", max_offset(g)},
           {"line_t", to_json(hits_line(g, cfg.t))},
           {"line_t_plus_1", to_json(hits_line(g, cfg.t + 1))}};
  if (c == WalkClass::Ddot) doc["reflection"] = to_json(reflect_between_first_two_hits(g, cfg.t));
  emit(doc, cfg);
  return kOk;
}

int run_walk_count(const RunConfig& cfg) {
  const BigInt closed = f_closed(cfg.s, cfg.t);
  const BigInt brute = count_walks_ballot(cfg.s, cfg.t);
  auto num = [](const BigInt& v) { return v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()); };
  emit(Json{{"s", cfg.s}, {"t", cfg.t}, {"closed_form", num(closed)}, {"brute_force", num(brute)}, {"agree", closed == brute}},
       cfg);
  return closed == brute ? kOk : kFails;
}

int run_alpha(const RunConfig& cfg) {
  const Rational p = need_p(cfg);
  const Interval a = alpha(p, cfg.precision);
  emit(Json{{"p", to_json(p)},
            {"alpha", to_json(a)},
            {"closed_form", to_json(alpha_closed_form(Interval::from_rational(p, cfg.precision)))},
            {"cubic", to_json(alpha_cubic(p, cfg.precision))},
            {"precision", cfg.precision}},
       cfg);
  return kOk;
}

int run_p0(const RunConfig& cfg) {
  const ThresholdParams params = threshold_params(cfg.t, cfg.precision);
  Json doc = to_json(params);
  doc["surd"] = to_json(p0_surd(cfg.t, cfg.precision));
  doc["quadratic"] = to_json(p0_quadratic(cfg.t, cfg.precision));
  doc["precision"] = cfg.precision;
  emit(doc, cfg);
  return kOk;
}

int run_verify(const RunConfig& cfg) {
  CheckDomain domain;
  domain.grid_points = cfg.grid;
  if (!cfg.t_range.empty()) {
    const auto colon = cfg.t_range.find(':');
    if (colon == std::string::npos) throw ParseError("--t-range expects A:B");
    try {
      domain.t_min = std::stoi(cfg.t_range.substr(0, colon));
      domain.t_max = std::stoi(cfg.t_range.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw ParseError("--t-range expects A:B");
    }
    if (*domain.t_min > *domain.t_max) throw ParseError("--t-range is empty");
  }
  std::vector<ClaimReport> reports;
  if (!cfg.claim.empty()) {
    if (!is_claim_id(cfg.claim)) throw ParseError("unknown claim id '" + cfg.claim + "'");
    reports.push_back(run_check(cfg.claim, domain, cfg.precision_cap, cfg.precision));
  } else {
    reports = run_all_checks(domain, cfg.precision_cap, cfg.precision, cfg.threads);
  }
  Json doc = Json::array();
  for (const auto& r : reports) doc.push_back(to_json(r, cfg.points));
  emit(doc, cfg);
  switch (overall_verdict(reports)) {
    case Verdict::Holds: return kOk;
    case Verdict::Fails: return kFails;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kOk;
}

int run_search(const RunConfig& cfg) {
  SearchOptions opts;
  opts.restrict_to_shifted = cfg.shifted_only;
  opts.use_isomorphism_pruning = !cfg.no_iso_pruning;
  opts.measure_upper_bound_pruning = !cfg.no_bound_pruning;
  opts.p_list = parse_p_list(cfg.p_list.empty() ? cfg.p : cfg.p_list);
  opts.threads = cfg.threads;
  Json doc = Json::array();
  for (const auto& r : search_max_measure(cfg.n, cfg.t, cfg.r, opts)) doc.push_back(to_json(r));
  emit(doc, cfg);
  return kOk;
}

int run_audit_lemmas(const RunConfig& cfg) {
  const LemmaAudit a = audit_lemmas(need_family(cfg), cfg.t);
  emit(to_json(a), cfg);
  return a.passed ? kOk : kFails;
}

int run_stability_constants(const RunConfig& cfg) {
  emit(to_json(compute_constants(cfg.t, need_p(cfg), cfg.precision, cfg.precision_cap)), cfg);
  return kOk;
}

int run_stability_audit(const RunConfig& cfg) {
  const StabilityAudit a = stability_audit(need_family(cfg), cfg.t, need_p(cfg), cfg.precision, cfg.precision_cap);
  emit(to_json(a), cfg);
  if (a.theorem2 == "violated" || a.theorem3 == "violated") return kFails;
  if (a.theorem2 == "undetermined" || a.theorem3 == "undetermined") return kInconclusive;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.threads = default_threads();

  CLI::App app{"Exact and interval computations for 3-wise t-intersecting families under the p-biased measure"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "triwise 1.0.0");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", cfg.output_path, "Write the report to this file");
  };
  auto precision = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "Starting precision in bits")->check(CLI::Range(16, 1 << 20));
    sub->add_option("--precision-cap", cfg.precision_cap, "Largest precision tried")->check(CLI::Range(16, 1 << 20));
  };
  auto family = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family_path, "Family file (text or JSON)")->required()->check(CLI::ExistingFile);
  };
  auto p_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--p", cfg.p, "Probability as num/den");
    if (required) o->required();
  };
  auto t_opt = [&](CLI::App* sub, bool required, int lo = 1) {
    auto* o = sub->add_option("--t", cfg.t, "Intersection size t")->check(CLI::Range(lo, 100000));
    if (required) o->required();
  };
  auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Ground set size")->required()->check(CLI::Range(0, kMaxGroundSize)); };

  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> handlers;

  auto* measure = app.add_subcommand("measure", "p-measure of a family");
  family(measure), p_opt(measure, true), common(measure);
  handlers.emplace_back(measure, run_measure);

  auto* frontier = app.add_subcommand("frontier", "Measure of the frontier family F_s^t on [n]");
  frontier->add_option("--s", cfg.s, "Frontier index s")->required()->check(CLI::Range(0, 1000));
  t_opt(frontier, true), n_opt(frontier), p_opt(frontier, true), common(frontier);
  handlers.emplace_back(frontier, run_frontier);

  auto* inter = app.add_subcommand("intersecting-check", "Test the r-wise t-intersecting property");
  family(inter), t_opt(inter, true);
  inter->add_option("--r", cfg.r, "Arity r")->check(CLI::Range(1, 64));
  common(inter);
  handlers.emplace_back(inter, run_intersecting);

  auto* shift = app.add_subcommand("shift", "Apply one shift (with --i --j) or saturate");
  family(shift);
  shift->add_option("--i", cfg.i, "Target element")->check(CLI::Range(1, kMaxGroundSize));
  shift->add_option("--j", cfg.j, "Source element")->check(CLI::Range(1, kMaxGroundSize));
  common(shift);
  handlers.emplace_back(shift, run_shift);

  auto* wclass = app.add_subcommand("walk-classify", "Classify the walk of a set against y = 2x + t");
  wclass->add_option("--set", cfg.set, "Comma-separated elements; '-' for the empty set")->required();
  n_opt(wclass), t_opt(wclass, true), common(wclass);
  handlers.emplace_back(wclass, run_walk_classify);

  auto* wcount = app.add_subcommand("walk-count", "Ballot count by closed form and enumeration");
  wcount->add_option("--s", cfg.s, "Steps right")->required()->check(CLI::Range(0, 1000));
  t_opt(wcount, true), common(wcount);
  handlers.emplace_back(wcount, run_walk_count);

  auto* alpha_cmd = app.add_subcommand("alpha", "Enclosure of the hitting probability alpha(p)");
  p_opt(alpha_cmd, true), precision(alpha_cmd), common(alpha_cmd);
  handlers.emplace_back(alpha_cmd, run_alpha);

  auto* p0_cmd = app.add_subcommand("p0", "Threshold p0(t), beta(t) and t0(p0)");
  t_opt(p0_cmd, true), precision(p0_cmd), common(p0_cmd);
  handlers.emplace_back(p0_cmd, run_p0);

  auto* verify = app.add_subcommand("verify-appendix", "Check the registered inequalities");
  verify->add_option("--claim", cfg.claim, "Only this claim id");
  verify->add_option("--t-range", cfg.t_range, "Sweep t over A:B");
  verify->add_option("--grid", cfg.grid, "Points per p-grid")->check(CLI::Range(1, 1 << 20));
  verify->add_flag("--points", cfg.points, "Include every checked point");
  verify->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 1024));
  precision(verify), common(verify);
  handlers.emplace_back(verify, run_verify);

  auto* search = app.add_subcommand("search", "Exhaustive maximum measure search");
  n_opt(search), t_opt(search, true);
  search->add_option("--r", cfg.r, "Arity r")->check(CLI::Range(2, 64));
  search->add_option("--p-list", cfg.p_list, "Comma-separated probabilities");
  p_opt(search, false);
  search->add_flag("--shifted-only", cfg.shifted_only, "Only shifted families");
  search->add_flag("--no-iso-pruning", cfg.no_iso_pruning, "Disable symmetry pruning");
  search->add_flag("--no-bound-pruning", cfg.no_bound_pruning, "Disable measure bound pruning");
  search->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 1024));
  common(search);
  handlers.emplace_back(search, run_search);

  auto* lemmas = app.add_subcommand("audit-lemmas", "Audit walk lemmas on a shifted family");
  family(lemmas), t_opt(lemmas, true), common(lemmas);
  handlers.emplace_back(lemmas, run_audit_lemmas);

  auto* sconst = app.add_subcommand("stability-constants", "Proof-derived stability constants");
  t_opt(sconst, true), p_opt(sconst, true), precision(sconst), common(sconst);
  handlers.emplace_back(sconst, run_stability_constants);

  auto* saudit = app.add_subcommand("stability-audit", "Audit a family against the stability bounds");
  family(saudit), t_opt(saudit, true), p_opt(saudit, true), precision(saudit), common(saudit);
  handlers.emplace_back(saudit, run_stability_audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (cfg.precision > cfg.precision_cap) throw ParseError("--precision exceeds --precision-cap");
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(cfg);
    }
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
