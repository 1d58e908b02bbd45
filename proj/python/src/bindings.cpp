#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "triwise/claims.hpp"
#include "triwise/error.hpp"
#include "triwise/family.hpp"
#include "triwise/family_io.hpp"
#include "triwise/report_json.hpp"
#include "triwise/search.hpp"
#include "triwise/shift.hpp"
#include "triwise/stability.hpp"
#include "triwise/thresholds.hpp"
#include "triwise/walk.hpp"

namespace py = pybind11;
using namespace triwise;

namespace {

// Families and reports cross the boundary as JSON text; rationals as "a/b".
SetFamily family_arg(const std::string& doc) { return family_from_json_document(doc); }
std::string family_out(const SetFamily& f) { return family_to_json(f).dump(); }
Rational rational_arg(const std::string& s) { return parse_rational(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the triwise package.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
  py::register_exception<InconclusiveError>(m, "InconclusiveError", PyExc_RuntimeError);

  m.def("p_measure", [](const std::string& fam, const std::string& p) {
    return to_string(p_measure(family_arg(fam), rational_arg(p)));
  });
  m.def("frontier_family", [](int s, int t, int n) { return family_out(frontier_family(s, t, n)); });
  m.def("frontier_measure", [](int s, int t, const std::string& p, int n) {
    return to_string(frontier_measure(s, t, rational_arg(p), n));
  });
  m.def("intersecting_check", [](const std::string& fam, int r, int t) {
    return to_json(check_r_wise_t_intersecting(family_arg(fam), r, t)).dump();
  });
  m.def("up_closure", [](const std::string& fam) { return family_out(up_closure(family_arg(fam))); });
  m.def("minimal_generators", [](const std::string& fam) { return family_out(minimal_generators(family_arg(fam))); });
  m.def("canonical_form", [](const std::string& fam) { return canonical_form(family_arg(fam)); });
  m.def("shift_saturate", [](const std::string& fam) { return to_json(shift_saturate_traced(family_arg(fam))).dump(); });
  m.def("is_shifted", [](const std::string& fam) { return is_shifted(family_arg(fam)); });

  m.def("classify_walk", [](int n, const std::vector<int>& elements, int t) {
    return std::string(to_string(classify(Subset::from_elements(n, elements), t)));
  });
  m.def("count_walks_ballot", [](int s, int t) { return count_walks_ballot(s, t).get_str(); });
  m.def("f_closed", [](int s, int t) { return f_closed(s, t).get_str(); });

  m.def("alpha", [](const std::string& p, long prec) { return to_json(alpha(rational_arg(p), prec)).dump(); },
        py::arg("p"), py::arg("precision") = static_cast<long>(kDefaultPrecision));
  m.def("p0", [](int t, long prec) { return to_json(p0(t, prec)).dump(); }, py::arg("t"),
        py::arg("precision") = static_cast<long>(kDefaultPrecision));
  m.def("p0_exact", [](int t) -> std::optional<std::string> {
    const auto v = p0_exact(t);
    if (!v) return std::nullopt;
    return to_string(*v);
  });
  m.def("compare_with_p0", [](const std::string& p, int t) { return compare_with_p0(rational_arg(p), t); });
  m.def("threshold_params", [](int t) { return to_json(threshold_params(t)).dump(); });

  m.def("claim_ids", &claim_ids);
  m.def(
      "run_check",
      [](const std::string& id, std::optional<int> t_min, std::optional<int> t_max, int grid, long cap,
         bool points) {
        CheckDomain d;
        d.t_min = t_min;
        d.t_max = t_max;
        d.grid_points = grid;
        ClaimReport r;
        {
          py::gil_scoped_release release;
          r = run_check(id, d, cap);
        }
        return to_json(r, points).dump();
      },
      py::arg("id"), py::arg("t_min") = py::none(), py::arg("t_max") = py::none(), py::arg("grid_points") = 512,
      py::arg("precision_cap") = static_cast<long>(kDefaultPrecisionCap), py::arg("include_points") = false);

  m.def(
      "search_max_measure",
      [](int n, int t, int r, const std::vector<std::string>& ps, bool shifted, bool iso, bool bound, int threads) {
        SearchOptions o;
        for (const auto& p : ps) o.p_list.push_back(rational_arg(p));
        o.restrict_to_shifted = shifted;
        o.use_isomorphism_pruning = iso;
        o.measure_upper_bound_pruning = bound;
        o.threads = threads;
        std::vector<SearchReport> reps;
        {
          py::gil_scoped_release release;
          reps = search_max_measure(n, t, r, o);
        }
        Json out = Json::array();
        for (const auto& rep : reps) out.push_back(to_json(rep));
        return out.dump();
      },
      py::arg("n"), py::arg("t"), py::arg("r"), py::arg("p_list"), py::arg("restrict_to_shifted") = false,
      py::arg("isomorphism_pruning") = true, py::arg("bound_pruning") = true, py::arg("threads") = 1);
  m.def("audit_lemmas", [](const std::string& fam, int t) { return to_json(audit_lemmas(family_arg(fam), t)).dump(); });

  m.def(
      "stability_constants",
      [](int t, const std::string& p, long cap) {
        return to_json(compute_constants(t, rational_arg(p), kDefaultPrecision, cap)).dump();
      },
      py::arg("t"), py::arg("p"), py::arg("precision_cap") = static_cast<long>(kDefaultPrecisionCap));
  m.def(
      "stability_audit",
      [](const std::string& fam, int t, const std::string& p) {
        return to_json(stability_audit(family_arg(fam), t, rational_arg(p))).dump();
      },
      py::arg("family"), py::arg("t"), py::arg("p"));
}
