#include "hadsec/json_io.hpp"

namespace hadsec {

namespace {

Json trial_json(const TrialInfo& info) {
  return Json{{"prime", info.prime},
              {"seed", info.seed},
              {"trials", info.trials},
              {"trials_run", info.trials_run},
              {"primes_used", info.primes_used}};
}

}  // namespace

Json to_json(const SecantDimensionReport& rep) {
  return Json{{"schema", kJsonSchema},
              {"kind", "secant_dimension"},
              {"descriptor", rep.descriptor},
              {"R", rep.R},
              {"ambient_dim", rep.ambient_dim},
              {"variety_dim", rep.variety_dim},
              {"computed_dim", rep.computed_dim},
              {"expected_dim", rep.expected_dim},
              {"defect_flag", rep.defect_flag},
              {"status", rep.status},
              {"trials", trial_json(rep.info)}};
}

Json to_json(const HadamardDimensionReport& rep) {
  return Json{{"schema", kJsonSchema},
              {"kind", "hadamard_dimension"},
              {"descriptor", rep.descriptor},
              {"r", rep.spec.r()},
              {"m", rep.spec.m()},
              {"R", rep.spec.R()},
              {"ambient_dim", rep.ambient_dim},
              {"variety_dim", rep.variety_dim},
              {"computed_dim", rep.computed_dim},
              {"expected_dim_hadamard", rep.expected_dim_hadamard},
              {"expected_dim_R", rep.expected_dim_R},
              {"lower_bound_dim_R", rep.lower_bound_dim_R},
              {"factor_dims", rep.factor_dims},
              {"hadamard_defect_flag", rep.hadamard_defect},
              {"fills_ambient", rep.fills_ambient},
              {"chain_holds", rep.chain_holds},
              {"parameter_count", rep.parameter_count},
              {"exceeds_ambient", rep.exceeds_ambient},
              {"status", rep.status},
              {"trials", trial_json(rep.info)}};
}

Json to_json(const GenericHrankReport& rep) {
  Json trace = Json::array();
  for (const auto& t : rep.trace)
    trace.push_back(Json{{"m", t.m},
                         {"computed_dim", t.computed_dim},
                         {"expected_dim_hadamard", t.expected_dim_hadamard},
                         {"fills_ambient", t.fills_ambient}});
  return Json{{"schema", kJsonSchema},
              {"kind", "generic_hrank"},
              {"descriptor", rep.descriptor},
              {"r", rep.r},
              {"ambient_dim", rep.ambient_dim},
              {"variety_dim", rep.variety_dim},
              {"found_m", rep.found_m ? Json(*rep.found_m) : Json(nullptr)},
              {"expected_m", rep.expected_m},
              {"max_m", rep.max_m},
              {"status", rep.status},
              {"trace", trace},
              {"trials", trial_json(rep.info)}};
}

Json to_json(const Table& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows)
    rows.push_back(Json{{"descriptor", r.descriptor},
                        {"r", r.r},
                        {"m", r.r.size()},
                        {"dim", r.dim},
                        {"expected", r.expected},
                        {"status", r.pass ? "pass" : "fail"}});
  return Json{{"schema", kJsonSchema},
              {"kind", "table"},
              {"table", table.name},
              {"row_count", table.rows.size()},
              {"failures", table.failures()},
              {"rows", rows}};
}

Json to_json(const DegenerationReport& rep) {
  Json steps = Json::array();
  for (const auto& s : rep.steps)
    steps.push_back(Json{{"nu", s.nu.get_str()},
                         {"max_error", s.max_error.get_d()},
                         {"ratio", s.ratio},
                         {"ratio_ok", s.ratio_ok},
                         {"row0_is_one", s.row0_is_one},
                         {"khatri_rao_identity", s.khatri_rao_identity},
                         {"rank_kb", s.rank_kb}});
  return Json{{"schema", kJsonSchema},
              {"kind", "degeneration"},
              {"r", rep.spec},
              {"steps", steps},
              {"fitted_c", rep.fitted_c},
              {"ratio_ok", rep.ratio_ok},
              {"row0_ok", rep.row0_ok},
              {"khatri_rao_ok", rep.khatri_rao_ok},
              {"rowspan_ok", rep.rowspan_ok},
              {"rank_eta_bar", rep.rank_eta_bar},
              {"rank_eta_secant", rep.rank_eta_secant},
              {"rank_stacked", rep.rank_stacked},
              {"rank_kbar", rep.rank_kbar},
              {"rank_ksecant", rep.rank_ksecant},
              {"semicontinuity_ok", rep.semicontinuity_ok},
              {"implied_lower_bound", rep.implied_lower_bound},
              {"passed", rep.passed()}};
}

}  // namespace hadsec
