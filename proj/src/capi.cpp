#include "hetvenet.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <numeric>
#include <string>
#include <vector>

#include "hetvenet/config.hpp"
#include "hetvenet/error.hpp"
#include "hetvenet/harness.hpp"

struct hvn_config {
  hetvenet::ExperimentConfig cfg;
};

struct hvn_scenario {
  hetvenet::Scenario sc;
};

struct hvn_analysis {
  hetvenet::ScenarioAnalysis an;
};

struct hvn_run {
  hetvenet::ScheduleOutcome outcome;
  hetvenet::SchemeResult result;
  double total_service = 0.0;
};

struct hvn_records {
  std::vector<hetvenet::RunRecord> records;
  hetvenet::ExperimentConfig cfg;
};

namespace {

// The C enum mirrors the C++ scheme order.
static_assert(HVN_SCHEME_MS_MAXMIN == static_cast<int>(hetvenet::Scheme::ms_maxmin));
static_assert(HVN_SCHEME_AR_MAXMIN == static_cast<int>(hetvenet::Scheme::ar_maxmin));
static_assert(HVN_SCHEME_MS_MAXSUM == static_cast<int>(hetvenet::Scheme::ms_maxsum));
static_assert(HVN_SCHEME_AR_MAXSUM == static_cast<int>(hetvenet::Scheme::ar_maxsum));
static_assert(HVN_SCHEME_RANDOM == static_cast<int>(hetvenet::Scheme::random));
static_assert(HVN_SCHEME_NO_RELAY == static_cast<int>(hetvenet::Scheme::no_relay));
static_assert(HVN_SCHEME_COUNT == static_cast<int>(hetvenet::kAllSchemes.size()));

thread_local std::string g_last_error;

hvn_status fail(hvn_status code, const char* what) {
  g_last_error = what;
  return code;
}

hvn_status ok() {
  g_last_error.clear();
  return HVN_OK;
}

template <typename F>
hvn_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return HVN_OK;
  } catch (const hetvenet::Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
      case hetvenet::ErrorCode::config:
        return HVN_ERR_CONFIG;
      case hetvenet::ErrorCode::io:
        return HVN_ERR_IO;
      case hetvenet::ErrorCode::invalid_argument:
        return HVN_ERR_INVALID;
    }
    return HVN_ERR_INTERNAL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HVN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HVN_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HVN_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<int> own_far_set(const hetvenet::Schedule& sch) {
  std::vector<int> ids;
  ids.reserve(sch.pairs.size());
  for (const hetvenet::RelayPair& pr : sch.pairs) ids.push_back(pr.fv_id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

extern "C" {

const char* hvn_last_error(void) { return g_last_error.c_str(); }

void hvn_string_free(char* s) { delete[] s; }

const char* hvn_scheme_name(int scheme) {
  if (scheme < 0 || scheme >= HVN_SCHEME_COUNT) return nullptr;
  return hetvenet::scheme_name(static_cast<hetvenet::Scheme>(scheme));
}

hvn_status hvn_scheme_from_name(const char* name, int* out) {
  if (!name || !out) return fail(HVN_ERR_INVALID, "hvn_scheme_from_name: null argument");
  return guard([&] { *out = static_cast<int>(hetvenet::scheme_from_name(name)); });
}

hvn_status hvn_config_default(hvn_config** out) {
  if (!out) return fail(HVN_ERR_INVALID, "hvn_config_default: null argument");
  return guard([&] { *out = new hvn_config{hetvenet::ExperimentConfig{}}; });
}

hvn_status hvn_config_load(const char* path, hvn_config** out) {
  if (!path || !out) return fail(HVN_ERR_INVALID, "hvn_config_load: null argument");
  return guard([&] { *out = new hvn_config{hetvenet::load_config(path)}; });
}

hvn_status hvn_config_parse(const char* text, hvn_config** out) {
  if (!text || !out) return fail(HVN_ERR_INVALID, "hvn_config_parse: null argument");
  return guard([&] { *out = new hvn_config{hetvenet::parse_config(text)}; });
}

void hvn_config_free(hvn_config* cfg) { delete cfg; }

hvn_status hvn_config_set_master_seed(hvn_config* cfg, uint64_t seed) {
  if (!cfg) return fail(HVN_ERR_INVALID, "hvn_config_set_master_seed: null argument");
  cfg->cfg.master_seed = seed;
  return ok();
}

hvn_status hvn_config_set_output_path(hvn_config* cfg, const char* path) {
  if (!cfg || !path)
    return fail(HVN_ERR_INVALID, "hvn_config_set_output_path: null argument");
  return guard([&] { cfg->cfg.output_path = path; });
}

hvn_status hvn_config_horizon(const hvn_config* cfg, double* out) {
  if (!cfg || !out) return fail(HVN_ERR_INVALID, "hvn_config_horizon: null argument");
  *out = cfg->cfg.horizon;
  return ok();
}

hvn_status hvn_config_output_path(const hvn_config* cfg, char** out) {
  if (!cfg || !out) return fail(HVN_ERR_INVALID, "hvn_config_output_path: null argument");
  return guard([&] { *out = dup_string(cfg->cfg.output_path); });
}

hvn_status hvn_scenario_generate(const hvn_config* cfg, int n, uint64_t seed,
                                 hvn_scenario** out) {
  if (!cfg || !out) return fail(HVN_ERR_INVALID, "hvn_scenario_generate: null argument");
  return guard([&] {
    *out = new hvn_scenario{hetvenet::generate_scenario(cfg->cfg, n, seed)};
  });
}

void hvn_scenario_free(hvn_scenario* sc) { delete sc; }

hvn_status hvn_scenario_count(const hvn_scenario* sc, int* out) {
  if (!sc || !out) return fail(HVN_ERR_INVALID, "hvn_scenario_count: null argument");
  *out = sc->sc.size();
  return ok();
}

hvn_status hvn_scenario_vehicle(const hvn_scenario* sc, int index, int* id, double* x,
                                double* y, double* v) {
  if (!sc || !id || !x || !y || !v)
    return fail(HVN_ERR_INVALID, "hvn_scenario_vehicle: null argument");
  if (index < 0 || index >= sc->sc.size())
    return fail(HVN_ERR_INVALID, "hvn_scenario_vehicle: index out of range");
  const hetvenet::VehicleState& s = sc->sc.vehicles[index];
  *id = s.id;
  *x = s.x;
  *y = s.y;
  *v = s.v;
  return ok();
}

hvn_status hvn_analysis_compute(const hvn_config* cfg, const hvn_scenario* sc,
                                hvn_analysis** out) {
  if (!cfg || !sc || !out)
    return fail(HVN_ERR_INVALID, "hvn_analysis_compute: null argument");
  return guard([&] {
    hetvenet::ScenarioAnalysis an;
    an.scenario = sc->sc;
    an.tables = hetvenet::compute_service_tables(an.scenario, cfg->cfg.lte, cfg->cfg.dsrc);
    an.snapshot = hetvenet::compute_air_snapshot(an.scenario, cfg->cfg.lte, cfg->cfg.dsrc);
    *out = new hvn_analysis{std::move(an)};
  });
}

void hvn_analysis_free(hvn_analysis* an) { delete an; }

hvn_status hvn_analysis_dump_csv(const hvn_analysis* an, const char* path) {
  if (!an || !path) return fail(HVN_ERR_INVALID, "hvn_analysis_dump_csv: null argument");
  return guard([&] { hetvenet::dump_service_tables_csv(an->an.tables, path); });
}

hvn_status hvn_schedule_run(const hvn_config* cfg, const hvn_analysis* an, int scheme,
                            uint64_t scenario_seed, hvn_run** out) {
  if (!cfg || !an || !out) return fail(HVN_ERR_INVALID, "hvn_schedule_run: null argument");
  if (scheme < 0 || scheme >= HVN_SCHEME_COUNT)
    return fail(HVN_ERR_INVALID, "hvn_schedule_run: scheme out of range");
  return guard([&] {
    hetvenet::ScheduleOutcome outcome = hetvenet::run_scheme(
        cfg->cfg, an->an, static_cast<hetvenet::Scheme>(scheme), scenario_seed);
    hetvenet::SchemeResult result =
        hetvenet::summarize(outcome.effective, outcome.schedule,
                            an->an.scenario.horizon, own_far_set(outcome.schedule));
    double total = std::accumulate(outcome.effective.per_vehicle.begin(),
                                   outcome.effective.per_vehicle.end(), 0.0);
    *out = new hvn_run{std::move(outcome), std::move(result), total};
  });
}

void hvn_run_free(hvn_run* run) { delete run; }

hvn_status hvn_run_scheme(const hvn_run* run, int* out) {
  if (!run || !out) return fail(HVN_ERR_INVALID, "hvn_run_scheme: null argument");
  *out = static_cast<int>(run->outcome.schedule.scheme);
  return ok();
}

hvn_status hvn_run_nf(const hvn_run* run, int* out) {
  if (!run || !out) return fail(HVN_ERR_INVALID, "hvn_run_nf: null argument");
  *out = run->outcome.schedule.n_f;
  return ok();
}

hvn_status hvn_run_pair(const hvn_run* run, int index, int* relay_id, int* fv_id) {
  if (!run || !relay_id || !fv_id)
    return fail(HVN_ERR_INVALID, "hvn_run_pair: null argument");
  if (index < 0 || index >= run->outcome.schedule.n_f)
    return fail(HVN_ERR_INVALID, "hvn_run_pair: index out of range");
  *relay_id = run->outcome.schedule.pairs[index].relay_id;
  *fv_id = run->outcome.schedule.pairs[index].fv_id;
  return ok();
}

hvn_status hvn_run_vehicle_count(const hvn_run* run, int* out) {
  if (!run || !out) return fail(HVN_ERR_INVALID, "hvn_run_vehicle_count: null argument");
  *out = static_cast<int>(run->outcome.effective.per_vehicle.size());
  return ok();
}

hvn_status hvn_run_bottleneck(const hvn_run* run, double* out) {
  if (!run || !out) return fail(HVN_ERR_INVALID, "hvn_run_bottleneck: null argument");
  *out = run->outcome.effective.bottleneck;
  return ok();
}

hvn_status hvn_run_total_service(const hvn_run* run, double* out) {
  if (!run || !out) return fail(HVN_ERR_INVALID, "hvn_run_total_service: null argument");
  *out = run->total_service;
  return ok();
}

hvn_status hvn_run_total_fv_throughput(const hvn_run* run, double* out) {
  if (!run || !out)
    return fail(HVN_ERR_INVALID, "hvn_run_total_fv_throughput: null argument");
  *out = run->result.total_fv_throughput_bps;
  return ok();
}

hvn_status hvn_run_min_rate(const hvn_run* run, double* out) {
  if (!run || !out) return fail(HVN_ERR_INVALID, "hvn_run_min_rate: null argument");
  *out = run->result.min_vn_rate_bps;
  return ok();
}

hvn_status hvn_run_jain(const hvn_run* run, double* out) {
  if (!run || !out) return fail(HVN_ERR_INVALID, "hvn_run_jain: null argument");
  *out = run->result.jain;
  return ok();
}

hvn_status hvn_run_vehicle_rate(const hvn_run* run, int index, double* out) {
  if (!run || !out) return fail(HVN_ERR_INVALID, "hvn_run_vehicle_rate: null argument");
  if (index < 0 || index >= static_cast<int>(run->result.per_vehicle_rates_bps.size()))
    return fail(HVN_ERR_INVALID, "hvn_run_vehicle_rate: index out of range");
  *out = run->result.per_vehicle_rates_bps[index];
  return ok();
}

hvn_status hvn_experiment_run(const hvn_config* cfg, hvn_records** out) {
  if (!cfg || !out) return fail(HVN_ERR_INVALID, "hvn_experiment_run: null argument");
  return guard([&] {
    *out = new hvn_records{hetvenet::run_experiment(cfg->cfg), cfg->cfg};
  });
}

void hvn_records_free(hvn_records* recs) { delete recs; }

hvn_status hvn_records_count(const hvn_records* recs, int* out) {
  if (!recs || !out) return fail(HVN_ERR_INVALID, "hvn_records_count: null argument");
  *out = static_cast<int>(recs->records.size());
  return ok();
}

hvn_status hvn_records_write_csv(const hvn_records* recs, const char* path) {
  if (!recs || !path)
    return fail(HVN_ERR_INVALID, "hvn_records_write_csv: null argument");
  return guard([&] { hetvenet::write_csv(recs->records, path); });
}

hvn_status hvn_records_summary(const hvn_records* recs, char** out) {
  if (!recs || !out) return fail(HVN_ERR_INVALID, "hvn_records_summary: null argument");
  return guard([&] { *out = dup_string(hetvenet::format_summary(recs->records, recs->cfg)); });
}

hvn_status hvn_oracle_report(const hvn_config* cfg, int n, int seeds, char** out) {
  if (!cfg || !out) return fail(HVN_ERR_INVALID, "hvn_oracle_report: null argument");
  return guard([&] { *out = dup_string(hetvenet::oracle_report(cfg->cfg, n, seeds)); });
}

}  // extern "C"
