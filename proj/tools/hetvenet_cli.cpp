// Command line front end; talks to the library through the C interface only.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hetvenet.h"

namespace {

// 0 success, 1 configuration problems (bad file, bad values, unknown
// scheme), 2 runtime and I/O failures.
int exit_code(hvn_status st) {
  switch (st) {
    case HVN_OK:
      return 0;
    case HVN_ERR_CONFIG:
    case HVN_ERR_INVALID:
      return 1;
    case HVN_ERR_IO:
    default:
      return 2;
  }
}

int report_failure(hvn_status st) {
  std::fprintf(stderr, "error: %s\n", hvn_last_error());
  return exit_code(st);
}

struct ConfigHandle {
  hvn_config* ptr = nullptr;
  ~ConfigHandle() { hvn_config_free(ptr); }
};

int run_simulate(const std::string& config_path, const std::string& out_path,
                 bool seed_given, uint64_t master_seed) {
  ConfigHandle cfg;
  hvn_status st = hvn_config_load(config_path.c_str(), &cfg.ptr);
  if (st != HVN_OK) return report_failure(st);
  if (seed_given) {
    st = hvn_config_set_master_seed(cfg.ptr, master_seed);
    if (st != HVN_OK) return report_failure(st);
  }
  if (!out_path.empty()) {
    st = hvn_config_set_output_path(cfg.ptr, out_path.c_str());
    if (st != HVN_OK) return report_failure(st);
  }

  char* path = nullptr;
  st = hvn_config_output_path(cfg.ptr, &path);
  if (st != HVN_OK) return report_failure(st);
  std::string output = path;
  hvn_string_free(path);

  hvn_records* recs = nullptr;
  st = hvn_experiment_run(cfg.ptr, &recs);
  if (st != HVN_OK) return report_failure(st);

  int count = 0;
  hvn_records_count(recs, &count);
  char* summary = nullptr;
  st = hvn_records_summary(recs, &summary);
  if (st != HVN_OK) {
    hvn_records_free(recs);
    return report_failure(st);
  }
  std::fputs(summary, stdout);
  hvn_string_free(summary);

  if (!output.empty()) {
    st = hvn_records_write_csv(recs, output.c_str());
    if (st != HVN_OK) {
      hvn_records_free(recs);
      return report_failure(st);
    }
    std::printf("wrote %d records to %s\n", count, output.c_str());
  }
  hvn_records_free(recs);
  return 0;
}

int run_schedule(const std::string& config_path, int n, uint64_t seed,
                 const std::string& scheme_name, bool dump, const std::string& dump_path) {
  ConfigHandle cfg;
  hvn_status st = hvn_config_load(config_path.c_str(), &cfg.ptr);
  if (st != HVN_OK) return report_failure(st);

  std::vector<int> schemes;
  if (scheme_name.empty()) {
    for (int s = 0; s < HVN_SCHEME_COUNT; ++s) schemes.push_back(s);
  } else {
    int s = 0;
    st = hvn_scheme_from_name(scheme_name.c_str(), &s);
    if (st != HVN_OK) return report_failure(st);
    schemes.push_back(s);
  }

  hvn_scenario* scenario = nullptr;
  st = hvn_scenario_generate(cfg.ptr, n, seed, &scenario);
  if (st != HVN_OK) return report_failure(st);

  hvn_analysis* analysis = nullptr;
  st = hvn_analysis_compute(cfg.ptr, scenario, &analysis);
  hvn_scenario_free(scenario);
  if (st != HVN_OK) return report_failure(st);

  if (dump) {
    st = hvn_analysis_dump_csv(analysis, dump_path.c_str());
    if (st != HVN_OK) {
      hvn_analysis_free(analysis);
      return report_failure(st);
    }
    std::printf("wrote service tables to %s\n", dump_path.c_str());
  }

  std::printf("scheme,n_f,pairs,m_bits,total_service_bits,min_vn_rate_bps,jain_index\n");
  for (int s : schemes) {
    hvn_run* run = nullptr;
    st = hvn_schedule_run(cfg.ptr, analysis, s, seed, &run);
    if (st != HVN_OK) {
      hvn_analysis_free(analysis);
      return report_failure(st);
    }
    int n_f = 0;
    hvn_run_nf(run, &n_f);
    std::string pairs;
    for (int k = 0; k < n_f; ++k) {
      int relay = 0, fv = 0;
      hvn_run_pair(run, k, &relay, &fv);
      if (k > 0) pairs += ';';
      pairs += std::to_string(relay);
      pairs += ':';
      pairs += std::to_string(fv);
    }
    double m = 0.0, total = 0.0, min_rate = 0.0, jain = 0.0;
    hvn_run_bottleneck(run, &m);
    hvn_run_total_service(run, &total);
    hvn_run_min_rate(run, &min_rate);
    hvn_run_jain(run, &jain);
    std::printf("%s,%d,%s,%.12g,%.12g,%.12g,%.12g\n", hvn_scheme_name(s), n_f,
                pairs.c_str(), m, total, min_rate, jain);
    hvn_run_free(run);
  }
  hvn_analysis_free(analysis);
  return 0;
}

int run_oracle(const std::string& config_path, int n, int seeds) {
  ConfigHandle cfg;
  hvn_status st = hvn_config_load(config_path.c_str(), &cfg.ptr);
  if (st != HVN_OK) return report_failure(st);
  char* report = nullptr;
  st = hvn_oracle_report(cfg.ptr, n, seeds, &report);
  if (st != HVN_OK) return report_failure(st);
  std::fputs(report, stdout);
  hvn_string_free(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relay scheduling simulator for heterogeneous vehicular networks"};
  app.require_subcommand(1);

  std::string sim_config, sim_out;
  uint64_t sim_seed = 0;
  CLI::App* sim = app.add_subcommand("simulate", "run the configured experiment sweep");
  sim->add_option("--config", sim_config, "configuration file")->required();
  sim->add_option("--out", sim_out, "output CSV path, overrides the config");
  CLI::Option* seed_opt =
      sim->add_option("--master-seed", sim_seed, "master seed, overrides the config");

  std::string sch_config, sch_scheme, sch_dump_path = "service_tables.csv";
  int sch_n = 0;
  uint64_t sch_seed = 0;
  CLI::App* sch = app.add_subcommand("schedule", "schedule one generated scenario");
  sch->add_option("--config", sch_config, "configuration file")->required();
  sch->add_option("--n", sch_n, "vehicle count")->required();
  sch->add_option("--seed", sch_seed, "scenario seed")->required();
  sch->add_option("--scheme", sch_scheme, "single scheme to run (default: all)");
  bool sch_dump = false;
  sch->add_flag("--dump-service", sch_dump, "also write the per-RB service tables CSV");
  sch->add_option("--dump-path", sch_dump_path, "destination for --dump-service")
      ->capture_default_str();

  std::string orc_config;
  int orc_n = 0, orc_seeds = 0;
  CLI::App* orc =
      app.add_subcommand("oracle", "compare greedy and exhaustive max-min plans");
  orc->add_option("--config", orc_config, "configuration file")->required();
  orc->add_option("--n", orc_n, "vehicle count, at most 8")->required();
  orc->add_option("--seeds", orc_seeds, "number of scenarios")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (sim->parsed())
    return run_simulate(sim_config, sim_out, seed_opt->count() > 0, sim_seed);
  if (sch->parsed())
    return run_schedule(sch_config, sch_n, sch_seed, sch_scheme, sch_dump, sch_dump_path);
  if (orc->parsed()) return run_oracle(orc_config, orc_n, orc_seeds);
  return 1;
}
