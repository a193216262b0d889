#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hetvenet/config.hpp"
#include "hetvenet/metrics.hpp"

namespace hetvenet {

// One (n, seed, scheme) cell of an experiment sweep.
struct RunRecord {
  int n = 0;
  uint64_t seed = 0;  // scenario seed derived from the master seed
  Scheme scheme = Scheme::no_relay;
  int n_f = 0;
  std::vector<RelayPair> pairs;
  double m_bits = 0.0;              // bottleneck effective service
  double total_service_bits = 0.0;  // network-wide effective service
  SchemeResult result;
};

// Scenario stream for sweep point (n, index) under a master seed.
uint64_t derive_point_seed(uint64_t master_seed, int n, int point_index);

// Vehicles drawn i.i.d.: x uniform on [-L/2, L/2], lane uniform, speed
// magnitude uniform on [speed_min, speed_max] signed by the lane direction.
Scenario generate_scenario(const ExperimentConfig& cfg, int n, uint64_t seed);

struct ScenarioAnalysis {
  Scenario scenario;
  ServiceTables tables;
  AirSnapshot snapshot;
};

ScenarioAnalysis analyze_scenario(const ExperimentConfig& cfg, int n, uint64_t seed);

// Dispatches one scheme on a prepared scenario. scenario_seed feeds the
// random scheme's stream; deterministic schemes ignore it.
ScheduleOutcome run_scheme(const ExperimentConfig& cfg, const ScenarioAnalysis& analysis,
                           Scheme scheme, uint64_t scenario_seed);

// Full sweep over cfg.n_values x seeds_per_point x schemes, in that nesting
// order. Far-vehicle throughput of every scheme is aggregated over the far
// set picked by the mobile-service max-min scheme on the same scenario. If
// cfg.output_path is nonempty it is probed for writability up front so a bad
// path fails before any computation.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

// Shortest round-trippable decimal form, capped at 12 significant digits.
std::string format_double12(double v);

// Header plus one row per record, UTF-8, LF line endings. Empty input is an
// error and creates no file.
void write_csv(const std::vector<RunRecord>& records, const std::string& path);

std::string csv_header();
std::string csv_row(const RunRecord& rec);

// Per-(n, scheme) means of the sweep metrics, fixed-width text.
std::string format_summary(const std::vector<RunRecord>& records,
                           const ExperimentConfig& cfg);

void dump_service_tables_csv(const ServiceTables& tables, const std::string& path);

// Greedy max-min versus the exhaustive reference on `seeds` generated
// scenarios of n vehicles (n <= 8). Reports the equality rate and the worst
// relative gap; greedy above the optimum is counted as a violation.
std::string oracle_report(const ExperimentConfig& cfg, int n, int seeds);

}  // namespace hetvenet
