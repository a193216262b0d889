#include "hetvenet/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "hetvenet/error.hpp"
#include "hetvenet/rng.hpp"

namespace hetvenet {

namespace {

void probe_writable(const std::string& path) {
  // Append mode leaves an existing file untouched by the probe itself.
  std::ofstream probe(path, std::ios::binary | std::ios::app);
  if (!probe) throw_io("output path '" + path + "' is not writable");
}

std::vector<int> comparison_far_set(const Schedule& ms_maxmin_plan) {
  std::vector<int> ids;
  ids.reserve(ms_maxmin_plan.pairs.size());
  for (const RelayPair& pr : ms_maxmin_plan.pairs) ids.push_back(pr.fv_id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

uint64_t derive_point_seed(uint64_t master_seed, int n, int point_index) {
  return derive_seed(master_seed, static_cast<uint64_t>(n),
                     static_cast<uint64_t>(point_index));
}

Scenario generate_scenario(const ExperimentConfig& cfg, int n, uint64_t seed) {
  validate_config(cfg);
  if (n < 1) throw_invalid("generate_scenario: n must be at least 1");
  SplitMix64 rng(seed);
  Scenario sc;
  sc.infra = cfg.infra;
  sc.t0 = cfg.t0;
  sc.horizon = cfg.horizon;
  sc.steps = cfg.steps;
  sc.vehicles.reserve(n);
  const double half = cfg.road.length / 2.0;
  for (int i = 0; i < n; ++i) {
    // Draw order per vehicle is part of the reproducibility contract:
    // position, then lane, then speed magnitude.
    VehicleState v;
    v.id = i + 1;
    v.x = rng.uniform(-half, half);
    int lane = static_cast<int>(rng.next_below(cfg.road.lane_offsets.size()));
    v.y = cfg.road.lane_offsets[lane];
    double speed = rng.uniform(cfg.road.speed_min, cfg.road.speed_max);
    v.v = cfg.road.lane_directions[lane] * speed;
    sc.vehicles.push_back(v);
  }
  return sc;
}

ScenarioAnalysis analyze_scenario(const ExperimentConfig& cfg, int n, uint64_t seed) {
  ScenarioAnalysis an;
  an.scenario = generate_scenario(cfg, n, seed);
  an.tables = compute_service_tables(an.scenario, cfg.lte, cfg.dsrc);
  an.snapshot = compute_air_snapshot(an.scenario, cfg.lte, cfg.dsrc);
  return an;
}

ScheduleOutcome run_scheme(const ExperimentConfig& cfg, const ScenarioAnalysis& analysis,
                           Scheme scheme, uint64_t scenario_seed) {
  const int n_lte = cfg.lte.rb_pool;
  const int n_dsrc = cfg.dsrc.rb_pool;
  switch (scheme) {
    case Scheme::ms_maxmin:
      return schedule_ms_maxmin(analysis.tables, n_lte, n_dsrc);
    case Scheme::ar_maxmin:
      return schedule_ar_maxmin(analysis.snapshot, analysis.tables, n_lte, n_dsrc);
    case Scheme::ms_maxsum:
      return schedule_ms_maxsum(analysis.tables, n_lte, n_dsrc);
    case Scheme::ar_maxsum:
      return schedule_ar_maxsum(analysis.snapshot, analysis.tables, n_lte, n_dsrc);
    case Scheme::random:
      // Own derived stream so adding or removing other schemes cannot
      // disturb the draws.
      return schedule_random(analysis.tables, n_lte, n_dsrc,
                             derive_seed(scenario_seed, 0x52414E44ull, 0));
    case Scheme::no_relay:
      return schedule_no_relay(analysis.tables, n_lte);
  }
  throw_invalid("run_scheme: unknown scheme value");
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  if (!cfg.output_path.empty()) probe_writable(cfg.output_path);

  std::vector<RunRecord> records;
  records.reserve(cfg.n_values.size() * static_cast<size_t>(cfg.seeds_per_point) *
                  cfg.schemes.size());
  for (int n : cfg.n_values) {
    for (int s = 0; s < cfg.seeds_per_point; ++s) {
      uint64_t seed = derive_point_seed(cfg.master_seed, n, s);
      ScenarioAnalysis an = analyze_scenario(cfg, n, seed);
      // One far set per scenario, fixed by the mobile-service max-min plan,
      // keeps the far-vehicle throughput comparable across schemes.
      ScheduleOutcome ms =
          schedule_ms_maxmin(an.tables, cfg.lte.rb_pool, cfg.dsrc.rb_pool);
      std::vector<int> comparison = comparison_far_set(ms.schedule);
      for (Scheme scheme : cfg.schemes) {
        ScheduleOutcome out =
            scheme == Scheme::ms_maxmin ? ms : run_scheme(cfg, an, scheme, seed);
        RunRecord rec;
        rec.n = n;
        rec.seed = seed;
        rec.scheme = scheme;
        rec.n_f = out.schedule.n_f;
        rec.pairs = out.schedule.pairs;
        rec.m_bits = out.effective.bottleneck;
        rec.total_service_bits = std::accumulate(out.effective.per_vehicle.begin(),
                                                 out.effective.per_vehicle.end(), 0.0);
        rec.result = summarize(out.effective, out.schedule, cfg.horizon, comparison);
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

std::string format_double12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_header() {
  return "n,seed,scheme,n_f,pairs,m_bits,total_service_bits,total_fv_throughput_bps,"
         "min_vn_rate_bps,jain_index,per_vehicle_rates_bps";
}

std::string csv_row(const RunRecord& rec) {
  std::ostringstream os;
  os << rec.n << ',' << rec.seed << ',' << scheme_name(rec.scheme) << ',' << rec.n_f
     << ',' << format_pairs(rec.pairs) << ',' << format_double12(rec.m_bits) << ','
     << format_double12(rec.total_service_bits) << ','
     << format_double12(rec.result.total_fv_throughput_bps) << ','
     << format_double12(rec.result.min_vn_rate_bps) << ','
     << format_double12(rec.result.jain);
  os << ',';
  const std::vector<double>& rates = rec.result.per_vehicle_rates_bps;
  for (size_t i = 0; i < rates.size(); ++i) {
    if (i > 0) os << ';';
    os << format_double12(rates[i]);
  }
  return os.str();
}

void write_csv(const std::vector<RunRecord>& records, const std::string& path) {
  if (records.empty()) throw_invalid("write_csv: no records to write");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_io("cannot open '" + path + "' for writing");
  out << csv_header() << '\n';
  for (const RunRecord& rec : records) out << csv_row(rec) << '\n';
  out.flush();
  if (!out) throw_io("failed while writing '" + path + "'");
}

std::string format_summary(const std::vector<RunRecord>& records,
                           const ExperimentConfig& cfg) {
  if (records.empty()) throw_invalid("format_summary: no records");
  struct Agg {
    int count = 0;
    double thr = 0.0, min_rate = 0.0, jain = 0.0;
  };
  std::map<std::pair<int, int>, Agg> agg;
  for (const RunRecord& rec : records) {
    Agg& a = agg[{rec.n, static_cast<int>(rec.scheme)}];
    ++a.count;
    a.thr += rec.result.total_fv_throughput_bps;
    a.min_rate += rec.result.min_vn_rate_bps;
    a.jain += rec.result.jain;
  }
  std::ostringstream os;
  char buf[200];
  std::snprintf(buf, sizeof buf, "%4s  %-10s %6s %18s %16s %10s\n", "n", "scheme",
                "seeds", "fv_thr_bps", "min_rate_bps", "jain");
  os << buf;
  for (int n : cfg.n_values) {
    for (Scheme s : cfg.schemes) {
      auto it = agg.find({n, static_cast<int>(s)});
      if (it == agg.end()) continue;
      const Agg& a = it->second;
      std::snprintf(buf, sizeof buf, "%4d  %-10s %6d %18.6f %16.6f %10.6f\n", n,
                    scheme_name(s), a.count, a.thr / a.count, a.min_rate / a.count,
                    a.jain / a.count);
      os << buf;
    }
  }
  return os.str();
}

void dump_service_tables_csv(const ServiceTables& tables, const std::string& path) {
  const int n = tables.size();
  if (n < 1) throw_invalid("dump_service_tables_csv: empty tables");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_io("cannot open '" + path + "' for writing");
  out << "id,s_v2i_unit";
  for (int j = 1; j <= n; ++j) out << ",s_v2v_unit_" << j;
  out << '\n';
  for (int i = 0; i < n; ++i) {
    out << (i + 1) << ',' << format_double12(tables.s_v2i_unit[i]);
    for (int j = 0; j < n; ++j) out << ',' << format_double12(tables.s_v2v_unit[i][j]);
    out << '\n';
  }
  out.flush();
  if (!out) throw_io("failed while writing '" + path + "'");
}

std::string oracle_report(const ExperimentConfig& cfg, int n, int seeds) {
  validate_config(cfg);
  if (n < 1 || n > 8) throw_config("oracle: n must be between 1 and 8");
  if (seeds < 1) throw_config("oracle: seeds must be at least 1");

  int equal = 0;
  int violations = 0;
  double worst_gap = 0.0;
  double gap_sum = 0.0;
  for (int s = 0; s < seeds; ++s) {
    uint64_t seed = derive_point_seed(cfg.master_seed, n, s);
    ScenarioAnalysis an = analyze_scenario(cfg, n, seed);
    double greedy =
        schedule_ms_maxmin(an.tables, cfg.lte.rb_pool, cfg.dsrc.rb_pool)
            .effective.bottleneck;
    double exact =
        schedule_bruteforce_maxmin(an.tables, cfg.lte.rb_pool, cfg.dsrc.rb_pool)
            .effective.bottleneck;
    if (greedy == exact) ++equal;
    if (greedy > exact) ++violations;
    double gap = exact > 0.0 && greedy <= exact ? (exact - greedy) / exact : 0.0;
    worst_gap = std::max(worst_gap, gap);
    gap_sum += gap;
  }

  std::ostringstream os;
  char buf[160];
  os << "max-min oracle: n=" << n << ", instances=" << seeds
     << ", master_seed=" << cfg.master_seed << '\n';
  std::snprintf(buf, sizeof buf, "greedy == exhaustive: %d/%d (%.1f%%)\n", equal, seeds,
                100.0 * equal / seeds);
  os << buf;
  os << "greedy above exhaustive (violations): " << violations << '\n';
  std::snprintf(buf, sizeof buf, "worst relative gap: %.3e\n", worst_gap);
  os << buf;
  std::snprintf(buf, sizeof buf, "mean relative gap: %.3e\n", gap_sum / seeds);
  os << buf;
  return os.str();
}

}  // namespace hetvenet
