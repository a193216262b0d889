#pragma once

#include <vector>

#include "hetvenet/scheduler.hpp"

namespace hetvenet {

// Jain's fairness index, (sum v)^2 / (N * sum v^2), in [1/N, 1].
// Values must be nonnegative with at least one positive entry.
double jain_index(const std::vector<double>& values);

// Sum of per-vehicle rates over fv_ids, bit/s. Vehicles outside the schedule
// are not a concern here: fv_ids is whatever comparison set the caller fixed.
double total_fv_throughput(const EffectiveService& eff, const std::vector<int>& fv_ids,
                           double horizon_s);

struct SchemeResult {
  Scheme scheme = Scheme::no_relay;
  double total_fv_throughput_bps = 0.0;
  double min_vn_rate_bps = 0.0;
  double jain = 0.0;
  std::vector<double> per_vehicle_rates_bps;
};

// Per-vehicle rates are per_vehicle / horizon; the far-vehicle throughput is
// aggregated over comparison_fv_ids so schemes stay comparable on one
// scenario.
SchemeResult summarize(const EffectiveService& eff, const Schedule& sch, double horizon_s,
                       const std::vector<int>& comparison_fv_ids);

}  // namespace hetvenet
