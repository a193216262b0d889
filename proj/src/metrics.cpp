#include "hetvenet/metrics.hpp"

#include <algorithm>
#include <string>

#include "hetvenet/error.hpp"

namespace hetvenet {

double jain_index(const std::vector<double>& values) {
  if (values.empty()) throw_invalid("jain_index: empty input");
  double sum = 0.0;
  double sumsq = 0.0;
  for (double v : values) {
    if (v < 0.0) throw_invalid("jain_index: negative value");
    sum += v;
    sumsq += v * v;
  }
  if (sumsq == 0.0) throw_invalid("jain_index: all values zero, fairness undefined");
  return (sum * sum) / (static_cast<double>(values.size()) * sumsq);
}

double total_fv_throughput(const EffectiveService& eff, const std::vector<int>& fv_ids,
                           double horizon_s) {
  if (!(horizon_s > 0.0)) throw_invalid("total_fv_throughput: horizon must be positive");
  const int n = static_cast<int>(eff.per_vehicle.size());
  double total = 0.0;
  for (int id : fv_ids) {
    if (id < 1 || id > n)
      throw_invalid("total_fv_throughput: vehicle id " + std::to_string(id) +
                    " outside 1..N");
    total += eff.per_vehicle[id - 1] / horizon_s;
  }
  return total;
}

SchemeResult summarize(const EffectiveService& eff, const Schedule& sch, double horizon_s,
                       const std::vector<int>& comparison_fv_ids) {
  if (!(horizon_s > 0.0)) throw_invalid("summarize: horizon must be positive");
  if (eff.per_vehicle.empty()) throw_invalid("summarize: empty effective service");
  SchemeResult res;
  res.scheme = sch.scheme;
  res.per_vehicle_rates_bps.reserve(eff.per_vehicle.size());
  for (double s : eff.per_vehicle) res.per_vehicle_rates_bps.push_back(s / horizon_s);
  res.min_vn_rate_bps =
      *std::min_element(res.per_vehicle_rates_bps.begin(), res.per_vehicle_rates_bps.end());
  res.total_fv_throughput_bps = total_fv_throughput(eff, comparison_fv_ids, horizon_s);
  res.jain = jain_index(res.per_vehicle_rates_bps);
  return res;
}

}  // namespace hetvenet
