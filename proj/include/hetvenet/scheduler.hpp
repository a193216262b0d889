#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hetvenet/service.hpp"

namespace hetvenet {

enum class Scheme {
  ms_maxmin,  // mobile-service max-min relay selection
  ar_maxmin,  // snapshot-rate max-min relay selection
  ms_maxsum,  // mobile-service total-service maximization
  ar_maxsum,  // snapshot-rate total-service maximization
  random,     // uniform relay count and matching
  no_relay,   // every vehicle served directly
};

inline constexpr std::array<Scheme, 6> kAllSchemes = {
    Scheme::ms_maxmin, Scheme::ar_maxmin, Scheme::ms_maxsum,
    Scheme::ar_maxsum, Scheme::random,    Scheme::no_relay,
};

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);  // case-insensitive

struct RelayPair {
  int relay_id = 0;  // 1-based vehicle ids
  int fv_id = 0;
};

// A relay plan: n_f far vehicles, each reached through a distinct relay,
// everything else served directly. pairs and direct_ids partition 1..N.
struct Schedule {
  Scheme scheme = Scheme::no_relay;
  int n_f = 0;
  std::vector<RelayPair> pairs;  // size n_f
  std::vector<int> direct_ids;   // ascending
};

// Effective per-vehicle service amounts of a schedule, on realized tables:
// direct or relay vehicle i gets floor(N_LTE/N) * s_v2i[i]; a far vehicle
// relayed by i gets min of the relay's V2I leg (same donated share) and
// floor(N_DSRC/n_f) RBs on the V2V leg.
struct EffectiveService {
  std::vector<double> per_vehicle;  // bits over the horizon, index id-1
  double bottleneck = 0.0;          // min over per_vehicle
};

struct ScheduleOutcome {
  Schedule schedule;
  EffectiveService effective;
};

// Throws on ids outside 1..n, duplicates, pairs/direct overlap or
// n_f != pairs.size().
void validate_schedule(const Schedule& sch, int n);

EffectiveService effective_service(const ServiceTables& tables, const Schedule& sch,
                                   int n_lte, int n_dsrc);

ScheduleOutcome schedule_ms_maxmin(const ServiceTables& tables, int n_lte, int n_dsrc);
ScheduleOutcome schedule_ar_maxmin(const AirSnapshot& snapshot, const ServiceTables& tables,
                                   int n_lte, int n_dsrc);
ScheduleOutcome schedule_ms_maxsum(const ServiceTables& tables, int n_lte, int n_dsrc);
ScheduleOutcome schedule_ar_maxsum(const AirSnapshot& snapshot, const ServiceTables& tables,
                                   int n_lte, int n_dsrc);
ScheduleOutcome schedule_random(const ServiceTables& tables, int n_lte, int n_dsrc,
                                uint64_t rng_seed);
ScheduleOutcome schedule_no_relay(const ServiceTables& tables, int n_lte);

// Exact max-min reference: exhaustive search over all relay assignments
// consistent with the smallest-V2I far-vehicle rule. Factorial cost, meant
// for N <= 8.
ScheduleOutcome schedule_bruteforce_maxmin(const ServiceTables& tables, int n_lte,
                                           int n_dsrc);

// "relay:fv;relay:fv;..." in pair order; empty string for no pairs.
std::string format_pairs(const std::vector<RelayPair>& pairs);
std::vector<RelayPair> parse_pairs(const std::string& text);

}  // namespace hetvenet
