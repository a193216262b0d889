#include "hetvenet/scheduler.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>

#include "hetvenet/assignment.hpp"
#include "hetvenet/error.hpp"
#include "hetvenet/rng.hpp"

namespace hetvenet {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::ms_maxmin: return "MS_MAXMIN";
    case Scheme::ar_maxmin: return "AR_MAXMIN";
    case Scheme::ms_maxsum: return "MS_MAXSUM";
    case Scheme::ar_maxsum: return "AR_MAXSUM";
    case Scheme::random: return "RANDOM";
    case Scheme::no_relay: return "NO_RELAY";
  }
  throw_invalid("scheme_name: unknown scheme value");
}

Scheme scheme_from_name(const std::string& name) {
  std::string up;
  up.reserve(name.size());
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (Scheme s : kAllSchemes)
    if (up == scheme_name(s)) return s;
  throw_invalid("unknown scheme '" + name + "'");
}

namespace {

// Decision inputs a scheme optimizes over: realized per-RB service integrals
// for the mobile-service schemes, t0 per-RB rates for the snapshot schemes.
// Scoring of the chosen schedule always happens on the realized tables.
struct LinkValues {
  const std::vector<double>* v2i;
  const std::vector<std::vector<double>>* v2v;

  int n() const { return static_cast<int>(v2i->size()); }
};

double min_of(const std::vector<double>& v) {
  return *std::min_element(v.begin(), v.end());
}

double sum_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

// Evaluates a schedule on arbitrary link values. Assumes the schedule is
// already validated; this runs once per candidate inside the optimizers.
std::vector<double> per_vehicle_effective(const LinkValues& lv, const Schedule& sch,
                                          int n_lte, int n_dsrc) {
  const int n = lv.n();
  const int share_i = n_lte / n;
  const int share_v = sch.n_f > 0 ? n_dsrc / sch.n_f : 0;
  std::vector<double> out(n, 0.0);
  for (int id : sch.direct_ids) out[id - 1] = share_i * (*lv.v2i)[id - 1];
  for (const RelayPair& pr : sch.pairs) {
    // The far vehicle donates its V2I share to the relay, so the relayed
    // V2I leg runs at the same share as a direct one.
    double leg_i = share_i * (*lv.v2i)[pr.relay_id - 1];
    double leg_v = share_v * (*lv.v2v)[pr.relay_id - 1][pr.fv_id - 1];
    out[pr.relay_id - 1] = leg_i;
    out[pr.fv_id - 1] = std::min(leg_i, leg_v);
  }
  return out;
}

// Far set: the n_f vehicles with the smallest scaled V2I values, ties to the
// lower id. Ascending 0-based indices.
std::vector<int> select_far_set(const std::vector<double>& v2i, int share_i, int n_f) {
  std::vector<int> idx(v2i.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    double va = share_i * v2i[a];
    double vb = share_i * v2i[b];
    if (va != vb) return va < vb;
    return a < b;
  });
  idx.resize(n_f);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<int> complement_of(const std::vector<int>& fvs, int n) {
  std::vector<int> out;
  out.reserve(n - fvs.size());
  size_t k = 0;
  for (int i = 0; i < n; ++i) {
    if (k < fvs.size() && fvs[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

Schedule make_schedule(Scheme tag, std::vector<RelayPair> pairs, int n) {
  Schedule sch;
  sch.scheme = tag;
  sch.n_f = static_cast<int>(pairs.size());
  sch.pairs = std::move(pairs);
  std::vector<char> taken(n + 1, 0);
  for (const RelayPair& pr : sch.pairs) {
    taken[pr.relay_id] = 1;
    taken[pr.fv_id] = 1;
  }
  for (int id = 1; id <= n; ++id)
    if (!taken[id]) sch.direct_ids.push_back(id);
  return sch;
}

// Greedy matching: repeatedly pair the (relay, far) link with the largest
// scaled V2V value. Ascending scan with a strict comparison sends ties to
// the lowest relay id, then the lowest far id. Pairs come out in pick order.
std::vector<RelayPair> greedy_pairs(const std::vector<std::vector<double>>& v2v,
                                    std::vector<int> rvs, std::vector<int> fvs,
                                    int share_v) {
  std::vector<RelayPair> pairs;
  pairs.reserve(fvs.size());
  while (!fvs.empty()) {
    int best_r = -1, best_f = -1;
    double best = -1.0;
    for (int r : rvs) {
      for (int f : fvs) {
        double val = share_v * v2v[r][f];
        if (val > best) {
          best = val;
          best_r = r;
          best_f = f;
        }
      }
    }
    pairs.push_back({best_r + 1, best_f + 1});
    rvs.erase(std::find(rvs.begin(), rvs.end(), best_r));
    fvs.erase(std::find(fvs.begin(), fvs.end(), best_f));
  }
  return pairs;
}

// Relay-count sweep shared by both max-min schemes: for each candidate
// n_f in 0..floor(n/2) pick the far set, match greedily, score the
// bottleneck on the decision inputs, and keep the best candidate. A strict
// comparison keeps the smallest n_f on ties.
Schedule maxmin_schedule(const LinkValues& lv, int n_lte, int n_dsrc, Scheme tag) {
  const int n = lv.n();
  Schedule best;
  double best_m = -std::numeric_limits<double>::infinity();
  for (int n_f = 0; n_f <= n / 2; ++n_f) {
    std::vector<int> fvs = select_far_set(*lv.v2i, n_lte / n, n_f);
    std::vector<int> rvs = complement_of(fvs, n);
    int share_v = n_f > 0 ? n_dsrc / n_f : 0;
    Schedule cand = make_schedule(tag, greedy_pairs(*lv.v2v, rvs, fvs, share_v), n);
    double m = min_of(per_vehicle_effective(lv, cand, n_lte, n_dsrc));
    if (m > best_m) {
      best_m = m;
      best = std::move(cand);
    }
  }
  return best;
}

// Same sweep with a total-service objective. The matching is solved exactly:
// relay V2I legs do not depend on who relays for whom, so maximizing the
// summed far-vehicle service is an assignment problem.
Schedule maxsum_schedule(const LinkValues& lv, int n_lte, int n_dsrc, Scheme tag) {
  const int n = lv.n();
  const int share_i = n_lte / n;
  Schedule best;
  double best_total = -std::numeric_limits<double>::infinity();
  for (int n_f = 0; n_f <= n / 2; ++n_f) {
    std::vector<int> fvs = select_far_set(*lv.v2i, share_i, n_f);
    std::vector<int> rvs = complement_of(fvs, n);
    int share_v = n_f > 0 ? n_dsrc / n_f : 0;
    std::vector<RelayPair> pairs;
    if (n_f > 0) {
      std::vector<std::vector<double>> cost(fvs.size(), std::vector<double>(rvs.size()));
      for (size_t fi = 0; fi < fvs.size(); ++fi) {
        for (size_t ri = 0; ri < rvs.size(); ++ri) {
          double leg_i = share_i * (*lv.v2i)[rvs[ri]];
          double leg_v = share_v * (*lv.v2v)[rvs[ri]][fvs[fi]];
          cost[fi][ri] = -std::min(leg_i, leg_v);
        }
      }
      std::vector<int> cols = min_cost_assignment(cost);
      pairs.reserve(fvs.size());
      for (size_t fi = 0; fi < fvs.size(); ++fi)
        pairs.push_back({rvs[cols[fi]] + 1, fvs[fi] + 1});
    }
    Schedule cand = make_schedule(tag, std::move(pairs), n);
    double total = sum_of(per_vehicle_effective(lv, cand, n_lte, n_dsrc));
    if (n_f > 0) {
      // The assignment step may return any one of several equal-sum optima,
      // and their evaluated sums can differ in the last ulp. Keeping the
      // greedy pairing when it evaluates strictly higher pins the invariant
      // that the summed objective never lands below the max-min matching on
      // the same far set.
      Schedule alt = make_schedule(tag, greedy_pairs(*lv.v2v, rvs, fvs, share_v), n);
      double alt_total = sum_of(per_vehicle_effective(lv, alt, n_lte, n_dsrc));
      if (alt_total > total) {
        total = alt_total;
        cand = std::move(alt);
      }
    }
    if (total > best_total) {
      best_total = total;
      best = std::move(cand);
    }
  }
  return best;
}

void check_inputs(const ServiceTables& tables, int n_lte, int n_dsrc) {
  const int n = tables.size();
  if (n < 1) throw_invalid("scheduler: empty service tables");
  if (static_cast<int>(tables.s_v2v_unit.size()) != n)
    throw_invalid("scheduler: V2V table is not N x N");
  for (const auto& row : tables.s_v2v_unit)
    if (static_cast<int>(row.size()) != n)
      throw_invalid("scheduler: V2V table is not N x N");
  if (n_lte < 0 || n_dsrc < 0) throw_invalid("scheduler: negative RB pool");
}

ScheduleOutcome finish(const ServiceTables& tables, Schedule sch, int n_lte, int n_dsrc) {
  ScheduleOutcome out;
  out.effective = effective_service(tables, sch, n_lte, n_dsrc);
  out.schedule = std::move(sch);
  return out;
}

}  // namespace

void validate_schedule(const Schedule& sch, int n) {
  if (n < 1) throw_invalid("schedule: vehicle count must be positive");
  if (static_cast<int>(sch.pairs.size()) != sch.n_f)
    throw_invalid("schedule: n_f does not match the pair count");
  if (sch.n_f < 0 || sch.n_f > n / 2)
    throw_invalid("schedule: n_f outside 0..floor(N/2)");
  std::vector<int> seen(n + 1, 0);
  auto mark = [&](int id) {
    if (id < 1 || id > n)
      throw_invalid("schedule: vehicle id " + std::to_string(id) + " outside 1..N");
    ++seen[id];
  };
  for (const RelayPair& pr : sch.pairs) {
    mark(pr.relay_id);
    mark(pr.fv_id);
    if (pr.relay_id == pr.fv_id)
      throw_invalid("schedule: vehicle " + std::to_string(pr.fv_id) + " relays itself");
  }
  for (int id : sch.direct_ids) mark(id);
  for (int id = 1; id <= n; ++id)
    if (seen[id] != 1)
      throw_invalid("schedule: vehicle " + std::to_string(id) +
                    " must appear exactly once across pairs and direct ids");
  if (!std::is_sorted(sch.direct_ids.begin(), sch.direct_ids.end()))
    throw_invalid("schedule: direct ids must be ascending");
}

EffectiveService effective_service(const ServiceTables& tables, const Schedule& sch,
                                   int n_lte, int n_dsrc) {
  check_inputs(tables, n_lte, n_dsrc);
  validate_schedule(sch, tables.size());
  LinkValues lv{&tables.s_v2i_unit, &tables.s_v2v_unit};
  EffectiveService eff;
  eff.per_vehicle = per_vehicle_effective(lv, sch, n_lte, n_dsrc);
  eff.bottleneck = min_of(eff.per_vehicle);
  return eff;
}

ScheduleOutcome schedule_ms_maxmin(const ServiceTables& tables, int n_lte, int n_dsrc) {
  check_inputs(tables, n_lte, n_dsrc);
  LinkValues lv{&tables.s_v2i_unit, &tables.s_v2v_unit};
  return finish(tables, maxmin_schedule(lv, n_lte, n_dsrc, Scheme::ms_maxmin), n_lte,
                n_dsrc);
}

ScheduleOutcome schedule_ar_maxmin(const AirSnapshot& snapshot, const ServiceTables& tables,
                                   int n_lte, int n_dsrc) {
  check_inputs(tables, n_lte, n_dsrc);
  if (snapshot.size() != tables.size())
    throw_invalid("scheduler: snapshot and tables disagree on N");
  LinkValues lv{&snapshot.c_v2i_unit, &snapshot.c_v2v_unit};
  return finish(tables, maxmin_schedule(lv, n_lte, n_dsrc, Scheme::ar_maxmin), n_lte,
                n_dsrc);
}

ScheduleOutcome schedule_ms_maxsum(const ServiceTables& tables, int n_lte, int n_dsrc) {
  check_inputs(tables, n_lte, n_dsrc);
  LinkValues lv{&tables.s_v2i_unit, &tables.s_v2v_unit};
  return finish(tables, maxsum_schedule(lv, n_lte, n_dsrc, Scheme::ms_maxsum), n_lte,
                n_dsrc);
}

ScheduleOutcome schedule_ar_maxsum(const AirSnapshot& snapshot, const ServiceTables& tables,
                                   int n_lte, int n_dsrc) {
  check_inputs(tables, n_lte, n_dsrc);
  if (snapshot.size() != tables.size())
    throw_invalid("scheduler: snapshot and tables disagree on N");
  LinkValues lv{&snapshot.c_v2i_unit, &snapshot.c_v2v_unit};
  return finish(tables, maxsum_schedule(lv, n_lte, n_dsrc, Scheme::ar_maxsum), n_lte,
                n_dsrc);
}

ScheduleOutcome schedule_random(const ServiceTables& tables, int n_lte, int n_dsrc,
                                uint64_t rng_seed) {
  check_inputs(tables, n_lte, n_dsrc);
  const int n = tables.size();
  SplitMix64 rng(rng_seed);
  int n_f = static_cast<int>(rng.next_below(static_cast<uint64_t>(n / 2) + 1));
  // Fisher-Yates over all ids; the first n_f become far vehicles, the next
  // n_f their relays, pairing by position.
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(i) + 1));
    std::swap(ids[i], ids[j]);
  }
  std::vector<RelayPair> pairs;
  pairs.reserve(n_f);
  for (int k = 0; k < n_f; ++k) pairs.push_back({ids[n_f + k], ids[k]});
  return finish(tables, make_schedule(Scheme::random, std::move(pairs), n), n_lte, n_dsrc);
}

ScheduleOutcome schedule_no_relay(const ServiceTables& tables, int n_lte) {
  check_inputs(tables, n_lte, 0);
  return finish(tables, make_schedule(Scheme::no_relay, {}, tables.size()), n_lte, 0);
}

ScheduleOutcome schedule_bruteforce_maxmin(const ServiceTables& tables, int n_lte,
                                           int n_dsrc) {
  check_inputs(tables, n_lte, n_dsrc);
  const int n = tables.size();
  LinkValues lv{&tables.s_v2i_unit, &tables.s_v2v_unit};
  Schedule best;
  double best_m = -std::numeric_limits<double>::infinity();
  for (int n_f = 0; n_f <= n / 2; ++n_f) {
    std::vector<int> fvs = select_far_set(*lv.v2i, n_lte / n, n_f);
    std::vector<int> rvs = complement_of(fvs, n);
    std::vector<char> used(rvs.size(), 0);
    std::vector<RelayPair> cur;
    cur.reserve(n_f);
    // Depth-first over injective far->relay maps in lexicographic order, so
    // equal-m optima resolve the same way on every platform.
    std::function<void(size_t)> walk = [&](size_t depth) {
      if (depth == fvs.size()) {
        Schedule cand = make_schedule(Scheme::ms_maxmin, cur, n);
        double m = min_of(per_vehicle_effective(lv, cand, n_lte, n_dsrc));
        if (m > best_m) {
          best_m = m;
          best = std::move(cand);
        }
        return;
      }
      for (size_t ri = 0; ri < rvs.size(); ++ri) {
        if (used[ri]) continue;
        used[ri] = 1;
        cur.push_back({rvs[ri] + 1, fvs[depth] + 1});
        walk(depth + 1);
        cur.pop_back();
        used[ri] = 0;
      }
    };
    walk(0);
  }
  return finish(tables, std::move(best), n_lte, n_dsrc);
}

std::string format_pairs(const std::vector<RelayPair>& pairs) {
  std::string out;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(pairs[i].relay_id);
    out += ':';
    out += std::to_string(pairs[i].fv_id);
  }
  return out;
}

namespace {

int parse_id(std::string_view text) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw_invalid("parse_pairs: bad vehicle id '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::vector<RelayPair> parse_pairs(const std::string& text) {
  std::vector<RelayPair> out;
  if (text.empty()) return out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string_view item(text.data() + start, end - start);
    size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw_invalid("parse_pairs: expected relay:fv, got '" + std::string(item) + "'");
    out.push_back({parse_id(item.substr(0, colon)), parse_id(item.substr(colon + 1))});
    start = end + 1;
  }
  return out;
}

}  // namespace hetvenet
