#pragma once

#include <vector>

#include "hetvenet/channel.hpp"
#include "hetvenet/mobility.hpp"

namespace hetvenet {

// Predicted per-RB mobile service amounts over the scenario horizon,
// integrated with a left Riemann sum at `steps` samples. Entry [i][j] is the
// single-RB amount for the V2V link between vehicles i+1 and j+1; v2i[i] is
// the single-RB amount of vehicle i+1's infrastructure link. RB multipliers
// are applied later by the scheduler, so one table serves every candidate
// split of the RB pools.
struct ServiceTables {
  std::vector<double> s_v2i_unit;               // bits per RB, length N
  std::vector<std::vector<double>> s_v2v_unit;  // N x N, symmetric, zero diagonal
  double horizon = 0.0;                         // s
  int steps = 0;

  int size() const { return static_cast<int>(s_v2i_unit.size()); }
};

// Per-RB instantaneous rates at the scheduling instant t0.
struct AirSnapshot {
  std::vector<double> c_v2i_unit;               // bit/s per RB
  std::vector<std::vector<double>> c_v2v_unit;  // symmetric, zero diagonal

  int size() const { return static_cast<int>(c_v2i_unit.size()); }
};

ServiceTables compute_service_tables(const Scenario& sc, const RadioProfile& lte,
                                     const RadioProfile& dsrc);

AirSnapshot compute_air_snapshot(const Scenario& sc, const RadioProfile& lte,
                                 const RadioProfile& dsrc);

}  // namespace hetvenet
