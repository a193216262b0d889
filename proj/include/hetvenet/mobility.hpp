#pragma once

#include <vector>

namespace hetvenet {

// One vehicular node at the scenario reference time t0. Speed is signed: the
// sign encodes the travel direction along the road axis (x).
struct VehicleState {
  int id = 0;      // 1-based, contiguous within a scenario
  double x = 0.0;  // m
  double y = 0.0;  // m, lane offset
  double v = 0.0;  // m/s
};

struct Position {
  double x = 0.0;
  double y = 0.0;
};

// Roadside unit placed off the road axis.
struct Infrastructure {
  double x = 0.0;
  double y = 15.0;
  double coverage_radius = 1500.0;  // m, > 0
};

struct Scenario {
  std::vector<VehicleState> vehicles;  // ids 1..N in order
  Infrastructure infra;
  double t0 = 0.0;      // s
  double horizon = 0.0;  // s, > 0
  int steps = 0;         // >= 1

  int size() const { return static_cast<int>(vehicles.size()); }
};

// Straight-road constant-velocity extrapolation. Requires t >= t0.
Position predict_position(const VehicleState& s, double t0, double t);

double distance_v2i(const Position& p, const Infrastructure& infra);
double distance_v2v(const Position& a, const Position& b);

void validate_infrastructure(const Infrastructure& infra);

// Checks ids are 1..N in order, horizon > 0, steps >= 1 and the
// infrastructure is well formed.
void validate_scenario(const Scenario& sc);

}  // namespace hetvenet
