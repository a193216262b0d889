#include "hetvenet/service.hpp"

#include <vector>

#include "hetvenet/error.hpp"

namespace hetvenet {

namespace {

std::vector<Position> positions_at(const Scenario& sc, double t) {
  std::vector<Position> pos(sc.vehicles.size());
  for (size_t i = 0; i < sc.vehicles.size(); ++i)
    pos[i] = predict_position(sc.vehicles[i], sc.t0, t);
  return pos;
}

}  // namespace

ServiceTables compute_service_tables(const Scenario& sc, const RadioProfile& lte,
                                     const RadioProfile& dsrc) {
  validate_scenario(sc);
  validate_profile(lte);
  validate_profile(dsrc);

  const int n = sc.size();
  ServiceTables out;
  out.horizon = sc.horizon;
  out.steps = sc.steps;
  out.s_v2i_unit.assign(n, 0.0);
  out.s_v2v_unit.assign(n, std::vector<double>(n, 0.0));

  // Left Riemann sum: sample at t0 + m*dt for m = 0..steps-1, weight dt.
  const double dt = sc.horizon / sc.steps;
  for (int m = 0; m < sc.steps; ++m) {
    double t = sc.t0 + m * dt;
    std::vector<Position> pos = positions_at(sc, t);
    for (int i = 0; i < n; ++i) {
      out.s_v2i_unit[i] += dt * air_per_rb(lte, distance_v2i(pos[i], sc.infra));
      for (int j = i + 1; j < n; ++j) {
        double s = dt * air_per_rb(dsrc, distance_v2v(pos[i], pos[j]));
        out.s_v2v_unit[i][j] += s;
        out.s_v2v_unit[j][i] += s;
      }
    }
  }
  return out;
}

AirSnapshot compute_air_snapshot(const Scenario& sc, const RadioProfile& lte,
                                 const RadioProfile& dsrc) {
  validate_scenario(sc);
  validate_profile(lte);
  validate_profile(dsrc);

  const int n = sc.size();
  AirSnapshot out;
  out.c_v2i_unit.assign(n, 0.0);
  out.c_v2v_unit.assign(n, std::vector<double>(n, 0.0));

  std::vector<Position> pos = positions_at(sc, sc.t0);
  for (int i = 0; i < n; ++i) {
    out.c_v2i_unit[i] = air_per_rb(lte, distance_v2i(pos[i], sc.infra));
    for (int j = i + 1; j < n; ++j) {
      double c = air_per_rb(dsrc, distance_v2v(pos[i], pos[j]));
      out.c_v2v_unit[i][j] = c;
      out.c_v2v_unit[j][i] = c;
    }
  }
  return out;
}

}  // namespace hetvenet
