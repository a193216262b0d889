#include "hetvenet/mobility.hpp"

#include <cmath>
#include <string>

#include "hetvenet/error.hpp"

namespace hetvenet {

Position predict_position(const VehicleState& s, double t0, double t) {
  if (t < t0) throw_invalid("predict_position: t precedes reference time t0");
  return {s.x + s.v * (t - t0), s.y};
}

double distance_v2i(const Position& p, const Infrastructure& infra) {
  return std::hypot(p.x - infra.x, p.y - infra.y);
}

double distance_v2v(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void validate_infrastructure(const Infrastructure& infra) {
  if (!(infra.coverage_radius > 0.0))
    throw_invalid("infrastructure: coverage radius must be positive");
  if (!std::isfinite(infra.x) || !std::isfinite(infra.y))
    throw_invalid("infrastructure: position must be finite");
}

void validate_scenario(const Scenario& sc) {
  validate_infrastructure(sc.infra);
  if (sc.vehicles.empty()) throw_invalid("scenario: no vehicles");
  if (!(sc.horizon > 0.0)) throw_invalid("scenario: horizon must be positive");
  if (sc.steps < 1) throw_invalid("scenario: steps must be at least 1");
  if (!std::isfinite(sc.t0)) throw_invalid("scenario: t0 must be finite");
  for (int i = 0; i < sc.size(); ++i) {
    const VehicleState& v = sc.vehicles[i];
    if (v.id != i + 1)
      throw_invalid("scenario: vehicle ids must be 1..N in order, found id " +
                    std::to_string(v.id) + " at index " + std::to_string(i));
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.v))
      throw_invalid("scenario: vehicle " + std::to_string(v.id) +
                    " has a non-finite state");
  }
}

}  // namespace hetvenet
