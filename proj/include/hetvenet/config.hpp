#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hetvenet/channel.hpp"
#include "hetvenet/mobility.hpp"
#include "hetvenet/scheduler.hpp"

namespace hetvenet {

// Straight multi-lane road centered on x = 0. Lane i sits at lane_offsets[i]
// with travel direction lane_directions[i] (+1 or -1).
struct RoadConfig {
  double length = 3000.0;                      // m
  std::vector<double> lane_offsets = {0.0, 4.0};
  std::vector<int> lane_directions = {1, -1};
  double speed_min = 5.0;   // m/s
  double speed_max = 35.0;  // m/s
};

struct ExperimentConfig {
  RoadConfig road;
  Infrastructure infra;  // (0, 15), radius 1500
  RadioProfile lte = RadioProfile::lte_default();
  RadioProfile dsrc = RadioProfile::dsrc_default();

  double t0 = 0.0;       // s
  double horizon = 5.0;  // s
  int steps = 100;

  std::vector<int> n_values = {10, 20, 30, 40};
  int seeds_per_point = 200;
  uint64_t master_seed = 1;
  std::vector<Scheme> schemes = {kAllSchemes.begin(), kAllSchemes.end()};
  std::string output_path = "results.csv";
};

// Parses the minimal TOML subset documented in the README: [section] headers,
// key = value lines, # comments, numbers, "strings" and flat arrays. Every
// key is optional and defaults to the values above; unknown sections or keys
// are configuration errors.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::string& path);

void validate_config(const ExperimentConfig& cfg);

}  // namespace hetvenet
