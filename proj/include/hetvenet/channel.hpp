#pragma once

namespace hetvenet {

// Large-scale path-loss model for one radio technology:
//
//   LP(d) = F + 10 * alpha * log10(d / d0)        [dB]
//   Pr    = Ps / 10^(LP/10)                       [W]
//   C     = log2(1 + Pr / noise)                  [bit/s per RB]
//
// Distances below d_min_m are evaluated at d_min_m; the log-distance model
// diverges as d -> 0 and simulated vehicles can be arbitrarily close.
struct RadioProfile {
  double f_db = 0.0;           // attenuation at reference distance d0
  double d0_m = 1.0;           // reference distance, > 0
  double alpha = 2.0;          // path-loss exponent, >= 2
  double tx_power_w = 0.0;     // Ps, > 0
  double noise_power_w = 0.0;  // sigma^2, > 0
  int rb_pool = 1;             // technology RB pool size, >= 1
  double d_min_m = 1.0;        // clamp distance, > 0

  // Cellular V2I macro profile: F = 128.1 dB at d0 = 1 km, alpha = 3.76.
  static RadioProfile lte_default();
  // Short-range V2V profile: F = 43.9 dB at d0 = 1 m, alpha = 2.75.
  static RadioProfile dsrc_default();
};

enum class LinkTech { v2i_lte, v2v_dsrc };

RadioProfile default_profile(LinkTech tech);

void validate_profile(const RadioProfile& p);

// LP(d) in dB. Errors on d <= 0; clamps d < d_min_m to d_min_m.
double path_loss_db(const RadioProfile& p, double distance_m);

// Pr / noise (linear).
double received_snr(const RadioProfile& p, double distance_m);

// Achievable instantaneous rate of a single RB, bit/s.
double air_per_rb(const RadioProfile& p, double distance_m);

// Rate over rb_count identical RBs; rb_count >= 0.
double air_link(const RadioProfile& p, double distance_m, int rb_count);

}  // namespace hetvenet
