#include "hetvenet/channel.hpp"

#include <cmath>
#include <string>

#include "hetvenet/error.hpp"

namespace hetvenet {

RadioProfile RadioProfile::lte_default() {
  RadioProfile p;
  p.f_db = 128.1;
  p.d0_m = 1000.0;
  p.alpha = 3.76;
  p.tx_power_w = 0.2;
  p.noise_power_w = 1e-13;
  p.rb_pool = 200;
  p.d_min_m = 1.0;
  return p;
}

RadioProfile RadioProfile::dsrc_default() {
  RadioProfile p;
  p.f_db = 43.9;
  p.d0_m = 1.0;
  p.alpha = 2.75;
  p.tx_power_w = 0.2;
  p.noise_power_w = 1e-13;
  p.rb_pool = 100;
  p.d_min_m = 1.0;
  return p;
}

RadioProfile default_profile(LinkTech tech) {
  return tech == LinkTech::v2i_lte ? RadioProfile::lte_default()
                                   : RadioProfile::dsrc_default();
}

void validate_profile(const RadioProfile& p) {
  if (!(p.d0_m > 0.0)) throw_invalid("radio profile: d0 must be positive");
  if (!(p.alpha >= 2.0)) throw_invalid("radio profile: alpha must be at least 2");
  if (!(p.tx_power_w > 0.0)) throw_invalid("radio profile: tx power must be positive");
  if (!(p.noise_power_w > 0.0))
    throw_invalid("radio profile: noise power must be positive");
  if (p.rb_pool < 1) throw_invalid("radio profile: RB pool must be at least 1");
  if (!(p.d_min_m > 0.0)) throw_invalid("radio profile: d_min must be positive");
  if (!std::isfinite(p.f_db)) throw_invalid("radio profile: F must be finite");
}

double path_loss_db(const RadioProfile& p, double distance_m) {
  if (!(distance_m > 0.0))
    throw_invalid("path_loss_db: degenerate distance " + std::to_string(distance_m));
  double d = distance_m < p.d_min_m ? p.d_min_m : distance_m;
  return p.f_db + 10.0 * p.alpha * std::log10(d / p.d0_m);
}

double received_snr(const RadioProfile& p, double distance_m) {
  double lp = path_loss_db(p, distance_m);
  double pr = p.tx_power_w / std::pow(10.0, lp / 10.0);
  return pr / p.noise_power_w;
}

double air_per_rb(const RadioProfile& p, double distance_m) {
  return std::log2(1.0 + received_snr(p, distance_m));
}

double air_link(const RadioProfile& p, double distance_m, int rb_count) {
  if (rb_count < 0) throw_invalid("air_link: negative RB count");
  return static_cast<double>(rb_count) * air_per_rb(p, distance_m);
}

}  // namespace hetvenet
