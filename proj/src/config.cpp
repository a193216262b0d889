#include "hetvenet/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "hetvenet/error.hpp"

namespace hetvenet {

namespace {

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Strips a trailing comment outside of quotes.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

struct Parser {
  ExperimentConfig cfg;
  std::string section;
  int line_no = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw_config("config line " + std::to_string(line_no) + ": " + msg);
  }

  double as_double(std::string_view v) const {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
      fail("expected a number, got '" + std::string(v) + "'");
    if (!std::isfinite(out)) fail("number out of range: '" + std::string(v) + "'");
    return out;
  }

  int as_int(std::string_view v) const {
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
      fail("expected an integer, got '" + std::string(v) + "'");
    return out;
  }

  uint64_t as_u64(std::string_view v) const {
    uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
      fail("expected an unsigned integer, got '" + std::string(v) + "'");
    return out;
  }

  std::string as_string(std::string_view v) const {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"')
      fail("expected a quoted string, got '" + std::string(v) + "'");
    return std::string(v.substr(1, v.size() - 2));
  }

  std::vector<std::string_view> array_items(std::string_view v) const {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
      fail("expected an array [ ... ], got '" + std::string(v) + "'");
    v = v.substr(1, v.size() - 2);
    std::vector<std::string_view> items;
    size_t start = 0;
    bool quoted = false;
    for (size_t i = 0; i <= v.size(); ++i) {
      if (i < v.size() && v[i] == '"') quoted = !quoted;
      if (i == v.size() || (v[i] == ',' && !quoted)) {
        std::string_view item = trim(v.substr(start, i - start));
        if (!item.empty()) items.push_back(item);
        start = i + 1;
      }
    }
    return items;
  }

  std::vector<double> as_double_array(std::string_view v) const {
    std::vector<double> out;
    for (std::string_view item : array_items(v)) out.push_back(as_double(item));
    return out;
  }

  std::vector<int> as_int_array(std::string_view v) const {
    std::vector<int> out;
    for (std::string_view item : array_items(v)) out.push_back(as_int(item));
    return out;
  }

  void road_key(std::string_view key, std::string_view v) {
    if (key == "length") cfg.road.length = as_double(v);
    else if (key == "lane_offsets") cfg.road.lane_offsets = as_double_array(v);
    else if (key == "lane_directions") cfg.road.lane_directions = as_int_array(v);
    else if (key == "speed_min") cfg.road.speed_min = as_double(v);
    else if (key == "speed_max") cfg.road.speed_max = as_double(v);
    else fail("unknown key '" + std::string(key) + "' in [road]");
  }

  void infra_key(std::string_view key, std::string_view v) {
    if (key == "x") cfg.infra.x = as_double(v);
    else if (key == "y") cfg.infra.y = as_double(v);
    else if (key == "coverage_radius") cfg.infra.coverage_radius = as_double(v);
    else fail("unknown key '" + std::string(key) + "' in [infrastructure]");
  }

  void radio_key(RadioProfile& p, std::string_view key, std::string_view v) {
    if (key == "f_db") p.f_db = as_double(v);
    else if (key == "d0") p.d0_m = as_double(v);
    else if (key == "alpha") p.alpha = as_double(v);
    else if (key == "tx_power") p.tx_power_w = as_double(v);
    else if (key == "noise_power") p.noise_power_w = as_double(v);
    else if (key == "rb_pool") p.rb_pool = as_int(v);
    else if (key == "d_min") p.d_min_m = as_double(v);
    else fail("unknown key '" + std::string(key) + "' in [" + section + "]");
  }

  void experiment_key(std::string_view key, std::string_view v) {
    if (key == "t0") cfg.t0 = as_double(v);
    else if (key == "horizon") cfg.horizon = as_double(v);
    else if (key == "steps") cfg.steps = as_int(v);
    else if (key == "n_values") cfg.n_values = as_int_array(v);
    else if (key == "seeds_per_point") cfg.seeds_per_point = as_int(v);
    else if (key == "master_seed") cfg.master_seed = as_u64(v);
    else if (key == "output") cfg.output_path = as_string(v);
    else if (key == "schemes") {
      cfg.schemes.clear();
      for (std::string_view item : array_items(v)) {
        try {
          cfg.schemes.push_back(scheme_from_name(as_string(item)));
        } catch (const Error& e) {
          fail(e.what());
        }
      }
    } else {
      fail("unknown key '" + std::string(key) + "' in [experiment]");
    }
  }

  void key_value(std::string_view key, std::string_view v) {
    if (section == "road") road_key(key, v);
    else if (section == "infrastructure") infra_key(key, v);
    else if (section == "radio.lte") radio_key(cfg.lte, key, v);
    else if (section == "radio.dsrc") radio_key(cfg.dsrc, key, v);
    else if (section == "experiment") experiment_key(key, v);
    else if (section.empty()) fail("key '" + std::string(key) + "' outside a section");
    else fail("unknown section [" + section + "]");
  }

  void line(std::string_view raw) {
    ++line_no;
    std::string_view s = trim(strip_comment(raw));
    if (s.empty()) return;
    if (s.front() == '[') {
      if (s.back() != ']') fail("unterminated section header");
      section = std::string(trim(s.substr(1, s.size() - 2)));
      if (section != "road" && section != "infrastructure" && section != "radio.lte" &&
          section != "radio.dsrc" && section != "experiment")
        fail("unknown section [" + section + "]");
      return;
    }
    size_t eq = s.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    std::string_view key = trim(s.substr(0, eq));
    std::string_view value = trim(s.substr(eq + 1));
    if (key.empty()) fail("empty key");
    if (value.empty()) fail("empty value for key '" + std::string(key) + "'");
    key_value(key, value);
  }
};

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  Parser parser;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    parser.line(text.substr(start, end - start));
    start = end + 1;
  }
  validate_config(parser.cfg);
  return parser.cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_io("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw_io("cannot read config file '" + path + "'");
  return parse_config(buf.str());
}

void validate_config(const ExperimentConfig& cfg) {
  if (!(cfg.road.length > 0.0)) throw_config("road: length must be positive");
  if (cfg.road.lane_offsets.empty()) throw_config("road: need at least one lane");
  if (cfg.road.lane_directions.size() != cfg.road.lane_offsets.size())
    throw_config("road: lane_offsets and lane_directions must have equal length");
  for (int d : cfg.road.lane_directions)
    if (d != 1 && d != -1) throw_config("road: lane directions must be 1 or -1");
  if (!(cfg.road.speed_min >= 0.0) || !(cfg.road.speed_max >= cfg.road.speed_min))
    throw_config("road: need 0 <= speed_min <= speed_max");
  try {
    validate_infrastructure(cfg.infra);
    validate_profile(cfg.lte);
    validate_profile(cfg.dsrc);
  } catch (const Error& e) {
    throw_config(e.what());
  }
  if (!(cfg.horizon > 0.0)) throw_config("experiment: horizon must be positive");
  if (cfg.steps < 1) throw_config("experiment: steps must be at least 1");
  if (!std::isfinite(cfg.t0)) throw_config("experiment: t0 must be finite");
  if (cfg.n_values.empty()) throw_config("experiment: n_values must not be empty");
  for (int n : cfg.n_values)
    if (n < 1) throw_config("experiment: every n must be at least 1");
  if (cfg.seeds_per_point < 1)
    throw_config("experiment: seeds_per_point must be at least 1");
  if (cfg.schemes.empty()) throw_config("experiment: schemes must not be empty");
  std::set<Scheme> unique(cfg.schemes.begin(), cfg.schemes.end());
  if (unique.size() != cfg.schemes.size())
    throw_config("experiment: duplicate scheme in schemes");
}

}  // namespace hetvenet
