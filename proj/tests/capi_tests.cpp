#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include <hetvenet.h>

namespace fs = std::filesystem;

TEST_CASE("default config and accessors") {
  hvn_config* cfg = nullptr;
  REQUIRE(hvn_config_default(&cfg) == HVN_OK);
  REQUIRE(cfg != nullptr);

  double horizon = 0.0;
  CHECK(hvn_config_horizon(cfg, &horizon) == HVN_OK);
  CHECK(horizon == 5.0);

  char* path = nullptr;
  REQUIRE(hvn_config_output_path(cfg, &path) == HVN_OK);
  CHECK(std::string(path) == "results.csv");
  hvn_string_free(path);

  CHECK(hvn_config_set_master_seed(cfg, 99) == HVN_OK);
  CHECK(hvn_config_set_output_path(cfg, "") == HVN_OK);
  char* cleared = nullptr;
  REQUIRE(hvn_config_output_path(cfg, &cleared) == HVN_OK);
  CHECK(std::string(cleared).empty());
  hvn_string_free(cleared);

  hvn_config_free(cfg);
}

TEST_CASE("null arguments are rejected with messages") {
  CHECK(hvn_config_default(nullptr) == HVN_ERR_INVALID);
  CHECK(std::string(hvn_last_error()).size() > 0);

  hvn_config* cfg = nullptr;
  REQUIRE(hvn_config_default(&cfg) == HVN_OK);
  CHECK(std::string(hvn_last_error()).empty());

  CHECK(hvn_scenario_generate(nullptr, 5, 1, nullptr) == HVN_ERR_INVALID);
  CHECK(hvn_analysis_compute(cfg, nullptr, nullptr) == HVN_ERR_INVALID);
  // freeing NULL must be safe
  hvn_run_free(nullptr);
  hvn_scenario_free(nullptr);
  hvn_analysis_free(nullptr);
  hvn_records_free(nullptr);
  hvn_config_free(nullptr);
  hvn_string_free(nullptr);
  hvn_config_free(cfg);
}

TEST_CASE("config parse and load errors carry the right codes") {
  hvn_config* cfg = nullptr;
  CHECK(hvn_config_parse("[road]\nbogus = 1\n", &cfg) == HVN_ERR_CONFIG);
  CHECK(cfg == nullptr);
  CHECK(std::string(hvn_last_error()).find("bogus") != std::string::npos);
  CHECK(hvn_config_load("/no/such/file.toml", &cfg) == HVN_ERR_IO);
  CHECK(cfg == nullptr);

  REQUIRE(hvn_config_parse("[experiment]\nhorizon = 2.0\n", &cfg) == HVN_OK);
  double h = 0.0;
  CHECK(hvn_config_horizon(cfg, &h) == HVN_OK);
  CHECK(h == 2.0);
  hvn_config_free(cfg);
}

TEST_CASE("scenarios and analyses through the C interface") {
  hvn_config* cfg = nullptr;
  REQUIRE(hvn_config_default(&cfg) == HVN_OK);

  hvn_scenario* sc = nullptr;
  REQUIRE(hvn_scenario_generate(cfg, 8, 42, &sc) == HVN_OK);
  int count = 0;
  CHECK(hvn_scenario_count(sc, &count) == HVN_OK);
  CHECK(count == 8);

  int id = 0;
  double x = 0.0, y = 0.0, v = 0.0;
  REQUIRE(hvn_scenario_vehicle(sc, 0, &id, &x, &y, &v) == HVN_OK);
  CHECK(id == 1);
  CHECK(std::fabs(x) <= 1500.0);
  CHECK((y == 0.0 || y == 4.0));
  CHECK(std::fabs(v) >= 5.0);
  CHECK(hvn_scenario_vehicle(sc, 8, &id, &x, &y, &v) == HVN_ERR_INVALID);
  CHECK(hvn_scenario_vehicle(sc, -1, &id, &x, &y, &v) == HVN_ERR_INVALID);

  // same seed reproduces the same vehicles
  hvn_scenario* sc2 = nullptr;
  REQUIRE(hvn_scenario_generate(cfg, 8, 42, &sc2) == HVN_OK);
  for (int i = 0; i < 8; ++i) {
    int id2;
    double x2, y2, v2;
    REQUIRE(hvn_scenario_vehicle(sc, i, &id, &x, &y, &v) == HVN_OK);
    REQUIRE(hvn_scenario_vehicle(sc2, i, &id2, &x2, &y2, &v2) == HVN_OK);
    CHECK(id == id2);
    CHECK(x == x2);
    CHECK(y == y2);
    CHECK(v == v2);
  }
  hvn_scenario_free(sc2);

  hvn_analysis* an = nullptr;
  REQUIRE(hvn_analysis_compute(cfg, sc, &an) == HVN_OK);

  fs::path dir = fs::temp_directory_path() / "hvn_capi_test";
  fs::create_directories(dir);
  fs::path dump = dir / "tables.csv";
  CHECK(hvn_analysis_dump_csv(an, dump.string().c_str()) == HVN_OK);
  CHECK(fs::exists(dump));
  CHECK(hvn_analysis_dump_csv(an, (dir / "no" / "x.csv").string().c_str()) ==
        HVN_ERR_IO);
  fs::remove_all(dir);

  hvn_analysis_free(an);
  hvn_scenario_free(sc);
  hvn_config_free(cfg);
}

TEST_CASE("scheduling through the C interface") {
  hvn_config* cfg = nullptr;
  REQUIRE(hvn_config_default(&cfg) == HVN_OK);
  hvn_scenario* sc = nullptr;
  REQUIRE(hvn_scenario_generate(cfg, 10, 7, &sc) == HVN_OK);
  hvn_analysis* an = nullptr;
  REQUIRE(hvn_analysis_compute(cfg, sc, &an) == HVN_OK);

  double bottleneck_ms = -1.0, bottleneck_nr = -1.0;
  for (int scheme = 0; scheme < HVN_SCHEME_COUNT; ++scheme) {
    hvn_run* run = nullptr;
    REQUIRE(hvn_schedule_run(cfg, an, scheme, 7, &run) == HVN_OK);

    int got_scheme = -1, nf = -1, n = 0;
    CHECK(hvn_run_scheme(run, &got_scheme) == HVN_OK);
    CHECK(got_scheme == scheme);
    REQUIRE(hvn_run_nf(run, &nf) == HVN_OK);
    REQUIRE(hvn_run_vehicle_count(run, &n) == HVN_OK);
    CHECK(n == 10);
    CHECK(nf >= 0);
    CHECK(nf <= 5);

    for (int i = 0; i < nf; ++i) {
      int relay = 0, fv = 0;
      REQUIRE(hvn_run_pair(run, i, &relay, &fv) == HVN_OK);
      CHECK(relay >= 1);
      CHECK(relay <= 10);
      CHECK(fv >= 1);
      CHECK(fv <= 10);
      CHECK(relay != fv);
    }
    int relay = 0, fv = 0;
    CHECK(hvn_run_pair(run, nf, &relay, &fv) == HVN_ERR_INVALID);

    double m = -1.0, total = -1.0, thr = -1.0, min_rate = -1.0, jain = -1.0;
    CHECK(hvn_run_bottleneck(run, &m) == HVN_OK);
    CHECK(hvn_run_total_service(run, &total) == HVN_OK);
    CHECK(hvn_run_total_fv_throughput(run, &thr) == HVN_OK);
    CHECK(hvn_run_min_rate(run, &min_rate) == HVN_OK);
    CHECK(hvn_run_jain(run, &jain) == HVN_OK);
    CHECK(m >= 0.0);
    CHECK(total >= m);
    CHECK(thr >= 0.0);
    CHECK(min_rate >= 0.0);
    CHECK(jain >= 1.0 / 10 - 1e-9);
    CHECK(jain <= 1.0 + 1e-9);

    double rate0 = -1.0;
    CHECK(hvn_run_vehicle_rate(run, 0, &rate0) == HVN_OK);
    CHECK(rate0 >= 0.0);
    CHECK(hvn_run_vehicle_rate(run, 10, &rate0) == HVN_ERR_INVALID);

    if (scheme == HVN_SCHEME_MS_MAXMIN) bottleneck_ms = m;
    if (scheme == HVN_SCHEME_NO_RELAY) bottleneck_nr = m;
    hvn_run_free(run);
  }
  CHECK(bottleneck_ms >= bottleneck_nr);

  // the random scheme reproduces for a given seed
  hvn_run* r1 = nullptr;
  hvn_run* r2 = nullptr;
  REQUIRE(hvn_schedule_run(cfg, an, HVN_SCHEME_RANDOM, 31337, &r1) == HVN_OK);
  REQUIRE(hvn_schedule_run(cfg, an, HVN_SCHEME_RANDOM, 31337, &r2) == HVN_OK);
  int nf1 = -1, nf2 = -2;
  CHECK(hvn_run_nf(r1, &nf1) == HVN_OK);
  CHECK(hvn_run_nf(r2, &nf2) == HVN_OK);
  CHECK(nf1 == nf2);
  for (int i = 0; i < nf1; ++i) {
    int a1, b1, a2, b2;
    REQUIRE(hvn_run_pair(r1, i, &a1, &b1) == HVN_OK);
    REQUIRE(hvn_run_pair(r2, i, &a2, &b2) == HVN_OK);
    CHECK(a1 == a2);
    CHECK(b1 == b2);
  }
  hvn_run_free(r1);
  hvn_run_free(r2);

  CHECK(hvn_schedule_run(cfg, an, 17, 0, &r1) == HVN_ERR_INVALID);

  hvn_analysis_free(an);
  hvn_scenario_free(sc);
  hvn_config_free(cfg);
}

TEST_CASE("experiment sweep, csv, and summary through the C interface") {
  hvn_config* cfg = nullptr;
  REQUIRE(hvn_config_parse(
              "[experiment]\nn_values = [5]\nseeds_per_point = 2\noutput = \"\"\n",
              &cfg) == HVN_OK);

  hvn_records* recs = nullptr;
  REQUIRE(hvn_experiment_run(cfg, &recs) == HVN_OK);
  int count = 0;
  CHECK(hvn_records_count(recs, &count) == HVN_OK);
  CHECK(count == 2 * 6);

  fs::path dir = fs::temp_directory_path() / "hvn_capi_sweep";
  fs::create_directories(dir);
  fs::path file = dir / "out.csv";
  REQUIRE(hvn_records_write_csv(recs, file.string().c_str()) == HVN_OK);
  std::ifstream in(file);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header.rfind("n,seed,scheme,", 0) == 0);
  in.close();
  CHECK(hvn_records_write_csv(recs, (dir / "no" / "x.csv").string().c_str()) ==
        HVN_ERR_IO);
  fs::remove_all(dir);

  char* summary = nullptr;
  REQUIRE(hvn_records_summary(recs, &summary) == HVN_OK);
  CHECK(std::string(summary).find("MS_MAXMIN") != std::string::npos);
  hvn_string_free(summary);

  hvn_records_free(recs);
  hvn_config_free(cfg);
}

TEST_CASE("oracle report through the C interface") {
  hvn_config* cfg = nullptr;
  REQUIRE(hvn_config_default(&cfg) == HVN_OK);
  char* out = nullptr;
  REQUIRE(hvn_oracle_report(cfg, 4, 5, &out) == HVN_OK);
  CHECK(std::string(out).find("max-min oracle") != std::string::npos);
  hvn_string_free(out);
  out = nullptr;
  CHECK(hvn_oracle_report(cfg, 9, 5, &out) == HVN_ERR_CONFIG);
  CHECK(out == nullptr);
  hvn_config_free(cfg);
}

TEST_CASE("scheme names map both ways") {
  CHECK(std::string(hvn_scheme_name(HVN_SCHEME_RANDOM)) == "RANDOM");
  CHECK(std::string(hvn_scheme_name(HVN_SCHEME_MS_MAXMIN)) == "MS_MAXMIN");
  CHECK(hvn_scheme_name(-1) == nullptr);
  CHECK(hvn_scheme_name(6) == nullptr);
  int s = -1;
  CHECK(hvn_scheme_from_name("no_relay", &s) == HVN_OK);
  CHECK(s == HVN_SCHEME_NO_RELAY);
  CHECK(hvn_scheme_from_name("AR_MAXSUM", &s) == HVN_OK);
  CHECK(s == HVN_SCHEME_AR_MAXSUM);
  CHECK(hvn_scheme_from_name("NOPE", &s) == HVN_ERR_INVALID);
  CHECK(hvn_scheme_from_name(nullptr, &s) == HVN_ERR_INVALID);
}
