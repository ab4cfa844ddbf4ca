#include <doctest.h>

#include <sstream>

#include "apeuler/benchmarks.hpp"
#include "apeuler/cli_support.hpp"
#include "apeuler/errors.hpp"
#include "apeuler/snapshot.hpp"

using namespace apeuler;

namespace {

Snapshot sample_snapshot(DtOverride ov = {}) {
  const BenchmarkCase& c = find_case("vortex");
  const GridSpec g = case_grid(c, 6, 4, 0.3);
  SolverConfig cfg = case_config(c, 0.3);
  cfg.dt_override = ov;
  const DualState st = make_dual_state(initial_state(c, g, 0.3), g, cfg, 0.1 / 3.0);
  return make_snapshot(st, g, cfg);
}

}  // namespace

TEST_CASE("snapshot layout") {
  const Snapshot s = sample_snapshot();
  REQUIRE(s.rows.size() == 24);
  CHECK(s.rows[0].j == 0);
  CHECK(s.rows[1].j == 1);
  CHECK(s.rows[6].k == 1);
  CHECK(s.rows[6].j == 0);
  const std::string text = snapshot_to_string(s);
  CHECK(text.find("j,k,x,y,rho,u,v,p,rho_cons,mx,my,E,mach,vorticity") != std::string::npos);
  CHECK(text.find("0.033333333333333333") != std::string::npos);
  CHECK(text.find("dt_override") == std::string::npos);
  // Conservative density matches the primitive one at construction.
  CHECK(s.rows[5].values[2] == s.rows[5].values[6]);
}

TEST_CASE("snapshot round trip is byte identical") {
  for (DtOverride ov : {DtOverride{}, DtOverride{10, 1e-4}}) {
    const Snapshot s = sample_snapshot(ov);
    const std::string a = snapshot_to_string(s);
    const Snapshot back = parse_snapshot(a);
    CHECK(snapshot_to_string(back) == a);
    CHECK(back.time == s.time);
    CHECK(back.nx == 6);
    CHECK(back.ny == 4);
    CHECK(back.dt_override.steps == ov.steps);
    CHECK(back.dt_override.value == ov.value);
    for (std::size_t i = 0; i < s.rows.size(); ++i)
      for (int m = 0; m < Snapshot::kValues; ++m) CHECK(back.rows[i].values[m] == s.rows[i].values[m]);
  }
  CHECK_THROWS(parse_snapshot(std::string("# time = x\n")));
}

TEST_CASE("config file parsing") {
  const auto kv = cli::parse_config_text("# comment\ncase = gresho\n\neps=0.1  # trailing\nn_list = 16,32\n");
  REQUIRE(kv.size() == 3);
  CHECK(kv[0].first == "case");
  CHECK(kv[1].second == "0.1");
  const auto args = cli::config_to_args(kv);
  REQUIRE(args.size() == 6);
  CHECK(args[0] == "--case");
  CHECK(args[4] == "--n-list");
  CHECK(cli::config_to_args({{"jacobi", "true"}, {"other", "false"}}) == std::vector<std::string>{"--jacobi"});
  CHECK_THROWS_AS(cli::parse_config_text("no equals sign\n"), ConfigError);
}

TEST_CASE("value parsers and exit codes") {
  const DtOverride d = cli::parse_dt_override("10:1e-4");
  CHECK(d.steps == 10);
  CHECK(d.value == 1e-4);
  CHECK_THROWS_AS(cli::parse_dt_override("10"), ConfigError);
  CHECK_THROWS_AS(cli::parse_dt_override("a:1"), ConfigError);
  CHECK(cli::parse_double_list("1,0.1,1e-2") == std::vector<double>{1.0, 0.1, 1e-2});
  CHECK(cli::parse_int_list("16, 32") == std::vector<int>{16, 32});
  CHECK_THROWS_AS(cli::parse_int_list("16,x"), ConfigError);
  CHECK(cli::exit_code_for(RunStatus::Completed) == 0);
  CHECK(cli::exit_code_for(RunStatus::NonPhysical) == 2);
  CHECK(cli::exit_code_for(RunStatus::NoConvergence) == 3);
}
