#include <doctest.h>

#include <cmath>

#include "../oracle_values.hpp"
#include "apeuler/benchmarks.hpp"
#include "apeuler/conservative.hpp"
#include "apeuler/errors.hpp"
#include "apeuler/integrator.hpp"
#include "helpers.hpp"

using namespace apeuler;
using testing_support::square;

TEST_CASE("time step rule") {
  GridSpec g = square(10);  // dx = dy = 0.1
  SolverConfig cfg;
  PrimitiveField V(g, 1.0);
  // rho = rho_max gives c~ = 0 when the eps^4 shift is absent.
  const SplitScalars s{1.0, 0.0};
  V.u().fill(2.0);
  V.v().fill(-4.0);
  CHECK(compute_dt(V, s, g, cfg) == doctest::Approx(oracle::kDtExample).epsilon(1e-14));
  V.u().fill(0.0);
  V.v().fill(0.0);
  CHECK(compute_dt(V, s, g, cfg) == doctest::Approx(cfg.k_cfl * 0.1 / cfg.delta));
}

TEST_CASE("switching function") {
  SolverConfig cfg;
  CHECK(switching_function(1.0, cfg) == 0.0);
  CHECK(switching_function(0.15, cfg) == doctest::Approx(oracle::kSwitchEps015).epsilon(1e-15));
  CHECK(switching_function(0.5, cfg) == doctest::Approx(oracle::kSwitchEps05).epsilon(1e-13));
  CHECK(switching_function(0.25, cfg) == doctest::Approx(oracle::kSwitchEps025).epsilon(1e-13));
  // Continuity at both junctions and monotone decrease.
  CHECK(switching_function(0.15 + 1e-12, cfg) == doctest::Approx(switching_function(0.15, cfg)).epsilon(1e-9));
  CHECK(switching_function(0.4 - 1e-9, cfg) == doctest::Approx(switching_function(0.4, cfg)).epsilon(1e-6));
  double prev = 2.0;
  for (double e = 0.01; e <= 1.0; e += 0.01) {
    const double s = switching_function(e, cfg);
    CHECK(s <= prev);
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
    prev = s;
  }
  CHECK(1.0 - switching_function(1e-6, cfg) < 1e-80);
}

TEST_CASE("post-processing") {
  GridSpec g = square(6);
  SolverConfig cfg;
  const PrimitiveField Vr = testing_support::random_state(g, 4);
  PrimitiveField other = testing_support::random_state(g, 5);
  cfg.epsilon = 1.0;
  const ConservativeField U = prim_to_cons(other, g, cfg);
  const PrimitiveField at1 = post_process(Vr, U, g, cfg);
  const PrimitiveField ref = cons_to_prim(U, g, cfg);
  for (int m = 0; m < 4; ++m) CHECK(testing_support::max_interior_diff(at1[m], ref[m], g) == 0.0);

  cfg.epsilon = 1e-6;
  const PrimitiveField low = post_process(Vr, prim_to_cons(other, g, cfg), g, cfg);
  for (int m = 0; m < 4; ++m) CHECK(testing_support::max_interior_diff(low[m], Vr[m], g) == 0.0);

  for (double eps : {0.2, 0.3, 0.9}) {
    cfg.epsilon = eps;
    const PrimitiveField same = post_process(Vr, prim_to_cons(Vr, g, cfg), g, cfg);
    for (int m = 0; m < 4; ++m) CHECK(testing_support::max_interior_diff(same[m], Vr[m], g) < 1e-13);
  }
}

TEST_CASE("post-processing checks the blend, not the conservative branch alone") {
  GridSpec g = square(4);
  SolverConfig cfg;
  cfg.epsilon = 0.1;  // 1 - s = 1e-14
  PrimitiveField Vr(g, 1.0);
  ConservativeField U = prim_to_cons(Vr, g, cfg);
  U[3](1, 2) = -1.0;  // negative pressure in the conservative branch
  const PrimitiveField out = post_process(Vr, U, g, cfg);
  CHECK(out.p()(1, 2) > 0.0);
  CHECK(out.p()(1, 2) == doctest::Approx(1.0).epsilon(1e-12));
  U[0](1, 2) = 0.0;
  CHECK_THROWS_AS(post_process(Vr, U, g, cfg), NonPhysicalState);
  // At eps = 1 the conservative branch is the solution and must be valid on its own.
  cfg.epsilon = 1.0;
  ConservativeField bad = prim_to_cons(Vr, g, cfg);
  bad[3](0, 0) = -1.0;
  CHECK_THROWS_AS(post_process(Vr, bad, g, cfg), NonPhysicalState);
}

TEST_CASE("resting uniform state is a fixed point") {
  GridSpec g = square(16);
  for (int order : {1, 2}) {
    for (double eps : {1.0, 0.3, 1e-3}) {
      SolverConfig cfg;
      cfg.epsilon = eps;
      cfg.order = order;
      PrimitiveField V(g, 1.0);
      V.u().fill(0.0);
      V.v().fill(0.0);
      DualState st = make_dual_state(V, g, cfg);
      const ConservativeField U0 = st.U;
      for (int i = 0; i < 3; ++i) si_dec_step(st, g, cfg, 0.01);
      for (int m = 0; m < 4; ++m) {
        CHECK(testing_support::max_interior_diff(st.V[m], V[m], g) <= 1e-13);
        CHECK(testing_support::max_interior_diff(st.U[m], U0[m], g) <= 1e-13);
      }
      CHECK(st.t == doctest::Approx(0.03));
    }
  }
}

TEST_CASE("at eps = 1 the branches agree after a step") {
  const BenchmarkCase& c = find_case("vortex");
  const GridSpec g = case_grid(c, 32, 32, 1.0);
  SolverConfig cfg = case_config(c, 1.0);
  DualState st = make_dual_state(initial_state(c, g, 1.0), g, cfg);
  si_dec_step(st, g, cfg, 0.05);
  const PrimitiveField ref = cons_to_prim(st.U, g, cfg);
  for (int m = 0; m < 4; ++m) CHECK(testing_support::max_interior_diff(st.V[m], ref[m], g) == 0.0);
}

TEST_CASE("run clips the last step and fires snapshots") {
  const BenchmarkCase& c = find_case("gresho");
  const GridSpec g = case_grid(c, 16, 16, 0.1);
  SolverConfig cfg = case_config(c, 0.1);
  DualState st = make_dual_state(initial_state(c, g, 0.1), g, cfg);
  RunOptions ro;
  ro.t_final = 0.05;
  ro.snapshot_times = {0.0, 0.0123};
  std::vector<double> seen;
  ro.on_snapshot = [&](const DualState& s, const StepReport*) { seen.push_back(s.t); };
  const RunReport rr = run(st, g, cfg, ro);
  CHECK(rr.status == RunStatus::Completed);
  CHECK(st.t == 0.05);
  REQUIRE(seen.size() == 2);
  CHECK(seen[0] == 0.0);
  CHECK(seen[1] == doctest::Approx(0.0123).epsilon(1e-12));
  CHECK(rr.residual_contract);
  for (const auto& h : rr.history) CHECK(h.dt > 0.0);

  DualState same = make_dual_state(initial_state(c, g, 0.1), g, cfg);
  RunOptions none;
  none.t_final = 0.0;
  CHECK(run(same, g, cfg, none).steps == 0);
}

TEST_CASE("dt override is honoured for its steps") {
  const BenchmarkCase& c = find_case("explosion");
  const GridSpec g = case_grid(c, 20, 20, 0.3);
  SolverConfig cfg = case_config(c, 0.3);
  REQUIRE(cfg.dt_override.active());
  DualState st = make_dual_state(initial_state(c, g, 0.3), g, cfg);
  RunOptions ro;
  ro.t_final = 1.0;
  ro.max_steps = 12;
  const RunReport rr = run(st, g, cfg, ro);
  REQUIRE(rr.history.size() == 12);
  for (int i = 0; i < 10; ++i) CHECK(rr.history[i].dt == 1e-4);
  CHECK(rr.history[10].dt != 1e-4);
}

TEST_CASE("order one takes a single stage") {
  const BenchmarkCase& c = find_case("gresho");
  const GridSpec g = case_grid(c, 16, 16, 0.01);
  SolverConfig cfg = case_config(c, 0.01);
  cfg.order = 1;
  DualState st = make_dual_state(initial_state(c, g, 0.01), g, cfg);
  const StepReport r = si_dec_step(st, g, cfg, 0.005);
  CHECK(r.stage1.iterations > 0);
  CHECK(r.stage2.iterations == 0);
}

TEST_CASE("failed step leaves the state untouched") {
  const BenchmarkCase& c = find_case("explosion");
  const GridSpec g = case_grid(c, 16, 16, 1.0);
  SolverConfig cfg = case_config(c, 1.0);
  DualState st = make_dual_state(initial_state(c, g, 1.0), g, cfg);
  const PrimitiveField before = st.V;
  RunOptions ro;
  ro.t_final = 10.0;
  cfg.dt_override = {1, 5.0};  // far beyond any stable step
  const RunReport rr = run(st, g, cfg, ro);
  CHECK(rr.status != RunStatus::Completed);
  CHECK(st.t == 0.0);
  for (int m = 0; m < 4; ++m) CHECK(testing_support::max_interior_diff(st.V[m], before[m], g) == 0.0);
}
