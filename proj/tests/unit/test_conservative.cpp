#include <doctest.h>

#include <cmath>

#include "../oracle_values.hpp"
#include "apeuler/conservative.hpp"
#include "apeuler/errors.hpp"
#include "helpers.hpp"

using namespace apeuler;
using testing_support::square;

TEST_CASE("conservative flux") {
  SolverConfig cfg;
  cfg.gamma = 1.4;
  cfg.epsilon = 1.0;
  CHECK(conservative_flux({1, 0, 0, 1}, cfg, Axis::X) == State4{0, 1, 0, 0});
  const State4 f = conservative_flux({1, 2, 1, 1}, cfg, Axis::X);
  CHECK(f[0] == doctest::Approx(oracle::kConsFluxEps1_0));
  CHECK(f[1] == doctest::Approx(oracle::kConsFluxEps1_1).epsilon(1e-15));
  CHECK(f[2] == doctest::Approx(oracle::kConsFluxEps1_2));
  CHECK(f[3] == doctest::Approx(oracle::kConsFluxEps1_3).epsilon(1e-15));
  cfg.epsilon = 0.5;
  const State4 h = conservative_flux({1, 2, 1, 1}, cfg, Axis::X);
  CHECK(h[1] == doctest::Approx(oracle::kConsFluxEps05_1).epsilon(1e-15));
  CHECK(h[3] == doctest::Approx(oracle::kConsFluxEps05_3).epsilon(1e-15));
  const State4 gy = conservative_flux({1, 2, 1, 1}, cfg, Axis::Y);
  CHECK(gy[0] == 1.0);
  CHECK(gy[2] == doctest::Approx(1.0 + 4.0).epsilon(1e-15));
  CHECK_THROWS_AS(conservative_flux({1, 0, 0, -1}, cfg, Axis::X), NonPhysicalState);
}

TEST_CASE("conservative speeds scale with 1/eps") {
  GridSpec g = square(4);
  SolverConfig cfg;
  cfg.gamma = 1.0;
  PrimitiveField V(g, 1.0);
  V.u().fill(0.0);
  V.v().fill(0.0);
  for (double eps : {1.0, 0.1}) {
    cfg.epsilon = eps;
    const ConsInterfaceSpeeds sp = conservative_speeds(reconstruct(V, g, 1.3), cfg);
    CHECK(sp.a_minus(1, 1) == doctest::Approx(-1.0 / eps).epsilon(1e-14));
    CHECK(sp.a_plus(1, 1) == doctest::Approx(1.0 / eps).epsilon(1e-14));
    CHECK(sp.b_plus(2, 0) == doctest::Approx(1.0 / eps).epsilon(1e-14));
  }
  CHECK(sound_speed(1, 1, 0.1, 1.0) == doctest::Approx(oracle::kSoundSpeedEps01));
  const SpeedPair s = one_sided_speeds(5, 1, 5, 1, 1e-15);
  CHECK(s.minus == -1e-15);
  CHECK(s.plus == 6.0);
}

TEST_CASE("conservative CU flux consistency") {
  GridSpec g = square(6);
  SolverConfig cfg;
  cfg.epsilon = 0.4;
  const PrimitiveField V = testing_support::sample4(g, [](double, double) { return State4{1.2, 0.3, -0.5, 0.8}; });
  const InterfaceValues iv = reconstruct(V, g, 1.3);
  const ConservativeFluxes fl = cu_flux_conservative(iv, conservative_speeds(iv, cfg), cfg);
  const State4 exact = conservative_flux({1.2, 0.3, -0.5, 0.8}, cfg, Axis::X);
  for (int m = 0; m < 4; ++m) CHECK(fl.x[m](3, 2) == doctest::Approx(exact[m]).epsilon(1e-14));
  const OperatorField rhs = assemble_conservative_rhs(V, g, cfg);
  for (int m = 0; m < 4; ++m) CHECK(testing_support::max_interior_diff(rhs[m], ScalarField(g), g) < 1e-13);
}

TEST_CASE("periodic right-hand side telescopes") {
  GridSpec g = square(24);
  SolverConfig cfg;
  cfg.epsilon = 0.3;
  const PrimitiveField V = testing_support::random_state(g, 17);
  const OperatorField rhs = assemble_conservative_rhs(V, g, cfg);
  const ConservativeField U = prim_to_cons(V, g, cfg);
  for (int m = 0; m < 4; ++m) {
    double s = 0.0, scale = 0.0;
    for (int k = 0; k < g.ny; ++k) {
      for (int j = 0; j < g.nx; ++j) {
        s += rhs[m](j, k);
        scale += std::abs(rhs[m](j, k));
      }
    }
    CHECK(std::abs(s) <= 1e-12 * scale);
    (void)U;
  }
}

TEST_CASE("conservative anti-diffusion stays within the jump") {
  GridSpec g = square(16);
  SolverConfig cfg;
  cfg.epsilon = 0.7;
  const PrimitiveField V = testing_support::random_state(g, 2);
  const InterfaceValues iv = reconstruct(V, g, 1.3);
  const ConsInterfaceSpeeds sp = conservative_speeds(iv, cfg);
  for (int k = 0; k < g.ny; ++k) {
    for (int i = 0; i <= g.nx; ++i) {
      const State4 um = prim_to_cons(iv.xm(i, k), cfg.epsilon, cfg.gamma);
      const State4 up = prim_to_cons(iv.xp(i, k), cfg.epsilon, cfg.gamma);
      const State4 d =
          antidiffusion(um, up, conservative_flux(iv.xm(i, k), cfg, Axis::X),
                        conservative_flux(iv.xp(i, k), cfg, Axis::X), sp.a_minus(i, k), sp.a_plus(i, k));
      for (int m = 0; m < 4; ++m) {
        CHECK(d[m] * (up[m] - um[m]) >= 0.0);
        CHECK(std::abs(d[m]) <= std::abs(up[m] - um[m]) + 1e-13);
      }
    }
  }
}

namespace {

// -div of the physical flux for a smooth isentropic-like field.
State4 analytic_rhs(double x, double y, double eps, double gamma) {
  const double h = 1e-5;
  SolverConfig cfg;
  cfg.epsilon = eps;
  cfg.gamma = gamma;
  auto F = [&](double a, double b) { return conservative_flux(testing_support::smooth_state(a, b), cfg, Axis::X); };
  auto G = [&](double a, double b) { return conservative_flux(testing_support::smooth_state(a, b), cfg, Axis::Y); };
  State4 out{};
  // Fourth-order central differences of the exact fluxes.
  for (int m = 0; m < 4; ++m) {
    const double fx = (-F(x + 2 * h, y)[m] + 8 * F(x + h, y)[m] - 8 * F(x - h, y)[m] + F(x - 2 * h, y)[m]) / (12 * h);
    const double gy = (-G(x, y + 2 * h)[m] + 8 * G(x, y + h)[m] - 8 * G(x, y - h)[m] + G(x, y - 2 * h)[m]) / (12 * h);
    out[m] = -(fx + gy);
  }
  return out;
}

}  // namespace

TEST_CASE("conservative right-hand side is second-order accurate") {
  SolverConfig cfg;
  cfg.epsilon = 1.0;
  std::array<double, 4> prev{};
  for (int n : {32, 64, 128}) {
    GridSpec g = square(n);
    // Compare against cell averages of the exact derivative through midpoint sampling.
    const PrimitiveField V = testing_support::sample4(g, testing_support::smooth_state);
    const OperatorField rhs = assemble_conservative_rhs(V, g, cfg);
    std::array<double, 4> err{};
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        const State4 a = analytic_rhs(g.xc(j), g.yc(k), cfg.epsilon, cfg.gamma);
        for (int m = 0; m < 4; ++m) err[m] += std::abs(rhs[m](j, k) - a[m]) * g.cell_area();
      }
    }
    if (prev[0] > 0.0) {
      for (int m = 0; m < 4; ++m) {
        INFO("component " << m << " n " << n);
        CHECK(prev[m] / err[m] >= 3.2);
        CHECK(prev[m] / err[m] <= 4.8);
      }
    }
    prev = err;
  }
}
