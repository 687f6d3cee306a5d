#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>

#include "doctest.h"
#include "nsfpen/scenario.hpp"

using namespace nsfpen;

TEST_CASE("experiment 1: piecewise initial data") {
  const Scenario sc = experiment1();
  CHECK(sc.name == "exp1");
  CHECK(sc.t_final == 0.1);
  CHECK(std::holds_alternative<NoGravity>(sc.gravity));
  CHECK(sc.outside_density_mode == OutsideDensityMode::Constant);
  REQUIRE(std::holds_alternative<Annulus>(sc.domain));
  CHECK(std::get<Annulus>(sc.domain).r_inner == 0.2);
  CHECK(std::get<Annulus>(sc.domain).r_outer == 0.7);

  const InitValue inner = sc.init(0.0, 0.0);
  CHECK(inner.rho == 1.0);
  CHECK(inner.ux == 0.0);
  CHECK(inner.uy == 0.0);
  CHECK(inner.theta == 1.0);

  // mid-band point: theta = 0.2 + 4*0.45 = 2, u = (0, -sin(pi)) = (0, 0)
  const InitValue mid = sc.init(0.45, 0.0);
  CHECK(mid.rho == 1.0);
  CHECK(mid.theta == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(mid.ux) <= 1e-14);
  CHECK(std::abs(mid.uy) <= 1e-14);

  const InitValue outer = sc.init(0.9, 0.0);
  CHECK(outer.rho == 1.0);
  CHECK(outer.ux == 0.0);
  CHECK(outer.uy == 0.0);
  CHECK(outer.theta == 3.0);
}

TEST_CASE("experiment 2: small but nonzero solid-region density") {
  const Scenario sc = experiment2();
  CHECK(sc.outside_density_mode == OutsideDensityMode::Small);
  CHECK(sc.init(0.0, 0.0).rho == 0.01);
  CHECK(sc.init(0.0, 0.0).theta == 1.0);
  CHECK(sc.init(0.9, 0.0).rho == 0.01);
  CHECK(sc.init(0.9, 0.0).theta == 3.0);
  // the fluid branch is identical to experiment 1
  const InitValue a = sc.init(0.45, 0.3);
  const InitValue b = experiment1().init(0.45, 0.3);
  CHECK(a.rho == b.rho);
  CHECK(a.ux == b.ux);
  CHECK(a.uy == b.uy);
  CHECK(a.theta == b.theta);
}

TEST_CASE("experiment 3: star domain with resting collar") {
  const Scenario sc = experiment3();
  REQUIRE(std::holds_alternative<StarAnnulus>(sc.domain));
  const StarAnnulus star = std::get<StarAnnulus>(sc.domain);
  CHECK(star.r_inner == 0.2);
  CHECK(star.r_base == 0.7);
  CHECK(star.delta == 0.05);
  CHECK(star.lobes == 8);
  CHECK(sc.outside_density_mode == OutsideDensityMode::Small);

  // along a lobe bulge the boundary reaches 0.8, so (0.73, 0) is collar
  CHECK(star_boundary_radius(star, 0.0) == doctest::Approx(0.8).epsilon(1e-14));
  const InitValue collar = sc.init(0.73, 0.0);
  CHECK(collar.rho == 1.0);
  CHECK(collar.ux == 0.0);
  CHECK(collar.uy == 0.0);
  CHECK(collar.theta == 3.0);

  // swirl band matches the other experiments
  const InitValue mid = sc.init(0.45, 0.0);
  const InitValue mid1 = experiment1().init(0.45, 0.0);
  CHECK(mid.rho == mid1.rho);
  CHECK(mid.theta == mid1.theta);

  // beyond the star boundary the density drops to 0.01
  const InitValue outside = sc.init(0.95, 0.0);
  CHECK(outside.rho == 0.01);
  CHECK(outside.theta == 3.0);

  // along the dip direction phi = pi/8 the boundary sits at 0.7, so a point
  // at radius 0.72 there is already outside
  const double phi = std::numbers::pi / 8.0;
  CHECK(star_boundary_radius(star, phi) == doctest::Approx(0.7).epsilon(1e-12));
  const InitValue dip = sc.init(0.72 * std::cos(phi), 0.72 * std::sin(phi));
  CHECK(dip.rho == 0.01);
}

TEST_CASE("experiment 4: gravity, amplified swirl, continuous temperature") {
  const Scenario sc = experiment4();
  CHECK(sc.t_final == 0.2);
  REQUIRE(std::holds_alternative<CentralPull>(sc.gravity));
  CHECK(std::get<CentralPull>(sc.gravity).magnitude == 100.0);

  CHECK(sc.init(0.0, 0.0).rho == 0.01);
  CHECK(sc.init(0.0, 0.0).theta == 30.0);
  CHECK(sc.init(0.9, 0.0).rho == 0.01);
  CHECK(sc.init(0.9, 0.0).theta == 1.0);

  // temperature is continuous at both seams: 41.6 - 58*0.2 = 30 and
  // 41.6 - 58*0.7 = 1
  CHECK(sc.init(0.2, 0.0).theta == doctest::Approx(30.0).epsilon(1e-13));
  CHECK(sc.init(0.7, 0.0).theta == doctest::Approx(1.0).epsilon(1e-12));

  // swirl amplitude 5: at radius 0.325 the band factor sin(pi/2) = 1
  const InitValue mid = sc.init(0.325, 0.0);
  CHECK(std::abs(mid.ux) <= 1e-12);
  CHECK(mid.uy == doctest::Approx(-5.0).epsilon(1e-12));
  CHECK(std::hypot(mid.ux, mid.uy) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("swirl velocity vanishes at the band's sin zeros") {
  const Scenario sc = experiment1();
  for (double r : {0.2, 0.45, 0.7}) {
    for (double phi : {0.0, 0.4, 1.3, 2.9, 4.4}) {
      const InitValue v = sc.init(r * std::cos(phi), r * std::sin(phi));
      CHECK(std::abs(v.ux) <= 1e-13);
      CHECK(std::abs(v.uy) <= 1e-13);
    }
  }
}

TEST_CASE("initial data is invariant under quarter-turn grid rotation") {
  const int n = 16;
  const TorusGrid grid = build_grid(n);
  for (const Scenario& sc : {experiment1(), experiment2(), experiment4()}) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double x = grid.center_x(i);
        const double y = grid.center_y(j);
        const InitValue v = sc.init(x, y);
        // rotating the point by +90 degrees maps cell (i,j) to (n-1-j, i)
        const InitValue w = sc.init(grid.center_x(n - 1 - j), grid.center_y(i));
        CHECK(w.rho == v.rho);
        CHECK(w.theta == v.theta);
        CHECK(w.ux == -v.uy);
        CHECK(w.uy == v.ux);
      }
    }
  }
}

TEST_CASE("scenario lookup by name") {
  CHECK(scenario_by_name("exp1").name == "exp1");
  CHECK(scenario_by_name("exp2").name == "exp2");
  CHECK(scenario_by_name("exp3").name == "exp3");
  CHECK(scenario_by_name("exp4").name == "exp4");
  CHECK_THROWS_AS(scenario_by_name("exp5"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(scenario_by_name("bogus"),
                       "unknown experiment 'bogus' (expected exp1, exp2, exp3, or exp4)",
                       std::invalid_argument);
}

TEST_CASE("extended boundary temperature samples the initial temperature") {
  const TorusGrid grid = build_grid(20);
  for (const Scenario& sc : {experiment1(), experiment4()}) {
    const ScalarField tb = build_theta_B(sc, grid);
    const SolidMask mask = build_mask(grid, sc.domain);
    int solid_seen = 0;
    for (int j = 0; j < 20; ++j) {
      for (int i = 0; i < 20; ++i) {
        const double expect = sc.init(grid.center_x(i), grid.center_y(j)).theta;
        CHECK(tb(i, j) == expect);
        if (mask.is_solid(i, j)) {
          ++solid_seen;
          CHECK(tb(i, j) > 0.0);
        }
      }
    }
    CHECK(solid_seen > 0);
  }
  // representative values: inner solid region of experiment 1 relaxes to 1,
  // outer solid region of experiment 4 relaxes to 1
  CHECK(experiment1().init(0.05, 0.05).theta == 1.0);
  CHECK(experiment4().init(0.9, 0.0).theta == 1.0);
}

TEST_CASE("projection to conserved variables is positive for all experiments") {
  const TorusGrid grid = build_grid(24);
  const GasModel gas{1.4};
  for (const char* name : {"exp1", "exp2", "exp3", "exp4"}) {
    const Scenario sc = scenario_by_name(name);
    const State s = project_initial(sc, grid, gas);
    for (std::size_t c = 0; c < s.rho.size(); ++c) {
      CHECK(s.rho.v[c] > 0.0);
      CHECK(s.rho_e.v[c] > 0.0);
      CHECK(std::isfinite(s.mom.x[c]));
      CHECK(std::isfinite(s.mom.y[c]));
    }
  }
}

TEST_CASE("projected mass: uniform density integrates to the torus area") {
  const TorusGrid grid = build_grid(160);
  const State s = project_initial(experiment1(), grid, GasModel{1.4});
  const double mass = grid.dims().cell_volume() * pairwise_sum(s.rho.v);
  CHECK(mass == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("projected mass: small outside density matches the counting oracle") {
  const TorusGrid grid = build_grid(160);
  const Scenario sc = experiment2();
  const State s = project_initial(sc, grid, GasModel{1.4});
  const SolidMask mask = build_mask(grid, sc.domain);
  const double h2 = grid.dims().cell_volume();
  const int solid = mask.solid_count();
  const int fluid = 160 * 160 - solid;
  const double expect = h2 * (0.01 * solid + 1.0 * fluid);
  const double mass = h2 * pairwise_sum(s.rho.v);
  CHECK(mass == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("projection rejects nonpositive initial data") {
  Scenario bad = experiment1();
  bad.init = [](double, double) -> InitValue { return {1.0, 0.0, 0.0, 0.0}; };
  CHECK_THROWS_AS(project_initial(bad, build_grid(4), GasModel{1.4}), std::invalid_argument);
  bad.init = [](double, double) -> InitValue { return {-1.0, 0.0, 0.0, 1.0}; };
  CHECK_THROWS_AS(project_initial(bad, build_grid(4), GasModel{1.4}), std::invalid_argument);
}
