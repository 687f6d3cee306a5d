#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "nsfpen/grid.hpp"

using namespace nsfpen;

TEST_CASE("grid geometry: cell width and centers") {
  const TorusGrid g(160);
  CHECK(g.h() == 2.0 / 160);
  CHECK(g.center_x(0) == doctest::Approx(-1.0 + 0.5 * g.h()).epsilon(1e-15));
  CHECK(g.center_y(159) == doctest::Approx(1.0 - 0.5 * g.h()).epsilon(1e-15));

  const TorusGrid g4(4);
  // centers at -0.75, -0.25, 0.25, 0.75
  CHECK(g4.center_x(0) == doctest::Approx(-0.75));
  CHECK(g4.center_x(1) == doctest::Approx(-0.25));
  CHECK(g4.center_x(2) == doctest::Approx(0.25));
  CHECK(g4.center_x(3) == doctest::Approx(0.75));
}

TEST_CASE("grid geometry: periodic wrap") {
  const TorusGrid g(8);
  CHECK(g.wrap(7, 1) == 0);
  CHECK(g.wrap(0, -1) == 7);
  CHECK(g.wrap(3, 1) == 4);
}

TEST_CASE("grid geometry: face areas and volume sum") {
  const TorusGrid g(10);
  double surface = 0.0;
  for (const auto& f : g.cell_faces()) {
    surface += f.area;
    CHECK(std::hypot(f.nx, f.ny) == doctest::Approx(1.0));
  }
  // |sigma|/|K| = 1/h per face pair: 4 faces of area h, cell volume h^2.
  CHECK(surface == doctest::Approx(4.0 * g.h()));
  CHECK(g.cell_volume() * g.cell_count() == doctest::Approx(4.0));
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(TorusGrid(1), std::invalid_argument);
  CHECK_THROWS_AS(TorusGrid(0), std::invalid_argument);
  CHECK_THROWS_AS(TorusGrid(-4), std::invalid_argument);
  CHECK_NOTHROW(TorusGrid(2));
}

TEST_CASE("domain validation") {
  CHECK_NOTHROW(validate(DomainSpec{Annulus{0.2, 0.7}}));
  CHECK_THROWS_AS(validate(DomainSpec{Annulus{0.7, 0.2}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(DomainSpec{Annulus{0.0, 0.7}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(DomainSpec{Annulus{0.2, 1.0}}), std::invalid_argument);
  CHECK_NOTHROW(validate(DomainSpec{StarAnnulus{0.2, 0.7, 0.05, 8}}));
  CHECK_THROWS_AS(validate(DomainSpec{StarAnnulus{0.7, 0.7, 0.05, 8}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(DomainSpec{StarAnnulus{0.2, 0.7, -0.01, 8}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(DomainSpec{StarAnnulus{0.2, 0.7, 0.05, 0}}), std::invalid_argument);
  // outer reach r_base + 2*delta must stay inside the box
  CHECK_THROWS_AS(validate(DomainSpec{StarAnnulus{0.2, 0.95, 0.05, 8}}), std::invalid_argument);
}

TEST_CASE("annulus membership: boundary counts as fluid") {
  const DomainSpec spec = Annulus{0.2, 0.7};
  CHECK(contains(spec, 0.45, 0.0));
  CHECK(contains(spec, 0.2, 0.0));  // inner boundary
  CHECK(contains(spec, 0.0, 0.7));  // outer boundary
  CHECK_FALSE(contains(spec, 0.0, 0.0));
  CHECK_FALSE(contains(spec, 0.19, 0.0));
  CHECK_FALSE(contains(spec, 0.71, 0.0));
  CHECK_FALSE(contains(spec, 0.9, 0.9));
}

TEST_CASE("star membership: lobed outer boundary") {
  const StarAnnulus star{0.2, 0.7, 0.05, 8};
  const DomainSpec spec = star;
  // Along the positive x axis the boundary bulges to 0.75 + 0.05 = 0.8.
  CHECK(star_boundary_radius(star, 0.0) == doctest::Approx(0.8));
  CHECK(contains(spec, 0.79, 0.0));
  CHECK_FALSE(contains(spec, 0.81, 0.0));
  // Half a lobe later (phi = pi/8) the boundary dips to 0.75 - 0.05 = 0.7.
  const double phi = std::atan(1.0) * 4.0 / 8.0;
  CHECK(star_boundary_radius(star, phi) == doctest::Approx(0.7));
  const double c = std::cos(phi), s = std::sin(phi);
  CHECK(contains(spec, 0.69 * c, 0.69 * s));
  CHECK_FALSE(contains(spec, 0.71 * c, 0.71 * s));
  // Eight-fold symmetry of the boundary radius.
  for (int m = 0; m < 8; ++m) {
    CHECK(star_boundary_radius(star, 0.3 + m * 2.0 * std::atan(1.0) * 4.0 / 8.0) ==
          doctest::Approx(star_boundary_radius(star, 0.3)));
  }
}

TEST_CASE("mask: solid iff center outside the fluid region") {
  const TorusGrid grid(32);
  const DomainSpec spec = Annulus{0.2, 0.7};
  const SolidMask mask = build_mask(grid, spec);
  REQUIRE(mask.n == 32);
  int solid = 0;
  for (int j = 0; j < 32; ++j) {
    for (int i = 0; i < 32; ++i) {
      const double r = std::hypot(grid.center_x(i), grid.center_y(j));
      const bool expect_solid = r < 0.2 || r > 0.7;
      CHECK(mask.is_solid(i, j) == expect_solid);
      solid += expect_solid ? 1 : 0;
    }
  }
  CHECK(mask.solid_count() == solid);
  CHECK(fluid_volume(mask, grid) == doctest::Approx((32 * 32 - solid) * grid.cell_volume()));
}

TEST_CASE("mask: fluid area approximates the annulus area as N grows") {
  const DomainSpec spec = Annulus{0.2, 0.7};
  const double pi = 4.0 * std::atan(1.0);
  const double exact = pi * (0.7 * 0.7 - 0.2 * 0.2);
  double err_coarse = 0.0, err_fine = 0.0;
  {
    const TorusGrid grid(40);
    err_coarse = std::abs(fluid_volume(build_mask(grid, spec), grid) - exact);
  }
  {
    const TorusGrid grid(160);
    err_fine = std::abs(fluid_volume(build_mask(grid, spec), grid) - exact);
  }
  CHECK(err_fine < err_coarse);
  CHECK(err_fine < 0.01);
}
