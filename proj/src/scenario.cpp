#include "nsfpen/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nsfpen {

namespace {

constexpr double kOriginCutoff = 1e-12;

/// Tangential swirl u = amplitude*sin(4*pi*(|x|-0.2))*(y, -x)/|x|; the
/// origin guard is inert in practice (the swirl branch starts at |x|=0.2).
InitValue swirl_band(double x, double y, double r, double amplitude, double theta) {
  if (r < kOriginCutoff) return {1.0, 0.0, 0.0, theta};
  const double s = amplitude * std::sin(4.0 * std::numbers::pi * (r - 0.2));
  return {1.0, s * y / r, -s * x / r, theta};
}

} // namespace

Scenario experiment1() {
  Scenario sc;
  sc.name = "exp1";
  sc.domain = Annulus{0.2, 0.7};
  sc.gravity = NoGravity{};
  sc.t_final = 0.1;
  sc.outside_density_mode = OutsideDensityMode::Constant;
  sc.init = [](double x, double y) -> InitValue {
    const double r = std::hypot(x, y);
    if (r < 0.2) return {1.0, 0.0, 0.0, 1.0};
    if (r <= 0.7) return swirl_band(x, y, r, 1.0, 0.2 + 4.0 * r);
    return {1.0, 0.0, 0.0, 3.0};
  };
  return sc;
}

Scenario experiment2() {
  Scenario sc;
  sc.name = "exp2";
  sc.domain = Annulus{0.2, 0.7};
  sc.gravity = NoGravity{};
  sc.t_final = 0.1;
  sc.outside_density_mode = OutsideDensityMode::Small;
  sc.init = [](double x, double y) -> InitValue {
    const double r = std::hypot(x, y);
    if (r < 0.2) return {0.01, 0.0, 0.0, 1.0};
    if (r <= 0.7) return swirl_band(x, y, r, 1.0, 0.2 + 4.0 * r);
    return {0.01, 0.0, 0.0, 3.0};
  };
  return sc;
}

Scenario experiment3() {
  Scenario sc;
  sc.name = "exp3";
  const StarAnnulus star{0.2, 0.7, 0.05, 8};
  sc.domain = star;
  sc.gravity = NoGravity{};
  sc.t_final = 0.1;
  sc.outside_density_mode = OutsideDensityMode::Small;
  sc.init = [star](double x, double y) -> InitValue {
    const double r = std::hypot(x, y);
    if (r < 0.2) return {0.01, 0.0, 0.0, 1.0};
    if (r <= 0.7) return swirl_band(x, y, r, 1.0, 0.2 + 4.0 * r);
    // Resting collar between the 0.7 circle and the star boundary; the
    // initial data there matches the swirl branch's outer edge (rho=1,
    // theta=3, u=0), so the seam at |x|=0.7 is continuous.
    if (r <= star_boundary_radius(star, star_polar_angle(x, y))) return {1.0, 0.0, 0.0, 3.0};
    return {0.01, 0.0, 0.0, 3.0};
  };
  return sc;
}

Scenario experiment4() {
  Scenario sc;
  sc.name = "exp4";
  sc.domain = Annulus{0.2, 0.7};
  sc.gravity = CentralPull{100.0};
  sc.t_final = 0.2;
  sc.outside_density_mode = OutsideDensityMode::Small;
  sc.init = [](double x, double y) -> InitValue {
    const double r = std::hypot(x, y);
    if (r < 0.2) return {0.01, 0.0, 0.0, 30.0};
    if (r <= 0.7) return swirl_band(x, y, r, 5.0, 41.6 - 58.0 * r);
    return {0.01, 0.0, 0.0, 1.0};
  };
  return sc;
}

Scenario scenario_by_name(const std::string& name) {
  if (name == "exp1") return experiment1();
  if (name == "exp2") return experiment2();
  if (name == "exp3") return experiment3();
  if (name == "exp4") return experiment4();
  throw std::invalid_argument("unknown experiment '" + name +
                              "' (expected exp1, exp2, exp3, or exp4)");
}

ScalarField build_theta_B(const Scenario& sc, const TorusGrid& grid) {
  const int n = grid.n();
  ScalarField out(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      out(i, j) = sc.init(grid.center_x(i), grid.center_y(j)).theta;
    }
  }
  return out;
}

State project_initial(const Scenario& sc, const TorusGrid& grid, const GasModel& gas) {
  const int n = grid.n();
  const double cv = gas.cv();
  State state(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const InitValue v = sc.init(grid.center_x(i), grid.center_y(j));
      if (!(v.rho > 0.0) || !(v.theta > 0.0)) {
        throw std::invalid_argument("scenario '" + sc.name + "': nonpositive initial rho or theta at cell (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
      const std::size_t c = static_cast<std::size_t>(j) * n + i;
      state.rho.v[c] = v.rho;
      state.mom.x[c] = v.rho * v.ux;
      state.mom.y[c] = v.rho * v.uy;
      state.rho_e.v[c] = cv * v.rho * v.theta;
    }
  }
  return state;
}

} // namespace nsfpen
