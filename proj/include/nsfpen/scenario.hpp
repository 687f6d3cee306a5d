#pragma once

#include <functional>
#include <string>

#include "nsfpen/grid.hpp"
#include "nsfpen/physics.hpp"
#include "nsfpen/state.hpp"

namespace nsfpen {

/// Density assigned to the region outside the embedding box's fluid domain.
/// Small keeps 0.01 rather than 0: an exactly-zero exterior density is
/// numerically unstable under the explicit scheme.
enum class OutsideDensityMode { Constant, Small };

/// Pointwise initial data (rho, u, theta) at a position.
struct InitValue {
  double rho;
  double ux;
  double uy;
  double theta;
};

struct Scenario {
  std::string name;
  DomainSpec domain;
  std::function<InitValue(double x, double y)> init;
  GravitySpec gravity = NoGravity{};
  double t_final = 0.1;
  OutsideDensityMode outside_density_mode = OutsideDensityMode::Constant;
};

/// Annulus 0.2 < |x| < 0.7; unit density everywhere; swirl band with
/// theta = 0.2 + 4|x| between resting inner (theta=1) and outer (theta=3)
/// regions; no gravity; T = 0.1.
Scenario experiment1();

/// Experiment 1 with density 0.01 on both solid regions; T = 0.1.
Scenario experiment2();

/// Eight-lobed star boundary (base radius 0.7, amplitude 0.05) around the
/// same swirl band; resting collar with theta=3 between |x|=0.7 and the star
/// boundary; density 0.01 outside; T = 0.1.
Scenario experiment3();

/// Annulus with central gravity of magnitude 100; swirl amplitude 5;
/// theta = 41.6 - 58|x| in the fluid (continuous: 30 inside, 1 outside);
/// density 0.01 on both solid regions; T = 0.2.
Scenario experiment4();

/// Lookup by config name exp1..exp4; unknown name -> std::invalid_argument.
Scenario scenario_by_name(const std::string& name);

/// Time-independent extended boundary temperature: the initial temperature
/// sampled at every cell center. Only solid-cell values are ever read by the
/// penalties; fluid cells carry the initial value for definiteness.
ScalarField build_theta_B(const Scenario& sc, const TorusGrid& grid);

/// Point-value projection of the initial data at cell centers, converted to
/// conserved variables. Nonpositive rho or theta -> std::invalid_argument.
State project_initial(const Scenario& sc, const TorusGrid& grid, const GasModel& gas);

} // namespace nsfpen
