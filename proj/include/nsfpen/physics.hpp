#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>

#include "nsfpen/field.hpp"
#include "nsfpen/grid.hpp"
#include "nsfpen/parallel.hpp"

namespace nsfpen {

/// x^e for small non-negative integer e by repeated multiplication.
inline double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

/// Perfect gas: p = rho*theta, e = c_v*theta, s = c_v*log(theta) - log(rho),
/// c_v = 1/(gamma - 1).
struct GasModel {
  double gamma = 1.4;

  double cv() const { return 1.0 / (gamma - 1.0); }

  /// p = rho*theta. Nonpositive rho or theta signals a blown-up state.
  double pressure(double rho, double theta) const;
  /// e = c_v*theta.
  double internal_energy(double theta) const;
  /// s = c_v*log(theta) - log(rho).
  double entropy(double rho, double theta) const;
  /// Inverse of rho_e = c_v*rho*theta.
  double theta_from_conserved(double rho, double rho_e) const;
  /// Initial temperature from density and total entropy S0 = rho0*s0:
  /// theta0 = exp[(gamma-1)*(S0/rho0 + log rho0)].
  double theta_from_entropy_data(double rho0, double S0) const;
};

void validate(const GasModel& gas);

/// Constant transport coefficients. lambda is stored as given (the bulk
/// coefficient eta = lambda + 2*mu/d is documentation only, never used).
struct TransportCoeffs {
  double mu = 0.001;
  double lambda = 0.001;
  double kappa = 0.001;
};

void validate(const TransportCoeffs& t);

/// Penalization of the solid complement: friction -(1/epsilon)*u in the
/// momentum balance and the odd-power relaxation
/// -(1/epsilon)*|theta - theta_B|^k*(theta - theta_B) in the internal-energy
/// balance, both supported exactly on the solid mask. theta_B is the
/// time-independent extended boundary temperature.
struct PenaltyConfig {
  double epsilon = 1e-4;
  int k = 6;
  SolidMask mask;
  ScalarField theta_B;
};

void validate(const PenaltyConfig& cfg);

struct NoGravity {};
/// g(x) = -magnitude * x/|x|; zero inside the origin cutoff |x| < 1e-12.
struct CentralPull {
  double magnitude = 0.0;
};
using GravitySpec = std::variant<NoGravity, CentralPull>;

/// -(1/epsilon)*u on solid cells, bitwise zero on fluid cells.
void friction_penalty(const VectorField& u, const PenaltyConfig& cfg, VectorField& out,
                      ThreadPool* pool = nullptr);
VectorField friction_penalty(const VectorField& u, const PenaltyConfig& cfg);

/// -(1/epsilon)*|theta - theta_B|^k*(theta - theta_B) on solid cells, bitwise
/// zero on fluid cells.
void heat_penalty(const ScalarField& theta, const PenaltyConfig& cfg, ScalarField& out,
                  ThreadPool* pool = nullptr);
ScalarField heat_penalty(const ScalarField& theta, const PenaltyConfig& cfg);

/// Gravity sampled at cell centers.
VectorField gravity_field(const TorusGrid& grid, const GravitySpec& spec);

} // namespace nsfpen
