#pragma once

#include <stdexcept>
#include <string>

#include "nsfpen/field.hpp"

namespace nsfpen {

/// Conserved fields of the scheme: density, momentum m = rho*u, and internal
/// energy density rho_e = c_v*rho*theta. Velocity and temperature are derived
/// on demand, never stored alongside.
struct State {
  ScalarField rho;
  VectorField mom;
  ScalarField rho_e;

  State() = default;
  explicit State(int n) : rho(n), mom(n), rho_e(n) {}

  int n() const { return rho.n; }
  std::size_t size() const { return rho.size(); }
};

/// Time derivatives of the three conserved fields.
struct Tendency {
  ScalarField d_rho;
  VectorField d_mom;
  ScalarField d_rho_e;

  Tendency() = default;
  explicit Tendency(int n) : d_rho(n), d_mom(n), d_rho_e(n) {}
};

/// Thrown when a step would leave rho or rho_e nonpositive (or non-finite)
/// somewhere: the explicit scheme has left its admissible set. Carries the
/// first offending cell so runs abort with a usable diagnostic instead of
/// emitting NaNs.
class SchemeFailure : public std::runtime_error {
 public:
  SchemeFailure(double time, long step, int cell_i, int cell_j, double rho, double rho_e);

  double time() const { return time_; }
  long step() const { return step_; }
  int cell_i() const { return cell_i_; }
  int cell_j() const { return cell_j_; }
  double rho() const { return rho_; }
  double rho_e() const { return rho_e_; }

 private:
  double time_;
  long step_;
  int cell_i_;
  int cell_j_;
  double rho_;
  double rho_e_;
};

} // namespace nsfpen
