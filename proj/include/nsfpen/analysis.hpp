#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsfpen/field.hpp"
#include "nsfpen/grid.hpp"
#include "nsfpen/physics.hpp"
#include "nsfpen/state.hpp"

namespace nsfpen {

/// Primitive fields derived from a conserved state: rho, u = m/rho,
/// theta = rho_e/(c_v rho). The error metrics and the field dumps both work
/// on these.
struct PrimitiveFields {
  ScalarField rho;
  VectorField u;
  ScalarField theta;
};

PrimitiveFields primitive_fields(const State& s, const GasModel& gas);

/// Piecewise-constant injection onto a nested finer mesh: each fine cell
/// takes the value of the coarse cell containing its center. n_ref must be a
/// multiple of the coarse n.
ScalarField inject_to_fine(const ScalarField& coarse, int n_ref);
VectorField inject_to_fine(const VectorField& coarse, int n_ref);

/// L1 distance: sum |K| |a-b| for scalars; for vectors the per-cell
/// Euclidean magnitude of the difference, |K|-weighted.
double l1_error(const GridDims& g, const ScalarField& a, const ScalarField& b);
double l1_error(const GridDims& g, const VectorField& a, const VectorField& b);

/// Final-time solution of one run, keyed by the parameters that error
/// comparisons must agree on.
struct RunSolution {
  std::string experiment;
  int n = 0;
  double epsilon = 0.0;
  double t_final = 0.0;
  PrimitiveFields fields;
};

struct FieldErrors {
  double rho = 0.0;
  double u = 0.0;
  double theta = 0.0;
};

/// L1 errors against the fine-mesh reference at the same epsilon: the run is
/// injected onto the reference grid, then compared field by field.
FieldErrors compute_E(const RunSolution& run, const RunSolution& reference);

/// L1 errors against the small-epsilon reference on the same grid.
FieldErrors compute_P(const RunSolution& run, const RunSolution& reference);

/// Successive-pair convergence rates log(e_i/e_{i+1}) / log(p_i/p_{i+1}) for
/// a curve of (parameter, error) points with strictly monotone positive
/// parameters. A nonpositive error makes the touched pairs' rates undefined
/// (nullopt), not an error.
std::vector<std::optional<double>> eoc(const std::vector<std::pair<double, double>>& curve);

/// One row of the error table (a nullopt error means that run failed).
struct ErrorRecord {
  std::string experiment;
  std::string field; // rho | u | theta
  int n = 0;
  double h = 0.0;
  double epsilon = 0.0;
  std::optional<double> error_E;
  std::optional<double> error_P;
};

} // namespace nsfpen
