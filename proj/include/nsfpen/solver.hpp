#pragma once

#include <functional>
#include <vector>

#include "nsfpen/operators.hpp"
#include "nsfpen/physics.hpp"
#include "nsfpen/state.hpp"

namespace nsfpen {

struct RunParams {
  double dt = 1e-6;
  double t_final = 0.1;
  double alpha = 0.6;
  GasModel gas;
  TransportCoeffs transport;
  PenaltyConfig penalty;
  GravitySpec gravity = NoGravity{};
  long diag_every = 1; // diagnostics-series sampling cadence in steps
};

/// Checks params against grid size n; throws std::invalid_argument.
void validate(const RunParams& params, int n);

struct DiagnosticsRecord {
  long step = 0;
  double time = 0.0;
  double total_mass = 0.0;
  double total_momentum_x = 0.0;
  double total_momentum_y = 0.0;
  double total_energy = 0.0;      // sum |K| (1/2 rho|u|^2 + rho e)
  double ballistic_energy = 0.0;  // sum |K| (1/2 rho|u|^2 + rho e - theta_B rho s)
  double solid_kinetic = 0.0;     // sum over solid cells |K| |u|^2
  double solid_theta_mismatch = 0.0; // sum over solid cells |K| |theta-theta_B|^{k+2}/theta
  double advisory_adv = 0.0;      // max (|u|+sqrt(gamma theta)) dt/h
  double advisory_diff = 0.0;     // max(2 mu, kappa/c_v) dt/(min rho h^2)
  double advisory_pen = 0.0;      // dt/eps * max over solid of max(1, |theta-theta_B|^k/(c_v rho))
};

using DiagnosticsSeries = std::vector<DiagnosticsRecord>;

/// Per-step global momentum budget. In exact arithmetic the convective,
/// pressure, and viscous contributions telescope to zero over the torus, so
/// the momentum tendency sum equals the source sum; gross is the magnitude
/// sum of every assembled term and is the scale against which the residual
/// is judged.
struct MomentumBudget {
  double tendency_x = 0.0, tendency_y = 0.0; // sum |K| d_mom
  double source_x = 0.0, source_y = 0.0;     // sum |K| (rho g + friction)
  double gross_x = 0.0, gross_y = 0.0;       // sum |K| of |each term|

  double relative_residual() const;
};

struct RunResult {
  State state;
  DiagnosticsSeries series;
  long steps = 0;
  double time = 0.0;
  double solid_kinetic_time_integral = 0.0; // left-endpoint rule over the steps
  double max_budget_residual = 0.0;
  double max_advisory_adv = 0.0;
  double max_advisory_diff = 0.0;
  double max_advisory_pen = 0.0;
};

struct RunHooks {
  long dump_every = 0; // 0 = never
  std::function<void(const State&, long step, double time)> on_dump;
};

/// Assembles the semi-discrete tendency of the penalized scheme and advances
/// it with forward Euler. Owns preallocated workspace; one instance per run.
class Solver {
 public:
  Solver(const TorusGrid& grid, RunParams params, ThreadPool* pool = nullptr);

  /// The three tendencies: mass/momentum/energy upwind transport, pressure
  /// gradient and cell-local p*div u work, viscous stress and heat diffusion,
  /// viscous dissipation, gravity, and the two penalty sources.
  /// Throws SchemeFailure if the state has lost positivity.
  void compute_rhs(const State& s, Tendency& out);

  /// In-place forward Euler update with the given step size; revalidates
  /// positivity afterwards.
  void euler_step(State& s, double dt_step);
  void euler_step(State& s) { euler_step(s, params_.dt); }

  /// Repeated Euler steps to t_final, the last step truncated to land on it
  /// exactly; diagnostics at the configured cadence plus step 0 and the
  /// final step. Warns (once per kind) when an advisory stability number
  /// exceeds 0.5.
  RunResult run(const State& initial, const RunHooks& hooks = {});

  DiagnosticsRecord diagnostics(const State& s) const;

  /// Sum over solid cells of |K| |u|^2 alone (the per-step integrand of the
  /// damping diagnostic).
  double solid_kinetic_of(const State& s) const;

  const MomentumBudget& last_budget() const { return budget_; }
  const VectorField& gravity() const { return gravity_; }
  const RunParams& params() const { return params_; }

 private:
  void validate_state(const State& s) const;
  void derive_primitives(const State& s);

  GridDims dims_;
  RunParams params_;
  ThreadPool* pool_;
  double time_ = 0.0;
  long step_ = 0;

  VectorField gravity_;
  // Workspace: derived fields and operator outputs, one slot per term.
  VectorField u_;
  ScalarField theta_, p_;
  ScalarField adv_rho_, adv_e_;
  VectorField adv_mom_, grad_p_;
  TensorField du_;
  VectorField div_du_;
  ScalarField div_u_;
  VectorField grad_div_u_, grad_theta_;
  ScalarField diff_e_;
  VectorField friction_;
  ScalarField heat_;
  ScalarField budget_gross_x_, budget_gross_y_, budget_src_x_, budget_src_y_;
  Tendency tend_;
  mutable ScalarField scratch_;
  MomentumBudget budget_;
};

/// Convenience: surface area of one cell times the index-ordered pairwise
/// sum of per-cell values (the deterministic reduction used by diagnostics).
double cell_weighted_sum(const GridDims& g, const ScalarField& f);

} // namespace nsfpen
