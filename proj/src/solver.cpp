#include "nsfpen/solver.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace nsfpen {

namespace {

constexpr double kBudgetFloor = 1e-300;
constexpr double kAdvisoryLimit = 0.5;

double component_residual(double tendency, double source, double gross) {
  return std::abs(tendency - source) / std::max(gross, kBudgetFloor);
}

} // namespace

double MomentumBudget::relative_residual() const {
  return std::max(component_residual(tendency_x, source_x, gross_x),
                  component_residual(tendency_y, source_y, gross_y));
}

void validate(const RunParams& params, int n) {
  validate(params.gas);
  validate(params.transport);
  validate(params.penalty);
  if (params.penalty.mask.n != n)
    throw std::invalid_argument("RunParams: penalty mask grid does not match the run grid");
  if (!(params.dt > 0.0)) throw std::invalid_argument("RunParams: dt must be positive");
  if (!(params.t_final >= 0.0)) throw std::invalid_argument("RunParams: t_final must be nonnegative");
  if (!(params.alpha > 0.0 && params.alpha < 1.0))
    throw std::invalid_argument("RunParams: alpha must lie strictly between 0 and 1");
  if (params.diag_every < 1)
    throw std::invalid_argument("RunParams: diag_every must be at least 1");
}

Solver::Solver(const TorusGrid& grid, RunParams params, ThreadPool* pool)
    : dims_(grid.dims()),
      params_(std::move(params)),
      pool_(pool),
      gravity_(gravity_field(grid, params_.gravity)),
      u_(dims_.n),
      theta_(dims_.n),
      p_(dims_.n),
      adv_rho_(dims_.n),
      adv_e_(dims_.n),
      adv_mom_(dims_.n),
      grad_p_(dims_.n),
      du_(dims_.n),
      div_du_(dims_.n),
      div_u_(dims_.n),
      grad_div_u_(dims_.n),
      grad_theta_(dims_.n),
      diff_e_(dims_.n),
      friction_(dims_.n),
      heat_(dims_.n),
      budget_gross_x_(dims_.n),
      budget_gross_y_(dims_.n),
      budget_src_x_(dims_.n),
      budget_src_y_(dims_.n),
      tend_(dims_.n),
      scratch_(dims_.n) {
  validate(params_, dims_.n);
}

void Solver::validate_state(const State& s) const {
  const int n = dims_.n;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t c = static_cast<std::size_t>(j) * n + i;
      const double rho = s.rho.v[c];
      const double rho_e = s.rho_e.v[c];
      const bool ok = rho > 0.0 && rho_e > 0.0 && std::isfinite(rho) && std::isfinite(rho_e) &&
                      std::isfinite(s.mom.x[c]) && std::isfinite(s.mom.y[c]);
      if (!ok) throw SchemeFailure(time_, step_, i, j, rho, rho_e);
    }
  }
}

void Solver::derive_primitives(const State& s) {
  const int n = dims_.n;
  const double cv = params_.gas.cv();
  auto body = [&](int jb, int je) {
    for (int j = jb; j < je; ++j) {
      for (int i = 0; i < n; ++i) {
        const std::size_t c = static_cast<std::size_t>(j) * n + i;
        const double rho = s.rho.v[c];
        u_.x[c] = s.mom.x[c] / rho;
        u_.y[c] = s.mom.y[c] / rho;
        const double theta = s.rho_e.v[c] / (cv * rho);
        theta_.v[c] = theta;
        p_.v[c] = rho * theta;
      }
    }
  };
  if (pool_ != nullptr) pool_->parallel_for(n, body);
  else body(0, n);
}

void Solver::compute_rhs(const State& s, Tendency& out) {
  validate_state(s);
  derive_primitives(s);

  const GridDims g = dims_;
  ops::upwind_div(g, s.rho, u_, params_.alpha, adv_rho_, pool_);
  ops::upwind_div_vec(g, s.mom, u_, params_.alpha, adv_mom_, pool_);
  ops::upwind_div(g, s.rho_e, u_, params_.alpha, adv_e_, pool_);
  ops::grad(g, p_, grad_p_, pool_);
  ops::sym_grad(g, u_, du_, pool_);
  ops::div_tensor(g, du_, div_du_, pool_);
  ops::div(g, u_, div_u_, pool_);
  ops::grad(g, div_u_, grad_div_u_, pool_);
  ops::grad(g, theta_, grad_theta_, pool_);
  ops::div(g, grad_theta_, diff_e_, pool_);
  friction_penalty(u_, params_.penalty, friction_, pool_);
  heat_penalty(theta_, params_.penalty, heat_, pool_);

  const int n = dims_.n;
  const double two_mu = 2.0 * params_.transport.mu;
  const double lam = params_.transport.lambda;
  const double kap = params_.transport.kappa;
  auto assemble = [&](int jb, int je) {
    for (int j = jb; j < je; ++j) {
      for (int i = 0; i < n; ++i) {
        const std::size_t c = static_cast<std::size_t>(j) * n + i;
        out.d_rho.v[c] = -adv_rho_.v[c];

        const double am_x = adv_mom_.x[c], am_y = adv_mom_.y[c];
        const double gp_x = grad_p_.x[c], gp_y = grad_p_.y[c];
        const double visc_x = two_mu * div_du_.x[c], visc_y = two_mu * div_du_.y[c];
        const double bulk_x = lam * grad_div_u_.x[c], bulk_y = lam * grad_div_u_.y[c];
        const double grav_x = s.rho.v[c] * gravity_.x[c], grav_y = s.rho.v[c] * gravity_.y[c];
        const double fric_x = friction_.x[c], fric_y = friction_.y[c];
        out.d_mom.x[c] = ((-am_x - gp_x) + (visc_x + bulk_x)) + (grav_x + fric_x);
        out.d_mom.y[c] = ((-am_y - gp_y) + (visc_y + bulk_y)) + (grav_y + fric_y);
        budget_src_x_.v[c] = grav_x + fric_x;
        budget_src_y_.v[c] = grav_y + fric_y;
        budget_gross_x_.v[c] = ((std::abs(am_x) + std::abs(gp_x)) + (std::abs(visc_x) + std::abs(bulk_x))) +
                               (std::abs(grav_x) + std::abs(fric_x));
        budget_gross_y_.v[c] = ((std::abs(am_y) + std::abs(gp_y)) + (std::abs(visc_y) + std::abs(bulk_y))) +
                               (std::abs(grav_y) + std::abs(fric_y));

        const double dv = div_u_.v[c];
        const double frob = du_.xx[c] * du_.xx[c] + du_.xy[c] * du_.xy[c] +
                            du_.yx[c] * du_.yx[c] + du_.yy[c] * du_.yy[c];
        out.d_rho_e.v[c] = ((-adv_e_.v[c] - p_.v[c] * dv) + (kap * diff_e_.v[c] + (two_mu * frob + lam * dv * dv))) +
                           heat_.v[c];
      }
    }
  };
  if (pool_ != nullptr) pool_->parallel_for(n, assemble);
  else assemble(0, n);

  budget_.tendency_x = dims_.cell_volume() * pairwise_sum(out.d_mom.x);
  budget_.tendency_y = dims_.cell_volume() * pairwise_sum(out.d_mom.y);
  budget_.source_x = cell_weighted_sum(g, budget_src_x_);
  budget_.source_y = cell_weighted_sum(g, budget_src_y_);
  budget_.gross_x = cell_weighted_sum(g, budget_gross_x_);
  budget_.gross_y = cell_weighted_sum(g, budget_gross_y_);
}

void Solver::euler_step(State& s, double dt_step) {
  compute_rhs(s, tend_);
  const int n = dims_.n;
  auto update = [&](int jb, int je) {
    for (int j = jb; j < je; ++j) {
      for (int i = 0; i < n; ++i) {
        const std::size_t c = static_cast<std::size_t>(j) * n + i;
        s.rho.v[c] = s.rho.v[c] + dt_step * tend_.d_rho.v[c];
        s.mom.x[c] = s.mom.x[c] + dt_step * tend_.d_mom.x[c];
        s.mom.y[c] = s.mom.y[c] + dt_step * tend_.d_mom.y[c];
        s.rho_e.v[c] = s.rho_e.v[c] + dt_step * tend_.d_rho_e.v[c];
      }
    }
  };
  if (pool_ != nullptr) pool_->parallel_for(n, update);
  else update(0, n);
  time_ += dt_step;
  step_ += 1;
  validate_state(s);
}

DiagnosticsRecord Solver::diagnostics(const State& s) const {
  const int n = dims_.n;
  const std::size_t count = s.size();
  const double cv = params_.gas.cv();
  const double gamma = params_.gas.gamma;
  const SolidMask& mask = params_.penalty.mask;
  const ScalarField& theta_b = params_.penalty.theta_B;
  const int k = params_.penalty.k;

  ScalarField energy(n), ballistic(n), solid_kin(n), solid_mis(n);
  double adv_max = 0.0, rho_min = std::numeric_limits<double>::infinity(), pen_max = 0.0;
  bool any_solid = false;
  for (std::size_t c = 0; c < count; ++c) {
    const double rho = s.rho.v[c];
    const double ux = s.mom.x[c] / rho;
    const double uy = s.mom.y[c] / rho;
    const double theta = s.rho_e.v[c] / (cv * rho);
    const double kin = 0.5 * rho * (ux * ux + uy * uy);
    energy.v[c] = kin + s.rho_e.v[c];
    const double entropy = cv * std::log(theta) - std::log(rho);
    ballistic.v[c] = (kin + s.rho_e.v[c]) - theta_b.v[c] * rho * entropy;
    const double speed = std::hypot(ux, uy) + std::sqrt(gamma * theta);
    adv_max = std::max(adv_max, speed);
    rho_min = std::min(rho_min, rho);
    if (mask.solid[c]) {
      any_solid = true;
      const double d = theta - theta_b.v[c];
      solid_kin.v[c] = ux * ux + uy * uy;
      solid_mis.v[c] = ipow(std::abs(d), k + 2) / theta;
      pen_max = std::max(pen_max, std::max(1.0, ipow(std::abs(d), k) / (cv * rho)));
    } else {
      solid_kin.v[c] = 0.0;
      solid_mis.v[c] = 0.0;
    }
  }

  DiagnosticsRecord rec;
  rec.step = step_;
  rec.time = time_;
  rec.total_mass = cell_weighted_sum(dims_, s.rho);
  rec.total_momentum_x = dims_.cell_volume() * pairwise_sum(s.mom.x);
  rec.total_momentum_y = dims_.cell_volume() * pairwise_sum(s.mom.y);
  rec.total_energy = cell_weighted_sum(dims_, energy);
  rec.ballistic_energy = cell_weighted_sum(dims_, ballistic);
  rec.solid_kinetic = cell_weighted_sum(dims_, solid_kin);
  rec.solid_theta_mismatch = cell_weighted_sum(dims_, solid_mis);
  const double h = dims_.h;
  rec.advisory_adv = adv_max * params_.dt / h;
  rec.advisory_diff = std::max(2.0 * params_.transport.mu, params_.transport.kappa / cv) * params_.dt /
                      (rho_min * h * h);
  rec.advisory_pen = any_solid ? params_.dt * pen_max / params_.penalty.epsilon : 0.0;
  return rec;
}

RunResult Solver::run(const State& initial, const RunHooks& hooks) {
  require_same_grid(initial.n(), dims_.n, "run");
  RunResult res;
  State s = initial;
  time_ = 0.0;
  step_ = 0;

  const double dt = params_.dt;
  const double t_final = params_.t_final;
  long nsteps = 0;
  if (t_final > 0.0) {
    nsteps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
    if (nsteps < 1) nsteps = 1;
  }

  bool warned_adv = false, warned_diff = false, warned_pen = false;
  auto record = [&](const State& state) {
    DiagnosticsRecord rec = diagnostics(state);
    res.series.push_back(rec);
    res.max_advisory_adv = std::max(res.max_advisory_adv, rec.advisory_adv);
    res.max_advisory_diff = std::max(res.max_advisory_diff, rec.advisory_diff);
    res.max_advisory_pen = std::max(res.max_advisory_pen, rec.advisory_pen);
    if (rec.advisory_adv > kAdvisoryLimit && !warned_adv) {
      warned_adv = true;
      std::cerr << "warning: advective stability number " << rec.advisory_adv
                << " exceeds " << kAdvisoryLimit << " at step " << rec.step << "\n";
    }
    if (rec.advisory_diff > kAdvisoryLimit && !warned_diff) {
      warned_diff = true;
      std::cerr << "warning: diffusive stability number " << rec.advisory_diff
                << " exceeds " << kAdvisoryLimit << " at step " << rec.step << "\n";
    }
    if (rec.advisory_pen > kAdvisoryLimit && !warned_pen) {
      warned_pen = true;
      std::cerr << "warning: penalty stiffness number " << rec.advisory_pen
                << " exceeds " << kAdvisoryLimit << " at step " << rec.step << "\n";
    }
  };
  auto dump = [&](const State& state) {
    if (hooks.on_dump) hooks.on_dump(state, step_, time_);
  };

  if (nsteps > 0) {
    record(s);
    if (hooks.dump_every > 0) dump(s);
  }

  for (long i = 0; i < nsteps; ++i) {
    time_ = static_cast<double>(i) * dt;
    step_ = i;
    const double dt_i = (i + 1 == nsteps) ? t_final - static_cast<double>(nsteps - 1) * dt : dt;
    res.solid_kinetic_time_integral += solid_kinetic_of(s) * dt_i;
    euler_step(s, dt_i);
    res.max_budget_residual = std::max(res.max_budget_residual, budget_.relative_residual());
    const long done = i + 1;
    if (done % params_.diag_every == 0 || done == nsteps) record(s);
    if (hooks.dump_every > 0 && (done % hooks.dump_every == 0 || done == nsteps)) dump(s);
  }

  res.steps = nsteps;
  res.time = time_;
  res.state = std::move(s);
  return res;
}

double Solver::solid_kinetic_of(const State& s) const {
  const std::size_t count = s.size();
  for (std::size_t c = 0; c < count; ++c) {
    if (params_.penalty.mask.solid[c]) {
      const double ux = s.mom.x[c] / s.rho.v[c];
      const double uy = s.mom.y[c] / s.rho.v[c];
      scratch_.v[c] = ux * ux + uy * uy;
    } else {
      scratch_.v[c] = 0.0;
    }
  }
  return cell_weighted_sum(dims_, scratch_);
}

double cell_weighted_sum(const GridDims& g, const ScalarField& f) {
  return g.cell_volume() * pairwise_sum(f.v);
}

} // namespace nsfpen
