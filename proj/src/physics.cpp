#include "nsfpen/physics.hpp"

#include <string>

namespace nsfpen {

namespace {

constexpr double kGravityOriginCutoff = 1e-12;

[[noreturn]] void throw_nonpositive(const char* what, double value) {
  throw std::domain_error(std::string(what) + " must be positive, got " + std::to_string(value));
}

} // namespace

double GasModel::pressure(double rho, double theta) const {
  if (!(rho > 0.0)) throw_nonpositive("rho", rho);
  if (!(theta > 0.0)) throw_nonpositive("theta", theta);
  return rho * theta;
}

double GasModel::internal_energy(double theta) const {
  if (!(theta > 0.0)) throw_nonpositive("theta", theta);
  return cv() * theta;
}

double GasModel::entropy(double rho, double theta) const {
  if (!(rho > 0.0)) throw_nonpositive("rho", rho);
  if (!(theta > 0.0)) throw_nonpositive("theta", theta);
  return cv() * std::log(theta) - std::log(rho);
}

double GasModel::theta_from_conserved(double rho, double rho_e) const {
  if (!(rho > 0.0)) throw_nonpositive("rho", rho);
  return rho_e / (cv() * rho);
}

double GasModel::theta_from_entropy_data(double rho0, double S0) const {
  if (!(rho0 > 0.0)) throw_nonpositive("rho0", rho0);
  return std::exp((gamma - 1.0) * (S0 / rho0 + std::log(rho0)));
}

void validate(const GasModel& gas) {
  if (!(gas.gamma > 1.0))
    throw std::invalid_argument("GasModel: gamma must exceed 1, got " + std::to_string(gas.gamma));
}

void validate(const TransportCoeffs& t) {
  if (!(t.mu > 0.0))
    throw std::invalid_argument("TransportCoeffs: mu must be positive");
  if (!(t.kappa > 0.0))
    throw std::invalid_argument("TransportCoeffs: kappa must be positive");
  if (!std::isfinite(t.lambda))
    throw std::invalid_argument("TransportCoeffs: lambda must be finite");
}

void validate(const PenaltyConfig& cfg) {
  if (!(cfg.epsilon > 0.0))
    throw std::invalid_argument("PenaltyConfig: epsilon must be positive");
  if (cfg.k < 1)
    throw std::invalid_argument("PenaltyConfig: k must be at least 1");
  if (cfg.mask.n != cfg.theta_B.n)
    throw std::invalid_argument("PenaltyConfig: mask and theta_B grids differ");
  const std::size_t count = cfg.theta_B.size();
  for (std::size_t c = 0; c < count; ++c) {
    if (cfg.mask.solid[c] && !(cfg.theta_B.v[c] > 0.0))
      throw std::invalid_argument("PenaltyConfig: theta_B must be positive on solid cells");
  }
}

void friction_penalty(const VectorField& u, const PenaltyConfig& cfg, VectorField& out,
                      ThreadPool* pool) {
  require_same_grid(u.n, cfg.mask.n, "friction_penalty");
  const int n = u.n;
  const double inv_eps = 1.0 / cfg.epsilon;
  auto body = [&](int jb, int je) {
    for (int j = jb; j < je; ++j) {
      for (int i = 0; i < n; ++i) {
        const std::size_t c = static_cast<std::size_t>(j) * n + i;
        if (cfg.mask.solid[c]) {
          out.x[c] = -inv_eps * u.x[c];
          out.y[c] = -inv_eps * u.y[c];
        } else {
          out.x[c] = 0.0;
          out.y[c] = 0.0;
        }
      }
    }
  };
  if (pool != nullptr) pool->parallel_for(n, body);
  else body(0, n);
}

VectorField friction_penalty(const VectorField& u, const PenaltyConfig& cfg) {
  VectorField out(u.n);
  friction_penalty(u, cfg, out);
  return out;
}

void heat_penalty(const ScalarField& theta, const PenaltyConfig& cfg, ScalarField& out,
                  ThreadPool* pool) {
  require_same_grid(theta.n, cfg.mask.n, "heat_penalty");
  const int n = theta.n;
  const double inv_eps = 1.0 / cfg.epsilon;
  const int k = cfg.k;
  auto body = [&](int jb, int je) {
    for (int j = jb; j < je; ++j) {
      for (int i = 0; i < n; ++i) {
        const std::size_t c = static_cast<std::size_t>(j) * n + i;
        if (cfg.mask.solid[c]) {
          const double d = theta.v[c] - cfg.theta_B.v[c];
          out.v[c] = -inv_eps * ipow(std::abs(d), k) * d;
        } else {
          out.v[c] = 0.0;
        }
      }
    }
  };
  if (pool != nullptr) pool->parallel_for(n, body);
  else body(0, n);
}

ScalarField heat_penalty(const ScalarField& theta, const PenaltyConfig& cfg) {
  ScalarField out(theta.n);
  heat_penalty(theta, cfg, out);
  return out;
}

VectorField gravity_field(const TorusGrid& grid, const GravitySpec& spec) {
  const int n = grid.n();
  VectorField out(n);
  if (std::holds_alternative<NoGravity>(spec)) return out;
  const double mag = std::get<CentralPull>(spec).magnitude;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = grid.center_x(i);
      const double y = grid.center_y(j);
      const double r = std::hypot(x, y);
      const std::size_t c = static_cast<std::size_t>(j) * n + i;
      if (r < kGravityOriginCutoff) continue;
      out.x[c] = -mag * x / r;
      out.y[c] = -mag * y / r;
    }
  }
  return out;
}

} // namespace nsfpen
