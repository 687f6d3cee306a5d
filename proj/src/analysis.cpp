#include "nsfpen/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace nsfpen {

namespace {

int injection_factor(int n_coarse, int n_ref) {
  if (n_coarse < 1 || n_ref < n_coarse || n_ref % n_coarse != 0) {
    throw std::invalid_argument("inject_to_fine: reference resolution " + std::to_string(n_ref) +
                                " is not a multiple of " + std::to_string(n_coarse));
  }
  return n_ref / n_coarse;
}

void inject_component(const std::vector<double>& coarse, int n, int f, std::vector<double>& fine) {
  const int n_ref = n * f;
  for (int j = 0; j < n_ref; ++j) {
    const int cj = j / f;
    for (int i = 0; i < n_ref; ++i) {
      fine[static_cast<std::size_t>(j) * n_ref + i] =
          coarse[static_cast<std::size_t>(cj) * n + i / f];
    }
  }
}

} // namespace

PrimitiveFields primitive_fields(const State& s, const GasModel& gas) {
  const int n = s.n();
  const double cv = gas.cv();
  PrimitiveFields out{ScalarField(n), VectorField(n), ScalarField(n)};
  const std::size_t count = s.size();
  for (std::size_t c = 0; c < count; ++c) {
    const double rho = s.rho.v[c];
    out.rho.v[c] = rho;
    out.u.x[c] = s.mom.x[c] / rho;
    out.u.y[c] = s.mom.y[c] / rho;
    out.theta.v[c] = s.rho_e.v[c] / (cv * rho);
  }
  return out;
}

ScalarField inject_to_fine(const ScalarField& coarse, int n_ref) {
  const int f = injection_factor(coarse.n, n_ref);
  ScalarField fine(n_ref);
  inject_component(coarse.v, coarse.n, f, fine.v);
  return fine;
}

VectorField inject_to_fine(const VectorField& coarse, int n_ref) {
  const int f = injection_factor(coarse.n, n_ref);
  VectorField fine(n_ref);
  inject_component(coarse.x, coarse.n, f, fine.x);
  inject_component(coarse.y, coarse.n, f, fine.y);
  return fine;
}

double l1_error(const GridDims& g, const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.n, b.n, "l1_error");
  require_same_grid(a.n, g.n, "l1_error");
  const std::size_t count = a.size();
  ScalarField diff(g.n);
  for (std::size_t c = 0; c < count; ++c) diff.v[c] = std::abs(a.v[c] - b.v[c]);
  return g.cell_volume() * pairwise_sum(diff.v);
}

double l1_error(const GridDims& g, const VectorField& a, const VectorField& b) {
  require_same_grid(a.n, b.n, "l1_error");
  require_same_grid(a.n, g.n, "l1_error");
  const std::size_t count = a.size();
  ScalarField diff(g.n);
  for (std::size_t c = 0; c < count; ++c) diff.v[c] = std::hypot(a.x[c] - b.x[c], a.y[c] - b.y[c]);
  return g.cell_volume() * pairwise_sum(diff.v);
}

namespace {

void require_comparable(const RunSolution& run, const RunSolution& ref, bool same_epsilon,
                        bool same_n, const char* what) {
  if (run.experiment != ref.experiment)
    throw std::invalid_argument(std::string(what) + ": experiments differ (" + run.experiment +
                                " vs " + ref.experiment + ")");
  if (run.t_final != ref.t_final)
    throw std::invalid_argument(std::string(what) + ": final times differ");
  if (same_epsilon && run.epsilon != ref.epsilon)
    throw std::invalid_argument(std::string(what) + ": penalty parameters differ");
  if (same_n && run.n != ref.n)
    throw std::invalid_argument(std::string(what) + ": grid resolutions differ");
}

} // namespace

FieldErrors compute_E(const RunSolution& run, const RunSolution& reference) {
  require_comparable(run, reference, /*same_epsilon=*/true, /*same_n=*/false, "compute_E");
  const int n_ref = reference.n;
  const GridDims g{n_ref, 2.0 / n_ref};
  FieldErrors e;
  e.rho = l1_error(g, inject_to_fine(run.fields.rho, n_ref), reference.fields.rho);
  e.u = l1_error(g, inject_to_fine(run.fields.u, n_ref), reference.fields.u);
  e.theta = l1_error(g, inject_to_fine(run.fields.theta, n_ref), reference.fields.theta);
  return e;
}

FieldErrors compute_P(const RunSolution& run, const RunSolution& reference) {
  require_comparable(run, reference, /*same_epsilon=*/false, /*same_n=*/true, "compute_P");
  const GridDims g{run.n, 2.0 / run.n};
  FieldErrors e;
  e.rho = l1_error(g, run.fields.rho, reference.fields.rho);
  e.u = l1_error(g, run.fields.u, reference.fields.u);
  e.theta = l1_error(g, run.fields.theta, reference.fields.theta);
  return e;
}

std::vector<std::optional<double>> eoc(const std::vector<std::pair<double, double>>& curve) {
  if (curve.size() < 2) throw std::invalid_argument("eoc: need at least two (parameter, error) points");
  bool increasing = curve[1].first > curve[0].first;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!(curve[i].first > 0.0)) throw std::invalid_argument("eoc: parameters must be positive");
    if (i > 0) {
      const bool step_up = curve[i].first > curve[i - 1].first;
      if (curve[i].first == curve[i - 1].first || step_up != increasing)
        throw std::invalid_argument("eoc: parameters must be strictly monotone");
    }
  }
  std::vector<std::optional<double>> rates;
  rates.reserve(curve.size() - 1);
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const double e0 = curve[i].second, e1 = curve[i + 1].second;
    if (!(e0 > 0.0) || !(e1 > 0.0)) {
      rates.push_back(std::nullopt);
      continue;
    }
    rates.push_back(std::log(e0 / e1) / std::log(curve[i].first / curve[i + 1].first));
  }
  return rates;
}

} // namespace nsfpen
