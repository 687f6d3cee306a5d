#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "nsfpen/grid.hpp"

namespace nsfpen {

/// Piecewise-constant cell data: one value per cell, row-major with the
/// x index varying fastest.
struct ScalarField {
  int n = 0;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(int cells_per_axis, double fill = 0.0)
      : n(cells_per_axis), v(static_cast<std::size_t>(cells_per_axis) * cells_per_axis, fill) {}

  double& operator()(int i, int j) { return v[static_cast<std::size_t>(i + n * j)]; }
  double operator()(int i, int j) const { return v[static_cast<std::size_t>(i + n * j)]; }
  std::size_t size() const { return v.size(); }
};

/// One value per cell and component, stored per component.
struct VectorField {
  int n = 0;
  std::vector<double> x, y;

  VectorField() = default;
  explicit VectorField(int cells_per_axis, double fx = 0.0, double fy = 0.0)
      : n(cells_per_axis),
        x(static_cast<std::size_t>(cells_per_axis) * cells_per_axis, fx),
        y(static_cast<std::size_t>(cells_per_axis) * cells_per_axis, fy) {}

  std::size_t size() const { return x.size(); }
};

/// 2x2 tensor per cell; entry (r,c) holds the c-derivative of component r
/// when produced by the gradient operators.
struct TensorField {
  int n = 0;
  std::vector<double> xx, xy, yx, yy;

  TensorField() = default;
  explicit TensorField(int cells_per_axis)
      : n(cells_per_axis),
        xx(static_cast<std::size_t>(cells_per_axis) * cells_per_axis, 0.0),
        xy(xx), yx(xx), yy(xx) {}

  std::size_t size() const { return xx.size(); }
};

/// Fixed-shape pairwise summation. The reduction tree depends only on the
/// index range, so results are identical no matter how the surrounding
/// computation was partitioned across workers.
double pairwise_sum(std::span<const double> values);

/// pairwise_sum of f(i) over i in [0, count).
template <class F>
double pairwise_sum_of(std::size_t count, F&& f) {
  // Materializing keeps the reduction tree identical to pairwise_sum's.
  std::vector<double> tmp(count);
  for (std::size_t i = 0; i < count; ++i) tmp[i] = f(i);
  return pairwise_sum(tmp);
}

bool all_finite(const ScalarField& f);
bool all_finite(const VectorField& f);

inline void require_same_grid(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": fields on different grids");
}

} // namespace nsfpen
