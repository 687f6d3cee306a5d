#include "nsfpen/field.hpp"

namespace nsfpen {

namespace {

double pairwise_sum_range(const double* v, std::size_t lo, std::size_t hi) {
  const std::size_t len = hi - lo;
  if (len <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + len / 2;
  return pairwise_sum_range(v, lo, mid) + pairwise_sum_range(v, mid, hi);
}

} // namespace

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return pairwise_sum_range(values.data(), 0, values.size());
}

bool all_finite(const ScalarField& f) {
  for (double x : f.v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

bool all_finite(const VectorField& f) {
  for (double x : f.x) {
    if (!std::isfinite(x)) return false;
  }
  for (double y : f.y) {
    if (!std::isfinite(y)) return false;
  }
  return true;
}

} // namespace nsfpen
