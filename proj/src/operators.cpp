#include "nsfpen/operators.hpp"

namespace nsfpen::ops {

namespace {

inline int wrap_up(int i, int n) { return i + 1 == n ? 0 : i + 1; }
inline int wrap_dn(int i, int n) { return i == 0 ? n - 1 : i - 1; }

template <class Fn>
void for_rows(int n, ThreadPool* pool, Fn&& body) {
  if (pool != nullptr) {
    pool->parallel_for(n, [&](int jb, int je) {
      for (int j = jb; j < je; ++j) body(j);
    });
  } else {
    for (int j = 0; j < n; ++j) body(j);
  }
}

void upwind_div_core(const GridDims& g, const double* r, const double* vx, const double* vy,
                     double visc_coeff, double* out, ThreadPool* pool) {
  const int n = g.n;
  const double inv_h = 1.0 / g.h;
  for_rows(n, pool, [&](int j) {
    const int jn = wrap_up(j, n), jp = wrap_dn(j, n);
    for (int i = 0; i < n; ++i) {
      const int in = wrap_up(i, n), ip = wrap_dn(i, n);
      const std::size_t c = static_cast<std::size_t>(g.index(i, j));
      const std::size_t e = static_cast<std::size_t>(g.index(in, j));
      const std::size_t w = static_cast<std::size_t>(g.index(ip, j));
      const std::size_t nn = static_cast<std::size_t>(g.index(i, jn));
      const std::size_t ss = static_cast<std::size_t>(g.index(i, jp));
      // Each face flux is evaluated identically from both adjacent cells,
      // so the divergence telescopes exactly under the global cell sum.
      const double fe = upwind_face_flux(r[c], r[e], vx[c], vx[e], visc_coeff);
      const double fw = upwind_face_flux(r[w], r[c], vx[w], vx[c], visc_coeff);
      const double fn = upwind_face_flux(r[c], r[nn], vy[c], vy[nn], visc_coeff);
      const double fs = upwind_face_flux(r[ss], r[c], vy[ss], vy[c], visc_coeff);
      out[c] = ((fe - fw) + (fn - fs)) * inv_h;
    }
  });
}

} // namespace

void grad(const GridDims& g, const ScalarField& r, VectorField& out, ThreadPool* pool) {
  require_same_grid(g.n, r.n, "grad");
  const int n = g.n;
  const double inv_h = 1.0 / g.h;
  for_rows(n, pool, [&](int j) {
    const int jn = wrap_up(j, n), jp = wrap_dn(j, n);
    for (int i = 0; i < n; ++i) {
      const int in = wrap_up(i, n), ip = wrap_dn(i, n);
      const double c = r(i, j);
      out.x[g.index(i, j)] = (0.5 * (c + r(in, j)) - 0.5 * (r(ip, j) + c)) * inv_h;
      out.y[g.index(i, j)] = (0.5 * (c + r(i, jn)) - 0.5 * (r(i, jp) + c)) * inv_h;
    }
  });
}

VectorField grad(const GridDims& g, const ScalarField& r) {
  VectorField out(g.n);
  grad(g, r, out);
  return out;
}

void div(const GridDims& g, const VectorField& v, ScalarField& out, ThreadPool* pool) {
  require_same_grid(g.n, v.n, "div");
  const int n = g.n;
  const double inv_h = 1.0 / g.h;
  for_rows(n, pool, [&](int j) {
    const int jn = wrap_up(j, n), jp = wrap_dn(j, n);
    for (int i = 0; i < n; ++i) {
      const int in = wrap_up(i, n), ip = wrap_dn(i, n);
      const std::size_t c = static_cast<std::size_t>(g.index(i, j));
      const double fx = 0.5 * (v.x[c] + v.x[g.index(in, j)]) - 0.5 * (v.x[g.index(ip, j)] + v.x[c]);
      const double fy = 0.5 * (v.y[c] + v.y[g.index(i, jn)]) - 0.5 * (v.y[g.index(i, jp)] + v.y[c]);
      out.v[c] = (fx + fy) * inv_h;
    }
  });
}

ScalarField div(const GridDims& g, const VectorField& v) {
  ScalarField out(g.n);
  div(g, v, out);
  return out;
}

void jacobian(const GridDims& g, const VectorField& v, TensorField& out, ThreadPool* pool) {
  require_same_grid(g.n, v.n, "jacobian");
  const int n = g.n;
  const double inv_h = 1.0 / g.h;
  for_rows(n, pool, [&](int j) {
    const int jn = wrap_up(j, n), jp = wrap_dn(j, n);
    for (int i = 0; i < n; ++i) {
      const int in = wrap_up(i, n), ip = wrap_dn(i, n);
      const std::size_t c = static_cast<std::size_t>(g.index(i, j));
      const std::size_t e = static_cast<std::size_t>(g.index(in, j));
      const std::size_t w = static_cast<std::size_t>(g.index(ip, j));
      const std::size_t nn = static_cast<std::size_t>(g.index(i, jn));
      const std::size_t ss = static_cast<std::size_t>(g.index(i, jp));
      out.xx[c] = (0.5 * (v.x[c] + v.x[e]) - 0.5 * (v.x[w] + v.x[c])) * inv_h;
      out.xy[c] = (0.5 * (v.x[c] + v.x[nn]) - 0.5 * (v.x[ss] + v.x[c])) * inv_h;
      out.yx[c] = (0.5 * (v.y[c] + v.y[e]) - 0.5 * (v.y[w] + v.y[c])) * inv_h;
      out.yy[c] = (0.5 * (v.y[c] + v.y[nn]) - 0.5 * (v.y[ss] + v.y[c])) * inv_h;
    }
  });
}

void sym_grad(const GridDims& g, const VectorField& v, TensorField& out, ThreadPool* pool) {
  jacobian(g, v, out, pool);
  const std::size_t count = out.size();
  for (std::size_t c = 0; c < count; ++c) {
    const double offdiag = 0.5 * (out.xy[c] + out.yx[c]);
    out.xy[c] = offdiag;
    out.yx[c] = offdiag;
  }
}

TensorField sym_grad(const GridDims& g, const VectorField& v) {
  TensorField out(g.n);
  sym_grad(g, v, out);
  return out;
}

void div_tensor(const GridDims& g, const TensorField& t, VectorField& out, ThreadPool* pool) {
  require_same_grid(g.n, t.n, "div_tensor");
  const int n = g.n;
  const double inv_h = 1.0 / g.h;
  for_rows(n, pool, [&](int j) {
    const int jn = wrap_up(j, n), jp = wrap_dn(j, n);
    for (int i = 0; i < n; ++i) {
      const int in = wrap_up(i, n), ip = wrap_dn(i, n);
      const std::size_t c = static_cast<std::size_t>(g.index(i, j));
      const std::size_t e = static_cast<std::size_t>(g.index(in, j));
      const std::size_t w = static_cast<std::size_t>(g.index(ip, j));
      const std::size_t nn = static_cast<std::size_t>(g.index(i, jn));
      const std::size_t ss = static_cast<std::size_t>(g.index(i, jp));
      const double fxx = 0.5 * (t.xx[c] + t.xx[e]) - 0.5 * (t.xx[w] + t.xx[c]);
      const double fxy = 0.5 * (t.xy[c] + t.xy[nn]) - 0.5 * (t.xy[ss] + t.xy[c]);
      const double fyx = 0.5 * (t.yx[c] + t.yx[e]) - 0.5 * (t.yx[w] + t.yx[c]);
      const double fyy = 0.5 * (t.yy[c] + t.yy[nn]) - 0.5 * (t.yy[ss] + t.yy[c]);
      out.x[c] = (fxx + fxy) * inv_h;
      out.y[c] = (fyx + fyy) * inv_h;
    }
  });
}

VectorField div_tensor(const GridDims& g, const TensorField& t) {
  VectorField out(g.n);
  div_tensor(g, t, out);
  return out;
}

void upwind_div_coeff(const GridDims& g, const ScalarField& r, const VectorField& v,
                      double visc_coeff, ScalarField& out, ThreadPool* pool) {
  require_same_grid(g.n, r.n, "upwind_div");
  require_same_grid(g.n, v.n, "upwind_div");
  upwind_div_core(g, r.v.data(), v.x.data(), v.y.data(), visc_coeff, out.v.data(), pool);
}

void upwind_div(const GridDims& g, const ScalarField& r, const VectorField& v, double alpha,
                ScalarField& out, ThreadPool* pool) {
  upwind_div_coeff(g, r, v, std::pow(g.h, alpha), out, pool);
}

ScalarField upwind_div(const GridDims& g, const ScalarField& r, const VectorField& v,
                       double alpha) {
  ScalarField out(g.n);
  upwind_div(g, r, v, alpha, out);
  return out;
}

void upwind_div_vec(const GridDims& g, const VectorField& w, const VectorField& v, double alpha,
                    VectorField& out, ThreadPool* pool) {
  require_same_grid(g.n, w.n, "upwind_div_vec");
  require_same_grid(g.n, v.n, "upwind_div_vec");
  const double coeff = std::pow(g.h, alpha);
  upwind_div_core(g, w.x.data(), v.x.data(), v.y.data(), coeff, out.x.data(), pool);
  upwind_div_core(g, w.y.data(), v.x.data(), v.y.data(), coeff, out.y.data(), pool);
}

VectorField upwind_div_vec(const GridDims& g, const VectorField& w, const VectorField& v,
                           double alpha) {
  VectorField out(g.n);
  upwind_div_vec(g, w, v, alpha, out);
  return out;
}

} // namespace nsfpen::ops
