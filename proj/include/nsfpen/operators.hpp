#pragma once

#include <cmath>

#include "nsfpen/field.hpp"
#include "nsfpen/grid.hpp"
#include "nsfpen/parallel.hpp"

namespace nsfpen::ops {

/// Face convention: every face carries the unit normal pointing in the
/// positive axis direction. For the face between upstream cell K (negative
/// side) and downstream cell L (positive side),
///   average = (r_K + r_L)/2,   jump = r_L - r_K.
/// Flipping the orientation flips the sign of both the normal velocity and
/// the jump, so every flux formula below is orientation-invariant.

/// Viscosity-upwind flux through one face with normal in the positive axis
/// direction: Up[r,v] - visc_coeff*jump, Up = avg(r)*vn - |vn|/2*jump,
/// vn the face-average normal velocity. visc_coeff is h^alpha in production.
inline double upwind_face_flux(double r_neg, double r_pos, double v_neg, double v_pos,
                               double visc_coeff) {
  const double vn = 0.5 * (v_neg + v_pos);
  const double avg = 0.5 * (r_neg + r_pos);
  const double jump = r_pos - r_neg;
  return avg * vn - 0.5 * std::abs(vn) * jump - visc_coeff * jump;
}

/// Cell gradient from face averages: (1/h) * sum of avg(r)*n over the four
/// faces. Annihilates constants bitwise.
void grad(const GridDims& g, const ScalarField& r, VectorField& out, ThreadPool* pool = nullptr);
VectorField grad(const GridDims& g, const ScalarField& r);

/// Cell divergence from face averages, adjoint to grad under the
/// cell-volume-weighted inner product.
void div(const GridDims& g, const VectorField& v, ScalarField& out, ThreadPool* pool = nullptr);
ScalarField div(const GridDims& g, const VectorField& v);

/// Componentwise gradient of a vector field: entry (r,c) is the
/// c-derivative of component r.
void jacobian(const GridDims& g, const VectorField& v, TensorField& out,
              ThreadPool* pool = nullptr);

/// Symmetric part of the jacobian.
void sym_grad(const GridDims& g, const VectorField& v, TensorField& out,
              ThreadPool* pool = nullptr);
TensorField sym_grad(const GridDims& g, const VectorField& v);

/// Row-wise divergence of a cell tensor: component r is div of row r using
/// face averages of the tensor entries.
void div_tensor(const GridDims& g, const TensorField& t, VectorField& out,
                ThreadPool* pool = nullptr);
VectorField div_tensor(const GridDims& g, const TensorField& t);

/// Divergence of the viscosity-upwind flux of scalar r transported by v,
/// with explicit viscosity coefficient (test hook; production uses h^alpha).
void upwind_div_coeff(const GridDims& g, const ScalarField& r, const VectorField& v,
                      double visc_coeff, ScalarField& out, ThreadPool* pool = nullptr);

void upwind_div(const GridDims& g, const ScalarField& r, const VectorField& v, double alpha,
                ScalarField& out, ThreadPool* pool = nullptr);
ScalarField upwind_div(const GridDims& g, const ScalarField& r, const VectorField& v,
                       double alpha);

/// Componentwise upwind flux divergence of a vector field with shared
/// transport velocity v.
void upwind_div_vec(const GridDims& g, const VectorField& w, const VectorField& v, double alpha,
                    VectorField& out, ThreadPool* pool = nullptr);
VectorField upwind_div_vec(const GridDims& g, const VectorField& w, const VectorField& v,
                           double alpha);

} // namespace nsfpen::ops
