#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

namespace nsfpen {

/// Cell count and cell width of a uniform periodic grid. The discrete
/// operators only ever need these two numbers, so they are split off from
/// TorusGrid; tests may build arbitrary (n, h) combinations directly.
struct GridDims {
  int n = 0;      ///< cells per axis
  double h = 0.0; ///< cell width

  int cell_count() const { return n * n; }
  double cell_volume() const { return h * h; }
  int index(int i, int j) const { return i + n * j; }
};

/// Uniform periodic Cartesian grid of square cells covering [-1,1]^2.
/// h is derived from N (h = 2/N), never set independently. Cell (i,j) has
/// its center at (-1 + (i+0.5)h, -1 + (j+0.5)h); indices wrap periodically
/// in both axes.
class TorusGrid {
 public:
  explicit TorusGrid(int cells_per_axis) {
    if (cells_per_axis < 2) {
      throw std::invalid_argument("TorusGrid: cells_per_axis must be >= 2");
    }
    dims_.n = cells_per_axis;
    dims_.h = 2.0 / cells_per_axis;
  }

  const GridDims& dims() const { return dims_; }
  int n() const { return dims_.n; }
  double h() const { return dims_.h; }
  int cell_count() const { return dims_.cell_count(); }
  double cell_volume() const { return dims_.cell_volume(); }
  int index(int i, int j) const { return dims_.index(i, j); }

  double center_x(int i) const { return -1.0 + (i + 0.5) * dims_.h; }
  double center_y(int j) const { return -1.0 + (j + 0.5) * dims_.h; }

  /// Periodic neighbor index along one axis, offset +1 or -1.
  int wrap(int i, int offset) const {
    int k = i + offset;
    if (k < 0) k += dims_.n;
    if (k >= dims_.n) k -= dims_.n;
    return k;
  }

  /// Outward face-area normals of any cell: four faces of area h with unit
  /// normals along +/-x, +/-y. Identical for every cell of the grid.
  struct Face {
    double nx, ny; ///< outward unit normal
    double area;
  };
  std::vector<Face> cell_faces() const {
    const double a = dims_.h;
    return {{1.0, 0.0, a}, {-1.0, 0.0, a}, {0.0, 1.0, a}, {0.0, -1.0, a}};
  }

 private:
  GridDims dims_;
};

inline TorusGrid build_grid(int cells_per_axis) { return TorusGrid(cells_per_axis); }

/// Ring bounded by two concentric circles around the origin.
struct Annulus {
  double r_inner;
  double r_outer;
};

/// Ring whose outer boundary is the lobed curve
///   radius(phi) = (r_base + delta) + delta*cos(lobes*phi),
/// with phi the polar angle of the point. The polar angle convention is
/// star_polar_angle below.
struct StarAnnulus {
  double r_inner;
  double r_base;
  double delta;
  int lobes;
};

using DomainSpec = std::variant<Annulus, StarAnnulus>;

/// Polar angle convention used for lobed boundaries: phi = atan2(y, x),
/// the standard mathematical angle. The lobed boundaries used here have
/// n-fold symmetry, so any other convention differs only by a rotation or
/// reflection of the lobes.
inline double star_polar_angle(double x, double y) { return std::atan2(y, x); }

inline double star_boundary_radius(const StarAnnulus& s, double phi) {
  return (s.r_base + s.delta) + s.delta * std::cos(s.lobes * phi);
}

void validate(const DomainSpec& spec);

/// Point membership test for the fluid region. Boundary points count as
/// fluid (solid is defined by strict inequalities), which fixes the
/// classification of cell centers that land exactly on a boundary circle.
bool contains(const DomainSpec& spec, double x, double y);

/// Per-cell characteristic flag of the solid (penalized) region:
/// true iff the cell center lies outside the fluid domain. Immutable.
struct SolidMask {
  int n = 0;
  std::vector<std::uint8_t> solid;

  bool is_solid(int i, int j) const { return solid[static_cast<std::size_t>(i + n * j)] != 0; }
  bool is_solid(int idx) const { return solid[static_cast<std::size_t>(idx)] != 0; }
  int solid_count() const;
};

SolidMask build_mask(const TorusGrid& grid, const DomainSpec& spec);

/// h^2 times the number of fluid cells.
double fluid_volume(const SolidMask& mask, const TorusGrid& grid);

} // namespace nsfpen
