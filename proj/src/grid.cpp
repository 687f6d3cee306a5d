#include "nsfpen/grid.hpp"

namespace nsfpen {

void validate(const DomainSpec& spec) {
  if (const auto* a = std::get_if<Annulus>(&spec)) {
    if (!(a->r_inner > 0.0) || !(a->r_inner < a->r_outer)) {
      throw std::invalid_argument("Annulus: need 0 < r_inner < r_outer");
    }
    if (!(a->r_outer < 1.0)) {
      throw std::invalid_argument("Annulus: r_outer must stay below 1 to fit in the torus");
    }
    return;
  }
  const auto& s = std::get<StarAnnulus>(spec);
  if (!(s.r_inner > 0.0) || !(s.r_base - s.delta > s.r_inner)) {
    throw std::invalid_argument("StarAnnulus: need 0 < r_inner < r_base - delta");
  }
  if (!(s.delta >= 0.0) || s.lobes < 1) {
    throw std::invalid_argument("StarAnnulus: need delta >= 0 and lobes >= 1");
  }
  if (!(s.r_base + 2.0 * s.delta < 1.0)) {
    throw std::invalid_argument("StarAnnulus: outer curve must stay below radius 1");
  }
}

bool contains(const DomainSpec& spec, double x, double y) {
  const double r = std::sqrt(x * x + y * y);
  if (const auto* a = std::get_if<Annulus>(&spec)) {
    return r >= a->r_inner && r <= a->r_outer;
  }
  const auto& s = std::get<StarAnnulus>(spec);
  if (r < s.r_inner) return false;
  const double phi = star_polar_angle(x, y);
  return r <= star_boundary_radius(s, phi);
}

int SolidMask::solid_count() const {
  int c = 0;
  for (std::uint8_t f : solid) c += f;
  return c;
}

SolidMask build_mask(const TorusGrid& grid, const DomainSpec& spec) {
  validate(spec);
  SolidMask mask;
  mask.n = grid.n();
  mask.solid.resize(static_cast<std::size_t>(grid.cell_count()));
  for (int j = 0; j < grid.n(); ++j) {
    const double y = grid.center_y(j);
    for (int i = 0; i < grid.n(); ++i) {
      const double x = grid.center_x(i);
      mask.solid[static_cast<std::size_t>(grid.index(i, j))] =
          contains(spec, x, y) ? 0 : 1;
    }
  }
  return mask;
}

double fluid_volume(const SolidMask& mask, const TorusGrid& grid) {
  if (mask.n != grid.n()) {
    throw std::invalid_argument("fluid_volume: mask/grid size mismatch");
  }
  const int fluid_cells = grid.cell_count() - mask.solid_count();
  return grid.cell_volume() * fluid_cells;
}

} // namespace nsfpen
