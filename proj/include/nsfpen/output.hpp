#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsfpen/analysis.hpp"
#include "nsfpen/grid.hpp"
#include "nsfpen/solver.hpp"

namespace nsfpen {

class OutputError : public std::runtime_error {
 public:
  explicit OutputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// One legacy-VTK structured-points snapshot: cell data rho, theta, u1, u2,
/// mask on the [-1,1]^2 grid, 17 significant digits, row-major cell order.
struct VtkSnapshot {
  double time = 0.0;
  int n = 0;
  double h = 0.0;
  ScalarField rho, theta, u1, u2, mask;
};

void write_vtk(const std::string& path, double time, const GridDims& g,
               const PrimitiveFields& fields, const SolidMask& mask);
VtkSnapshot read_vtk(const std::string& path);

void write_diagnostics_csv(const std::string& path, const DiagnosticsSeries& series);
DiagnosticsSeries read_diagnostics_csv(const std::string& path);

/// Rows are written sorted by (experiment, field, N, epsilon); a run that
/// failed leaves the marker `failed` in its error cells.
void write_errors_csv(const std::string& path, std::vector<ErrorRecord> records);
std::vector<ErrorRecord> read_errors_csv(const std::string& path);

/// One successive-pair rate row per direction; `undefined` marks a pair
/// without a defined rate (missing curve point, failed run, nonpositive
/// error).
struct EocRecord {
  std::string experiment;
  std::string field;
  int pair = 0; // 1-based successive-pair index
  std::optional<double> rate_h;
  std::optional<double> rate_eps;
};

void write_eoc_csv(const std::string& path, const std::vector<EocRecord>& records);
std::vector<EocRecord> read_eoc_csv(const std::string& path);

} // namespace nsfpen
