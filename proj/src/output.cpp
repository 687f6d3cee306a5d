#include "nsfpen/output.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "nsfpen/textio.hpp"

namespace nsfpen {

namespace {

constexpr const char* kFailedMarker = "failed";
constexpr const char* kUndefinedMarker = "undefined";
constexpr const char* kDiagnosticsHeader =
    "step,time,total_mass,total_momentum_x,total_momentum_y,total_energy,ballistic_energy,"
    "solid_kinetic,solid_theta_mismatch,advisory_adv,advisory_diff,advisory_pen";
constexpr const char* kErrorsHeader = "experiment,field,N,h,epsilon,error_E,error_P";
constexpr const char* kEocHeader = "experiment,field,pair,rate_h,rate_eps";

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OutputError("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OutputError("cannot open '" + path + "' for reading");
  return in;
}

std::string next_line(std::ifstream& in, const std::string& path, const char* what) {
  std::string line;
  if (!std::getline(in, line))
    throw OutputError(path + ": unexpected end of file (expected " + std::string(what) + ")");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void expect_line(std::ifstream& in, const std::string& path, const std::string& expected) {
  const std::string line = next_line(in, path, expected.c_str());
  if (line != expected)
    throw OutputError(path + ": expected '" + expected + "', got '" + line + "'");
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string token;
  std::stringstream ss(line);
  while (std::getline(ss, token, ',')) out.push_back(token);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_csv_double(const std::string& token, const std::string& path, const char* col) {
  try {
    return parse_double_token(token, col);
  } catch (const std::invalid_argument& e) {
    throw OutputError(path + ": " + e.what());
  }
}

long parse_csv_long(const std::string& token, const std::string& path, const char* col) {
  try {
    return static_cast<long>(parse_int_token(token, col));
  } catch (const std::invalid_argument& e) {
    throw OutputError(path + ": " + e.what());
  }
}

std::string optional_cell(const std::optional<double>& v, const char* marker) {
  return v ? format_g17(*v) : std::string(marker);
}

std::optional<double> parse_optional_cell(const std::string& token, const char* marker,
                                          const std::string& path, const char* col) {
  if (token == marker) return std::nullopt;
  return parse_csv_double(token, path, col);
}

void read_vtk_field(std::ifstream& in, const std::string& path, const std::string& name,
                    ScalarField& out) {
  expect_line(in, path, "SCALARS " + name + " double 1");
  expect_line(in, path, "LOOKUP_TABLE default");
  for (double& v : out.v) {
    if (!(in >> v)) throw OutputError(path + ": truncated data for field " + name);
  }
  in.ignore(); // trailing newline after the last value
}

} // namespace

void write_vtk(const std::string& path, double time, const GridDims& g,
               const PrimitiveFields& fields, const SolidMask& mask) {
  require_same_grid(g.n, fields.rho.n, "write_vtk");
  require_same_grid(g.n, mask.n, "write_vtk");
  std::ofstream out = open_out(path);
  const int n = g.n;
  out << "# vtk DataFile Version 3.0\n";
  out << "nsf-pen t=" << format_g17(time) << "\n";
  out << "ASCII\n";
  out << "DATASET STRUCTURED_POINTS\n";
  out << "DIMENSIONS " << (n + 1) << " " << (n + 1) << " 1\n";
  out << "ORIGIN -1 -1 0\n";
  out << "SPACING " << format_g17(g.h) << " " << format_g17(g.h) << " 1\n";
  out << "CELL_DATA " << static_cast<long>(n) * n << "\n";

  auto write_field = [&](const char* name, auto value_at) {
    out << "SCALARS " << name << " double 1\n";
    out << "LOOKUP_TABLE default\n";
    const std::size_t count = static_cast<std::size_t>(n) * n;
    for (std::size_t c = 0; c < count; ++c) out << value_at(c) << "\n";
  };
  write_field("rho", [&](std::size_t c) { return format_g17(fields.rho.v[c]); });
  write_field("theta", [&](std::size_t c) { return format_g17(fields.theta.v[c]); });
  write_field("u1", [&](std::size_t c) { return format_g17(fields.u.x[c]); });
  write_field("u2", [&](std::size_t c) { return format_g17(fields.u.y[c]); });
  write_field("mask", [&](std::size_t c) { return format_g17(mask.solid[c] ? 1.0 : 0.0); });
  if (!out) throw OutputError("write failed for '" + path + "'");
}

VtkSnapshot read_vtk(const std::string& path) {
  std::ifstream in = open_in(path);
  expect_line(in, path, "# vtk DataFile Version 3.0");
  const std::string title = next_line(in, path, "title line");
  const std::string prefix = "nsf-pen t=";
  if (title.rfind(prefix, 0) != 0)
    throw OutputError(path + ": expected title 'nsf-pen t=<time>', got '" + title + "'");
  VtkSnapshot snap;
  snap.time = parse_csv_double(title.substr(prefix.size()), path, "time");
  expect_line(in, path, "ASCII");
  expect_line(in, path, "DATASET STRUCTURED_POINTS");

  const std::string dims = next_line(in, path, "DIMENSIONS");
  int nx = 0, ny = 0, nz = 0;
  {
    std::stringstream ss(dims);
    std::string word;
    if (!(ss >> word) || word != "DIMENSIONS" || !(ss >> nx >> ny >> nz) || (ss >> word))
      throw OutputError(path + ": malformed '" + dims + "'");
  }
  if (nx != ny || nz != 1 || nx < 3)
    throw OutputError(path + ": unsupported dimensions '" + dims + "'");
  snap.n = nx - 1;
  expect_line(in, path, "ORIGIN -1 -1 0");

  const std::string spacing = next_line(in, path, "SPACING");
  {
    std::stringstream ss(spacing);
    std::string word;
    double hx = 0.0, hy = 0.0, hz = 0.0;
    if (!(ss >> word) || word != "SPACING" || !(ss >> hx >> hy >> hz) || (ss >> word))
      throw OutputError(path + ": malformed '" + spacing + "'");
    if (hx != hy || hz != 1.0)
      throw OutputError(path + ": unsupported spacing '" + spacing + "'");
    snap.h = hx;
  }
  expect_line(in, path, "CELL_DATA " + std::to_string(static_cast<long>(snap.n) * snap.n));

  snap.rho = ScalarField(snap.n);
  snap.theta = ScalarField(snap.n);
  snap.u1 = ScalarField(snap.n);
  snap.u2 = ScalarField(snap.n);
  snap.mask = ScalarField(snap.n);
  read_vtk_field(in, path, "rho", snap.rho);
  read_vtk_field(in, path, "theta", snap.theta);
  read_vtk_field(in, path, "u1", snap.u1);
  read_vtk_field(in, path, "u2", snap.u2);
  read_vtk_field(in, path, "mask", snap.mask);
  return snap;
}

void write_diagnostics_csv(const std::string& path, const DiagnosticsSeries& series) {
  std::ofstream out = open_out(path);
  out << kDiagnosticsHeader << "\n";
  for (const DiagnosticsRecord& r : series) {
    out << r.step << "," << format_g17(r.time) << "," << format_g17(r.total_mass) << ","
        << format_g17(r.total_momentum_x) << "," << format_g17(r.total_momentum_y) << ","
        << format_g17(r.total_energy) << "," << format_g17(r.ballistic_energy) << ","
        << format_g17(r.solid_kinetic) << "," << format_g17(r.solid_theta_mismatch) << ","
        << format_g17(r.advisory_adv) << "," << format_g17(r.advisory_diff) << ","
        << format_g17(r.advisory_pen) << "\n";
  }
  if (!out) throw OutputError("write failed for '" + path + "'");
}

DiagnosticsSeries read_diagnostics_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  expect_line(in, path, kDiagnosticsHeader);
  DiagnosticsSeries series;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv(line);
    if (cells.size() != 12)
      throw OutputError(path + ": expected 12 columns, got " + std::to_string(cells.size()));
    DiagnosticsRecord r;
    r.step = parse_csv_long(cells[0], path, "step");
    r.time = parse_csv_double(cells[1], path, "time");
    r.total_mass = parse_csv_double(cells[2], path, "total_mass");
    r.total_momentum_x = parse_csv_double(cells[3], path, "total_momentum_x");
    r.total_momentum_y = parse_csv_double(cells[4], path, "total_momentum_y");
    r.total_energy = parse_csv_double(cells[5], path, "total_energy");
    r.ballistic_energy = parse_csv_double(cells[6], path, "ballistic_energy");
    r.solid_kinetic = parse_csv_double(cells[7], path, "solid_kinetic");
    r.solid_theta_mismatch = parse_csv_double(cells[8], path, "solid_theta_mismatch");
    r.advisory_adv = parse_csv_double(cells[9], path, "advisory_adv");
    r.advisory_diff = parse_csv_double(cells[10], path, "advisory_diff");
    r.advisory_pen = parse_csv_double(cells[11], path, "advisory_pen");
    series.push_back(r);
  }
  return series;
}

void write_errors_csv(const std::string& path, std::vector<ErrorRecord> records) {
  std::sort(records.begin(), records.end(), [](const ErrorRecord& a, const ErrorRecord& b) {
    return std::tie(a.experiment, a.field, a.n, a.epsilon) <
           std::tie(b.experiment, b.field, b.n, b.epsilon);
  });
  std::ofstream out = open_out(path);
  out << kErrorsHeader << "\n";
  for (const ErrorRecord& r : records) {
    out << r.experiment << "," << r.field << "," << r.n << "," << format_g17(r.h) << ","
        << format_g17(r.epsilon) << "," << optional_cell(r.error_E, kFailedMarker) << ","
        << optional_cell(r.error_P, kFailedMarker) << "\n";
  }
  if (!out) throw OutputError("write failed for '" + path + "'");
}

std::vector<ErrorRecord> read_errors_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  expect_line(in, path, kErrorsHeader);
  std::vector<ErrorRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv(line);
    if (cells.size() != 7)
      throw OutputError(path + ": expected 7 columns, got " + std::to_string(cells.size()));
    ErrorRecord r;
    r.experiment = cells[0];
    r.field = cells[1];
    r.n = static_cast<int>(parse_csv_long(cells[2], path, "N"));
    r.h = parse_csv_double(cells[3], path, "h");
    r.epsilon = parse_csv_double(cells[4], path, "epsilon");
    r.error_E = parse_optional_cell(cells[5], kFailedMarker, path, "error_E");
    r.error_P = parse_optional_cell(cells[6], kFailedMarker, path, "error_P");
    records.push_back(r);
  }
  return records;
}

void write_eoc_csv(const std::string& path, const std::vector<EocRecord>& records) {
  std::ofstream out = open_out(path);
  out << kEocHeader << "\n";
  for (const EocRecord& r : records) {
    out << r.experiment << "," << r.field << "," << r.pair << ","
        << optional_cell(r.rate_h, kUndefinedMarker) << ","
        << optional_cell(r.rate_eps, kUndefinedMarker) << "\n";
  }
  if (!out) throw OutputError("write failed for '" + path + "'");
}

std::vector<EocRecord> read_eoc_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  expect_line(in, path, kEocHeader);
  std::vector<EocRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv(line);
    if (cells.size() != 5)
      throw OutputError(path + ": expected 5 columns, got " + std::to_string(cells.size()));
    EocRecord r;
    r.experiment = cells[0];
    r.field = cells[1];
    r.pair = static_cast<int>(parse_csv_long(cells[2], path, "pair"));
    r.rate_h = parse_optional_cell(cells[3], kUndefinedMarker, path, "rate_h");
    r.rate_eps = parse_optional_cell(cells[4], kUndefinedMarker, path, "rate_eps");
    records.push_back(r);
  }
  return records;
}

} // namespace nsfpen
