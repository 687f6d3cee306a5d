#include "nsfpen/runner.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "nsfpen/analysis.hpp"
#include "nsfpen/operators.hpp"
#include "nsfpen/output.hpp"
#include "nsfpen/scenario.hpp"
#include "nsfpen/solver.hpp"
#include "nsfpen/textio.hpp"

namespace nsfpen {

namespace {

namespace fs = std::filesystem;

std::string step_tag(long step) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%08ld", step);
  return std::string(buf);
}

std::string job_tag(int n, double epsilon) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "N%d_eps%.9g", n, epsilon);
  return std::string(buf);
}

struct PreparedRun {
  TorusGrid grid;
  Scenario scenario;
  RunParams params;
};

PreparedRun prepare(const RunConfig& c, int n, double epsilon) {
  Scenario scenario = scenario_by_name(c.experiment);
  TorusGrid grid = build_grid(n);
  RunParams params;
  params.dt = c.dt;
  params.t_final = c.t_final ? *c.t_final : scenario.t_final;
  params.alpha = c.alpha;
  params.gas = GasModel{c.gamma};
  params.transport = TransportCoeffs{c.mu, c.lambda, c.kappa};
  params.penalty.epsilon = epsilon;
  params.penalty.k = c.k;
  params.penalty.mask = build_mask(grid, scenario.domain);
  params.penalty.theta_B = build_theta_B(scenario, grid);
  params.gravity = scenario.gravity;
  params.diag_every = c.dump_every;
  return PreparedRun{grid, std::move(scenario), std::move(params)};
}

/// Runs one job and writes its VTK snapshots plus diagnostics.csv into dir.
RunResult execute(const PreparedRun& pr, const RunConfig& c, const fs::path& dir,
                  ThreadPool& pool) {
  fs::create_directories(dir);
  Solver solver(pr.grid, pr.params, &pool);
  const State initial = project_initial(pr.scenario, pr.grid, pr.params.gas);
  RunHooks hooks;
  hooks.dump_every = c.dump_every;
  const GridDims dims = pr.grid.dims();
  hooks.on_dump = [&](const State& s, long step, double time) {
    const PrimitiveFields f = primitive_fields(s, pr.params.gas);
    write_vtk((dir / ("fields_" + step_tag(step) + ".vtk")).string(), time, dims, f,
              pr.params.penalty.mask);
  };
  RunResult res = solver.run(initial, hooks);
  write_diagnostics_csv((dir / "diagnostics.csv").string(), res.series);
  return res;
}

} // namespace

std::string resolve_output_dir(const RunConfig& config) {
  const char* env = std::getenv("NSFPEN_OUTPUT_DIR");
  if (env != nullptr && env[0] != '\0') return std::string(env);
  return config.output_dir;
}

int cmd_run(const RunConfig& config) {
  try {
    const fs::path dir = resolve_output_dir(config);
    const PreparedRun pr = prepare(config, config.n, config.epsilon);
    ThreadPool pool(config.workers);
    const RunResult res = execute(pr, config, dir, pool);
    std::cout << "run " << config.experiment << " N=" << config.n
              << " epsilon=" << format_g17(config.epsilon) << ": " << res.steps
              << " steps to t=" << format_g17(res.time) << ", outputs in " << dir.string() << "\n";
    return 0;
  } catch (const SchemeFailure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_sweep(const RunConfig& config) {
  try {
    if (!config.sweep)
      throw ConfigError("sweep requires the N_list, epsilon_list, N_ref, epsilon_ref keys");
    const SweepConfig& sw = *config.sweep;

    std::vector<int> n_list = sw.n_list;
    std::sort(n_list.begin(), n_list.end());
    n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
    std::vector<double> eps_list = sw.epsilon_list;
    std::sort(eps_list.begin(), eps_list.end(), std::greater<>());
    eps_list.erase(std::unique(eps_list.begin(), eps_list.end()), eps_list.end());

    // Deduplicated union of swept pairs and the two reference families.
    std::vector<std::pair<int, double>> jobs;
    auto add_job = [&](int n, double e) {
      for (const auto& j : jobs)
        if (j.first == n && j.second == e) return;
      jobs.emplace_back(n, e);
    };
    for (int n : n_list)
      for (double e : eps_list) add_job(n, e);
    for (double e : eps_list) add_job(sw.n_ref, e);
    for (int n : n_list) add_job(n, sw.epsilon_ref);
    std::sort(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second > b.second;
    });

    const fs::path dir = resolve_output_dir(config);
    fs::create_directories(dir);
    ThreadPool pool(config.workers);

    std::map<std::pair<int, double>, RunSolution> solutions;
    int failures = 0;
    for (const auto& [n, eps] : jobs) {
      const std::string tag = job_tag(n, eps);
      std::cout << "sweep job " << tag << " ..." << std::flush;
      try {
        const PreparedRun pr = prepare(config, n, eps);
        const RunResult res = execute(pr, config, dir / "runs" / tag, pool);
        RunSolution sol;
        sol.experiment = config.experiment;
        sol.n = n;
        sol.epsilon = eps;
        sol.t_final = pr.params.t_final;
        sol.fields = primitive_fields(res.state, pr.params.gas);
        solutions.emplace(std::make_pair(n, eps), std::move(sol));
        std::cout << " done (" << res.steps << " steps)\n";
      } catch (const SchemeFailure& e) {
        ++failures;
        std::cout << " FAILED\n";
        std::cerr << "sweep job " << tag << " failed: " << e.what() << "\n";
      }
    }

    auto find_sol = [&](int n, double e) -> const RunSolution* {
      const auto it = solutions.find(std::make_pair(n, e));
      return it == solutions.end() ? nullptr : &it->second;
    };

    const char* field_names[3] = {"rho", "u", "theta"};
    auto field_of = [](const FieldErrors& fe, int which) {
      return which == 0 ? fe.rho : (which == 1 ? fe.u : fe.theta);
    };

    std::map<std::pair<int, double>, FieldErrors> e_table, p_table;
    std::vector<ErrorRecord> records;
    for (int n : n_list) {
      for (double eps : eps_list) {
        const RunSolution* run = find_sol(n, eps);
        const RunSolution* ref_h = find_sol(sw.n_ref, eps);
        const RunSolution* ref_e = find_sol(n, sw.epsilon_ref);
        std::optional<FieldErrors> e_err, p_err;
        if (run != nullptr && ref_h != nullptr) e_err = compute_E(*run, *ref_h);
        if (run != nullptr && ref_e != nullptr) p_err = compute_P(*run, *ref_e);
        if (e_err) e_table.emplace(std::make_pair(n, eps), *e_err);
        if (p_err) p_table.emplace(std::make_pair(n, eps), *p_err);
        for (int f = 0; f < 3; ++f) {
          ErrorRecord rec;
          rec.experiment = config.experiment;
          rec.field = field_names[f];
          rec.n = n;
          rec.h = 2.0 / n;
          rec.epsilon = eps;
          if (e_err) rec.error_E = field_of(*e_err, f);
          if (p_err) rec.error_P = field_of(*p_err, f);
          records.push_back(std::move(rec));
        }
      }
    }
    write_errors_csv((dir / "errors.csv").string(), records);

    // EOC rows: mesh rates along the E-curve at the smallest epsilon (the
    // nearest to the reference limit), penalty rates along the P-curve at
    // the largest N.
    auto pair_rate = [](double p0, std::optional<double> e0, double p1,
                        std::optional<double> e1) -> std::optional<double> {
      if (!e0 || !e1) return std::nullopt;
      return eoc({{p0, *e0}, {p1, *e1}})[0];
    };
    std::vector<EocRecord> eoc_records;
    const double eps_min = eps_list.back();
    const int n_max = n_list.back();
    for (int f = 0; f < 3; ++f) {
      const std::size_t h_pairs = n_list.size() >= 2 ? n_list.size() - 1 : 0;
      const std::size_t e_pairs = eps_list.size() >= 2 ? eps_list.size() - 1 : 0;
      const std::size_t rows = std::max(h_pairs, e_pairs);
      for (std::size_t i = 0; i < rows; ++i) {
        EocRecord rec;
        rec.experiment = config.experiment;
        rec.field = field_names[f];
        rec.pair = static_cast<int>(i + 1);
        if (i < h_pairs) {
          auto lookup = [&](int n) -> std::optional<double> {
            const auto it = e_table.find(std::make_pair(n, eps_min));
            if (it == e_table.end()) return std::nullopt;
            return field_of(it->second, f);
          };
          rec.rate_h = pair_rate(2.0 / n_list[i], lookup(n_list[i]), 2.0 / n_list[i + 1],
                                 lookup(n_list[i + 1]));
        }
        if (i < e_pairs) {
          auto lookup = [&](double eps) -> std::optional<double> {
            const auto it = p_table.find(std::make_pair(n_max, eps));
            if (it == p_table.end()) return std::nullopt;
            return field_of(it->second, f);
          };
          rec.rate_eps = pair_rate(eps_list[i], lookup(eps_list[i]), eps_list[i + 1],
                                   lookup(eps_list[i + 1]));
        }
        eoc_records.push_back(std::move(rec));
      }
    }
    write_eoc_csv((dir / "eoc.csv").string(), eoc_records);

    std::cout << "sweep complete: " << jobs.size() << " jobs, " << failures
              << " failed; tables in " << dir.string() << "\n";
    return failures == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

bool report(const char* name, bool ok, const std::string& detail = "") {
  std::cout << "check " << name << ": " << (ok ? "pass" : "FAIL") << (detail.empty() ? "" : " ")
            << detail << "\n";
  return ok;
}

ScalarField random_scalar(int n, std::mt19937& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  ScalarField f(n);
  for (double& v : f.v) v = dist(rng);
  return f;
}

VectorField random_vector(int n, std::mt19937& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  VectorField f(n);
  for (double& v : f.x) v = dist(rng);
  for (double& v : f.y) v = dist(rng);
  return f;
}

bool check_adjointness() {
  std::mt19937 rng(12345);
  const int n = 16;
  const GridDims g{n, 2.0 / n};
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const ScalarField r = random_scalar(n, rng, -1.0, 1.0);
    const VectorField v = random_vector(n, rng, -1.0, 1.0);
    const ScalarField dv = ops::div(g, v);
    const VectorField gr = ops::grad(g, r);
    const std::size_t count = r.size();
    const double lhs = g.cell_volume() * pairwise_sum_of(count, [&](std::size_t c) {
      return r.v[c] * dv.v[c];
    });
    const double rhs = g.cell_volume() * pairwise_sum_of(count, [&](std::size_t c) {
      return gr.x[c] * v.x[c] + gr.y[c] * v.y[c];
    });
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    worst = std::max(worst, std::abs(lhs + rhs) / scale);
  }
  return report("div/grad adjointness", worst <= 1e-12, "residual " + format_g17(worst));
}

bool check_constants() {
  const int n = 12;
  const GridDims g{n, 2.0 / n};
  const ScalarField r(n, 3.25);
  const VectorField gr = ops::grad(g, r);
  bool ok = true;
  for (std::size_t c = 0; c < gr.size(); ++c) ok = ok && gr.x[c] == 0.0 && gr.y[c] == 0.0;
  return report("constant annihilation", ok);
}

bool check_conservativity() {
  std::mt19937 rng(54321);
  const int n = 16;
  const GridDims g{n, 2.0 / n};
  const ScalarField r = random_scalar(n, rng, 0.5, 2.0);
  const VectorField v = random_vector(n, rng, -1.0, 1.0);
  const ScalarField d = ops::upwind_div(g, r, v, 0.6);
  const double total = g.cell_volume() * pairwise_sum(d.v);
  return report("upwind conservativity", std::abs(total) <= 1e-13, "sum " + format_g17(total));
}

bool check_upwind_example() {
  const GridDims g{4, 1.0};
  ScalarField r(4);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) r(i, j) = static_cast<double>(i + 1);
  const VectorField v(4, 1.0, 0.0);
  const ScalarField d = ops::upwind_div(g, r, v, 0.6); // h=1 so the flux coefficient is 1
  const double expect[4] = {-7.0, 1.0, 1.0, 5.0};
  bool ok = true;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) ok = ok && d(i, j) == expect[i];
  return report("upwind worked example", ok);
}

bool check_equilibrium() {
  const Scenario sc = experiment1();
  const TorusGrid grid = build_grid(8);
  RunParams params;
  params.dt = 1e-5;
  params.t_final = 1e-4;
  params.penalty.epsilon = 1e-2;
  params.penalty.mask = build_mask(grid, sc.domain);
  params.penalty.theta_B = ScalarField(8, 1.0);
  State s(8);
  const double cv = params.gas.cv();
  for (std::size_t c = 0; c < s.size(); ++c) {
    s.rho.v[c] = 1.0;
    s.mom.x[c] = 0.0;
    s.mom.y[c] = 0.0;
    s.rho_e.v[c] = cv;
  }
  const State before = s;
  Solver solver(grid, params, nullptr);
  for (int step = 0; step < 10; ++step) solver.euler_step(s);
  bool ok = true;
  for (std::size_t c = 0; c < s.size(); ++c) {
    ok = ok && s.rho.v[c] == before.rho.v[c] && s.mom.x[c] == before.mom.x[c] &&
         s.mom.y[c] == before.mom.y[c] && s.rho_e.v[c] == before.rho_e.v[c];
  }
  return report("equilibrium fixed point", ok);
}

bool check_config_round_trip() {
  RunConfig c;
  c.experiment = "exp2";
  c.n = 24;
  c.epsilon = 1e-3;
  c.dt = 2e-6;
  c.t_final = 0.015;
  c.workers = 3;
  SweepConfig sw;
  sw.n_list = {12, 24};
  sw.epsilon_list = {0.1, 0.01};
  sw.n_ref = 48;
  sw.epsilon_ref = 1e-3;
  c.sweep = sw;
  const RunConfig back = parse_config_text(write_config_text(c));
  return report("config round trip", back == c);
}

bool check_vtk_round_trip(const fs::path& dir) {
  const Scenario sc = experiment1();
  const TorusGrid grid = build_grid(6);
  const GasModel gas;
  const State s = project_initial(sc, grid, gas);
  const SolidMask mask = build_mask(grid, sc.domain);
  const PrimitiveFields f = primitive_fields(s, gas);
  const std::string path = (dir / "check.vtk").string();
  write_vtk(path, 0.125, grid.dims(), f, mask);
  const VtkSnapshot snap = read_vtk(path);
  bool ok = snap.time == 0.125 && snap.n == 6 && snap.h == grid.h();
  for (std::size_t c = 0; ok && c < f.rho.size(); ++c) {
    ok = snap.rho.v[c] == f.rho.v[c] && snap.theta.v[c] == f.theta.v[c] &&
         snap.u1.v[c] == f.u.x[c] && snap.u2.v[c] == f.u.y[c] &&
         snap.mask.v[c] == (mask.solid[c] ? 1.0 : 0.0);
  }
  return report("field snapshot round trip", ok);
}

bool check_diagnostics_round_trip(const fs::path& dir) {
  DiagnosticsSeries series;
  DiagnosticsRecord r;
  r.step = 7;
  r.time = 0.07;
  r.total_mass = 3.9999999999999996;
  r.total_momentum_x = -1.25e-17;
  r.total_energy = 10.5;
  r.ballistic_energy = 9.875;
  r.solid_kinetic = 1e-9;
  r.solid_theta_mismatch = 2e-12;
  r.advisory_adv = 0.01;
  r.advisory_diff = 0.002;
  r.advisory_pen = 0.3;
  series.push_back(r);
  const std::string path = (dir / "check_diag.csv").string();
  write_diagnostics_csv(path, series);
  const DiagnosticsSeries back = read_diagnostics_csv(path);
  bool ok = back.size() == 1;
  if (ok) {
    const DiagnosticsRecord& b = back[0];
    ok = b.step == r.step && b.time == r.time && b.total_mass == r.total_mass &&
         b.total_momentum_x == r.total_momentum_x && b.total_momentum_y == r.total_momentum_y &&
         b.total_energy == r.total_energy && b.ballistic_energy == r.ballistic_energy &&
         b.solid_kinetic == r.solid_kinetic && b.solid_theta_mismatch == r.solid_theta_mismatch &&
         b.advisory_adv == r.advisory_adv && b.advisory_diff == r.advisory_diff &&
         b.advisory_pen == r.advisory_pen;
  }
  return report("diagnostics round trip", ok);
}

} // namespace

int cmd_check() {
  try {
    const fs::path dir = fs::temp_directory_path() / ("nsfpen-check-" + std::to_string(getpid()));
    fs::create_directories(dir);
    bool ok = true;
    ok = check_adjointness() && ok;
    ok = check_constants() && ok;
    ok = check_conservativity() && ok;
    ok = check_upwind_example() && ok;
    ok = check_equilibrium() && ok;
    ok = check_config_round_trip() && ok;
    ok = check_vtk_round_trip(dir) && ok;
    ok = check_diagnostics_round_trip(dir) && ok;
    fs::remove_all(dir);
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace nsfpen
