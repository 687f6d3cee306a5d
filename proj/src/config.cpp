#include "nsfpen/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "nsfpen/textio.hpp"

namespace nsfpen {

namespace {

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string token;
  std::stringstream ss(value);
  while (std::getline(ss, token, ',')) out.push_back(trim(token));
  return out;
}

double parse_double_value(const std::string& key, const std::string& value) {
  try {
    return parse_double_token(value, key);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

int parse_int_value(const std::string& key, const std::string& value) {
  long long v = 0;
  try {
    v = parse_int_token(value, key);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
  if (v < -(1LL << 31) || v > (1LL << 31) - 1)
    throw ConfigError("config key '" + key + "': value out of range");
  return static_cast<int>(v);
}

[[noreturn]] void fail_positive(const std::string& key) {
  throw ConfigError("config key '" + key + "' must be positive");
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  SweepConfig sweep;
  bool any_sweep_key = false;
  std::map<std::string, bool> seen;

  std::stringstream lines(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    if (seen[key]) throw ConfigError("config key '" + key + "' given more than once");
    seen[key] = true;

    if (key == "experiment") {
      c.experiment = value;
    } else if (key == "N") {
      c.n = parse_int_value(key, value);
    } else if (key == "epsilon") {
      c.epsilon = parse_double_value(key, value);
    } else if (key == "dt") {
      c.dt = parse_double_value(key, value);
    } else if (key == "t_final") {
      c.t_final = parse_double_value(key, value);
    } else if (key == "alpha") {
      c.alpha = parse_double_value(key, value);
    } else if (key == "gamma") {
      c.gamma = parse_double_value(key, value);
    } else if (key == "mu") {
      c.mu = parse_double_value(key, value);
    } else if (key == "lambda") {
      c.lambda = parse_double_value(key, value);
    } else if (key == "kappa") {
      c.kappa = parse_double_value(key, value);
    } else if (key == "k") {
      c.k = parse_int_value(key, value);
    } else if (key == "output_dir") {
      c.output_dir = value;
    } else if (key == "dump_every") {
      c.dump_every = parse_int_value(key, value);
    } else if (key == "workers") {
      c.workers = parse_int_value(key, value);
    } else if (key == "N_list") {
      for (const std::string& tok : split_list(value)) sweep.n_list.push_back(parse_int_value(key, tok));
      any_sweep_key = true;
    } else if (key == "epsilon_list") {
      for (const std::string& tok : split_list(value))
        sweep.epsilon_list.push_back(parse_double_value(key, tok));
      any_sweep_key = true;
    } else if (key == "N_ref") {
      sweep.n_ref = parse_int_value(key, value);
      any_sweep_key = true;
    } else if (key == "epsilon_ref") {
      sweep.epsilon_ref = parse_double_value(key, value);
      any_sweep_key = true;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  if (any_sweep_key) c.sweep = std::move(sweep);
  validate(c);
  return c;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void validate(const RunConfig& c) {
  if (c.experiment.empty()) throw ConfigError("config key 'experiment' is required");
  if (c.experiment != "exp1" && c.experiment != "exp2" && c.experiment != "exp3" &&
      c.experiment != "exp4")
    throw ConfigError("config key 'experiment' must be one of exp1, exp2, exp3, exp4 (got '" +
                      c.experiment + "')");
  if (c.n < 2) throw ConfigError("config key 'N' must be an integer >= 2");
  if (!(c.epsilon > 0.0)) fail_positive("epsilon");
  if (!(c.dt > 0.0)) fail_positive("dt");
  if (c.t_final && !(*c.t_final > 0.0)) fail_positive("t_final");
  if (!(c.alpha > 0.0 && c.alpha < 1.0))
    throw ConfigError("config key 'alpha' must lie strictly between 0 and 1");
  if (!(c.gamma > 1.0)) throw ConfigError("config key 'gamma' must exceed 1");
  if (!(c.mu > 0.0)) fail_positive("mu");
  if (!(c.lambda > 0.0)) fail_positive("lambda");
  if (!(c.kappa > 0.0)) fail_positive("kappa");
  if (c.k < 1) throw ConfigError("config key 'k' must be an integer >= 1");
  if (c.output_dir.empty()) throw ConfigError("config key 'output_dir' must not be empty");
  if (c.dump_every < 1) throw ConfigError("config key 'dump_every' must be an integer >= 1");
  if (c.workers < 1) throw ConfigError("config key 'workers' must be an integer >= 1");
  if (c.sweep) {
    const SweepConfig& s = *c.sweep;
    if (s.n_list.empty()) throw ConfigError("config key 'N_list' is required for sweeps");
    if (s.epsilon_list.empty())
      throw ConfigError("config key 'epsilon_list' is required for sweeps");
    for (int n : s.n_list)
      if (n < 2) throw ConfigError("config key 'N_list' entries must be integers >= 2");
    for (double e : s.epsilon_list)
      if (!(e > 0.0)) fail_positive("epsilon_list");
    if (s.n_ref < 2) throw ConfigError("config key 'N_ref' must be an integer >= 2");
    if (!(s.epsilon_ref > 0.0)) fail_positive("epsilon_ref");
    for (int n : s.n_list)
      if (s.n_ref % n != 0)
        throw ConfigError("config key 'N_ref' must be a multiple of every N_list entry (fails for " +
                          std::to_string(n) + ")");
  }
}

std::string write_config_text(const RunConfig& c) {
  std::ostringstream out;
  out << "experiment = " << c.experiment << "\n";
  out << "N = " << c.n << "\n";
  out << "epsilon = " << format_g17(c.epsilon) << "\n";
  out << "dt = " << format_g17(c.dt) << "\n";
  if (c.t_final) out << "t_final = " << format_g17(*c.t_final) << "\n";
  out << "alpha = " << format_g17(c.alpha) << "\n";
  out << "gamma = " << format_g17(c.gamma) << "\n";
  out << "mu = " << format_g17(c.mu) << "\n";
  out << "lambda = " << format_g17(c.lambda) << "\n";
  out << "kappa = " << format_g17(c.kappa) << "\n";
  out << "k = " << c.k << "\n";
  out << "output_dir = " << c.output_dir << "\n";
  out << "dump_every = " << c.dump_every << "\n";
  out << "workers = " << c.workers << "\n";
  if (c.sweep) {
    const SweepConfig& s = *c.sweep;
    out << "N_list = ";
    for (std::size_t i = 0; i < s.n_list.size(); ++i)
      out << (i ? ", " : "") << s.n_list[i];
    out << "\n";
    out << "epsilon_list = ";
    for (std::size_t i = 0; i < s.epsilon_list.size(); ++i)
      out << (i ? ", " : "") << format_g17(s.epsilon_list[i]);
    out << "\n";
    out << "N_ref = " << s.n_ref << "\n";
    out << "epsilon_ref = " << format_g17(s.epsilon_ref) << "\n";
  }
  return out.str();
}

void write_config(const RunConfig& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write config file '" + path + "'");
  out << write_config_text(c);
}

} // namespace nsfpen
