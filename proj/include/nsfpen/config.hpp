#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsfpen {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SweepConfig {
  std::vector<int> n_list;
  std::vector<double> epsilon_list;
  int n_ref = 0;
  double epsilon_ref = 0.0;

  bool operator==(const SweepConfig&) const = default;
};

/// Parsed run configuration. Defaults are the reference parameter set
/// (alpha=0.6, gamma=1.4, mu=lambda=kappa=0.001, k=6, dt=1e-6); experiment,
/// N, and epsilon have no defaults and must be present. t_final left unset
/// means "use the experiment's own final time".
struct RunConfig {
  std::string experiment;
  int n = 0;
  double epsilon = 0.0;
  double dt = 1e-6;
  std::optional<double> t_final;
  double alpha = 0.6;
  double gamma = 1.4;
  double mu = 0.001;
  double lambda = 0.001;
  double kappa = 0.001;
  int k = 6;
  std::string output_dir = "out";
  int dump_every = 100;
  int workers = 1;
  std::optional<SweepConfig> sweep;

  bool operator==(const RunConfig&) const = default;
};

/// Reads the flat key/value format: one `key = value` per line, `#` starts a
/// comment, lists are comma-separated. Unknown or duplicate keys and any
/// constraint violation raise ConfigError naming the key.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config(const std::string& path);

/// Inverse of parse_config_text: parse(write(c)) == c.
std::string write_config_text(const RunConfig& c);
void write_config(const RunConfig& c, const std::string& path);

/// Constraint checks shared by both entry points (positivity, ranges).
void validate(const RunConfig& c);

} // namespace nsfpen
