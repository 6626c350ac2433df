#pragma once

#include <set>
#include <string>
#include <vector>

#include "ffheat/fastforward.hpp"
#include "ffheat/schedule.hpp"
#include "ffheat/spectral.hpp"

namespace ffheat {

enum class RunMode { standard, fast_forward, both };
enum class SolverKind { series, grid, both };

struct ProfileConfig {
  double x0 = 5.0;
  double sigma = 1.0;
};

struct NumericsConfig {
  int n_max = 64;
  int quad_points = 1024;
  int grid_cells = 512;     // M
  double dt = 0.0;          // 0 resolves to T_ff / 4096
  double tail_tol = 1e-10;
  DecayModel decay_model = DecayModel::literal;
  ThetaExponent theta_exponent = ThetaExponent::epsilon;
  BasisNormalization basis_normalization = BasisNormalization::normalized;
};

struct OutputConfig {
  std::vector<double> sample_times;  // explicit times; empty -> uniform
  int num_sample_times = 9;          // uniform count on [0, T_ff]
  int x_resolution = 257;            // nodes per emitted time slice
  std::string directory;             // empty -> --output-dir / env / cwd
};

struct RunConfig {
  double kappa = 0.5;
  ScheduleConfig schedule;
  ProfileConfig profile;
  NumericsConfig numerics;
  OutputConfig output;
  RunMode mode = RunMode::both;
  SolverKind solver = SolverKind::both;

  // Keys whose values are preset assumptions rather than user input;
  // labeled `assumed=preset` in the manifest.
  std::set<std::string> assumed_keys;
  // Keys never set explicitly (defaults applied); echoed in the manifest.
  std::set<std::string> defaulted_keys;

  // Cross-module invariants; throws ConfigError naming key and constraint.
  void validate() const;

  double resolved_dt() const;
  std::vector<double> resolved_sample_times() const;
  ProtocolConfig protocol() const;
};

// Parses a flat key=value file with dotted section prefixes
// (e.g. schedule.epsilon=0.04). Blank lines and '#' comments are skipped;
// unknown keys are fatal. Errors carry the line number.
RunConfig load_config(const std::string& path);

// Applies `key = value` to cfg; shared by the file parser and unit tests.
void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value);

// Built-in experiment presets fig1 | fig2 | fig3 (paper parameter set
// kappa=0.5, L0=10, epsilon=0.04, alpha_bar=100; T=100, x0=5, sigma=1
// assumed).
RunConfig preset_config(const std::string& name);

// Enum spellings used by the config format, the CLI and the manifest.
std::string to_string(RunMode m);
std::string to_string(SolverKind s);
std::string to_string(DecayModel m);
std::string to_string(ThetaExponent e);
std::string to_string(BasisNormalization b);
std::string to_string(AlphaShape s);

}  // namespace ffheat
