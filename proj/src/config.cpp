#include "ffheat/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ffheat/errors.hpp"

namespace ffheat {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    throw ConfigError(key + ": expected a finite number, got '" + value + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
  return i;
}

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_double(key, trim(item)));
  }
  if (out.empty()) {
    throw ConfigError(key + ": expected a comma-separated list of numbers");
  }
  return out;
}

template <class Enum>
Enum parse_enum(const std::string& key, const std::string& value,
                std::initializer_list<std::pair<const char*, Enum>> table) {
  for (const auto& [name, v] : table) {
    if (value == name) return v;
  }
  std::string allowed;
  for (const auto& [name, v] : table) {
    if (!allowed.empty()) allowed += "|";
    allowed += name;
  }
  throw ConfigError(key + ": expected one of {" + allowed + "}, got '" + value +
                    "'");
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "kappa",
      "schedule.L0",
      "schedule.epsilon",
      "schedule.alpha_bar",
      "schedule.T_standard",
      "schedule.shape",
      "profile.x0",
      "profile.sigma",
      "numerics.n_max",
      "numerics.quad_points",
      "numerics.M",
      "numerics.dt",
      "numerics.tail_tol",
      "numerics.decay_model",
      "numerics.theta_exponent",
      "numerics.basis_normalization",
      "output.sample_times",
      "output.num_sample_times",
      "output.x_resolution",
      "output.dir",
      "mode",
      "solver",
  };
  return keys;
}

}  // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value) {
  if (known_keys().count(key) == 0) {
    throw ConfigError("unknown key '" + key + "'");
  }
  if (key == "kappa") {
    cfg.kappa = parse_double(key, value);
  } else if (key == "schedule.L0") {
    cfg.schedule.L0 = parse_double(key, value);
  } else if (key == "schedule.epsilon") {
    cfg.schedule.epsilon = parse_double(key, value);
  } else if (key == "schedule.alpha_bar") {
    cfg.schedule.alpha_bar = parse_double(key, value);
  } else if (key == "schedule.T_standard") {
    cfg.schedule.T_standard = parse_double(key, value);
  } else if (key == "schedule.shape") {
    cfg.schedule.shape = parse_enum<AlphaShape>(
        key, value,
        {{"cosine", AlphaShape::cosine}, {"constant", AlphaShape::constant}});
  } else if (key == "profile.x0") {
    cfg.profile.x0 = parse_double(key, value);
  } else if (key == "profile.sigma") {
    cfg.profile.sigma = parse_double(key, value);
  } else if (key == "numerics.n_max") {
    cfg.numerics.n_max = parse_int(key, value);
  } else if (key == "numerics.quad_points") {
    cfg.numerics.quad_points = parse_int(key, value);
  } else if (key == "numerics.M") {
    cfg.numerics.grid_cells = parse_int(key, value);
  } else if (key == "numerics.dt") {
    cfg.numerics.dt = parse_double(key, value);
  } else if (key == "numerics.tail_tol") {
    cfg.numerics.tail_tol = parse_double(key, value);
  } else if (key == "numerics.decay_model") {
    cfg.numerics.decay_model = parse_enum<DecayModel>(
        key, value,
        {{"literal", DecayModel::literal},
         {"integrated", DecayModel::integrated}});
  } else if (key == "numerics.theta_exponent") {
    cfg.numerics.theta_exponent = parse_enum<ThetaExponent>(
        key, value,
        {{"epsilon", ThetaExponent::epsilon},
         {"velocity", ThetaExponent::velocity}});
  } else if (key == "numerics.basis_normalization") {
    cfg.numerics.basis_normalization = parse_enum<BasisNormalization>(
        key, value,
        {{"normalized", BasisNormalization::normalized},
         {"raw", BasisNormalization::raw}});
  } else if (key == "output.sample_times") {
    cfg.output.sample_times = parse_double_list(key, value);
  } else if (key == "output.num_sample_times") {
    cfg.output.num_sample_times = parse_int(key, value);
  } else if (key == "output.x_resolution") {
    cfg.output.x_resolution = parse_int(key, value);
  } else if (key == "output.dir") {
    cfg.output.directory = value;
  } else if (key == "mode") {
    cfg.mode = parse_enum<RunMode>(key, value,
                                   {{"standard", RunMode::standard},
                                    {"fast_forward", RunMode::fast_forward},
                                    {"both", RunMode::both}});
  } else if (key == "solver") {
    cfg.solver = parse_enum<SolverKind>(key, value,
                                        {{"series", SolverKind::series},
                                         {"grid", SolverKind::grid},
                                         {"both", SolverKind::both}});
  }
  cfg.defaulted_keys.erase(key);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  RunConfig cfg;
  cfg.defaulted_keys = known_keys();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected key=value, got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    try {
      apply_config_entry(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  cfg.validate();
  return cfg;
}

void RunConfig::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw ConfigError("kappa must be > 0 (got " + std::to_string(kappa) + ")");
  }
  schedule.validate();
  if (!(profile.sigma > 0.0)) {
    throw ConfigError("profile.sigma must be > 0 (got " +
                      std::to_string(profile.sigma) + ")");
  }
  if (!(profile.x0 > 0.0) || !(profile.x0 < schedule.L0)) {
    throw ConfigError("profile.x0 must lie inside (0, L0) (got " +
                      std::to_string(profile.x0) + ")");
  }
  if (numerics.n_max < 1) {
    throw ConfigError("numerics.n_max must be >= 1");
  }
  if (numerics.quad_points < 10 * numerics.n_max) {
    throw ConfigError("numerics.quad_points must be >= 10*n_max = " +
                      std::to_string(10 * numerics.n_max));
  }
  if (numerics.grid_cells < 16) {
    throw ConfigError("numerics.M must be >= 16 (got " +
                      std::to_string(numerics.grid_cells) + ")");
  }
  if (!(numerics.dt >= 0.0)) {
    throw ConfigError("numerics.dt must be >= 0 (0 = auto)");
  }
  if (!(numerics.tail_tol > 0.0)) {
    throw ConfigError("numerics.tail_tol must be > 0");
  }
  if (output.x_resolution < 2) {
    throw ConfigError("output.x_resolution must be >= 2");
  }
  if (output.sample_times.empty() && output.num_sample_times < 1) {
    throw ConfigError("output.num_sample_times must be >= 1");
  }
  const double horizon =
      mode == RunMode::standard ? schedule.T_standard : schedule.t_ff();
  const auto times = resolved_sample_times();
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || times[i] > horizon * (1.0 + 1e-12)) {
      throw ConfigError("output.sample_times must lie in [0, " +
                        std::to_string(horizon) + "] (got " +
                        std::to_string(times[i]) + ")");
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw ConfigError("output.sample_times must be strictly increasing");
    }
  }
}

double RunConfig::resolved_dt() const {
  if (numerics.dt > 0.0) return numerics.dt;
  return schedule.t_ff() / 4096.0;
}

std::vector<double> RunConfig::resolved_sample_times() const {
  if (!output.sample_times.empty()) return output.sample_times;
  const int n = output.num_sample_times;
  std::vector<double> times(static_cast<std::size_t>(n));
  const double t_ff = schedule.t_ff();
  if (n == 1) {
    times[0] = 0.0;
    return times;
  }
  for (int k = 0; k < n; ++k) {
    times[k] = t_ff * k / (n - 1);
  }
  return times;
}

ProtocolConfig RunConfig::protocol() const {
  return ProtocolConfig{numerics.decay_model, numerics.theta_exponent,
                        numerics.basis_normalization};
}

RunConfig preset_config(const std::string& name) {
  RunConfig cfg;  // defaults are already the paper parameter set
  cfg.defaulted_keys = known_keys();
  cfg.assumed_keys = {"schedule.T_standard", "profile.x0", "profile.sigma"};
  if (name == "fig1") {
    // temperature profiles: a handful of matched slices, series solutions
    cfg.solver = SolverKind::series;
    cfg.output.num_sample_times = 9;
    cfg.output.x_resolution = 257;
  } else if (name == "fig2") {
    // heat flux: dense time sampling, series and grid solutions
    cfg.solver = SolverKind::both;
    cfg.output.num_sample_times = 129;
    cfg.output.x_resolution = 257;
  } else if (name == "fig3") {
    // flux contours: dense in both coordinates
    cfg.solver = SolverKind::both;
    cfg.output.num_sample_times = 161;
    cfg.output.x_resolution = 257;
  } else {
    throw ConfigError("unknown preset '" + name +
                      "' (expected fig1|fig2|fig3)");
  }
  cfg.validate();
  return cfg;
}

std::string to_string(RunMode m) {
  switch (m) {
    case RunMode::standard: return "standard";
    case RunMode::fast_forward: return "fast_forward";
    case RunMode::both: return "both";
  }
  return "?";
}
std::string to_string(SolverKind s) {
  switch (s) {
    case SolverKind::series: return "series";
    case SolverKind::grid: return "grid";
    case SolverKind::both: return "both";
  }
  return "?";
}
std::string to_string(DecayModel m) {
  return m == DecayModel::literal ? "literal" : "integrated";
}
std::string to_string(ThetaExponent e) {
  return e == ThetaExponent::epsilon ? "epsilon" : "velocity";
}
std::string to_string(BasisNormalization b) {
  return b == BasisNormalization::normalized ? "normalized" : "raw";
}
std::string to_string(AlphaShape s) {
  return s == AlphaShape::cosine ? "cosine" : "constant";
}

}  // namespace ffheat
