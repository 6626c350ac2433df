#include "ffheat/schedule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ffheat/errors.hpp"

namespace ffheat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ConfigError(std::string("schedule.") + name + " must be finite");
  }
}

void require_time_in_window(const ScheduleConfig& cfg, double t,
                            const char* op) {
  if (!(t >= 0.0) || t > cfg.t_ff()) {
    throw std::domain_error(std::string(op) + ": t = " + std::to_string(t) +
                            " outside [0, T_ff = " +
                            std::to_string(cfg.t_ff()) + "]");
  }
}

}  // namespace

void ScheduleConfig::validate() const {
  check_finite(L0, "L0");
  check_finite(epsilon, "epsilon");
  check_finite(alpha_bar, "alpha_bar");
  check_finite(T_standard, "T_standard");
  if (!(L0 > 0.0)) {
    throw ConfigError("schedule.L0 must satisfy L0 > 0 (got " +
                      std::to_string(L0) + ")");
  }
  if (!(epsilon >= 0.0)) {
    throw ConfigError("schedule.epsilon must satisfy epsilon >= 0 (got " +
                      std::to_string(epsilon) + ")");
  }
  if (!(alpha_bar >= 1.0)) {
    throw ConfigError("schedule.alpha_bar must satisfy alpha_bar >= 1 (got " +
                      std::to_string(alpha_bar) + ")");
  }
  if (!(T_standard > 0.0)) {
    throw ConfigError("schedule.T_standard must satisfy T_standard > 0 (got " +
                      std::to_string(T_standard) + ")");
  }
}

double alpha(const ScheduleConfig& cfg, double t) {
  if (!(t >= 0.0)) {
    throw std::domain_error("alpha: t must be >= 0 (got " + std::to_string(t) +
                            ")");
  }
  const double t_ff = cfg.t_ff();
  if (t > t_ff) return 1.0;
  switch (cfg.shape) {
    case AlphaShape::cosine:
      return cfg.alpha_bar -
             (cfg.alpha_bar - 1.0) * std::cos(kTwoPi * t / t_ff);
    case AlphaShape::constant:
      return cfg.alpha_bar;
  }
  throw std::logic_error("alpha: unknown shape");
}

double alpha_rate(const ScheduleConfig& cfg, double t) {
  if (!(t >= 0.0)) {
    throw std::domain_error("alpha_rate: t must be >= 0 (got " +
                            std::to_string(t) + ")");
  }
  const double t_ff = cfg.t_ff();
  if (t > t_ff || cfg.shape == AlphaShape::constant) return 0.0;
  return (cfg.alpha_bar - 1.0) * (kTwoPi / t_ff) * std::sin(kTwoPi * t / t_ff);
}

double advanced_time(const ScheduleConfig& cfg, double t) {
  require_time_in_window(cfg, t, "advanced_time");
  switch (cfg.shape) {
    case AlphaShape::cosine: {
      const double t_ff = cfg.t_ff();
      return cfg.alpha_bar * t -
             (cfg.alpha_bar - 1.0) * (t_ff / kTwoPi) *
                 std::sin(kTwoPi * t / t_ff);
    }
    case AlphaShape::constant:
      return cfg.alpha_bar * t;
  }
  throw std::logic_error("advanced_time: unknown shape");
}

double wall_position(const ScheduleConfig& cfg, double t, Clock clock) {
  switch (clock) {
    case Clock::standard:
      if (!(t >= 0.0)) {
        throw std::domain_error("wall_position: t must be >= 0 (got " +
                                std::to_string(t) + ")");
      }
      return cfg.L0 + cfg.epsilon * t;
    case Clock::fast_forward:
      return cfg.L0 + cfg.epsilon * advanced_time(cfg, t);
  }
  throw std::logic_error("wall_position: unknown clock");
}

double wall_velocity(const ScheduleConfig& cfg, double t) {
  require_time_in_window(cfg, t, "wall_velocity");
  return cfg.epsilon * alpha(cfg, t);
}

}  // namespace ffheat
