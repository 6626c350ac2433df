#pragma once

namespace ffheat {

// Shape of the time-magnification factor alpha(t) on [0, T_ff].
// cosine:   alpha(t) = alpha_bar - (alpha_bar - 1) * cos(2*pi*t / T_ff),
//           smooth, alpha(0) = alpha(T_ff) = 1.
// constant: alpha(t) = alpha_bar on [0, T_ff], used for analytic tests.
enum class AlphaShape { cosine, constant };

enum class Clock { standard, fast_forward };

// Time-rescaling apparatus for the expanding box. The slow (standard)
// evolution takes T_standard; the fast-forwarded one compresses it into
// T_ff = T_standard / alpha_bar by reading the wall position at the
// advanced time Lambda(t).
struct ScheduleConfig {
  double L0 = 10.0;          // initial box width
  double epsilon = 0.04;     // wall growth rate, L(t) = L0 + epsilon*t
  double alpha_bar = 100.0;  // mean magnification, >= 1
  double T_standard = 100.0; // duration of the slow reference evolution
  AlphaShape shape = AlphaShape::cosine;

  // Derived, never stored: the fast-forward duration.
  double t_ff() const { return T_standard / alpha_bar; }

  // Throws ConfigError naming the offending field.
  void validate() const;
};

// Magnification factor. Defined for all t >= 0; equals 1 past T_ff.
double alpha(const ScheduleConfig& cfg, double t);

// d(alpha)/dt, analytic. Zero for the constant shape and past T_ff.
double alpha_rate(const ScheduleConfig& cfg, double t);

// Advanced time Lambda(t) = integral of alpha over [0, t], in closed form.
// Valid for t in [0, T_ff]; Lambda(T_ff) = T_standard.
double advanced_time(const ScheduleConfig& cfg, double t);

// Wall trajectory: L0 + epsilon*t (standard clock, t >= 0) or
// L0 + epsilon*Lambda(t) (fast-forward clock, t in [0, T_ff]).
double wall_position(const ScheduleConfig& cfg, double t, Clock clock);

// Wall speed of the fast-forwarded box, epsilon * alpha(t).
double wall_velocity(const ScheduleConfig& cfg, double t);

}  // namespace ffheat
