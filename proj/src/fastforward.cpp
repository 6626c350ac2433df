#include "ffheat/fastforward.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ffheat/errors.hpp"

namespace ffheat {

namespace {

constexpr double kPi = std::numbers::pi;

void require_x_closed(double x, double L, const char* op) {
  if (!(x >= 0.0) || x > L) {
    throw std::domain_error(std::string(op) + ": x = " + std::to_string(x) +
                            " outside [0, L = " + std::to_string(L) + "]");
  }
}

}  // namespace

double theta(double x, double L) {
  require_x_closed(x, L, "theta");
  return x * x / (2.0 * L);
}

double theta_dL(double x, double L) {
  require_x_closed(x, L, "theta_dL");
  return -x * x / (2.0 * L * L);
}

double theta_gradient(double x, double L, int mode_n,
                      BasisNormalization basis) {
  if (mode_n < 1) {
    throw std::domain_error("theta_gradient: mode_n must be >= 1");
  }
  if (!(x > 0.0) || !(x < L)) {
    throw std::domain_error("theta_gradient: x = " + std::to_string(x) +
                            " outside (0, L = " + std::to_string(L) + ")");
  }
  switch (basis) {
    case BasisNormalization::normalized:
      // -(1/u^2) d/dL int_0^x u^2, u = sqrt(2/L) sin(n pi x/L):
      // the enclosed mass is x/L - sin(2 n pi x/L)/(2 n pi), whose
      // L-derivative is -(2x/L^2) sin^2(n pi x/L); the sin^2 cancels the
      // denominator for every x, leaving x/L with no mode dependence.
      return x / L;
    case BasisNormalization::raw: {
      const double s = std::sin(mode_n * kPi * x / L);
      const double denom = s * s;
      // d/dL [ x/2 - L sin(2 n pi x/L)/(4 n pi) ], sign-flipped:
      const double numer = std::sin(2.0 * mode_n * kPi * x / L) /
                               (4.0 * mode_n * kPi) -
                           (x / (2.0 * L)) * std::cos(2.0 * mode_n * kPi * x / L);
      if (denom < 1e-12 * std::abs(numer) || denom == 0.0) {
        throw SingularityError(x);
      }
      return numer / denom;
    }
  }
  throw std::logic_error("theta_gradient: unknown basis");
}

double theta_exponent_rate(const ScheduleConfig& sched, double t,
                           ThetaExponent exponent) {
  switch (exponent) {
    case ThetaExponent::epsilon:
      return sched.epsilon;
    case ThetaExponent::velocity:
      return sched.epsilon * alpha(sched, t);
  }
  throw std::logic_error("theta_exponent_rate: unknown exponent");
}

double ff_potential(double x, double t, const ScheduleConfig& sched) {
  const double L = wall_position(sched, t, Clock::fast_forward);
  require_x_closed(x, L, "ff_potential");
  const double a = alpha(sched, t);
  const double da = alpha_rate(sched, t);
  const double v2 = (a * sched.epsilon) * (a * sched.epsilon);
  const double grad = x / L;
  return -da * sched.epsilon * theta(x, L) - v2 * theta_dL(x, L) -
         0.5 * v2 * grad * grad;
}

double eval_ff_solution(const ModalDecomposition& md,
                        const ScheduleConfig& sched, double x, double t,
                        const ProtocolConfig& protocol) {
  const double L = wall_position(sched, t, Clock::fast_forward);
  require_x_closed(x, L, "eval_ff_solution");
  const double g = theta_exponent_rate(sched, t, protocol.theta_exponent);
  const std::vector<double> decays =
      mode_decays(md, sched, t, protocol.decay_model);
  double w = 0.0;
  for (int n = 1; n <= md.n_max(); ++n) {
    w += md.coeff(n) * decays[n - 1] * std::sin(n * kPi * x / L);
  }
  return std::exp(g * theta(x, L)) * w;
}

}  // namespace ffheat
