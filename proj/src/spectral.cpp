#include "ffheat/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "ffheat/errors.hpp"
#include "ffheat/quadrature.hpp"

namespace ffheat {

namespace {

constexpr double kPi = std::numbers::pi;

// Panel count for the accumulated-decay integral; the integrand is smooth
// with at most one magnification period inside [0, t].
constexpr int kDecayIntegralPanels = 64;

void require_x_in_box(double x, double L, const char* op) {
  if (!(x >= 0.0) || x > L) {
    throw std::domain_error(std::string(op) + ": x = " + std::to_string(x) +
                            " outside [0, L = " + std::to_string(L) + "]");
  }
}

}  // namespace

GaussianProfile::GaussianProfile(double x0, double sigma, double domain_length)
    : x0(x0), sigma(sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::domain_error("GaussianProfile: sigma must be > 0 (got " +
                            std::to_string(sigma) + ")");
  }
  if (!(x0 > 0.0) || !(x0 < domain_length)) {
    throw std::domain_error("GaussianProfile: x0 = " + std::to_string(x0) +
                            " outside (0, " + std::to_string(domain_length) +
                            ")");
  }
}

double GaussianProfile::operator()(double x) const {
  const double d = (x - x0) / sigma;
  return std::exp(-d * d) / (std::sqrt(2.0 * kPi) * sigma);
}

ModalDecomposition::ModalDecomposition(std::vector<double> coeffs, double L_ref,
                                       double kappa)
    : coeffs_(std::move(coeffs)), L_ref_(L_ref), kappa_(kappa) {
  if (coeffs_.empty()) {
    throw ConfigError("ModalDecomposition: n_max must be >= 1");
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) {
      throw ConfigError("ModalDecomposition: non-finite coefficient");
    }
  }
  if (!(L_ref_ > 0.0) || !std::isfinite(L_ref_)) {
    throw ConfigError("ModalDecomposition: L_ref must be > 0");
  }
  if (!(kappa_ > 0.0) || !std::isfinite(kappa_)) {
    throw ConfigError("ModalDecomposition: kappa must be > 0");
  }
}

double ModalDecomposition::tail_ratio() const {
  double max_abs = 0.0;
  for (double c : coeffs_) max_abs = std::max(max_abs, std::abs(c));
  if (max_abs == 0.0) return 0.0;
  return std::abs(coeffs_.back()) / max_abs;
}

ModalDecomposition project_profile(const std::function<double(double)>& f,
                                   double L, int n_max, int quad_points,
                                   double kappa, double tail_tol) {
  if (!(L > 0.0)) {
    throw std::domain_error("project_profile: L must be > 0");
  }
  if (n_max < 1) {
    throw ConfigError("numerics.n_max must be >= 1 (got " +
                      std::to_string(n_max) + ")");
  }
  if (quad_points < 10 * n_max) {
    throw ConfigError("numerics.quad_points must be >= 10*n_max = " +
                      std::to_string(10 * n_max) + " to resolve mode " +
                      std::to_string(n_max) + " (got " +
                      std::to_string(quad_points) + ")");
  }
  const int panels = (quad_points + 15) / 16;
  std::vector<double> coeffs(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double k = n * kPi / L;
    coeffs[n - 1] =
        (2.0 / L) *
        integrate([&](double x) { return f(x) * std::sin(k * x); }, 0.0, L,
                  panels);
  }

  ModalDecomposition md(std::move(coeffs), L, kappa);
  if (md.tail_ratio() >= tail_tol && tail_tol > 0.0) {
    throw ConfigError(
        "numerics.n_max too small: tail ratio |C_N|/max|C_n| = " +
        std::to_string(md.tail_ratio()) + " exceeds tail_tol = " +
        std::to_string(tail_tol));
  }
  return md;
}

double eval_standard_fixed(const ModalDecomposition& md, double x, double t) {
  require_x_in_box(x, md.L_ref(), "eval_standard_fixed");
  if (!(t >= 0.0)) {
    throw std::domain_error("eval_standard_fixed: t must be >= 0 (got " +
                            std::to_string(t) + ")");
  }
  const double L = md.L_ref();
  const double k2 = md.kappa() * md.kappa();
  // Same expression ordering as the literal branch of mode_decays, so the
  // static-wall degeneracies collapse bit-exactly.
  const double base = kPi * kPi * k2 * t / (L * L);
  double u = 0.0;
  for (int n = 1; n <= md.n_max(); ++n) {
    u += md.coeff(n) * std::exp(-base * n * n) * std::sin(n * kPi * x / L);
  }
  return u;
}

std::vector<double> mode_decays(const ModalDecomposition& md,
                                const ScheduleConfig& sched, double t,
                                DecayModel model) {
  const double k2 = md.kappa() * md.kappa();
  double base;  // the n-independent exponent scale
  switch (model) {
    case DecayModel::literal: {
      const double L = wall_position(sched, t, Clock::fast_forward);
      base = kPi * kPi * k2 * t / (L * L);
      break;
    }
    case DecayModel::integrated: {
      const double acc =
          t == 0.0 ? 0.0
                   : integrate(
                         [&](double s) {
                           const double Ls =
                               wall_position(sched, s, Clock::fast_forward);
                           return 1.0 / (Ls * Ls);
                         },
                         0.0, t, kDecayIntegralPanels);
      base = kPi * kPi * k2 * acc;
      break;
    }
    default:
      throw std::logic_error("mode_decays: unknown decay model");
  }
  std::vector<double> decays(static_cast<std::size_t>(md.n_max()));
  for (int n = 1; n <= md.n_max(); ++n) {
    decays[n - 1] = std::exp(-base * n * n);
  }
  return decays;
}

double eval_standard_adiabatic(const ModalDecomposition& md,
                               const ScheduleConfig& sched, double x, double t,
                               DecayModel model) {
  const double L = wall_position(sched, t, Clock::fast_forward);
  require_x_in_box(x, L, "eval_standard_adiabatic");
  const std::vector<double> decays = mode_decays(md, sched, t, model);
  double u = 0.0;
  for (int n = 1; n <= md.n_max(); ++n) {
    u += md.coeff(n) * decays[n - 1] * std::sin(n * kPi * x / L);
  }
  return u;
}

}  // namespace ffheat
