#pragma once

#include <functional>
#include <vector>

#include "ffheat/schedule.hpp"

namespace ffheat {

// Initial temperature profile f(x) = exp(-(x - x0)^2 / sigma^2) / (sqrt(2*pi)*sigma).
// Note the exponent carries sigma^2, not 2*sigma^2, and no renormalization is
// applied, so the total integral is 1/sqrt(2).
struct GaussianProfile {
  double x0;
  double sigma;

  // Validates sigma > 0 and 0 < x0 < domain_length.
  GaussianProfile(double x0, double sigma, double domain_length);

  double operator()(double x) const;
};

// Which decay factor multiplies mode n of the expanding-box series.
// literal:    exp(-pi^2 n^2 kappa^2 t / L(Lambda(t))^2), wall-clock t against
//             the instantaneous box width.
// integrated: exp(-pi^2 n^2 kappa^2 * integral_0^t ds / L(Lambda(s))^2), the
//             accumulated instantaneous decay rate.
enum class DecayModel { literal, integrated };

// Truncated sine-series coefficients C_1..C_N on a reference box of width
// L_ref, together with the conductivity kappa (kappa^2 multiplies d2/dx2).
// Immutable after construction.
class ModalDecomposition {
 public:
  ModalDecomposition(std::vector<double> coeffs, double L_ref, double kappa);

  int n_max() const { return static_cast<int>(coeffs_.size()); }
  double L_ref() const { return L_ref_; }
  double kappa() const { return kappa_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(int n) const { return coeffs_.at(n - 1); }  // 1-based

  // |C_N| / max_n |C_n|; 0 for the all-zero decomposition.
  double tail_ratio() const;

 private:
  std::vector<double> coeffs_;
  double L_ref_;
  double kappa_;
};

// Projects f onto the sine modes of a box of width L:
//   C_n = (2/L) * integral_0^L f(x) sin(n pi x / L) dx,
// computed with composite 16-point Gauss-Legendre panels
// (ceil(quad_points/16) panels, deterministic ordering).
// Requires quad_points >= 10*n_max so mode n_max is resolved, and rejects a
// projection whose tail ratio exceeds tail_tol (truncation inadequate).
ModalDecomposition project_profile(const std::function<double(double)>& f,
                                   double L, int n_max, int quad_points,
                                   double kappa, double tail_tol = 1e-10);

// u(x,t) on the fixed box [0, L_ref]:
//   sum_n C_n exp(-pi^2 kappa^2 n^2 t / L_ref^2) sin(n pi x / L_ref).
double eval_standard_fixed(const ModalDecomposition& md, double x, double t);

// u(x,t) on the expanding box, wall advanced to L(Lambda(t)):
//   sum_n C_n D_n(t) sin(n pi x / L(Lambda(t)))
// with D_n per the decay model.
double eval_standard_adiabatic(const ModalDecomposition& md,
                               const ScheduleConfig& sched, double x, double t,
                               DecayModel model = DecayModel::literal);

// Decay factors D_1..D_N at wall-clock t on the advanced-time schedule.
// Shared by the adiabatic and fast-forwarded evaluators and the flux.
std::vector<double> mode_decays(const ModalDecomposition& md,
                                const ScheduleConfig& sched, double t,
                                DecayModel model);

}  // namespace ffheat
