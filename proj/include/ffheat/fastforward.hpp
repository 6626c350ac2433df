#pragma once

#include "ffheat/schedule.hpp"
#include "ffheat/spectral.hpp"

namespace ffheat {

// Basis convention for the theta-gradient defining expression.
// normalized: u_n = sqrt(2/L) sin(n pi x / L); the L-derivative of the
//             enclosed mass cancels the node zeros exactly and the gradient
//             collapses to x/L for every mode.
// raw:        u_n = sin(n pi x / L); the cancellation fails and the
//             expression is singular at interior nodes and at the wall.
enum class BasisNormalization { normalized, raw };

// Which rate multiplies theta in the fast-forwarded field's exponential
// dressing: the bare growth rate epsilon, or the instantaneous wall speed
// v(t) = epsilon * alpha(t).
enum class ThetaExponent { epsilon, velocity };

// Switches selecting between the admissible readings of the fast-forwarded
// series (see README, "Model variants").
struct ProtocolConfig {
  DecayModel decay_model = DecayModel::literal;
  ThetaExponent theta_exponent = ThetaExponent::epsilon;
  BasisNormalization basis_normalization = BasisNormalization::normalized;
};

// Regularization phase theta(x, L) = x^2 / (2L), gauge theta(0, L) = 0.
double theta(double x, double L);

// d(theta)/dx evaluated through the defining expression
//   -(1/u_n^2) * d/dL integral_0^x u_n^2 dx'
// for basis mode n. Normalized basis: x/L, mode-independent. Raw basis:
// evaluated literally; throws SingularityError at nodes.
double theta_gradient(double x, double L, int mode_n,
                      BasisNormalization basis);

// d(theta)/dL = -x^2 / (2 L^2).
double theta_dL(double x, double L);

// Fast-forward drive entering du/dt = kappa^2 u_xx + V_ff u:
//   V_ff = -(dalpha/dt) eps theta - alpha^2 eps^2 dtheta/dL
//          - (1/2) alpha^2 eps^2 (dtheta/dx)^2,
// with L = L(Lambda(t)). The two epsilon^2 terms cancel identically for
// theta = x^2/(2L); the full three-term form is evaluated regardless and the
// cancellation is asserted by the tests.
double ff_potential(double x, double t, const ScheduleConfig& sched);

// The rate multiplying theta in the dressing exponent.
double theta_exponent_rate(const ScheduleConfig& sched, double t,
                           ThetaExponent exponent);

// Fast-forwarded field:
//   u_ff(x,t) = exp(g(t) theta(x, L)) * sum_n C_n D_n(t) sin(n pi x / L),
// L = L(Lambda(t)), g per theta_exponent, D_n per decay_model.
double eval_ff_solution(const ModalDecomposition& md,
                        const ScheduleConfig& sched, double x, double t,
                        const ProtocolConfig& protocol = {});

}  // namespace ffheat
