#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ffheat/schedule.hpp"

namespace ffheat {

// Temperature samples on the mapped coordinate xi = x/L, M+1 uniform nodes
// including both Dirichlet walls. Physical position of node i is (i/M)*L.
struct GridField {
  std::vector<double> values;
  double L = 1.0;  // current box width
  double t = 0.0;

  int num_cells() const { return static_cast<int>(values.size()) - 1; }

  // Dirichlet zeros at both ends (bit-level), finite entries, M >= 16.
  void validate() const;
};

// Moving-box problem: wall trajectory, wall speed, and the multiplicative
// drive V(x, t) entering du/dt = kappa^2 u_xx + V u. An empty reaction
// means V = 0.
struct MovingBoxProblem {
  double kappa = 0.5;
  std::function<double(double)> wall;             // L(t)
  std::function<double(double)> wall_rate;        // dL/dt
  std::function<double(double, double)> reaction; // V(x, t)
};

// Fast-forwarded box: L(Lambda(t)), eps*alpha(t), V_ff.
MovingBoxProblem make_ff_problem(double kappa, const ScheduleConfig& sched);

// Slow reference box: L0 + eps*t, eps, no drive.
MovingBoxProblem make_standard_problem(double kappa,
                                       const ScheduleConfig& sched);

// Coefficients of the mapped equation for w(xi, t) = u(xi L, t):
//   dw/dt = diffusion * d2w/dxi2 + advection(xi) * dw/dxi + reaction(xi) * w
// with diffusion = kappa^2/L^2, advection = xi Ldot/L, reaction = V(xi L, t).
struct PdeCoefficients {
  double diffusion;
  std::function<double(double)> advection;
  std::function<double(double)> reaction;
};
PdeCoefficients transform_pde_coefficients(const MovingBoxProblem& problem,
                                           double t);

// Samples u0 at the mapped nodes of a box of width L0; walls forced to 0.
GridField sample_initial_field(const std::function<double(double)>& u0,
                               double L0, int num_cells);

// One trapezoidal (Crank-Nicolson) step of size dt with coefficients frozen
// at t + dt/2; direct tridiagonal solve; exact boundary zeros re-imposed;
// L updated to the wall position at t + dt.
GridField step(const GridField& state, double dt,
               const MovingBoxProblem& problem);

// Marches from `initial` and returns one snapshot per requested time.
// Sample times must be non-decreasing, starting at initial.t; they are hit
// exactly (dt is shrunk per interval to land on them). dt_target > 0 caps
// the step size. Checks the advection mesh Peclet number up front.
std::vector<GridField> run(const GridField& initial,
                           const MovingBoxProblem& problem,
                           std::span<const double> sample_times,
                           double dt_target);

}  // namespace ffheat
