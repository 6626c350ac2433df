#include "ffheat/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ffheat/errors.hpp"
#include "ffheat/fastforward.hpp"

namespace ffheat {

namespace {

// Solves the tridiagonal system (sub, diag, sup) x = rhs in place.
// No pivoting; the Crank-Nicolson matrix is diagonally dominant for any
// step size the accuracy budget allows, so a small pivot means dt is absurd.
void solve_tridiagonal(std::vector<double>& sub, std::vector<double>& diag,
                       std::vector<double>& sup, std::vector<double>& rhs,
                       double t) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(diag[i - 1]) < 1e-14) {
      throw NumericalError(
          "tridiagonal factorization broke down (step size too large)", -1, t);
    }
    const double m = sub[i] / diag[i - 1];
    diag[i] -= m * sup[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  if (std::abs(diag[n - 1]) < 1e-14) {
    throw NumericalError(
        "tridiagonal factorization broke down (step size too large)", -1, t);
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
  }
}

}  // namespace

void GridField::validate() const {
  if (num_cells() < 16) {
    throw ConfigError("GridField: need at least 16 cells (got " +
                      std::to_string(num_cells()) + ")");
  }
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw ConfigError("GridField: invalid box width");
  }
  if (values.front() != 0.0 || values.back() != 0.0) {
    throw NumericalError("GridField: Dirichlet walls are not exactly zero", -1,
                         t);
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw NumericalError("GridField: non-finite entry", -1, t);
    }
  }
}

MovingBoxProblem make_ff_problem(double kappa, const ScheduleConfig& sched) {
  MovingBoxProblem p;
  p.kappa = kappa;
  p.wall = [sched](double t) {
    return wall_position(sched, t, Clock::fast_forward);
  };
  p.wall_rate = [sched](double t) { return sched.epsilon * alpha(sched, t); };
  p.reaction = [sched](double x, double t) { return ff_potential(x, t, sched); };
  return p;
}

MovingBoxProblem make_standard_problem(double kappa,
                                       const ScheduleConfig& sched) {
  MovingBoxProblem p;
  p.kappa = kappa;
  p.wall = [sched](double t) {
    return wall_position(sched, t, Clock::standard);
  };
  p.wall_rate = [sched](double) { return sched.epsilon; };
  p.reaction = nullptr;
  return p;
}

PdeCoefficients transform_pde_coefficients(const MovingBoxProblem& problem,
                                           double t) {
  const double L = problem.wall(t);
  const double Ldot = problem.wall_rate(t);
  PdeCoefficients c;
  c.diffusion = problem.kappa * problem.kappa / (L * L);
  c.advection = [Ldot, L](double xi) { return xi * Ldot / L; };
  if (problem.reaction) {
    const auto& reaction = problem.reaction;
    c.reaction = [reaction, L, t](double xi) { return reaction(xi * L, t); };
  } else {
    c.reaction = [](double) { return 0.0; };
  }
  return c;
}

GridField sample_initial_field(const std::function<double(double)>& u0,
                               double L0, int num_cells) {
  GridField f;
  f.L = L0;
  f.t = 0.0;
  f.values.resize(static_cast<std::size_t>(num_cells) + 1, 0.0);
  const double dxi = 1.0 / num_cells;
  for (int i = 1; i < num_cells; ++i) {
    f.values[i] = u0(i * dxi * L0);
  }
  f.validate();
  return f;
}

GridField step(const GridField& state, double dt,
               const MovingBoxProblem& problem) {
  state.validate();
  if (!(dt > 0.0)) {
    throw std::domain_error("step: dt must be > 0");
  }
  const int M = state.num_cells();
  const double dxi = 1.0 / M;
  const double t_half = state.t + 0.5 * dt;
  const PdeCoefficients c = transform_pde_coefficients(problem, t_half);

  // A w = nu w'' + a(xi) w' + r(xi) w, centered differences on the interior.
  // Solve (I - dt/2 A) w_new = (I + dt/2 A) w_old with Dirichlet zeros.
  const std::size_t n = static_cast<std::size_t>(M) - 1;
  std::vector<double> sub(n), diag(n), sup(n), rhs(n);
  const double nu = c.diffusion / (dxi * dxi);
  for (std::size_t j = 0; j < n; ++j) {
    const int i = static_cast<int>(j) + 1;
    const double a = c.advection(i * dxi) / (2.0 * dxi);
    const double r = c.reaction(i * dxi);
    const double lower = nu - a;
    const double center = -2.0 * nu + r;
    const double upper = nu + a;
    sub[j] = -0.5 * dt * lower;
    diag[j] = 1.0 - 0.5 * dt * center;
    sup[j] = -0.5 * dt * upper;
    const double wm = state.values[i - 1];
    const double w0 = state.values[i];
    const double wp = state.values[i + 1];
    rhs[j] = w0 + 0.5 * dt * (lower * wm + center * w0 + upper * wp);
  }
  solve_tridiagonal(sub, diag, sup, rhs, state.t);

  GridField next;
  next.t = state.t + dt;
  next.L = problem.wall(next.t);
  next.values.assign(state.values.size(), 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    next.values[j + 1] = rhs[j];
  }
  next.values[0] = 0.0;
  next.values[static_cast<std::size_t>(M)] = 0.0;
  for (double v : next.values) {
    if (!std::isfinite(v)) {
      throw NumericalError("numerical blowup", -1, next.t);
    }
  }
  return next;
}

std::vector<GridField> run(const GridField& initial,
                           const MovingBoxProblem& problem,
                           std::span<const double> sample_times,
                           double dt_target) {
  initial.validate();
  if (sample_times.empty()) {
    throw std::invalid_argument("run: no sample times requested");
  }
  if (!(dt_target > 0.0)) {
    throw std::domain_error("run: dt_target must be > 0");
  }
  if (sample_times.front() != initial.t) {
    throw std::invalid_argument("run: first sample time must equal initial.t");
  }
  for (std::size_t k = 1; k < sample_times.size(); ++k) {
    if (!(sample_times[k] >= sample_times[k - 1])) {
      throw std::invalid_argument("run: sample times must be non-decreasing");
    }
  }

  // Startup check: centered advection stays oscillation-free only while the
  // mesh Peclet number |a| dxi / nu is below 2.
  {
    const int M = initial.num_cells();
    const double dxi = 1.0 / M;
    const double span = sample_times.back() - sample_times.front();
    double peclet_max = 0.0;
    const int scan = 256;
    for (int s = 0; s <= scan; ++s) {
      const double t = sample_times.front() +
                       (span > 0.0 ? span * s / scan : 0.0);
      const double L = problem.wall(t);
      const double Ldot = problem.wall_rate(t);
      const double pe =
          std::abs(Ldot) * L * dxi / (problem.kappa * problem.kappa);
      peclet_max = std::max(peclet_max, pe);
      if (span == 0.0) break;
    }
    if (peclet_max >= 2.0) {
      throw ConfigError(
          "advection mesh Peclet number " + std::to_string(peclet_max) +
          " >= 2; refine numerics.M or reduce the wall speed");
    }
  }

  std::vector<GridField> snapshots;
  snapshots.reserve(sample_times.size());
  GridField current = initial;
  snapshots.push_back(current);
  long step_index = 0;
  for (std::size_t k = 1; k < sample_times.size(); ++k) {
    const double t_to = sample_times[k];
    const double interval = t_to - current.t;
    if (interval == 0.0) {
      snapshots.push_back(current);
      continue;
    }
    const long steps =
        std::max(1L, static_cast<long>(std::ceil(interval / dt_target - 1e-12)));
    const double dt = interval / steps;
    const double t_from = current.t;
    for (long s = 0; s < steps; ++s) {
      try {
        current = step(current, dt, problem);
      } catch (const NumericalError& e) {
        throw NumericalError(std::string(e.what()) + " at step " +
                                 std::to_string(step_index) + ", t = " +
                                 std::to_string(e.time()),
                             step_index, e.time());
      }
      ++step_index;
      // land interior steps on the exact arithmetic grid, the last one on
      // the requested sample time itself
      current.t = (s + 1 == steps) ? t_to : t_from + (s + 1) * dt;
    }
    current.L = problem.wall(current.t);
    snapshots.push_back(current);
  }
  return snapshots;
}

}  // namespace ffheat
