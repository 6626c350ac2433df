#include "ffheat/observables.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ffheat/errors.hpp"
#include "ffheat/quadrature.hpp"

namespace ffheat {

namespace {

constexpr double kPi = std::numbers::pi;

void require_grid(std::span<const double> xs, double L) {
  if (xs.empty()) {
    throw std::domain_error("heat_flux: empty x-grid");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] >= 0.0) || xs[i] > L) {
      throw std::domain_error("heat_flux: x = " + std::to_string(xs[i]) +
                              " outside [0, L = " + std::to_string(L) + "]");
    }
    if (i > 0 && !(xs[i] > xs[i - 1])) {
      throw std::domain_error("heat_flux: x-grid must be strictly increasing");
    }
  }
}

}  // namespace

FluxField heat_flux_series_standard(const ModalDecomposition& md,
                                    const ScheduleConfig& sched,
                                    std::span<const double> xs, double t,
                                    DecayModel model) {
  const double L = wall_position(sched, t, Clock::fast_forward);
  require_grid(xs, L);
  const std::vector<double> decays = mode_decays(md, sched, t, model);
  const double k2 = md.kappa() * md.kappa();
  FluxField out;
  out.t = t;
  out.source = FluxSource::series_standard;
  out.positions.assign(xs.begin(), xs.end());
  out.flux_values.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double du = 0.0;
    for (int n = 1; n <= md.n_max(); ++n) {
      du += md.coeff(n) * decays[n - 1] * (n * kPi / L) *
            std::cos(n * kPi * xs[i] / L);
    }
    out.flux_values[i] = -k2 * du;
  }
  return out;
}

FluxField heat_flux_series_ff(const ModalDecomposition& md,
                              const ScheduleConfig& sched,
                              std::span<const double> xs, double t,
                              const ProtocolConfig& protocol) {
  const double L = wall_position(sched, t, Clock::fast_forward);
  require_grid(xs, L);
  const std::vector<double> decays =
      mode_decays(md, sched, t, protocol.decay_model);
  const double g = theta_exponent_rate(sched, t, protocol.theta_exponent);
  const double k2 = md.kappa() * md.kappa();
  FluxField out;
  out.t = t;
  out.source = FluxSource::series_ff;
  out.positions.assign(xs.begin(), xs.end());
  out.flux_values.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    double w = 0.0, dw = 0.0;
    for (int n = 1; n <= md.n_max(); ++n) {
      const double cd = md.coeff(n) * decays[n - 1];
      w += cd * std::sin(n * kPi * x / L);
      dw += cd * (n * kPi / L) * std::cos(n * kPi * x / L);
    }
    const double dress = std::exp(g * theta(x, L));
    out.flux_values[i] = -k2 * dress * (g * (x / L) * w + dw);
  }
  return out;
}

FluxField heat_flux_grid(const GridField& field, double kappa) {
  field.validate();
  const int M = field.num_cells();
  if (M < 4) {
    throw std::domain_error("heat_flux: grid too coarse for 4th-order stencils");
  }
  const double dx = field.L / M;
  const auto& u = field.values;
  FluxField out;
  out.t = field.t;
  out.source = FluxSource::grid;
  out.positions.resize(u.size());
  out.flux_values.resize(u.size());
  for (int i = 0; i <= M; ++i) {
    out.positions[i] = (static_cast<double>(i) / M) * field.L;
    double du;
    if (i >= 2 && i <= M - 2) {
      du = (u[i - 2] - 8.0 * u[i - 1] + 8.0 * u[i + 1] - u[i + 2]) /
           (12.0 * dx);
    } else if (i == 0) {
      du = (-25.0 * u[0] + 48.0 * u[1] - 36.0 * u[2] + 16.0 * u[3] -
            3.0 * u[4]) /
           (12.0 * dx);
    } else if (i == 1) {
      du = (-3.0 * u[0] - 10.0 * u[1] + 18.0 * u[2] - 6.0 * u[3] + u[4]) /
           (12.0 * dx);
    } else if (i == M - 1) {
      du = (3.0 * u[M] + 10.0 * u[M - 1] - 18.0 * u[M - 2] + 6.0 * u[M - 3] -
            u[M - 4]) /
           (12.0 * dx);
    } else {  // i == M
      du = (25.0 * u[M] - 48.0 * u[M - 1] + 36.0 * u[M - 2] -
            16.0 * u[M - 3] + 3.0 * u[M - 4]) /
           (12.0 * dx);
    }
    out.flux_values[i] = -kappa * kappa * du;
  }
  return out;
}

double profile_width(const std::function<double(double)>& u, double L,
                     int quad_points) {
  if (!(L > 0.0)) {
    throw std::domain_error("profile_width: L must be > 0");
  }
  const int panels = (quad_points + 15) / 16;
  const auto clipped = [&u](double x) { return std::max(u(x), 0.0); };
  const double mass = integrate(clipped, 0.0, L, panels);
  if (!(mass > 1e-280)) {
    throw UndefinedWidthError();
  }
  const double mean =
      integrate([&](double x) { return x * clipped(x); }, 0.0, L, panels) /
      mass;
  const double var =
      integrate([&](double x) {
        const double d = x - mean;
        return d * d * clipped(x);
      },
                0.0, L, panels) /
      mass;
  return std::sqrt(std::max(var, 0.0));
}

FieldErrorReport compare_fields(std::span<const double> a,
                                std::span<const double> b, double dx) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument(
        "compare_fields: sample grids differ in size or are empty");
  }
  if (!(dx > 0.0)) {
    throw std::invalid_argument("compare_fields: dx must be > 0");
  }
  FieldErrorReport rep;
  rep.nodes = a.size();
  rep.dx = dx;
  double sum2 = 0.0, ref2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum2 += d * d;
    ref2 += b[i] * b[i];
    rep.linf = std::max(rep.linf, std::abs(d));
  }
  rep.l2 = std::sqrt(sum2 * dx);
  const double ref = std::sqrt(ref2 * dx);
  if (ref > 0.0) {
    rep.rel_l2 = rep.l2 / ref;
  } else {
    rep.rel_l2 = rep.l2 == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return rep;
}

}  // namespace ffheat
