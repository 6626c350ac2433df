#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ffheat/fastforward.hpp"
#include "ffheat/integrator.hpp"
#include "ffheat/spectral.hpp"

namespace ffheat {

enum class FluxSource { series_standard, series_ff, grid };

// Heat flux J = -kappa^2 du/dx sampled along one time slice.
struct FluxField {
  std::vector<double> positions;
  std::vector<double> flux_values;
  double t = 0.0;
  FluxSource source = FluxSource::grid;
};

// Flux of the expanding-box series, differentiated term by term:
//   J = -kappa^2 sum_n C_n D_n (n pi / L) cos(n pi x / L).
FluxField heat_flux_series_standard(const ModalDecomposition& md,
                                    const ScheduleConfig& sched,
                                    std::span<const double> xs, double t,
                                    DecayModel model = DecayModel::literal);

// Flux of the fast-forwarded series; the product rule adds the dressing
// term g(t) (x/L) u to the mode-wise derivative.
FluxField heat_flux_series_ff(const ModalDecomposition& md,
                              const ScheduleConfig& sched,
                              std::span<const double> xs, double t,
                              const ProtocolConfig& protocol = {});

// Flux of a grid snapshot: 4th-order centered differences away from the
// walls, 4th-order one-sided stencils at and next to them. Sampled at every
// grid node.
FluxField heat_flux_grid(const GridField& field, double kappa);

// Root of the second central moment of u over [0, L], u clipped at zero
// before normalizing. Throws UndefinedWidthError for an all-zero field.
double profile_width(const std::function<double(double)>& u, double L,
                     int quad_points = 1024);

// Norms of a - b on a shared uniform grid of spacing dx.
struct FieldErrorReport {
  double l2 = 0.0;      // sqrt(sum (a_i-b_i)^2 dx)
  double linf = 0.0;
  double rel_l2 = 0.0;  // l2 / ||b||_2, 0 when both vanish
  std::size_t nodes = 0;
  double dx = 0.0;
};
FieldErrorReport compare_fields(std::span<const double> a,
                                std::span<const double> b, double dx);

}  // namespace ffheat
