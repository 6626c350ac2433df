#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace ffheat {

// 16-point Gauss-Legendre rule on [-1, 1], nodes ascending.
inline constexpr std::array<double, 16> kGauss16Nodes = {
    -0.9894009349916499325961542, -0.9445750230732325760779884,
    -0.8656312023878317438804679, -0.7554044083550030338951012,
    -0.6178762444026437484466718, -0.4580167776572273863424194,
    -0.2816035507792589132304605, -0.0950125098376374401853193,
    0.0950125098376374401853193,  0.2816035507792589132304605,
    0.4580167776572273863424194,  0.6178762444026437484466718,
    0.7554044083550030338951012,  0.8656312023878317438804679,
    0.9445750230732325760779884,  0.9894009349916499325961542};

inline constexpr std::array<double, 16> kGauss16Weights = {
    0.0271524594117540948517806, 0.0622535239386478928628438,
    0.0951585116824927848099251, 0.1246289712555338720524763,
    0.1495959888165767320815017, 0.1691565193950025381893121,
    0.1826034150449235888667637, 0.1894506104550684962853967,
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

// Composite 16-point Gauss-Legendre over [a, b] with `panels` equal panels.
// Panels and nodes are visited in ascending order so the summation order is
// fixed and results are bit-reproducible.
template <class F>
double integrate(F&& f, double a, double b, int panels) {
  if (panels < 1) panels = 1;
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double left = a + p * h;
    const double mid = left + 0.5 * h;
    const double half = 0.5 * h;
    double panel_sum = 0.0;
    for (std::size_t k = 0; k < kGauss16Nodes.size(); ++k) {
      panel_sum += kGauss16Weights[k] * f(mid + half * kGauss16Nodes[k]);
    }
    total += panel_sum * half;
  }
  return total;
}

}  // namespace ffheat
