#pragma once

/// Curve fixtures shared across the test suites.

#include <cmath>
#include <numbers>

#include "isoperim/curve.hpp"
#include "isoperim/trig_series.hpp"

namespace testfix {

using isoperim::curves::CurveSpec;
using isoperim::series::FourierCoeffs;

/// Smooth, simple, non-circular blob with a handful of low harmonics.
inline CurveSpec blob() {
  const FourierCoeffs cx(0.3, {1.0, 0.0, 0.12}, {0.0, -0.08, 0.0});
  const FourierCoeffs cy(-0.1, {0.0, 0.1, 0.0}, {1.0, 0.0, 0.05});
  return isoperim::curves::make_fourier_curve(cx, cy);
}

/// Figure eight (cos t, 0.5 sin 2t): regular and closed but self-crossing.
inline CurveSpec figure_eight() {
  const FourierCoeffs cx(0.0, {1.0}, {0.0});
  const FourierCoeffs cy(0.0, {0.0, 0.0}, {0.0, 0.5});
  return isoperim::curves::make_fourier_curve(cx, cy);
}

/// Unit circle traversal that stalls: the phase is constant for t in [0, 1],
/// so the speed is exactly zero on that stretch (a degenerate, non-regular
/// parametrization of a perfectly good curve).
inline CurveSpec stalled_circle() {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  constexpr double hold = 1.0;
  const auto phase = [](double t) {
    t = t - two_pi * std::floor(t / two_pi);
    if (t <= hold) return 0.0;
    const double u = (t - hold) / (two_pi - hold);
    return two_pi * u * u * (3.0 - 2.0 * u);
  };
  const auto dphase = [](double t) {
    t = t - two_pi * std::floor(t / two_pi);
    if (t <= hold) return 0.0;
    const double u = (t - hold) / (two_pi - hold);
    return two_pi * 6.0 * u * (1.0 - u) / (two_pi - hold);
  };
  CurveSpec c;
  c.x = [phase](double t) { return std::cos(phase(t)); };
  c.y = [phase](double t) { return std::sin(phase(t)); };
  c.dx = [phase, dphase](double t) { return -std::sin(phase(t)) * dphase(t); };
  c.dy = [phase, dphase](double t) { return std::cos(phase(t)) * dphase(t); };
  c.length = two_pi;
  c.kind = "stalled-circle";
  return c;
}

}  // namespace testfix
