#pragma once

/**
 * Closed planar C^1 curves with analytic derivatives, and the arc-length
 * machinery that turns any regular closed curve into the unit-speed,
 * 2pi-periodic form (f, g) the isoperimetric chain is stated in:
 *
 *   f(theta) = x(L * theta / 2pi),   f'(theta) = x'(...) * L / 2pi,
 *
 * so that f'^2 + g'^2 == (L / 2pi)^2 pointwise for a unit-speed base curve.
 */

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoperim/errors.hpp"
#include "isoperim/trig_series.hpp"

namespace isoperim::curves {

using RealFn = std::function<double(double)>;

/**
 * Closed curve t -> (x(t), y(t)) on one parameter period [0, length], with
 * exact derivative functions.  The coordinate functions are defined for all
 * real t and are length-periodic; length equals the arc length exactly when
 * the parametrization is unit-speed.
 */
struct CurveSpec {
  RealFn x;
  RealFn y;
  RealFn dx;
  RealFn dy;
  double length = 0.0;
  std::string kind;
};

/// Circle of radius r in its unit-speed parametrization
/// t -> (r cos(t/r), r sin(t/r)) over [0, 2 pi r].
CurveSpec make_circle(double radius);

/// Axis-aligned ellipse t -> (a cos t, b sin t) over [0, 2pi]; not unit-speed
/// unless a == b.
CurveSpec make_ellipse(double semi_a, double semi_b);

/// Coordinates given as truncated Fourier series over [0, 2pi].
CurveSpec make_fourier_curve(series::FourierCoeffs cx, series::FourierCoeffs cy);

/// Closed polygonal sample of a curve; consecutive points must differ and the
/// first point is implicitly joined to the last.
struct SampledCurve {
  std::vector<std::array<double, 2>> points;
};

/**
 * Smooth closed curve through the dominant harmonics of the sample's
 * discrete Fourier transform.  Requires points.size() >= 3 and
 * harmonics <= floor((points.size() - 1) / 2) (Nyquist).
 */
CurveSpec from_polyline(const SampledCurve& s, std::size_t harmonics);

/// Arc length of c between parameters a <= b (Gauss quadrature of the speed).
double arc_length(const CurveSpec& c, double a, double b);

/// Arc length over one full parameter period.
double perimeter(const CurveSpec& c);

/**
 * Unit-speed reparametrization.  Builds a strictly increasing arc-length
 * table on `knots` knots and inverts it with safeguarded Newton (bisection
 * fallback); the returned curve has period equal to the perimeter and speed
 * identically 1 up to inversion error.  Derivatives use the chain rule
 * X'(s) = x'(t(s)) / speed(t(s)).
 *
 * Throws NonMonotone when the speed is not strictly positive, NewtonStall if
 * an inversion residual cannot be pushed below 1e-10.
 */
CurveSpec reparametrize_unit_speed(const CurveSpec& c, std::size_t knots = 512);

/// Unit-speed curve rescaled to the standard period [0, 2pi].
struct ReparamCurve {
  CurveSpec base;  // unit-speed base curve with period length()
  RealFn f;
  RealFn g;
  RealFn df;
  RealFn dg;
  double length = 0.0;  // perimeter L of the base curve

  double half_ratio() const;  // L / 2pi
};

/**
 * Wraps a unit-speed curve (probe residual <= 1e-5, else NotUnitSpeed) into
 * the 2pi-periodic coordinate functions of the isoperimetric chain.
 */
ReparamCurve make_reparam(const CurveSpec& c);

/// max over a 512-point grid of |f'^2 + g'^2 - (L/2pi)^2|.
double arc_constraint_residual(const ReparamCurve& rc);

struct SimplicityResult {
  bool simple = true;
  /// Indices of the first pair of non-adjacent polygon segments that cross.
  std::optional<std::pair<std::size_t, std::size_t>> crossing;
};

/// Polygonizes the curve at `samples` >= 16 vertices and searches all
/// non-adjacent segment pairs for an intersection.
SimplicityResult is_simple(const CurveSpec& c, std::size_t samples = 1024);

// Rigid/similarity transforms used by the invariance checks.
CurveSpec translated(const CurveSpec& c, double shift_x, double shift_y);
CurveSpec scaled(const CurveSpec& c, double factor);  // factor > 0
CurveSpec reversed(const CurveSpec& c);

// Probes.  Residuals are maxima over uniform parameter grids.
double closure_residual(const CurveSpec& c);
double periodicity_residual(const CurveSpec& c, std::size_t probe = 64);
double unit_speed_residual(const CurveSpec& c, std::size_t probe = 128);
double min_speed(const CurveSpec& c, std::size_t probe = 256);

/// Advisory check that dx, dy track finite differences of x, y.
double derivative_probe(const CurveSpec& c, std::size_t probe = 1024);

/// Throws NotClosed unless both the endpoint and the 64-point periodicity
/// probes pass at 1e-10.
void validate_closed(const CurveSpec& c);

}  // namespace isoperim::curves
