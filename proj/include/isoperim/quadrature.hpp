#pragma once

/**
 * Deterministic quadrature engines used by every other module.
 *
 * Two engines with explicit error estimates:
 *  - integrate_periodic: uniform trapezoid over one full period with grid
 *    doubling.  For a trig polynomial of degree d it is exact (to rounding)
 *    once the grid has at least 2d + 2 nodes, so all the spectral identity
 *    checks terminate after one confirming refinement.
 *  - integrate_gauss: composite Gauss-Legendre with panel doubling, for
 *    integrands that are smooth but not periodic on the interval.
 *
 * cumulative_integral produces the strictly increasing arc-length tables the
 * curve module inverts.
 */

#include <cstddef>
#include <functional>
#include <vector>

#include "isoperim/errors.hpp"

namespace isoperim::quad {

using Integrand = std::function<double(double)>;

/// Closed interval with lo < hi; both endpoints finite.
struct Interval {
  double lo;
  double hi;

  Interval(double lo_, double hi_);

  double length() const { return hi - lo; }
};

struct QuadratureResult {
  double value = 0.0;
  /// Absolute difference between the last two refinements; always >= 0.
  double err_estimate = 0.0;
  /// Grid nodes (trapezoid) or total Gauss points of the final refinement.
  std::size_t nodes_used = 0;
};

/// Hard cap on grid panels / total Gauss nodes per integral.
inline constexpr std::size_t kNodeCap = std::size_t{1} << 20;

/// Default successive-refinement tolerance.
inline constexpr double kDefaultTol = 1e-12;

/// Default starting grid for the periodic engine.
inline constexpr std::size_t kDefaultMinNodes = 64;

/**
 * Uniform trapezoid over one full period of fn, doubling the grid from
 * min_nodes until two successive values differ by at most tol.
 *
 * Throws NonConvergence if the node cap is hit first, NonFinite if fn
 * returns a non-finite value at any node.
 */
QuadratureResult integrate_periodic(const Integrand& fn, Interval period,
                                    std::size_t min_nodes = kDefaultMinNodes,
                                    double tol = kDefaultTol);

/**
 * Composite Gauss-Legendre of the given order (>= 2), doubling the panel
 * count until successive values agree to 1e-12 relative.  Exact for
 * polynomials of degree <= 2*order - 1 on a single panel.
 *
 * If the node cap is reached the best value is returned and err_estimate
 * reports the remaining gap; only NonFinite throws.
 */
QuadratureResult integrate_gauss(const Integrand& fn, Interval interval,
                                 int order = 8);

struct CumulativePoint {
  double t;
  double integral;  // integral of fn from interval.lo to t
};

/**
 * Running integral of a strictly positive fn tabulated at `knots` uniformly
 * spaced points (endpoints included).  The integral column is strictly
 * increasing; the last row agrees with integrate_gauss over the whole
 * interval to 1e-10.
 *
 * Throws NonMonotone if fn <= 0 at a knot or the table fails to increase.
 */
std::vector<CumulativePoint> cumulative_integral(const Integrand& fn,
                                                 Interval interval,
                                                 std::size_t knots);

/// Gauss-Legendre nodes and weights on [-1, 1], Newton on the three-term
/// recurrence.  order >= 2.
void gauss_legendre_rule(int order, std::vector<double>& nodes,
                         std::vector<double>& weights);

}  // namespace isoperim::quad
