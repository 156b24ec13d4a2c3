#pragma once

/**
 * Numerical discharge of the spectral identities behind the isoperimetric
 * chain: trig orthogonality over a full period, Parseval for a truncated
 * series and for its term-wise derivative, and the Wirtinger comparison
 * integral f^2 <= integral (f')^2 for zero-mean series.
 *
 * All identities are evaluated on [-pi, pi]; each report records the domain
 * it used.  Left-hand sides come from quadrature of the evaluated series,
 * right-hand sides from the coefficients, so a residual measures exactly the
 * quadrature + rounding error of the identity.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "isoperim/quadrature.hpp"
#include "isoperim/trig_series.hpp"

namespace isoperim::spectral {

enum class PairKind { CosCos, SinSin, CosSin };

/// Short tags used in tables and CSV rows: "cc", "ss", "cs".
const char* kind_tag(PairKind kind);

struct OrthogonalityEntry {
  PairKind kind;
  unsigned n;
  unsigned m;
  double computed;  // quadrature value of the product over [-pi, pi]
  double expected;  // pi when the pair matches, else 0
  double residual;  // |computed - expected|
};

/**
 * All 3 * max_order^2 pairings (cc, ss, cs) for n, m in [1, max_order].
 * tol is the stopping tolerance handed to the periodic trapezoid; min_nodes,
 * when nonzero, raises the starting grid above the automatic Nyquist choice.
 */
std::vector<OrthogonalityEntry> orthogonality_table(
    unsigned max_order, double tol = quad::kDefaultTol,
    std::size_t min_nodes = 0);

struct ParsevalReport {
  double lhs = 0.0;         // (1/pi) integral S^2
  double rhs = 0.0;         // a0^2/2 + sum (a_n^2 + b_n^2)
  double cross_term = 0.0;  // integral of a0 * oscillatory part, exactly 0
  double residual = 0.0;    // |lhs - rhs|
  double domain_lo = 0.0;
  double domain_hi = 0.0;
};

ParsevalReport parseval_check(const series::FourierCoeffs& c,
                              double tol = 1e-10);

/// (lhs, rhs) of the derivative identity
/// (1/pi) integral (S')^2 = sum n^2 (a_n^2 + b_n^2).
std::pair<double, double> deriv_parseval_check(const series::FourierCoeffs& c,
                                               double tol = 1e-10);

struct WirtingerReport {
  double int_f_sq = 0.0;       // integral of S^2 over the domain
  double int_fprime_sq = 0.0;  // integral of (S')^2
  double parseval_f = 0.0;     // sum (a_n^2 + b_n^2)
  double parseval_fprime = 0.0;  // sum n^2 (a_n^2 + b_n^2)
  double slack = 0.0;            // int_fprime_sq - int_f_sq, >= 0 up to tol
  /// (a1, b1) when all energy above n = 1 is within tol, i.e. the series is
  /// an exact equality case a1 cos x + b1 sin x.
  std::optional<std::pair<double, double>> equality_witness;
  double domain_lo = 0.0;
  double domain_hi = 0.0;
};

/**
 * Wirtinger comparison for a zero-mean series.  Throws ZeroMeanViolated when
 * |a0| > tol.  The equality witness fires iff sum_{n>=2} n^2 (a_n^2 + b_n^2)
 * <= tol.
 */
WirtingerReport wirtinger_check(const series::FourierCoeffs& c,
                                double tol = 1e-9);

}  // namespace isoperim::spectral
