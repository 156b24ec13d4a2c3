#pragma once

/**
 * Truncated real Fourier series
 *
 *   S(x) = a0/2 + sum_{n=1..N} ( a_n cos(nx) + b_n sin(nx) )
 *
 * with term-wise derivative evaluation, coefficient extraction by quadrature,
 * and Weierstrass M-test style summability diagnostics.  Everything is finite
 * (truncation order N), so the identities downstream hold exactly up to
 * quadrature and rounding error.
 */

#include <cstddef>
#include <functional>
#include <vector>

#include "isoperim/errors.hpp"

namespace isoperim::series {

/// Immutable coefficient set.  a(n) / b(n) are 1-indexed; indices past the
/// truncation order read as zero, matching the math of a truncated series.
class FourierCoeffs {
 public:
  FourierCoeffs() = default;

  /// a_terms[i] holds a_{i+1} (same offset for b_terms).  Both vectors must
  /// have equal length and every entry (including a0) must be finite.
  FourierCoeffs(double a0, std::vector<double> a_terms,
                std::vector<double> b_terms);

  double a0() const { return a0_; }
  std::size_t order() const { return a_.size(); }

  double a(std::size_t n) const;  // n >= 1
  double b(std::size_t n) const;

  const std::vector<double>& a_terms() const { return a_; }
  const std::vector<double>& b_terms() const { return b_; }

  FourierCoeffs with_a0(double new_a0) const;
  FourierCoeffs scaled(double factor) const;

 private:
  double a0_ = 0.0;
  std::vector<double> a_;
  std::vector<double> b_;
};

/// Full partial sum S(x) through the truncation order.
double eval_series(const FourierCoeffs& c, double x);

/// Partial sum through k <= order; k == order reproduces eval_series exactly.
/// Throws std::out_of_range for k > order.
double eval_partial_sum(const FourierCoeffs& c, double x, std::size_t k);

/// Oscillatory part alone, i.e. the series without the a0/2 constant.
double eval_oscillatory(const FourierCoeffs& c, double x);

/// Term-wise derivative sum_{n} ( -n a_n sin(nx) + n b_n cos(nx) ).
double eval_deriv_series(const FourierCoeffs& c, double x);

/**
 * Coefficients of a 2pi-periodic function by projection:
 * a_n = (1/pi) integral_{-pi}^{pi} fn(x) cos(nx) dx, likewise b_n.  Each
 * projection integral runs the periodic trapezoid at tolerance tol/pi with a
 * starting grid of max(64, 4*n_order) nodes.
 */
FourierCoeffs coeffs_from_function(const std::function<double(double)>& fn,
                                   std::size_t n_order, double tol = 1e-10);

/// Summability diagnostics over the oscillatory terms (a0 excluded).
struct MTestReport {
  double m_sum = 0.0;           // sum of M_n = |a_n| + |b_n|
  double weighted_m_sum = 0.0;  // sum of n * M_n
  std::vector<double> term_bounds;  // term_bounds[i] = M_{i+1}

  /// Fraction of m_sum carried by terms with n > k; 0 when m_sum == 0.
  /// Throws std::out_of_range for k > order.
  double tail_fraction(std::size_t k) const;
};

MTestReport mtest_report(const FourierCoeffs& c);

/// Tail bound sum_{n=k+1..N} (|a_n| + |b_n|); dominates the sup-norm error of
/// truncating the series at k.  Throws std::out_of_range for k > order.
double uniform_error_bound(const FourierCoeffs& c, std::size_t k);

}  // namespace isoperim::series
