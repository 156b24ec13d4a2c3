#pragma once

/**
 * The isoperimetric chain, evaluated numerically on concrete closed curves:
 *
 *   A  =  (1/2) integral (f g' - g f')            (shoelace, both domains)
 *      =  integral f g'                            (integration by parts)
 *     <=  (1/2) integral (f^2 + g'^2)              (pointwise AM-GM)
 *     <=  (1/2) integral (f'^2 + g'^2)             (Wirtinger, zero-mean f)
 *      =  L^2 / (4 pi)                             (arc-length constraint)
 *
 * hurwitz_report runs the full pipeline on an arbitrary regular closed curve:
 * measure the perimeter, reparametrize by arc length, rescale to [0, 2pi],
 * recenter f to zero mean through its Fourier coefficients, then record every
 * quantity and residual in the chain.
 */

#include <cstddef>
#include <string>

#include "isoperim/curve.hpp"

namespace isoperim::hurwitz {

/// Signed area (1/2) integral_0^L (x y' - y x') dt of a closed curve;
/// positive for counterclockwise orientation.
double area_shoelace(const curves::CurveSpec& c);

/// Signed area (1/2) integral_0^{2pi} (f g' - g f') dtheta.
double area_reparam(const curves::ReparamCurve& rc);

/// Integration-by-parts defect | integral f g' + integral g f' |; zero for
/// exact 2pi-periodic f, g up to quadrature error.
double ibp_check(const curves::ReparamCurve& rc);

/// Signed area in the one-term form integral_0^{2pi} f g' dtheta.
double area_simplified(const curves::ReparamCurve& rc);

/// max over a uniform grid of 2 f g' - (f^2 + g'^2); never positive beyond
/// rounding since it equals -(f - g')^2 pointwise.
double amgm_pointwise_max_violation(const curves::ReparamCurve& rc,
                                    std::size_t grid = 1024);

struct IsoperimetricReport {
  std::string curve_kind;
  double length = 0.0;           // measured perimeter L
  double area_shoelace = 0.0;    // signed, original parametrization
  double area_reparam = 0.0;     // signed, rescaled domain
  double area_simplified = 0.0;  // integral f g'
  double ibp_residual = 0.0;
  double amgm_bound = 0.0;       // (1/2) integral (f^2 + g'^2), zero-mean f
  double wirtinger_bound = 0.0;  // (1/2) integral (f'^2 + g'^2) = L^2/(4 pi)
  double arc_constraint_residual = 0.0;
  double ratio = 0.0;    // 4 pi |A| / L^2, equals 1 only for circles
  double deficit = 0.0;  // L^2 - 4 pi A
  bool simple_probe = true;
  bool chain_ok = false;
  double parseval_residual = 0.0;        // identity residual of extracted f
  double deriv_parseval_residual = 0.0;  // derivative-side identity residual
  double tail_energy = 0.0;  // energy of f beyond the truncation order
  bool truncation_warning = false;  // tail_energy > tol (advisory)
  int orientation = 1;              // sign of the shoelace area
  double tol = 0.0;                 // chain tolerance used
  std::size_t fourier_order = 0;
};

/**
 * Full pipeline on a closed regular curve.  chain_ok certifies
 *
 *   area_simplified <= amgm_bound + tol,
 *   amgm_bound <= wirtinger_bound + tol,
 *   4 pi |area_shoelace| <= L^2 (1 + tol).
 *
 * Throws NotClosed / NonMonotone when the curve fails validation; a large
 * Fourier tail only sets truncation_warning.
 */
IsoperimetricReport hurwitz_report(const curves::CurveSpec& c,
                                   std::size_t fourier_order = 32,
                                   double tol = 1e-9);

}  // namespace isoperim::hurwitz
