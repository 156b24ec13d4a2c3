#include "isoperim/isoperimetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "isoperim/quadrature.hpp"
#include "isoperim/spectral.hpp"

namespace isoperim::hurwitz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Stopping tolerance matched to the integrand magnitude: once the trapezoid
// resolves the integrand the successive differences sit on the evaluation
// noise floor, which scales with the values, not with 1.
double probe_magnitude(const quad::Integrand& fn, double period) {
  double mag = 0.0;
  constexpr std::size_t kProbe = 48;
  for (std::size_t i = 0; i < kProbe; ++i) {
    const double t = period * (static_cast<double>(i) + 0.37) / kProbe;
    mag = std::max(mag, std::abs(fn(t)));
  }
  return mag;
}

double periodic_integral(const quad::Integrand& fn, double period) {
  const double tol = 2e-12 * (1.0 + probe_magnitude(fn, period));
  return quad::integrate_periodic(fn, quad::Interval(0.0, period), 64, tol)
      .value;
}

curves::ReparamCurve recentered(const curves::ReparamCurve& rc, double mu) {
  curves::ReparamCurve out = rc;
  const curves::RealFn f = rc.f;
  out.f = [f, mu](double theta) { return f(theta) - mu; };
  return out;
}

}  // namespace

double area_shoelace(const curves::CurveSpec& c) {
  curves::validate_closed(c);
  return 0.5 * periodic_integral(
                   [&](double t) { return c.x(t) * c.dy(t) - c.y(t) * c.dx(t); },
                   c.length);
}

double area_reparam(const curves::ReparamCurve& rc) {
  return 0.5 *
         periodic_integral(
             [&](double th) { return rc.f(th) * rc.dg(th) - rc.g(th) * rc.df(th); },
             kTwoPi);
}

double ibp_check(const curves::ReparamCurve& rc) {
  const double fg = periodic_integral(
      [&](double th) { return rc.f(th) * rc.dg(th); }, kTwoPi);
  const double gf = periodic_integral(
      [&](double th) { return rc.g(th) * rc.df(th); }, kTwoPi);
  return std::abs(fg + gf);
}

double area_simplified(const curves::ReparamCurve& rc) {
  return periodic_integral([&](double th) { return rc.f(th) * rc.dg(th); },
                           kTwoPi);
}

double amgm_pointwise_max_violation(const curves::ReparamCurve& rc,
                                    std::size_t grid) {
  if (grid < 2) {
    throw InvalidParams("amgm_pointwise_max_violation: grid must be >= 2");
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid; ++i) {
    const double th = kTwoPi * static_cast<double>(i) / static_cast<double>(grid);
    const double f = rc.f(th);
    const double dg = rc.dg(th);
    worst = std::max(worst, 2.0 * f * dg - (f * f + dg * dg));
  }
  return worst;
}

IsoperimetricReport hurwitz_report(const curves::CurveSpec& c,
                                   std::size_t fourier_order, double tol) {
  if (fourier_order < 1) {
    throw InvalidParams("hurwitz_report: fourier_order must be >= 1");
  }
  if (!(tol > 0.0)) {
    throw InvalidParams("hurwitz_report: tol must be positive");
  }
  curves::validate_closed(c);

  IsoperimetricReport rep;
  rep.curve_kind = c.kind;
  rep.fourier_order = fourier_order;
  rep.tol = tol;
  rep.length = curves::perimeter(c);

  const curves::CurveSpec unit = curves::reparametrize_unit_speed(c);
  const curves::ReparamCurve raw = curves::make_reparam(unit);

  // Zero-mean recentering of f through its constant Fourier coefficient;
  // equivalent to translating the curve by -a0/2 along x.
  const double fmax = probe_magnitude(raw.f, kTwoPi);
  const double coeff_tol = std::max(tol, 4e-11 * (1.0 + fmax));
  const series::FourierCoeffs coeffs =
      series::coeffs_from_function(raw.f, fourier_order, coeff_tol);
  const curves::ReparamCurve rc = recentered(raw, 0.5 * coeffs.a0());
  const series::FourierCoeffs centered = coeffs.with_a0(0.0);

  rep.area_shoelace = area_shoelace(c);
  rep.area_reparam = area_reparam(rc);
  rep.area_simplified = area_simplified(rc);
  rep.ibp_residual = ibp_check(rc);

  const double int_f_sq =
      periodic_integral([&](double th) { const double v = rc.f(th); return v * v; },
                        kTwoPi);
  const double int_df_sq =
      periodic_integral([&](double th) { const double v = rc.df(th); return v * v; },
                        kTwoPi);
  const double int_dg_sq =
      periodic_integral([&](double th) { const double v = rc.dg(th); return v * v; },
                        kTwoPi);
  rep.amgm_bound = 0.5 * (int_f_sq + int_dg_sq);
  rep.wirtinger_bound = 0.5 * (int_df_sq + int_dg_sq);
  rep.arc_constraint_residual = curves::arc_constraint_residual(rc);

  const spectral::ParsevalReport ps = spectral::parseval_check(centered, tol);
  rep.parseval_residual = ps.residual;
  const auto [dlhs, drhs] = spectral::deriv_parseval_check(centered, tol);
  rep.deriv_parseval_residual = std::abs(dlhs - drhs);

  double energy = 0.0;
  for (std::size_t n = 1; n <= centered.order(); ++n) {
    energy += centered.a(n) * centered.a(n) + centered.b(n) * centered.b(n);
  }
  rep.tail_energy = std::max(0.0, int_f_sq / kPi - energy);
  rep.truncation_warning = rep.tail_energy > tol;

  const double length_sq = rep.length * rep.length;
  const double abs_area = std::abs(rep.area_shoelace);
  rep.ratio = 4.0 * kPi * abs_area / length_sq;
  rep.deficit = length_sq - 4.0 * kPi * abs_area;
  rep.orientation = rep.area_shoelace >= 0.0 ? 1 : -1;
  rep.simple_probe = curves::is_simple(c, 1024).simple;
  rep.chain_ok = rep.area_simplified <= rep.amgm_bound + tol &&
                 rep.amgm_bound <= rep.wirtinger_bound + tol &&
                 4.0 * kPi * abs_area <= length_sq * (1.0 + tol);
  return rep;
}

}  // namespace isoperim::hurwitz
