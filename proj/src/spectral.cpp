#include "isoperim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace isoperim::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

// Once the starting grid resolves the integrand the trapezoid value is exact,
// so the stopping tolerance only has to sit above the rounding floor of the
// accumulation.  Scale it with the integrand magnitude to keep large
// coefficient sets from stalling at the cap.
double rounding_aware_tol(double tol, double magnitude) {
  return std::max(tol, 64.0 * 2.220446049250313e-16 * (1.0 + magnitude));
}

// Nyquist-safe starting grid for products of series up to the given degree.
std::size_t grid_for_degree(std::size_t degree) {
  return std::max<std::size_t>(64, 2 * degree + 4);
}

double coeff_scale(const series::FourierCoeffs& c) {
  double s = 0.5 * std::abs(c.a0());
  for (std::size_t n = 1; n <= c.order(); ++n) {
    s += std::abs(c.a(n)) + std::abs(c.b(n));
  }
  return s;
}

double deriv_scale(const series::FourierCoeffs& c) {
  double s = 0.0;
  for (std::size_t n = 1; n <= c.order(); ++n) {
    s += static_cast<double>(n) * (std::abs(c.a(n)) + std::abs(c.b(n)));
  }
  return s;
}

}  // namespace

const char* kind_tag(PairKind kind) {
  switch (kind) {
    case PairKind::CosCos:
      return "cc";
    case PairKind::SinSin:
      return "ss";
    case PairKind::CosSin:
      return "cs";
  }
  return "??";
}

std::vector<OrthogonalityEntry> orthogonality_table(unsigned max_order,
                                                    double tol,
                                                    std::size_t min_nodes) {
  if (max_order == 0) {
    throw InvalidParams("orthogonality_table: max_order must be >= 1");
  }
  const quad::Interval domain(-kPi, kPi);
  std::vector<OrthogonalityEntry> table;
  table.reserve(3u * max_order * max_order);

  const auto entry = [&](PairKind kind, unsigned n, unsigned m) {
    const double nd = n;
    const double md = m;
    quad::Integrand product;
    switch (kind) {
      case PairKind::CosCos:
        product = [nd, md](double x) {
          return std::cos(nd * x) * std::cos(md * x);
        };
        break;
      case PairKind::SinSin:
        product = [nd, md](double x) {
          return std::sin(nd * x) * std::sin(md * x);
        };
        break;
      case PairKind::CosSin:
        product = [nd, md](double x) {
          return std::cos(nd * x) * std::sin(md * x);
        };
        break;
    }
    const std::size_t grid = std::max(grid_for_degree(n + m), min_nodes);
    const double computed =
        quad::integrate_periodic(product, domain, grid, tol).value;
    const double expected =
        (kind != PairKind::CosSin && n == m) ? kPi : 0.0;
    table.push_back(
        {kind, n, m, computed, expected, std::abs(computed - expected)});
  };

  for (PairKind kind :
       {PairKind::CosCos, PairKind::SinSin, PairKind::CosSin}) {
    for (unsigned n = 1; n <= max_order; ++n) {
      for (unsigned m = 1; m <= max_order; ++m) {
        entry(kind, n, m);
      }
    }
  }
  return table;
}

ParsevalReport parseval_check(const series::FourierCoeffs& c, double tol) {
  const quad::Interval domain(-kPi, kPi);
  const std::size_t grid = grid_for_degree(2 * c.order());
  const double scale = coeff_scale(c);
  const double quad_tol = rounding_aware_tol(tol, scale * scale);

  ParsevalReport report;
  report.domain_lo = domain.lo;
  report.domain_hi = domain.hi;
  report.lhs = quad::integrate_periodic(
                   [&](double x) {
                     const double s = series::eval_series(c, x);
                     return s * s;
                   },
                   domain, grid, quad_tol)
                   .value /
               kPi;

  report.rhs = 0.5 * c.a0() * c.a0();
  for (std::size_t n = 1; n <= c.order(); ++n) {
    report.rhs += c.a(n) * c.a(n) + c.b(n) * c.b(n);
  }

  // The constant-vs-oscillatory cross term vanishes by orthogonality of
  // 1 against every cos(nx), sin(nx).
  report.cross_term =
      quad::integrate_periodic(
          [&](double x) { return c.a0() * series::eval_oscillatory(c, x); },
          domain, grid, rounding_aware_tol(tol, std::abs(c.a0()) * scale))
          .value;

  report.residual = std::abs(report.lhs - report.rhs);
  return report;
}

std::pair<double, double> deriv_parseval_check(const series::FourierCoeffs& c,
                                               double tol) {
  const quad::Interval domain(-kPi, kPi);
  const std::size_t grid = grid_for_degree(2 * c.order());
  const double scale = deriv_scale(c);
  const double quad_tol = rounding_aware_tol(tol, scale * scale);

  const double lhs = quad::integrate_periodic(
                         [&](double x) {
                           const double d = series::eval_deriv_series(c, x);
                           return d * d;
                         },
                         domain, grid, quad_tol)
                         .value /
                     kPi;
  double rhs = 0.0;
  for (std::size_t n = 1; n <= c.order(); ++n) {
    const double nd = static_cast<double>(n);
    rhs += nd * nd * (c.a(n) * c.a(n) + c.b(n) * c.b(n));
  }
  return {lhs, rhs};
}

WirtingerReport wirtinger_check(const series::FourierCoeffs& c, double tol) {
  if (!(std::abs(c.a0()) <= tol)) {
    throw ZeroMeanViolated("wirtinger_check: |a0| = " +
                           std::to_string(std::abs(c.a0())) +
                           " exceeds tol; recenter the series first");
  }
  const quad::Interval domain(-kPi, kPi);
  const std::size_t grid = grid_for_degree(2 * c.order());
  const double s0 = coeff_scale(c);
  const double s1 = deriv_scale(c);

  WirtingerReport report;
  report.domain_lo = domain.lo;
  report.domain_hi = domain.hi;
  report.int_f_sq = quad::integrate_periodic(
                        [&](double x) {
                          const double s = series::eval_series(c, x);
                          return s * s;
                        },
                        domain, grid, rounding_aware_tol(tol, s0 * s0))
                        .value;
  report.int_fprime_sq = quad::integrate_periodic(
                             [&](double x) {
                               const double d = series::eval_deriv_series(c, x);
                               return d * d;
                             },
                             domain, grid, rounding_aware_tol(tol, s1 * s1))
                             .value;

  double tail_energy = 0.0;
  for (std::size_t n = 1; n <= c.order(); ++n) {
    const double nd = static_cast<double>(n);
    const double energy = c.a(n) * c.a(n) + c.b(n) * c.b(n);
    report.parseval_f += energy;
    report.parseval_fprime += nd * nd * energy;
    if (n >= 2) {
      tail_energy += nd * nd * energy;
    }
  }

  report.slack = report.int_fprime_sq - report.int_f_sq;
  if (tail_energy <= tol) {
    report.equality_witness = std::make_pair(c.a(1), c.b(1));
  }
  return report;
}

}  // namespace isoperim::spectral
