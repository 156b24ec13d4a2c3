#include "isoperim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace isoperim::quad {

namespace {

// Kahan compensated accumulator; keeps summation error at a few ulps of the
// running total even at the node cap.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double eval_checked(const Integrand& fn, double x) {
  const double v = fn(x);
  if (!std::isfinite(v)) {
    throw NonFinite("integrand returned a non-finite value at x = " +
                    std::to_string(x));
  }
  return v;
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw InvalidParams("interval requires finite endpoints with lo < hi");
  }
}

QuadratureResult integrate_periodic(const Integrand& fn, Interval period,
                                    std::size_t min_nodes, double tol) {
  if (!(tol > 0.0)) {
    throw InvalidParams("integrate_periodic: tol must be positive");
  }
  std::size_t n = std::max<std::size_t>(min_nodes, 2);
  n = std::min(n, kNodeCap / 2);  // leave room for at least one refinement

  const double len = period.length();
  double h = len / static_cast<double>(n);
  KahanSum acc;
  acc.add(0.5 * eval_checked(fn, period.lo));
  acc.add(0.5 * eval_checked(fn, period.hi));
  for (std::size_t i = 1; i < n; ++i) {
    acc.add(eval_checked(fn, period.lo + static_cast<double>(i) * h));
  }
  double value = h * acc.sum;

  double err = std::numeric_limits<double>::infinity();
  while (n < kNodeCap) {
    const std::size_t n2 = n * 2;
    const double h2 = len / static_cast<double>(n2);
    KahanSum odd;
    for (std::size_t i = 1; i < n2; i += 2) {
      odd.add(eval_checked(fn, period.lo + static_cast<double>(i) * h2));
    }
    const double refined = 0.5 * value + h2 * odd.sum;
    err = std::abs(refined - value);
    value = refined;
    n = n2;
    if (err <= tol) {
      return {value, err, n + 1};
    }
  }
  throw NonConvergence(
      "integrate_periodic: node cap reached with successive difference " +
      std::to_string(err) + " > tol " + std::to_string(tol));
}

QuadratureResult integrate_gauss(const Integrand& fn, Interval interval,
                                 int order) {
  if (order < 2) {
    throw InvalidParams("integrate_gauss: order must be >= 2");
  }
  std::vector<double> xs;
  std::vector<double> ws;
  gauss_legendre_rule(order, xs, ws);

  const auto composite = [&](std::size_t panels) {
    const double width = interval.length() / static_cast<double>(panels);
    const double half = 0.5 * width;
    KahanSum acc;
    for (std::size_t p = 0; p < panels; ++p) {
      const double mid = interval.lo + (static_cast<double>(p) + 0.5) * width;
      for (int i = 0; i < order; ++i) {
        acc.add(ws[static_cast<std::size_t>(i)] *
                eval_checked(fn, mid + half * xs[static_cast<std::size_t>(i)]));
      }
    }
    return half * acc.sum;
  };

  std::size_t panels = 1;
  double value = composite(panels);
  double err = std::numeric_limits<double>::infinity();
  while (panels * static_cast<std::size_t>(order) * 2 <= kNodeCap) {
    panels *= 2;
    const double refined = composite(panels);
    err = std::abs(refined - value);
    value = refined;
    if (err <= 1e-12 * std::max(1.0, std::abs(value))) {
      break;
    }
  }
  return {value, err, panels * static_cast<std::size_t>(order)};
}

std::vector<CumulativePoint> cumulative_integral(const Integrand& fn,
                                                 Interval interval,
                                                 std::size_t knots) {
  if (knots < 2) {
    throw InvalidParams("cumulative_integral: knots must be >= 2");
  }
  const double len = interval.length();
  const auto knot_at = [&](std::size_t i) {
    return (i + 1 == knots) ? interval.hi
                            : interval.lo + len * static_cast<double>(i) /
                                                static_cast<double>(knots - 1);
  };

  std::vector<CumulativePoint> table;
  table.reserve(knots);
  if (eval_checked(fn, interval.lo) <= 0.0) {
    throw NonMonotone("cumulative_integral: integrand not strictly positive at t = " +
                      std::to_string(interval.lo));
  }
  table.push_back({interval.lo, 0.0});

  KahanSum acc;
  double t_prev = interval.lo;
  for (std::size_t i = 1; i < knots; ++i) {
    const double t = knot_at(i);
    if (eval_checked(fn, t) <= 0.0) {
      throw NonMonotone("cumulative_integral: integrand not strictly positive at t = " +
                        std::to_string(t));
    }
    acc.add(integrate_gauss(fn, Interval(t_prev, t), 8).value);
    if (!(acc.sum > table.back().integral)) {
      throw NonMonotone("cumulative_integral: table not strictly increasing at t = " +
                        std::to_string(t));
    }
    table.push_back({t, acc.sum});
    t_prev = t;
  }
  return table;
}

void gauss_legendre_rule(int order, std::vector<double>& nodes,
                         std::vector<double>& weights) {
  if (order < 2) {
    throw InvalidParams("gauss_legendre_rule: order must be >= 2");
  }
  const std::size_t n = static_cast<std::size_t>(order);
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);

  // Legendre value and derivative via the three-term recurrence.
  const auto legendre = [order](double x, double& p, double& dp) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 =
          ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = p2;
    }
    p = p1;
    dp = order * (x * p1 - p0) / (x * x - 1.0);
  };

  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double p = 0.0;
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      legendre(x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        break;
      }
    }
    legendre(x, p, dp);
    const std::size_t lo_idx = static_cast<std::size_t>(i);
    const std::size_t hi_idx = n - 1 - lo_idx;
    nodes[lo_idx] = -x;
    nodes[hi_idx] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[lo_idx] = w;
    weights[hi_idx] = w;
  }
}

}  // namespace isoperim::quad
