#include "isoperim/trig_series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "isoperim/quadrature.hpp"

namespace isoperim::series {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidParams(std::string("FourierCoeffs: non-finite ") + what);
  }
}

}  // namespace

FourierCoeffs::FourierCoeffs(double a0, std::vector<double> a_terms,
                             std::vector<double> b_terms)
    : a0_(a0), a_(std::move(a_terms)), b_(std::move(b_terms)) {
  if (a_.size() != b_.size()) {
    throw InvalidParams("FourierCoeffs: a and b must have equal length");
  }
  require_finite(a0_, "a0");
  for (double v : a_) require_finite(v, "a entry");
  for (double v : b_) require_finite(v, "b entry");
}

double FourierCoeffs::a(std::size_t n) const {
  if (n == 0) {
    throw std::out_of_range("FourierCoeffs::a: oscillatory index starts at 1");
  }
  return n <= a_.size() ? a_[n - 1] : 0.0;
}

double FourierCoeffs::b(std::size_t n) const {
  if (n == 0) {
    throw std::out_of_range("FourierCoeffs::b: oscillatory index starts at 1");
  }
  return n <= b_.size() ? b_[n - 1] : 0.0;
}

FourierCoeffs FourierCoeffs::with_a0(double new_a0) const {
  return FourierCoeffs(new_a0, a_, b_);
}

FourierCoeffs FourierCoeffs::scaled(double factor) const {
  std::vector<double> a = a_;
  std::vector<double> b = b_;
  for (double& v : a) v *= factor;
  for (double& v : b) v *= factor;
  return FourierCoeffs(a0_ * factor, std::move(a), std::move(b));
}

double eval_partial_sum(const FourierCoeffs& c, double x, std::size_t k) {
  if (k > c.order()) {
    throw std::out_of_range("eval_partial_sum: k exceeds the truncation order");
  }
  double sum = 0.5 * c.a0();
  for (std::size_t n = 1; n <= k; ++n) {
    const double nx = static_cast<double>(n) * x;
    sum += c.a(n) * std::cos(nx) + c.b(n) * std::sin(nx);
  }
  return sum;
}

double eval_series(const FourierCoeffs& c, double x) {
  return eval_partial_sum(c, x, c.order());
}

double eval_oscillatory(const FourierCoeffs& c, double x) {
  double sum = 0.0;
  for (std::size_t n = 1; n <= c.order(); ++n) {
    const double nx = static_cast<double>(n) * x;
    sum += c.a(n) * std::cos(nx) + c.b(n) * std::sin(nx);
  }
  return sum;
}

double eval_deriv_series(const FourierCoeffs& c, double x) {
  double sum = 0.0;
  for (std::size_t n = 1; n <= c.order(); ++n) {
    const double nd = static_cast<double>(n);
    const double nx = nd * x;
    sum += -nd * c.a(n) * std::sin(nx) + nd * c.b(n) * std::cos(nx);
  }
  return sum;
}

FourierCoeffs coeffs_from_function(const std::function<double(double)>& fn,
                                   std::size_t n_order, double tol) {
  if (!(tol > 0.0)) {
    throw InvalidParams("coeffs_from_function: tol must be positive");
  }
  const double pi = std::numbers::pi;
  const quad::Interval full(-pi, pi);
  const std::size_t min_nodes = std::max<std::size_t>(64, 4 * n_order);
  const double quad_tol = tol / pi;

  const auto project = [&](const quad::Integrand& weighted) {
    return quad::integrate_periodic(weighted, full, min_nodes, quad_tol).value /
           pi;
  };

  const double a0 = project(fn);
  std::vector<double> a(n_order, 0.0);
  std::vector<double> b(n_order, 0.0);
  for (std::size_t n = 1; n <= n_order; ++n) {
    const double nd = static_cast<double>(n);
    a[n - 1] = project([&](double x) { return fn(x) * std::cos(nd * x); });
    b[n - 1] = project([&](double x) { return fn(x) * std::sin(nd * x); });
  }
  return FourierCoeffs(a0, std::move(a), std::move(b));
}

MTestReport mtest_report(const FourierCoeffs& c) {
  MTestReport report;
  report.term_bounds.reserve(c.order());
  for (std::size_t n = 1; n <= c.order(); ++n) {
    const double m_n = std::abs(c.a(n)) + std::abs(c.b(n));
    report.term_bounds.push_back(m_n);
    report.m_sum += m_n;
    report.weighted_m_sum += static_cast<double>(n) * m_n;
  }
  return report;
}

double MTestReport::tail_fraction(std::size_t k) const {
  if (k > term_bounds.size()) {
    throw std::out_of_range("tail_fraction: k exceeds the truncation order");
  }
  if (m_sum == 0.0) {
    return 0.0;
  }
  double tail = 0.0;
  for (std::size_t i = k; i < term_bounds.size(); ++i) {
    tail += term_bounds[i];
  }
  return tail / m_sum;
}

double uniform_error_bound(const FourierCoeffs& c, std::size_t k) {
  if (k > c.order()) {
    throw std::out_of_range("uniform_error_bound: k exceeds the truncation order");
  }
  double bound = 0.0;
  for (std::size_t n = k + 1; n <= c.order(); ++n) {
    bound += std::abs(c.a(n)) + std::abs(c.b(n));
  }
  return bound;
}

}  // namespace isoperim::series
