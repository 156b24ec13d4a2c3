#include "isoperim/curve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <numbers>
#include <string>
#include <unordered_map>

#include "isoperim/quadrature.hpp"

namespace isoperim::curves {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClosureTol = 1e-10;

double wrap_into_period(double t, double period) {
  const double w = t - period * std::floor(t / period);
  // floor rounding can land exactly on the period for tiny negative t
  return w >= period ? w - period : w;
}

double speed_at(const CurveSpec& c, double t) {
  return std::hypot(c.dx(t), c.dy(t));
}

// Strictly increasing arc-length table with a local Gauss rule for values
// between knots, shared by the closures of the reparametrized curve.
class ArcLengthTable {
 public:
  ArcLengthTable(const CurveSpec& c, std::size_t knots) : curve_(c) {
    quad::gauss_legendre_rule(12, gl_nodes_, gl_weights_);
    const auto rows = quad::cumulative_integral(
        [this](double t) { return speed_at(curve_, t); },
        quad::Interval(0.0, curve_.length), knots);
    t_.reserve(rows.size());
    s_.reserve(rows.size());
    for (const auto& row : rows) {
      t_.push_back(row.t);
      s_.push_back(row.integral);
    }
  }

  double total() const { return s_.back(); }
  const CurveSpec& base() const { return curve_; }

  double speed(double t) const { return speed_at(curve_, t); }

  /// Parameter t with arc length s(t) = target, target in [0, total()].
  /// Results are memoized on the exact target bits: the four coordinate
  /// closures and the chain integrals revisit identical grid points, and
  /// each fresh inversion costs dozens of speed evaluations.
  double invert(double target) const {
    const auto hit = invert_memo_.find(target);
    if (hit != invert_memo_.end()) {
      return hit->second;
    }
    const double t = invert_fresh(target);
    if (invert_memo_.size() >= kMemoCap) {
      invert_memo_.clear();
    }
    invert_memo_.emplace(target, t);
    return t;
  }

 private:
  double invert_fresh(double target) const {
    const std::size_t seg = locate(target);
    const double t_lo = t_[seg];
    const double t_hi = t_[seg + 1];
    const double s_lo = s_[seg];
    const double s_hi = s_[seg + 1];

    const double tol = 1e-13 * std::max(1.0, total());
    double lo = t_lo;
    double hi = t_hi;
    double t = t_lo + (t_hi - t_lo) * (target - s_lo) / (s_hi - s_lo);
    double residual = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      residual = local_s(seg, t) - target;
      if (std::abs(residual) <= tol) {
        return t;
      }
      if (residual > 0.0) {
        hi = t;
      } else {
        lo = t;
      }
      const double next = t - residual / speed(t);
      t = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
    }
    for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
      t = 0.5 * (lo + hi);
      residual = local_s(seg, t) - target;
      if (std::abs(residual) <= tol) {
        return t;
      }
      (residual > 0.0 ? hi : lo) = t;
    }
    if (std::abs(residual) <= 1e-10 * std::max(1.0, total())) {
      return t;
    }
    throw NewtonStall("arc-length inversion stalled at residual " +
                      std::to_string(std::abs(residual)));
  }

  std::size_t locate(double target) const {
    const auto it = std::upper_bound(s_.begin(), s_.end(), target);
    const std::size_t idx =
        static_cast<std::size_t>(std::distance(s_.begin(), it));
    return std::min(std::max<std::size_t>(idx, 1) - 1, s_.size() - 2);
  }

  // Arc length from 0 to t: table value at the knot plus a single 12-point
  // Gauss panel across the remainder (knot spacing keeps the panel short).
  double local_s(std::size_t seg, double t) const {
    const double a = t_[seg];
    const double half = 0.5 * (t - a);
    const double mid = a + half;
    double acc = 0.0;
    for (std::size_t i = 0; i < gl_nodes_.size(); ++i) {
      acc += gl_weights_[i] * speed(mid + half * gl_nodes_[i]);
    }
    return s_[seg] + half * acc;
  }

  static constexpr std::size_t kMemoCap = 1u << 16;

  CurveSpec curve_;
  std::vector<double> t_;
  std::vector<double> s_;
  std::vector<double> gl_nodes_;
  std::vector<double> gl_weights_;
  mutable std::unordered_map<double, double> invert_memo_;
};

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidParams(std::string("curve parameter ") + name +
                        " must be positive and finite");
  }
}

}  // namespace

CurveSpec make_circle(double radius) {
  require_positive(radius, "radius");
  const double r = radius;
  CurveSpec c;
  c.x = [r](double t) { return r * std::cos(t / r); };
  c.y = [r](double t) { return r * std::sin(t / r); };
  c.dx = [r](double t) { return -std::sin(t / r); };
  c.dy = [r](double t) { return std::cos(t / r); };
  c.length = kTwoPi * r;
  c.kind = "circle(r=" + std::to_string(r) + ")";
  validate_closed(c);
  return c;
}

CurveSpec make_ellipse(double semi_a, double semi_b) {
  require_positive(semi_a, "semi_a");
  require_positive(semi_b, "semi_b");
  const double a = semi_a;
  const double b = semi_b;
  CurveSpec c;
  c.x = [a](double t) { return a * std::cos(t); };
  c.y = [b](double t) { return b * std::sin(t); };
  c.dx = [a](double t) { return -a * std::sin(t); };
  c.dy = [b](double t) { return b * std::cos(t); };
  c.length = kTwoPi;
  c.kind = "ellipse(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
  validate_closed(c);
  return c;
}

CurveSpec make_fourier_curve(series::FourierCoeffs cx,
                             series::FourierCoeffs cy) {
  auto px = std::make_shared<series::FourierCoeffs>(std::move(cx));
  auto py = std::make_shared<series::FourierCoeffs>(std::move(cy));
  CurveSpec c;
  c.x = [px](double t) { return series::eval_series(*px, t); };
  c.y = [py](double t) { return series::eval_series(*py, t); };
  c.dx = [px](double t) { return series::eval_deriv_series(*px, t); };
  c.dy = [py](double t) { return series::eval_deriv_series(*py, t); };
  c.length = kTwoPi;
  c.kind = "fourier(Nx=" + std::to_string(px->order()) +
           ",Ny=" + std::to_string(py->order()) + ")";
  validate_closed(c);
  return c;
}

CurveSpec from_polyline(const SampledCurve& s, std::size_t harmonics) {
  const std::size_t m = s.points.size();
  if (m < 3) {
    throw TooFewPoints("from_polyline: need at least 3 points, got " +
                       std::to_string(m));
  }
  if (harmonics < 1 || harmonics > (m - 1) / 2) {
    throw HarmonicsExceedNyquist(
        "from_polyline: harmonics must lie in [1, floor((M-1)/2)] for M = " +
        std::to_string(m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = s.points[i];
    const auto& q = s.points[(i + 1) % m];
    if (p[0] == q[0] && p[1] == q[1]) {
      throw InvalidParams("from_polyline: consecutive points " +
                          std::to_string(i) + ", " +
                          std::to_string((i + 1) % m) + " coincide");
    }
  }

  // DFT of z_j = x_j + i y_j; keeping modes |k| <= harmonics gives the
  // least-squares trigonometric fit through the sample.
  const std::complex<double> minus_i(0.0, -1.0);
  const auto mode = [&](long k) {
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      const double angle =
          kTwoPi * static_cast<double>(k) * static_cast<double>(j) /
          static_cast<double>(m);
      sum += std::complex<double>(s.points[j][0], s.points[j][1]) *
             std::exp(minus_i * angle);
    }
    return sum / static_cast<double>(m);
  };

  const std::complex<double> c0 = mode(0);
  std::vector<double> ax(harmonics), bx(harmonics), ay(harmonics),
      by(harmonics);
  for (std::size_t k = 1; k <= harmonics; ++k) {
    const std::complex<double> plus = mode(static_cast<long>(k));
    const std::complex<double> minus = mode(-static_cast<long>(k));
    ax[k - 1] = plus.real() + minus.real();
    bx[k - 1] = minus.imag() - plus.imag();
    ay[k - 1] = plus.imag() + minus.imag();
    by[k - 1] = plus.real() - minus.real();
  }
  series::FourierCoeffs cx(2.0 * c0.real(), std::move(ax), std::move(bx));
  series::FourierCoeffs cy(2.0 * c0.imag(), std::move(ay), std::move(by));
  CurveSpec c = make_fourier_curve(std::move(cx), std::move(cy));
  c.kind = "polyline(M=" + std::to_string(m) +
           ",H=" + std::to_string(harmonics) + ")";
  return c;
}

double arc_length(const CurveSpec& c, double a, double b) {
  if (!(a <= b)) {
    throw InvalidParams("arc_length: requires a <= b");
  }
  if (a == b) {
    return 0.0;
  }
  return quad::integrate_gauss(
             [&](double t) { return speed_at(c, t); }, quad::Interval(a, b), 16)
      .value;
}

double perimeter(const CurveSpec& c) { return arc_length(c, 0.0, c.length); }

CurveSpec reparametrize_unit_speed(const CurveSpec& c, std::size_t knots) {
  if (knots < 64) {
    throw InvalidParams("reparametrize_unit_speed: knots must be >= 64");
  }
  auto table = std::make_shared<ArcLengthTable>(c, knots);
  const double total = table->total();

  CurveSpec out;
  out.length = total;
  out.kind = "unit-speed(" + c.kind + ")";
  out.x = [table, total](double u) {
    return table->base().x(table->invert(wrap_into_period(u, total)));
  };
  out.y = [table, total](double u) {
    return table->base().y(table->invert(wrap_into_period(u, total)));
  };
  out.dx = [table, total](double u) {
    const double t = table->invert(wrap_into_period(u, total));
    return table->base().dx(t) / table->speed(t);
  };
  out.dy = [table, total](double u) {
    const double t = table->invert(wrap_into_period(u, total));
    return table->base().dy(t) / table->speed(t);
  };
  return out;
}

double ReparamCurve::half_ratio() const { return length / kTwoPi; }

ReparamCurve make_reparam(const CurveSpec& c) {
  const double residual = unit_speed_residual(c);
  if (!(residual <= 1e-5)) {
    throw NotUnitSpeed("make_reparam: unit-speed probe residual " +
                       std::to_string(residual) +
                       "; reparametrize_unit_speed the curve first");
  }
  auto base = std::make_shared<CurveSpec>(c);
  const double scale = c.length / kTwoPi;

  ReparamCurve rc;
  rc.base = c;
  rc.length = c.length;
  rc.f = [base, scale](double theta) { return base->x(scale * theta); };
  rc.g = [base, scale](double theta) { return base->y(scale * theta); };
  rc.df = [base, scale](double theta) {
    return base->dx(scale * theta) * scale;
  };
  rc.dg = [base, scale](double theta) {
    return base->dy(scale * theta) * scale;
  };
  return rc;
}

double arc_constraint_residual(const ReparamCurve& rc) {
  const double target = rc.half_ratio() * rc.half_ratio();
  double worst = 0.0;
  constexpr std::size_t kGrid = 512;
  for (std::size_t i = 0; i < kGrid; ++i) {
    const double theta = kTwoPi * static_cast<double>(i) / kGrid;
    const double df = rc.df(theta);
    const double dg = rc.dg(theta);
    worst = std::max(worst, std::abs(df * df + dg * dg - target));
  }
  return worst;
}

namespace {

struct Pt {
  double x;
  double y;
};

double orient(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  const double d1 = orient(c, d, a);
  const double d2 = orient(c, d, b);
  const double d3 = orient(a, b, c);
  const double d4 = orient(a, b, d);
  if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
      ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))) {
    return true;
  }
  if (d1 == 0.0 && on_segment(c, d, a)) return true;
  if (d2 == 0.0 && on_segment(c, d, b)) return true;
  if (d3 == 0.0 && on_segment(a, b, c)) return true;
  if (d4 == 0.0 && on_segment(a, b, d)) return true;
  return false;
}

}  // namespace

SimplicityResult is_simple(const CurveSpec& c, std::size_t samples) {
  if (samples < 16) {
    throw InvalidParams("is_simple: samples must be >= 16");
  }
  std::vector<Pt> pts(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t =
        c.length * static_cast<double>(i) / static_cast<double>(samples);
    pts[i] = {c.x(t), c.y(t)};
  }

  SimplicityResult result;
  for (std::size_t i = 0; i + 1 < samples; ++i) {
    for (std::size_t j = i + 2; j < samples; ++j) {
      if (i == 0 && j == samples - 1) {
        continue;  // shares the wrap-around vertex with segment 0
      }
      const Pt& a = pts[i];
      const Pt& b = pts[i + 1];
      const Pt& p = pts[j];
      const Pt& q = pts[(j + 1) % samples];
      if (segments_cross(a, b, p, q)) {
        result.simple = false;
        result.crossing = std::make_pair(i, j);
        return result;
      }
    }
  }
  return result;
}

CurveSpec translated(const CurveSpec& c, double shift_x, double shift_y) {
  auto base = std::make_shared<CurveSpec>(c);
  CurveSpec out;
  out.length = c.length;
  out.kind = c.kind + "+shift";
  out.x = [base, shift_x](double t) { return base->x(t) + shift_x; };
  out.y = [base, shift_y](double t) { return base->y(t) + shift_y; };
  out.dx = [base](double t) { return base->dx(t); };
  out.dy = [base](double t) { return base->dy(t); };
  return out;
}

CurveSpec scaled(const CurveSpec& c, double factor) {
  require_positive(factor, "factor");
  auto base = std::make_shared<CurveSpec>(c);
  CurveSpec out;
  out.length = c.length;
  out.kind = c.kind + "*scale";
  out.x = [base, factor](double t) { return factor * base->x(t); };
  out.y = [base, factor](double t) { return factor * base->y(t); };
  out.dx = [base, factor](double t) { return factor * base->dx(t); };
  out.dy = [base, factor](double t) { return factor * base->dy(t); };
  return out;
}

CurveSpec reversed(const CurveSpec& c) {
  auto base = std::make_shared<CurveSpec>(c);
  const double period = c.length;
  CurveSpec out;
  out.length = period;
  out.kind = c.kind + "-reversed";
  out.x = [base, period](double t) { return base->x(period - t); };
  out.y = [base, period](double t) { return base->y(period - t); };
  out.dx = [base, period](double t) { return -base->dx(period - t); };
  out.dy = [base, period](double t) { return -base->dy(period - t); };
  return out;
}

double closure_residual(const CurveSpec& c) {
  return std::abs(c.x(0.0) - c.x(c.length)) +
         std::abs(c.y(0.0) - c.y(c.length));
}

double periodicity_residual(const CurveSpec& c, std::size_t probe) {
  double worst = 0.0;
  for (std::size_t i = 0; i < probe; ++i) {
    const double t =
        c.length * static_cast<double>(i) / static_cast<double>(probe);
    worst = std::max(worst, std::abs(c.x(t + c.length) - c.x(t)) +
                                std::abs(c.y(t + c.length) - c.y(t)));
  }
  return worst;
}

double unit_speed_residual(const CurveSpec& c, std::size_t probe) {
  double worst = 0.0;
  for (std::size_t i = 0; i < probe; ++i) {
    const double t =
        c.length * static_cast<double>(i) / static_cast<double>(probe);
    worst = std::max(worst, std::abs(speed_at(c, t) - 1.0));
  }
  return worst;
}

double min_speed(const CurveSpec& c, std::size_t probe) {
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < probe; ++i) {
    const double t =
        c.length * static_cast<double>(i) / static_cast<double>(probe);
    lowest = std::min(lowest, speed_at(c, t));
  }
  return lowest;
}

double derivative_probe(const CurveSpec& c, std::size_t probe) {
  const double h = 1e-6 * c.length;
  double worst = 0.0;
  for (std::size_t i = 0; i < probe; ++i) {
    const double t =
        c.length * static_cast<double>(i) / static_cast<double>(probe);
    const double fd_x = (c.x(t + h) - c.x(t - h)) / (2.0 * h);
    const double fd_y = (c.y(t + h) - c.y(t - h)) / (2.0 * h);
    worst = std::max({worst, std::abs(fd_x - c.dx(t)), std::abs(fd_y - c.dy(t))});
  }
  return worst;
}

void validate_closed(const CurveSpec& c) {
  if (!(c.length > 0.0) || !std::isfinite(c.length)) {
    throw InvalidParams("curve length must be positive and finite");
  }
  const double endpoint = closure_residual(c);
  if (!(endpoint <= kClosureTol)) {
    throw NotClosed("curve endpoint gap " + std::to_string(endpoint) +
                    " exceeds 1e-10 [" + c.kind + "]");
  }
  const double periodic = periodicity_residual(c);
  if (!(periodic <= kClosureTol)) {
    throw NotClosed("curve periodicity residual " + std::to_string(periodic) +
                    " exceeds 1e-10 [" + c.kind + "]");
  }
}

}  // namespace isoperim::curves
