/**
 * Acceptance battery for the isoperimetric chain library.  Each criterion
 * prints exactly one line
 *
 *   [acceptance] NN <name>: PASS|FAIL (<details>)
 *
 * and the process exits nonzero when any criterion fails.  Thresholds are
 * stated inline; seeds are fixed so reruns are identical.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "isoperim/curve.hpp"
#include "isoperim/isoperimetric.hpp"
#include "isoperim/random_fixtures.hpp"
#include "isoperim/spectral.hpp"
#include "isoperim/trig_series.hpp"
#include "oracles.hpp"

namespace {

namespace curves = isoperim::curves;
namespace fixtures = isoperim::fixtures;
namespace hurwitz = isoperim::hurwitz;
namespace spectral = isoperim::spectral;

using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Criterion {
  bool pass = false;
  std::string detail;
};

// 01: every cos/sin pairing up to order 32 integrates to its Kronecker value.
Criterion orthogonality_residuals() {
  const auto t0 = Clock::now();
  const auto table = spectral::orthogonality_table(32);
  double worst = 0.0;
  for (const auto& e : table) {
    worst = std::max(worst, e.residual);
  }
  const double dt = seconds_since(t0);
  const bool pass =
      table.size() == 3u * 32u * 32u && worst <= 1e-10 && dt <= 10.0;
  return {pass, "worst residual " + fmt(worst) + " over " +
                    std::to_string(table.size()) + " pairs, " + fmt(dt) + "s"};
}

// 02: Parseval on 500 random series of order up to 64.
Criterion parseval_battery() {
  const auto t0 = Clock::now();
  double worst_resid = 0.0;
  double worst_cross = 0.0;
  for (std::size_t i = 0; i < 500; ++i) {
    fixtures::Rng rng(fixtures::case_seed(1002, i));
    const std::size_t n = rng.integer(1, 64);
    const auto c = fixtures::random_coeffs(rng, n);
    const auto ps = spectral::parseval_check(c);
    worst_resid = std::max(worst_resid, ps.residual);
    worst_cross = std::max(worst_cross, std::abs(ps.cross_term));
  }
  const double dt = seconds_since(t0);
  const bool pass = worst_resid <= 1e-9 && worst_cross <= 1e-10 && dt <= 30.0;
  return {pass, "worst residual " + fmt(worst_resid) + ", worst cross term " +
                    fmt(worst_cross) + ", " + fmt(dt) + "s"};
}

// 03: Wirtinger slack is nonnegative on 500 zero-mean series and the
// equality witness appears exactly when the energy above n = 1 is <= 1e-9.
Criterion wirtinger_battery() {
  const auto t0 = Clock::now();
  double min_slack = 0.0;
  std::size_t witness_mismatches = 0;
  std::size_t witnesses_seen = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    fixtures::Rng rng(fixtures::case_seed(1003, i));
    // every seventh series is first-harmonic only: an exact equality case
    const std::size_t n = (i % 7 == 0) ? 1 : rng.integer(2, 64);
    const auto c = fixtures::random_coeffs(rng, n, 1.0, true);
    const auto w = spectral::wirtinger_check(c, 1e-9);
    min_slack = std::min(min_slack, w.slack);

    double tail = 0.0;
    for (std::size_t k = 2; k <= c.order(); ++k) {
      tail += static_cast<double>(k * k) * (c.a(k) * c.a(k) + c.b(k) * c.b(k));
    }
    const bool expect_witness = tail <= 1e-9;
    if (w.equality_witness.has_value() != expect_witness) {
      ++witness_mismatches;
    }
    if (w.equality_witness.has_value()) {
      ++witnesses_seen;
    }
  }
  const double dt = seconds_since(t0);
  const bool pass = min_slack >= -1e-9 && witness_mismatches == 0;
  return {pass, "min slack " + fmt(min_slack) + ", " +
                    std::to_string(witnesses_seen) + " equality witnesses, " +
                    std::to_string(witness_mismatches) + " mismatches, " +
                    fmt(dt) + "s"};
}

// 04: derivative-side Parseval on 500 random series of order up to 32.
Criterion deriv_parseval_battery() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (std::size_t i = 0; i < 500; ++i) {
    fixtures::Rng rng(fixtures::case_seed(1004, i));
    const std::size_t n = rng.integer(1, 32);
    const auto c = fixtures::random_coeffs(rng, n);
    const auto [lhs, rhs] = spectral::deriv_parseval_check(c);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  const double dt = seconds_since(t0);
  const bool pass = worst <= 1e-9 && dt <= 30.0;
  return {pass, "worst |lhs - rhs| " + fmt(worst) + ", " + fmt(dt) + "s"};
}

// 05: circles saturate the inequality at every scale.
Criterion circle_saturation() {
  const auto t0 = Clock::now();
  double worst_ratio_dev = 0.0;
  double worst_deficit_frac = 0.0;
  for (double r : {0.5, 1.0, 3.0}) {
    const auto rep = hurwitz::hurwitz_report(curves::make_circle(r));
    worst_ratio_dev = std::max(worst_ratio_dev, std::abs(rep.ratio - 1.0));
    worst_deficit_frac =
        std::max(worst_deficit_frac,
                 std::abs(rep.deficit) / (rep.length * rep.length));
  }
  const double dt = seconds_since(t0);
  const bool pass = worst_ratio_dev <= 1e-8 && worst_deficit_frac <= 1e-8;
  return {pass, "worst |ratio - 1| " + fmt(worst_ratio_dev) +
                    ", worst deficit/L^2 " + fmt(worst_deficit_frac) + ", " +
                    fmt(dt) + "s"};
}

// 06: ellipse (2 cos t, sin t): area pi*a*b, perimeter against an
// independent trapezoid reference, strictly positive deficit.
Criterion ellipse_benchmark() {
  const auto t0 = Clock::now();
  const auto rep = hurwitz::hurwitz_report(curves::make_ellipse(2.0, 1.0));
  const double ref_perimeter = oracle::integrate(
      [](double t) { return std::hypot(-2.0 * std::sin(t), std::cos(t)); },
      0.0, kTwoPi);
  const double area_err = std::abs(rep.area_shoelace - 2.0 * kPi);
  const double perim_err = std::abs(rep.length - ref_perimeter);
  const double dt = seconds_since(t0);
  const bool pass = area_err <= 1e-9 && perim_err <= 1e-8 &&
                    rep.deficit > 0.0 && rep.chain_ok;
  return {pass, "|A - 2pi| " + fmt(area_err) + ", |L - reference| " +
                    fmt(perim_err) + ", deficit " + fmt(rep.deficit) + ", " +
                    fmt(dt) + "s"};
}

// 07: integration-by-parts residual on fixtures and 100 random curves.
Criterion ibp_battery() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  const auto measure = [&](const curves::CurveSpec& c) {
    const auto rep = hurwitz::hurwitz_report(c, 32, 1e-9);
    const double rel =
        rep.ibp_residual / (1.0 + std::abs(rep.area_simplified));
    worst = std::max(worst, rel);
  };
  measure(curves::make_circle(1.0));
  measure(curves::make_ellipse(2.0, 1.0));
  measure(testfix::blob());
  for (std::size_t i = 0; i < 100; ++i) {
    fixtures::Rng rng(fixtures::case_seed(1007, i));
    measure(fixtures::random_regular_curve(rng));
  }
  const double dt = seconds_since(t0);
  const bool pass = worst <= 1e-8;
  return {pass,
          "worst relative residual " + fmt(worst) + ", " + fmt(dt) + "s"};
}

// 08: after reparametrization f'^2 + g'^2 stays within 1e-6 of (L/2pi)^2.
Criterion arc_constraint_battery() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  const auto measure = [&](const curves::CurveSpec& c) {
    const auto rep = hurwitz::hurwitz_report(c, 16, 1e-9);
    worst = std::max(worst, rep.arc_constraint_residual);
  };
  measure(curves::make_circle(0.5));
  measure(curves::make_circle(3.0));
  measure(curves::make_ellipse(2.0, 1.0));
  measure(curves::make_ellipse(5.0, 1.0));
  measure(testfix::blob());
  for (std::size_t i = 0; i < 50; ++i) {
    fixtures::Rng rng(fixtures::case_seed(1008, i));
    measure(fixtures::random_regular_curve(rng));
  }
  const double dt = seconds_since(t0);
  const bool pass = worst <= 1e-6;
  return {pass, "worst residual " + fmt(worst) + ", " + fmt(dt) + "s"};
}

// 09: the full chain holds with ordered slack on 100 random curves.
Criterion random_chain_battery() {
  const auto t0 = Clock::now();
  double worst_ratio = 0.0;
  double worst_step = -1.0;  // most violated chain step, should stay <= tol
  std::size_t chain_fails = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    fixtures::Rng rng(fixtures::case_seed(1009, i));
    const auto rep =
        hurwitz::hurwitz_report(fixtures::random_regular_curve(rng), 32, 1e-9);
    worst_ratio = std::max(worst_ratio, rep.ratio);
    worst_step = std::max(worst_step,
                          rep.area_simplified - rep.amgm_bound);
    worst_step = std::max(worst_step,
                          rep.amgm_bound - rep.wirtinger_bound);
    if (!rep.chain_ok) {
      ++chain_fails;
    }
  }
  const double dt = seconds_since(t0);
  const bool pass = worst_ratio <= 1.0 + 1e-8 && worst_step <= 1e-9 &&
                    chain_fails == 0 && dt <= 60.0;
  return {pass, "worst ratio " + fmt(worst_ratio) + ", worst step slack " +
                    fmt(worst_step) + ", " + std::to_string(chain_fails) +
                    " chain failures, " + fmt(dt) + "s"};
}

// 10: arc-length reparametrization round trip: perimeter preserved to 1e-8
// relative and speed within 1e-6 of 1 on 256 samples.
Criterion reparam_round_trip() {
  const auto t0 = Clock::now();
  double worst_perim = 0.0;
  double worst_speed = 0.0;
  const auto measure = [&](const curves::CurveSpec& c) {
    const double before = curves::perimeter(c);
    const auto u = curves::reparametrize_unit_speed(c);
    worst_perim = std::max(
        worst_perim, std::abs(curves::perimeter(u) - before) / before);
    for (std::size_t i = 0; i < 256; ++i) {
      const double s = u.length * static_cast<double>(i) / 256.0;
      worst_speed = std::max(worst_speed,
                             std::abs(std::hypot(u.dx(s), u.dy(s)) - 1.0));
    }
  };
  measure(curves::make_circle(1.7));
  measure(curves::make_ellipse(2.0, 1.0));
  measure(testfix::blob());
  for (std::size_t i = 0; i < 10; ++i) {
    fixtures::Rng rng(fixtures::case_seed(1010, i));
    measure(fixtures::random_regular_curve(rng));
  }
  const double dt = seconds_since(t0);
  const bool pass = worst_perim <= 1e-8 && worst_speed <= 1e-6;
  return {pass, "worst perimeter drift " + fmt(worst_perim) +
                    ", worst |speed - 1| " + fmt(worst_speed) + ", " +
                    fmt(dt) + "s"};
}

}  // namespace

int main() {
  struct Row {
    const char* name;
    Criterion (*fn)();
  };
  const std::vector<Row> rows = {
      {"orthogonality residuals (order 32)", orthogonality_residuals},
      {"parseval identity (500 random series)", parseval_battery},
      {"wirtinger slack and witness (500 series)", wirtinger_battery},
      {"derivative parseval (500 series)", deriv_parseval_battery},
      {"circle saturation (r = 0.5, 1, 3)", circle_saturation},
      {"ellipse benchmark (a=2, b=1)", ellipse_benchmark},
      {"integration by parts residual", ibp_battery},
      {"arc-length constraint", arc_constraint_battery},
      {"isoperimetric chain (100 random curves)", random_chain_battery},
      {"reparametrization round trip", reparam_round_trip},
  };

  int passed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto result = rows[i].fn();
    std::printf("[acceptance] %02zu %s: %s (%s)\n", i + 1, rows[i].name,
                result.pass ? "PASS" : "FAIL", result.detail.c_str());
    std::fflush(stdout);
    if (result.pass) {
      ++passed;
    }
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, rows.size());
  return passed == static_cast<int>(rows.size()) ? 0 : 1;
}
