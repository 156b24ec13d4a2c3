/**
 * isoperim: command line front end for the isoperimetric chain library.
 *
 * Subcommands:
 *   analyze        full chain report for one or more closed curves
 *   orthogonality  residual table for the trig basis products
 *   parseval       energy identities for a coefficient set
 *   reparam        tabulated unit-speed reparametrization of a curve
 *   random-suite   seeded identity and invariance battery
 *
 * Exit codes: 0 when every check passes, 1 on bad input or usage, 2 when a
 * numeric identity or chain inequality fails its threshold.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isoperim/curve.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/io_json.hpp"
#include "isoperim/isoperimetric.hpp"
#include "isoperim/quadrature.hpp"
#include "isoperim/random_fixtures.hpp"
#include "isoperim/spectral.hpp"
#include "isoperim/trig_series.hpp"

namespace {

using namespace isoperim;

struct CommonOpts {
  double tol = 1e-10;
  std::size_t order = 32;
  std::size_t grid = 1024;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw InvalidParams("cannot open output file \"" + path + "\"");
  }
  f << text;
}

// Inline forms: "circle r=R" and "ellipse a=A b=B".
curves::CurveSpec parse_curve_tokens(const std::vector<std::string>& args) {
  const std::string& kind = args[0];
  std::map<std::string, double> kv;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& tok = args[i];
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InvalidParams("expected key=value, got \"" + tok + "\"");
    }
    const std::string val = tok.substr(eq + 1);
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(val, &used);
      if (used != val.size()) {
        throw std::invalid_argument(val);
      }
    } catch (const std::exception&) {
      throw InvalidParams("non-numeric value in \"" + tok + "\"");
    }
    kv[tok.substr(0, eq)] = value;
  }
  const auto need = [&](const char* key) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
      throw InvalidParams(kind + ": missing parameter \"" + std::string(key) +
                          "\"");
    }
    return it->second;
  };
  if (kind == "circle") {
    return curves::make_circle(need("r"));
  }
  if (kind == "ellipse") {
    return curves::make_ellipse(need("a"), need("b"));
  }
  throw InvalidParams("unknown curve \"" + kind +
                      "\"; inline forms are \"circle r=R\" and "
                      "\"ellipse a=A b=B\", or pass a JSON file");
}

std::vector<curves::CurveSpec> load_curves(const std::vector<std::string>& args,
                                           const std::string& inline_spec) {
  if (!inline_spec.empty()) {
    if (!args.empty()) {
      throw InvalidParams(
          "pass either --spec or positional curve arguments, not both");
    }
    return io::parse_curve_batch(nlohmann::json::parse(inline_spec));
  }
  if (args.empty()) {
    throw InvalidParams(
        "no curve given; pass a JSON file, --spec, or e.g. \"circle r=1\"");
  }
  if (args.size() == 1 && std::filesystem::exists(args[0])) {
    std::ifstream f(args[0]);
    if (!f) {
      throw InvalidParams("cannot read \"" + args[0] + "\"");
    }
    return io::parse_curve_batch(nlohmann::json::parse(f));
  }
  if (args.size() == 1 && args[0].size() > 5 &&
      args[0].substr(args[0].size() - 5) == ".json") {
    throw InvalidParams("cannot read \"" + args[0] + "\": no such file");
  }
  return {parse_curve_tokens(args)};
}

int cmd_analyze(const CommonOpts& o, const std::vector<std::string>& args,
                const std::string& inline_spec) {
  const auto specs = load_curves(args, inline_spec);
  const io::ConfigEcho cfg{o.tol, o.order, o.grid, 0};

  std::vector<hurwitz::IsoperimetricReport> reports;
  reports.reserve(specs.size());
  bool all_ok = true;
  for (const auto& c : specs) {
    reports.push_back(hurwitz::hurwitz_report(c, o.order, o.tol));
    all_ok = all_ok && reports.back().chain_ok;
  }

  std::ostringstream out;
  if (o.format == "csv") {
    out << io::report_csv_header();
    for (const auto& r : reports) {
      out << io::report_csv_row(r);
    }
  } else {
    for (const auto& r : reports) {
      out << io::report_json(r, cfg) << "\n";
    }
  }
  write_output(out.str(), o.out_path);

  if (!all_ok) {
    for (const auto& r : reports) {
      if (!r.chain_ok) {
        std::cerr << "analyze: chain violated for " << r.curve_kind << "\n";
      }
    }
    return 2;
  }
  return 0;
}

int cmd_orthogonality(const CommonOpts& o, unsigned max_order,
                      std::size_t min_nodes) {
  const double quad_tol = std::min(o.tol, quad::kDefaultTol);
  const auto table =
      spectral::orthogonality_table(max_order, quad_tol, min_nodes);
  const io::ConfigEcho cfg{o.tol, max_order, min_nodes, 0};

  double worst = 0.0;
  for (const auto& e : table) {
    worst = std::max(worst, e.residual);
  }

  std::ostringstream out;
  if (o.format == "csv") {
    out << io::orthogonality_csv(table);
  } else {
    out << io::orthogonality_json(table, cfg) << "\n";
  }
  write_output(out.str(), o.out_path);

  if (worst > o.tol) {
    std::cerr << "orthogonality: worst residual " << io::format_number(worst)
              << " exceeds tol " << io::format_number(o.tol) << "\n";
    return 2;
  }
  return 0;
}

int cmd_parseval(const CommonOpts& o, const std::string& coeffs_path) {
  series::FourierCoeffs c;
  if (!coeffs_path.empty()) {
    std::ifstream f(coeffs_path);
    if (!f) {
      throw InvalidParams("cannot read \"" + coeffs_path + "\"");
    }
    c = io::parse_coeffs(nlohmann::json::parse(f), "coeffs");
  } else {
    fixtures::Rng rng(o.seed);
    c = fixtures::random_coeffs(rng, o.order);
  }
  const io::ConfigEcho cfg{o.tol, c.order(), o.grid, o.seed};

  const auto ps = spectral::parseval_check(c, o.tol);
  const auto [dlhs, drhs] = spectral::deriv_parseval_check(c, o.tol);
  const double deriv_residual =
      std::abs(dlhs - drhs) / std::max(1.0, std::abs(drhs));

  std::optional<spectral::WirtingerReport> w;
  std::string notice;
  try {
    w = spectral::wirtinger_check(c, std::max(o.tol, 1e-9));
  } catch (const ZeroMeanViolated&) {
    notice = "wirtinger skipped: series has nonzero mean (set a0 = 0)";
  }

  std::ostringstream out;
  if (o.format == "csv") {
    out << "quantity,value\n";
    out << "parseval_lhs," << io::format_number(ps.lhs) << "\n";
    out << "parseval_rhs," << io::format_number(ps.rhs) << "\n";
    out << "parseval_cross," << io::format_number(ps.cross_term) << "\n";
    out << "parseval_residual," << io::format_number(ps.residual) << "\n";
    out << "deriv_parseval_lhs," << io::format_number(dlhs) << "\n";
    out << "deriv_parseval_rhs," << io::format_number(drhs) << "\n";
    out << "deriv_parseval_residual," << io::format_number(deriv_residual)
        << "\n";
    if (w) {
      out << "wirtinger_slack," << io::format_number(w->slack) << "\n";
    } else {
      out << "wirtinger_slack,skipped\n";
    }
  } else {
    out << io::parseval_json(ps, cfg) << "\n";
    out << "{\"deriv_parseval\":{\"lhs\":" << io::format_number(dlhs)
        << ",\"rhs\":" << io::format_number(drhs)
        << ",\"residual\":" << io::format_number(deriv_residual) << "}}\n";
    if (w) {
      out << io::wirtinger_json(*w, cfg) << "\n";
    } else {
      out << "{\"wirtinger\":null,\"notice\":\"" << notice << "\"}\n";
    }
  }
  write_output(out.str(), o.out_path);

  if (!notice.empty()) {
    std::cerr << "notice: " << notice << "\n";
  }

  const bool bad = ps.residual > o.tol ||
                   std::abs(ps.cross_term) > o.tol ||
                   deriv_residual > std::max(o.tol, 1e-9) ||
                   (w && w->slack < -std::max(o.tol, 1e-9));
  if (bad) {
    std::cerr << "parseval: identity residual exceeds tol "
              << io::format_number(o.tol) << "\n";
    return 2;
  }
  return 0;
}

int cmd_reparam(const CommonOpts& o, const std::vector<std::string>& args,
                const std::string& inline_spec) {
  const auto specs = load_curves(args, inline_spec);
  if (specs.size() != 1) {
    throw InvalidParams("reparam expects exactly one curve, got " +
                        std::to_string(specs.size()));
  }
  const auto unit = curves::reparametrize_unit_speed(specs[0]);
  const auto rc = curves::make_reparam(unit);
  const double residual = curves::arc_constraint_residual(rc);
  const double two_pi = 2.0 * std::numbers::pi;

  std::ostringstream out;
  if (o.format == "csv") {
    out << "theta,f,g,df,dg\n";
    for (std::size_t i = 0; i < o.grid; ++i) {
      const double theta = two_pi * static_cast<double>(i) /
                           static_cast<double>(o.grid);
      out << io::format_number(theta) << ',' << io::format_number(rc.f(theta))
          << ',' << io::format_number(rc.g(theta)) << ','
          << io::format_number(rc.df(theta)) << ','
          << io::format_number(rc.dg(theta)) << "\n";
    }
  } else {
    const auto column = [&](const std::function<double(double)>& fn) {
      std::string s = "[";
      for (std::size_t i = 0; i < o.grid; ++i) {
        const double theta = two_pi * static_cast<double>(i) /
                             static_cast<double>(o.grid);
        if (i != 0) {
          s += ',';
        }
        s += io::format_number(fn(theta));
      }
      s += ']';
      return s;
    };
    out << "{\"curve\":\"" << rc.base.kind << "\""
        << ",\"L\":" << io::format_number(rc.length)
        << ",\"arc_constraint_residual\":" << io::format_number(residual)
        << ",\"theta\":" << column([](double t) { return t; })
        << ",\"f\":" << column(rc.f) << ",\"g\":" << column(rc.g)
        << ",\"df\":" << column(rc.df) << ",\"dg\":" << column(rc.dg)
        << ",\"config\":{\"tol\":" << io::format_number(o.tol)
        << ",\"grid\":" << o.grid << "}}\n";
  }
  write_output(out.str(), o.out_path);

  if (residual > o.tol) {
    std::cerr << "reparam: arc constraint residual "
              << io::format_number(residual) << " exceeds tol "
              << io::format_number(o.tol) << "\n";
    return 2;
  }
  return 0;
}

// Fixed thresholds for the random battery; documented in --help.
struct SuiteThresholds {
  double parseval = 1e-9;
  double cross = 1e-10;
  double deriv = 1e-9;       // relative to max(1, |rhs|)
  double wirtinger = 1e-9;   // slack may not go below -this
  double ibp = 1e-8;         // relative to 1 + |area|
  double ratio_excess = 1e-8;
  double arc = 1e-6;
  double scale_drift = 1e-8;
  double shift_drift = 1e-9;
};

int cmd_random_suite(std::uint64_t seed, std::size_t count, std::size_t order,
                     const std::string& out_path) {
  const SuiteThresholds th;
  struct Worst {
    double value = 0.0;
    std::size_t case_idx = 0;
    void track(double v, std::size_t i) {
      if (v > value) {
        value = v;
        case_idx = i;
      }
    }
  };
  Worst parseval, cross, deriv, wirt, ibp, ratio, arc, scale, shift;
  std::size_t chain_good = 0;
  std::vector<std::string> failures;

  const auto fail = [&](std::size_t i, const std::string& what) {
    failures.push_back("FAIL case " + std::to_string(i) + " (seed " +
                       std::to_string(fixtures::case_seed(seed, i)) + "): " +
                       what);
  };

  for (std::size_t i = 0; i < count; ++i) {
    fixtures::Rng rng(fixtures::case_seed(seed, i));

    const std::size_t n = rng.integer(1, order);
    const auto c = fixtures::random_coeffs(rng, n);
    const auto ps = spectral::parseval_check(c);
    parseval.track(ps.residual, i);
    cross.track(std::abs(ps.cross_term), i);
    if (ps.residual > th.parseval) {
      fail(i, "parseval residual " + io::format_number(ps.residual));
    }
    if (std::abs(ps.cross_term) > th.cross) {
      fail(i, "parseval cross term " + io::format_number(ps.cross_term));
    }

    const auto [dl, dr] = spectral::deriv_parseval_check(c);
    const double drel = std::abs(dl - dr) / std::max(1.0, std::abs(dr));
    deriv.track(drel, i);
    if (drel > th.deriv) {
      fail(i, "derivative parseval residual " + io::format_number(drel));
    }

    const auto zm = fixtures::random_coeffs(rng, n, 1.0, true);
    const auto w = spectral::wirtinger_check(zm, th.wirtinger);
    wirt.track(-w.slack, i);
    if (w.slack < -th.wirtinger) {
      fail(i, "wirtinger slack " + io::format_number(w.slack));
    }

    const auto curve = fixtures::random_regular_curve(rng);
    const auto rep = hurwitz::hurwitz_report(curve, 32, 1e-9);
    const double ibp_rel =
        rep.ibp_residual / (1.0 + std::abs(rep.area_simplified));
    ibp.track(ibp_rel, i);
    ratio.track(rep.ratio - 1.0, i);
    arc.track(rep.arc_constraint_residual, i);
    if (rep.chain_ok) {
      ++chain_good;
    } else {
      fail(i, "chain violated for " + rep.curve_kind);
    }
    if (ibp_rel > th.ibp) {
      fail(i, "ibp residual " + io::format_number(rep.ibp_residual));
    }
    if (rep.ratio > 1.0 + th.ratio_excess) {
      fail(i, "ratio " + io::format_number(rep.ratio) + " above 1");
    }
    if (rep.arc_constraint_residual > th.arc) {
      fail(i, "arc constraint residual " +
                  io::format_number(rep.arc_constraint_residual));
    }

    const auto rep2 = hurwitz::hurwitz_report(curves::scaled(curve, 2.0), 32,
                                              1e-9);
    const double s_drift = std::max(
        std::abs(rep2.ratio - rep.ratio),
        std::abs(rep2.length - 2.0 * rep.length) /
            std::max(1.0, 2.0 * rep.length));
    scale.track(s_drift, i);
    if (s_drift > th.scale_drift) {
      fail(i, "scaling drift " + io::format_number(s_drift));
    }

    const auto rep3 = hurwitz::hurwitz_report(
        curves::translated(curve, 0.7, -0.3), 32, 1e-9);
    const double t_drift = std::max(
        std::abs(rep3.length - rep.length) / std::max(1.0, rep.length),
        std::abs(rep3.area_shoelace - rep.area_shoelace) /
            std::max(1.0, std::abs(rep.area_shoelace)));
    shift.track(t_drift, i);
    if (t_drift > th.shift_drift) {
      fail(i, "translation drift " + io::format_number(t_drift));
    }
  }

  std::ostringstream out;
  out << "random-suite seed=" << seed << " count=" << count
      << " order=" << order << "\n";
  const auto line = [&](const char* label, const Worst& w) {
    out << label << io::format_number(w.value) << " (case " << w.case_idx
        << ")\n";
  };
  line("worst parseval residual        = ", parseval);
  line("worst parseval cross term      = ", cross);
  line("worst deriv parseval residual  = ", deriv);
  line("worst wirtinger slack deficit  = ", wirt);
  line("worst ibp residual (relative)  = ", ibp);
  line("worst ratio excess over 1      = ", ratio);
  line("worst arc constraint residual  = ", arc);
  line("worst scaling drift            = ", scale);
  line("worst translation drift        = ", shift);
  out << "chain_ok: " << chain_good << "/" << count << "\n";
  out << "result: " << (failures.empty() ? "PASS" : "FAIL") << "\n";
  for (const auto& f : failures) {
    out << f << "\n";
  }
  write_output(out.str(), out_path);
  return failures.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "isoperim: numerical checks for the Fourier-side isoperimetric "
      "inequality on closed plane curves"};
  app.require_subcommand(1);

  CommonOpts an, orth, pv, rp;
  rp.tol = 1e-6;
  std::vector<std::string> an_args, rp_args;
  std::string an_spec, rp_spec, pv_file;
  unsigned orth_order = 32;
  std::size_t orth_min_nodes = 0;
  std::uint64_t rs_seed = 1;
  std::size_t rs_count = 100;
  std::size_t rs_order = 32;
  std::string rs_out;

  const auto add_format = [](CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path,
                    "Write output to this file instead of stdout");
  };

  auto* analyze = app.add_subcommand(
      "analyze", "Full isoperimetric chain report for closed curves");
  analyze->add_option("curve", an_args,
                      "Curve JSON file or inline form like \"circle r=1\"");
  analyze->add_option("--spec", an_spec,
                      "Inline JSON curve spec (object or array)");
  analyze->add_option("--tol", an.tol, "Chain tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--order", an.order, "Fourier truncation order")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4096}))
      ->capture_default_str();
  add_format(analyze, an);

  auto* orth_cmd = app.add_subcommand(
      "orthogonality", "Integrate all trig basis products and report residuals");
  orth_cmd->add_option("--order", orth_order, "Largest harmonic in the table")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  orth_cmd->add_option("--tol", orth.tol, "Largest residual accepted")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  orth_cmd
      ->add_option("--min-nodes", orth_min_nodes,
                   "Floor for the starting quadrature grid (0 = automatic)")
      ->capture_default_str();
  add_format(orth_cmd, orth);

  auto* pv_cmd = app.add_subcommand(
      "parseval", "Parseval, derivative Parseval, and Wirtinger checks");
  pv_cmd->add_option("coeffs", pv_file, "Coefficient JSON file");
  pv_cmd->add_option("--seed", pv.seed,
                     "Seed for a random series when no file is given")
      ->capture_default_str();
  pv_cmd->add_option("--order", pv.order, "Order of the random series")
      ->check(CLI::Range(std::size_t{1}, std::size_t{512}))
      ->capture_default_str();
  pv_cmd->add_option("--tol", pv.tol, "Identity residual threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(pv_cmd, pv);

  auto* rp_cmd = app.add_subcommand(
      "reparam", "Tabulate the unit-speed form of a curve on [0, 2pi)");
  rp_cmd->add_option("curve", rp_args,
                     "Curve JSON file or inline form like \"ellipse a=2 b=1\"");
  rp_cmd->add_option("--spec", rp_spec,
                     "Inline JSON curve spec (single object)");
  rp_cmd->add_option("--grid", rp.grid, "Number of sample points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20))
      ->capture_default_str();
  rp_cmd->add_option("--tol", rp.tol, "Arc constraint residual threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(rp_cmd, rp);

  auto* rs_cmd = app.add_subcommand(
      "random-suite",
      "Seeded battery: Parseval, Wirtinger, chain, scaling and translation "
      "invariance on random series and curves");
  rs_cmd->add_option("--seed", rs_seed, "Suite seed")->capture_default_str();
  rs_cmd->add_option("--count", rs_count, "Number of cases")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}))
      ->capture_default_str();
  rs_cmd->add_option("--order", rs_order, "Largest random series order")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}))
      ->capture_default_str();
  rs_cmd->add_option("--out", rs_out,
                     "Write the summary to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      return cmd_analyze(an, an_args, an_spec);
    }
    if (*orth_cmd) {
      return cmd_orthogonality(orth, orth_order, orth_min_nodes);
    }
    if (*pv_cmd) {
      return cmd_parseval(pv, pv_file);
    }
    if (*rp_cmd) {
      return cmd_reparam(rp, rp_args, rp_spec);
    }
    if (*rs_cmd) {
      return cmd_random_suite(rs_seed, rs_count, rs_order, rs_out);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const NotClosed& e) {
    std::cerr << "curve error: " << e.what() << "\n";
    return 1;
  } catch (const NonMonotone& e) {
    std::cerr << "curve error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
