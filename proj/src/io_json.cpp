#include "isoperim/io_json.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

namespace isoperim::io {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* name,
                          const std::string& context) {
  const auto it = j.find(name);
  if (it == j.end()) {
    throw InvalidParams(context + ": missing field \"" + name + "\"");
  }
  return *it;
}

double require_number(const json& j, const char* name,
                      const std::string& context) {
  const json& field = require_field(j, name, context);
  if (!field.is_number()) {
    throw InvalidParams(context + ": field \"" + name + "\" must be a number");
  }
  return field.get<double>();
}

std::vector<double> number_array(const json& j, const char* name,
                                 const std::string& context) {
  const auto it = j.find(name);
  if (it == j.end()) {
    return {};
  }
  if (!it->is_array()) {
    throw InvalidParams(context + ": field \"" + name + "\" must be an array");
  }
  std::vector<double> out;
  out.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_number()) {
      throw InvalidParams(context + ": field \"" + name +
                          "\" must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

std::string config_json(const ConfigEcho& cfg) {
  std::string out = "{\"tol\":" + format_number(cfg.tol);
  out += ",\"order\":" + std::to_string(cfg.order);
  out += ",\"grid\":" + std::to_string(cfg.grid);
  out += ",\"seed\":" + std::to_string(cfg.seed);
  out += "}";
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
    }
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) {
    return "null";
  }
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.16e", v);
  return buf.data();
}

series::FourierCoeffs parse_coeffs(const json& j, const std::string& context) {
  if (!j.is_object()) {
    throw InvalidParams(context + ": coefficients must be a JSON object");
  }
  double a0 = 0.0;
  if (j.contains("a0")) {
    a0 = require_number(j, "a0", context);
  }
  std::vector<double> a = number_array(j, "a", context);
  std::vector<double> b = number_array(j, "b", context);
  const std::size_t order = std::max(a.size(), b.size());
  a.resize(order, 0.0);
  b.resize(order, 0.0);
  return series::FourierCoeffs(a0, std::move(a), std::move(b));
}

curves::CurveSpec parse_curve(const json& j) {
  const std::string context = "curve spec";
  if (!j.is_object()) {
    throw InvalidParams(context + ": expected a JSON object");
  }
  const json& kind_field = require_field(j, "kind", context);
  if (!kind_field.is_string()) {
    throw InvalidParams(context + ": field \"kind\" must be a string");
  }
  const std::string kind = kind_field.get<std::string>();
  const json& params = require_field(j, "params", context);
  if (!params.is_object()) {
    throw InvalidParams(context + ": field \"params\" must be an object");
  }

  curves::CurveSpec c;
  if (kind == "circle") {
    c = curves::make_circle(require_number(params, "r", context));
  } else if (kind == "ellipse") {
    c = curves::make_ellipse(require_number(params, "a", context),
                             require_number(params, "b", context));
  } else if (kind == "fourier") {
    c = curves::make_fourier_curve(
        parse_coeffs(require_field(params, "x", context), context + ".x"),
        parse_coeffs(require_field(params, "y", context), context + ".y"));
  } else if (kind == "polyline") {
    const json& pts = require_field(params, "points", context);
    if (!pts.is_array()) {
      throw InvalidParams(context + ": field \"points\" must be an array");
    }
    curves::SampledCurve sample;
    sample.points.reserve(pts.size());
    for (const auto& p : pts) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
          !p[1].is_number()) {
        throw InvalidParams(context +
                            ": field \"points\" must hold [x, y] pairs");
      }
      sample.points.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    const double h = require_number(params, "harmonics", context);
    if (h < 1.0 || h != std::floor(h)) {
      throw InvalidParams(context +
                          ": field \"harmonics\" must be a positive integer");
    }
    c = curves::from_polyline(sample, static_cast<std::size_t>(h));
  } else {
    throw InvalidParams(context + ": unknown kind \"" + kind +
                        "\" (expected circle, ellipse, fourier or polyline)");
  }

  if (j.contains("id")) {
    const json& id = j.at("id");
    if (!id.is_string()) {
      throw InvalidParams(context + ": field \"id\" must be a string");
    }
    c.kind = id.get<std::string>();
  }
  return c;
}

std::vector<curves::CurveSpec> parse_curve_batch(const json& j) {
  std::vector<curves::CurveSpec> out;
  if (j.is_array()) {
    for (const auto& item : j) {
      out.push_back(parse_curve(item));
    }
  } else {
    out.push_back(parse_curve(j));
  }
  return out;
}

std::string coeffs_json(const series::FourierCoeffs& c) {
  std::string out = "{\"a0\":" + format_number(c.a0()) + ",\"a\":[";
  for (std::size_t i = 0; i < c.order(); ++i) {
    if (i) out += ',';
    out += format_number(c.a_terms()[i]);
  }
  out += "],\"b\":[";
  for (std::size_t i = 0; i < c.order(); ++i) {
    if (i) out += ',';
    out += format_number(c.b_terms()[i]);
  }
  out += "]}";
  return out;
}

std::string parseval_json(const spectral::ParsevalReport& r,
                          const ConfigEcho& cfg) {
  std::string out = "{";
  out += "\"lhs\":" + format_number(r.lhs);
  out += ",\"rhs\":" + format_number(r.rhs);
  out += ",\"cross_term\":" + format_number(r.cross_term);
  out += ",\"residual\":" + format_number(r.residual);
  out += ",\"domain\":[" + format_number(r.domain_lo) + "," +
         format_number(r.domain_hi) + "]";
  out += ",\"config\":" + config_json(cfg);
  out += "}";
  return out;
}

std::string wirtinger_json(const spectral::WirtingerReport& r,
                           const ConfigEcho& cfg) {
  std::string out = "{";
  out += "\"int_f_sq\":" + format_number(r.int_f_sq);
  out += ",\"int_fprime_sq\":" + format_number(r.int_fprime_sq);
  out += ",\"parseval_f\":" + format_number(r.parseval_f);
  out += ",\"parseval_fprime\":" + format_number(r.parseval_fprime);
  out += ",\"slack\":" + format_number(r.slack);
  if (r.equality_witness) {
    out += ",\"equality_witness\":{\"a1\":" +
           format_number(r.equality_witness->first) +
           ",\"b1\":" + format_number(r.equality_witness->second) + "}";
  } else {
    out += ",\"equality_witness\":null";
  }
  out += ",\"domain\":[" + format_number(r.domain_lo) + "," +
         format_number(r.domain_hi) + "]";
  out += ",\"config\":" + config_json(cfg);
  out += "}";
  return out;
}

std::string orthogonality_json(
    const std::vector<spectral::OrthogonalityEntry>& table,
    const ConfigEcho& cfg) {
  std::string out = "{\"entries\":[";
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& e = table[i];
    if (i) out += ',';
    out += "{\"kind\":\"";
    out += spectral::kind_tag(e.kind);
    out += "\",\"n\":" + std::to_string(e.n);
    out += ",\"m\":" + std::to_string(e.m);
    out += ",\"computed\":" + format_number(e.computed);
    out += ",\"expected\":" + format_number(e.expected);
    out += ",\"residual\":" + format_number(e.residual);
    out += "}";
  }
  out += "],\"config\":" + config_json(cfg) + "}";
  return out;
}

std::string orthogonality_csv(
    const std::vector<spectral::OrthogonalityEntry>& table) {
  std::string out = "kind,n,m,computed,expected,residual\n";
  for (const auto& e : table) {
    out += spectral::kind_tag(e.kind);
    out += ',' + std::to_string(e.n);
    out += ',' + std::to_string(e.m);
    out += ',' + format_number(e.computed);
    out += ',' + format_number(e.expected);
    out += ',' + format_number(e.residual);
    out += '\n';
  }
  return out;
}

std::string report_json(const hurwitz::IsoperimetricReport& r,
                        const ConfigEcho& cfg) {
  std::string out = "{";
  out += "\"curve\":" + quoted(r.curve_kind);
  out += ",\"L\":" + format_number(r.length);
  out += ",\"A_shoelace\":" + format_number(r.area_shoelace);
  out += ",\"A_reparam\":" + format_number(r.area_reparam);
  out += ",\"A_simplified\":" + format_number(r.area_simplified);
  out += ",\"ibp_residual\":" + format_number(r.ibp_residual);
  out += ",\"amgm_bound\":" + format_number(r.amgm_bound);
  out += ",\"wirtinger_bound\":" + format_number(r.wirtinger_bound);
  out += ",\"arc_constraint_residual\":" +
         format_number(r.arc_constraint_residual);
  out += ",\"ratio\":" + format_number(r.ratio);
  out += ",\"deficit\":" + format_number(r.deficit);
  out += ",\"simple_probe\":" + bool_str(r.simple_probe);
  out += ",\"chain_ok\":" + bool_str(r.chain_ok);
  out += ",\"parseval_residual\":" + format_number(r.parseval_residual);
  out += ",\"deriv_parseval_residual\":" +
         format_number(r.deriv_parseval_residual);
  out += ",\"tail_energy\":" + format_number(r.tail_energy);
  out += ",\"truncation_warning\":" + bool_str(r.truncation_warning);
  out += ",\"orientation\":" + std::to_string(r.orientation);
  out += ",\"config\":" + config_json(cfg);
  out += "}";
  return out;
}

std::string report_csv_header() {
  return "curve_id,L,A,ratio,deficit,chain_ok\n";
}

std::string report_csv_row(const hurwitz::IsoperimetricReport& r) {
  std::string out = r.curve_kind;
  out += ',' + format_number(r.length);
  out += ',' + format_number(r.area_shoelace);
  out += ',' + format_number(r.ratio);
  out += ',' + format_number(r.deficit);
  out += ',' + bool_str(r.chain_ok);
  out += '\n';
  return out;
}

}  // namespace isoperim::io
