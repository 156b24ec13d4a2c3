#pragma once

/**
 * External formats.
 *
 * Coefficients:  {"a0": 0.0, "a": [a1, a2, ...], "b": [b1, b2, ...]}
 *   (arrays are 0-based, entry i holds the coefficient of harmonic i + 1).
 *
 * Curves:        {"kind": "circle"|"ellipse"|"fourier"|"polyline",
 *                 "params": {...}, "id": "optional label"}
 *
 * Everything emitted here prints real numbers with 17 significant digits and
 * fixed field order, so identical inputs produce byte-identical output.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "isoperim/curve.hpp"
#include "isoperim/isoperimetric.hpp"
#include "isoperim/spectral.hpp"
#include "isoperim/trig_series.hpp"

namespace isoperim::io {

/// Settings echoed into every report for reproducibility.
struct ConfigEcho {
  double tol = 1e-10;
  std::size_t order = 32;
  std::size_t grid = 1024;
  std::uint64_t seed = 1;
};

/// 17-significant-digit decimal form of v (round-trips exactly).
std::string format_number(double v);

// -- parsing ---------------------------------------------------------------

series::FourierCoeffs parse_coeffs(const nlohmann::json& j,
                                   const std::string& context);

/// Single curve object; throws InvalidParams naming any missing/ill-typed
/// field.
curves::CurveSpec parse_curve(const nlohmann::json& j);

/// Accepts either one curve object or an array of them.
std::vector<curves::CurveSpec> parse_curve_batch(const nlohmann::json& j);

// -- emission ---------------------------------------------------------------

std::string coeffs_json(const series::FourierCoeffs& c);

std::string parseval_json(const spectral::ParsevalReport& r,
                          const ConfigEcho& cfg);
std::string wirtinger_json(const spectral::WirtingerReport& r,
                           const ConfigEcho& cfg);

std::string orthogonality_json(
    const std::vector<spectral::OrthogonalityEntry>& table,
    const ConfigEcho& cfg);
std::string orthogonality_csv(
    const std::vector<spectral::OrthogonalityEntry>& table);

std::string report_json(const hurwitz::IsoperimetricReport& r,
                        const ConfigEcho& cfg);
std::string report_csv_header();
std::string report_csv_row(const hurwitz::IsoperimetricReport& r);

}  // namespace isoperim::io
