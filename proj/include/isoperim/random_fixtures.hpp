#pragma once

/**
 * Seeded generators for the random test batteries.  Doubles are derived from
 * raw mt19937_64 output (not std distributions) so identical seeds give
 * identical sequences on every platform and standard library.
 */

#include <cstdint>
#include <random>

#include "isoperim/curve.hpp"
#include "isoperim/trig_series.hpp"

namespace isoperim::fixtures {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [lo, hi) with 53 random bits.
  double uniform(double lo, double hi) {
    const double u =
        static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  /// Uniform integer in [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
    return lo + engine_() % (hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

/// Stable per-case seed derived from a suite seed (splitmix64 step).
std::uint64_t case_seed(std::uint64_t suite_seed, std::uint64_t case_index);

/// Truncated series with entries uniform in [-amplitude, amplitude].
series::FourierCoeffs random_coeffs(Rng& rng, std::size_t order,
                                    double amplitude = 1.0,
                                    bool zero_mean = false);

/**
 * Closed Fourier curve with per-harmonic amplitudes bounded by 1/n^2,
 * rejection-sampled until the speed stays >= min_speed on a 256-point probe.
 */
curves::CurveSpec random_regular_curve(Rng& rng, std::size_t max_order = 4,
                                       double min_speed = 0.1);

}  // namespace isoperim::fixtures
