#include "isoperim/random_fixtures.hpp"

#include <string>
#include <vector>

namespace isoperim::fixtures {

std::uint64_t case_seed(std::uint64_t suite_seed, std::uint64_t case_index) {
  // splitmix64 of the pair; decorrelates neighbouring case indices.
  std::uint64_t z = suite_seed + 0x9e3779b97f4a7c15ULL * (case_index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

series::FourierCoeffs random_coeffs(Rng& rng, std::size_t order,
                                    double amplitude, bool zero_mean) {
  const double a0 = zero_mean ? 0.0 : rng.uniform(-amplitude, amplitude);
  std::vector<double> a(order), b(order);
  for (std::size_t i = 0; i < order; ++i) {
    a[i] = rng.uniform(-amplitude, amplitude);
    b[i] = rng.uniform(-amplitude, amplitude);
  }
  return series::FourierCoeffs(a0, std::move(a), std::move(b));
}

curves::CurveSpec random_regular_curve(Rng& rng, std::size_t max_order,
                                       double min_speed) {
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::size_t order = rng.integer(1, max_order);
    std::vector<double> ax(order), bx(order), ay(order), by(order);
    for (std::size_t n = 1; n <= order; ++n) {
      const double cap = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
      ax[n - 1] = rng.uniform(-cap, cap);
      bx[n - 1] = rng.uniform(-cap, cap);
      ay[n - 1] = rng.uniform(-cap, cap);
      by[n - 1] = rng.uniform(-cap, cap);
    }
    const double cx0 = rng.uniform(-1.0, 1.0);
    const double cy0 = rng.uniform(-1.0, 1.0);
    curves::CurveSpec c = curves::make_fourier_curve(
        series::FourierCoeffs(cx0, std::move(ax), std::move(bx)),
        series::FourierCoeffs(cy0, std::move(ay), std::move(by)));
    if (curves::min_speed(c) >= min_speed) {
      return c;
    }
  }
  throw InvalidParams(
      "random_regular_curve: rejection sampling failed to reach min speed " +
      std::to_string(min_speed));
}

}  // namespace isoperim::fixtures
