// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "phaseaug/synth.hpp"

#include <cmath>
#include <stdexcept>

namespace phaseaug {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

Eigen::ArrayXd band_limited_noise(RngState& rng, Eigen::Index length,
                                  double band_fraction) {
  if (length < 1) throw std::invalid_argument("band_limited_noise: length");
  if (!(band_fraction > 0.0 && band_fraction <= 1.0))
    throw std::invalid_argument("band_limited_noise: band_fraction in (0, 1]");

  constexpr int kTones = 48;
  Eigen::ArrayXd x = Eigen::ArrayXd::Zero(length);
  for (int t = 0; t < kTones; ++t) {
    const double omega = rng.uniform(0.003, band_fraction) * kPi;
    const double amp = rng.uniform(0.2, 1.0) / (1.0 + 0.15 * t);
    const double phase = rng.uniform(0.0, kTwoPi);
    for (Eigen::Index n = 0; n < length; ++n)
      x[n] += amp * std::cos(omega * n + phase);
  }
  const double peak = x.abs().maxCoeff();
  if (peak > 0.0) x *= 0.9 / peak;
  return x;
}

Signal synthetic_utterance(RngState& rng, Eigen::Index length,
                           int sample_rate) {
  if (length < 1) throw std::invalid_argument("synthetic_utterance: length");
  const double f0 = rng.uniform(90.0, 220.0);
  const double syllable_rate = rng.uniform(1.5, 4.0);
  const double syllable_phase = rng.uniform(0.0, kTwoPi);

  Eigen::ArrayXd x = Eigen::ArrayXd::Zero(length);
  for (int k = 1; k < 64; ++k) {
    const double fk = f0 * k;
    if (fk > 5500.0) break;
    const double amp = rng.uniform(0.5, 1.0) / k;
    const double phase = rng.uniform(0.0, kTwoPi);
    for (Eigen::Index n = 0; n < length; ++n)
      x[n] += amp * std::cos(kTwoPi * fk * n / sample_rate + phase);
  }
  for (Eigen::Index n = 0; n < length; ++n) {
    const double t = static_cast<double>(n) / sample_rate;
    const double env =
        0.4 + 0.6 * std::abs(std::sin(kTwoPi * syllable_rate * t +
                                      syllable_phase));
    x[n] = x[n] * env + 0.01 * rng.normal(0.0, 1.0);
  }
  x *= 0.8 / x.abs().maxCoeff();
  return Signal{std::move(x), sample_rate};
}

Eigen::ArrayXd circular_shift(const Eigen::Ref<const Eigen::ArrayXd>& x,
                              Eigen::Index k) {
  const Eigen::Index n = x.size();
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index src = (i - k) % n;
    if (src < 0) src += n;
    out[i] = x[src];
  }
  return out;
}

}  // namespace phaseaug
