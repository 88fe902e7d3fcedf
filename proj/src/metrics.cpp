// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "phaseaug/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace phaseaug {

namespace {
constexpr double kLogMagFloor = 1e-12;

double hz_to_mel(double f) { return 2595.0 * std::log10(1.0 + f / 700.0); }
double mel_to_hz(double m) {
  return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0);
}
}  // namespace

void MelConfig::validate() const {
  stft.validate();
  if (sample_rate < 1)
    throw std::invalid_argument("MelConfig: sample_rate must be positive");
  if (n_mels < 1) throw std::invalid_argument("MelConfig: n_mels must be >= 1");
  if (!(f_min >= 0.0 && f_min < f_max && f_max <= sample_rate / 2.0))
    throw std::invalid_argument(
        "MelConfig: need 0 <= f_min < f_max <= sample_rate/2");
  if (!(floor > 0.0)) throw std::invalid_argument("MelConfig: floor must be > 0");
}

Eigen::MatrixXd mel_filterbank(const MelConfig& cfg) {
  cfg.validate();
  const int bins = cfg.stft.num_bins();
  const double mel_lo = hz_to_mel(cfg.f_min);
  const double mel_hi = hz_to_mel(cfg.f_max);

  Eigen::ArrayXd edges(cfg.n_mels + 2);
  for (int i = 0; i < cfg.n_mels + 2; ++i)
    edges[i] =
        mel_to_hz(mel_lo + (mel_hi - mel_lo) * i / (cfg.n_mels + 1.0));

  Eigen::MatrixXd fb = Eigen::MatrixXd::Zero(cfg.n_mels, bins);
  for (int b = 0; b < cfg.n_mels; ++b) {
    const double lo = edges[b], center = edges[b + 1], hi = edges[b + 2];
    const double area_norm = 2.0 / (hi - lo);
    for (int k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * cfg.sample_rate / cfg.stft.n_fft;
      const double rising = (f - lo) / (center - lo);
      const double falling = (hi - f) / (hi - center);
      const double weight = std::max(0.0, std::min(rising, falling));
      fb(b, k) = weight * area_norm;
    }
  }
  return fb;
}

Eigen::MatrixXd mel_spectrogram(const Signal& x, const MelConfig& cfg) {
  cfg.validate();
  if (x.sample_rate != cfg.sample_rate)
    throw std::invalid_argument("mel_spectrogram: sample rate mismatch");
  const Eigen::MatrixXd fb = mel_filterbank(cfg);
  const Spectrogram X = stft(x, cfg.stft);
  const Eigen::MatrixXd mag = X.bins.cwiseAbs();
  return (mag * fb.transpose()).array().max(cfg.floor).log().matrix();
}

double mel_mae(const Signal& a, const Signal& b, const MelConfig& cfg) {
  if (a.samples.size() != b.samples.size())
    throw std::invalid_argument("mel_mae: length mismatch");
  if (a.sample_rate != b.sample_rate)
    throw std::invalid_argument("mel_mae: sample rate mismatch");
  const Eigen::MatrixXd ma = mel_spectrogram(a, cfg);
  const Eigen::MatrixXd mb = mel_spectrogram(b, cfg);
  return (ma - mb).cwiseAbs().mean();
}

void MultiResConfig::validate() const {
  for (const StftResolution& r : resolutions) {
    StftConfig{r.n_fft, r.hop}.validate();
    if (r.window_length != r.n_fft)
      throw std::invalid_argument(
          "MultiResConfig: window_length must equal n_fft");
  }
}

double mstft_distance(const Signal& a, const Signal& b,
                      const MultiResConfig& cfg) {
  cfg.validate();
  if (a.samples.size() != b.samples.size())
    throw std::invalid_argument("mstft_distance: length mismatch");

  double total = 0.0;
  for (const StftResolution& r : cfg.resolutions) {
    const StftConfig sc{r.n_fft, r.hop};
    const Eigen::MatrixXd ma = stft(a.samples, sc).bins.cwiseAbs();
    const Eigen::MatrixXd mb = stft(b.samples, sc).bins.cwiseAbs();
    const double diff = (ma - mb).norm();
    const double sc_term = diff == 0.0 ? 0.0 : diff / ma.norm();
    const double log_term = (ma.array().max(kLogMagFloor).log() -
                             mb.array().max(kLogMagFloor).log())
                                .abs()
                                .mean();
    total += sc_term + log_term;
  }
  return total / static_cast<double>(cfg.resolutions.size());
}

}  // namespace phaseaug
