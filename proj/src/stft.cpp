// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "phaseaug/stft.hpp"

#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace phaseaug {

namespace {
constexpr double kPi = 3.14159265358979323846;
// Lower clamp for the overlap-sum division near signal edges.
constexpr double kEnvelopeFloor = 1e-11;
}  // namespace

void StftConfig::validate() const {
  if (n_fft < 2 || n_fft % 2 != 0)
    throw std::invalid_argument("StftConfig: n_fft must be even and >= 2");
  if (hop < 1 || hop > n_fft)
    throw std::invalid_argument("StftConfig: hop must satisfy 0 < hop <= n_fft");
}

void Spectrogram::validate() const {
  StftConfig{n_fft, hop}.validate();
  if (bins.cols() != n_fft / 2 + 1)
    throw std::invalid_argument("Spectrogram: bin count must be n_fft/2 + 1");
  if (bins.rows() < 1)
    throw std::invalid_argument("Spectrogram: no frames");
  if (original_length < 1)
    throw std::invalid_argument("Spectrogram: original_length not recorded");
  if (!bins.allFinite())
    throw std::invalid_argument("Spectrogram: non-finite bins");
}

Eigen::ArrayXd hann_window(int n_fft) {
  if (n_fft < 2 || n_fft % 2 != 0)
    throw std::invalid_argument("hann_window: n_fft must be even and >= 2");
  Eigen::ArrayXd w(n_fft);
  for (int n = 0; n < n_fft; ++n)
    w[n] = (1.0 - std::cos(2.0 * kPi * n / n_fft)) / 2.0;
  return w;
}

WindowEnvelope window_envelope(const StftConfig& cfg, Eigen::Index frames,
                               Eigen::Index padded_length) {
  WindowEnvelope env;
  env.taps = hann_window(cfg.n_fft);
  env.overlap_sum = Eigen::ArrayXd::Zero(padded_length);
  for (Eigen::Index m = 0; m < frames; ++m) {
    const Eigen::Index start = m * cfg.hop;
    if (start + cfg.n_fft > padded_length)
      throw std::invalid_argument("window_envelope: frame extends past buffer");
    env.overlap_sum.segment(start, cfg.n_fft) += env.taps;
  }
  return env;
}

namespace detail {

Eigen::Index mirror_index(Eigen::Index pos, Eigen::Index length) {
  if (length == 1) return 0;
  const Eigen::Index period = 2 * (length - 1);
  Eigen::Index p = pos % period;
  if (p < 0) p += period;
  return p < length ? p : period - p;
}

Eigen::ArrayXd reflect_pad(const Eigen::Ref<const Eigen::ArrayXd>& x,
                           Eigen::Index pad) {
  const Eigen::Index n = x.size();
  if (n < 1) throw std::invalid_argument("reflect_pad: empty input");
  Eigen::ArrayXd out(n + 2 * pad);
  for (Eigen::Index i = 0; i < out.size(); ++i)
    out[i] = x[mirror_index(i - pad, n)];
  return out;
}

}  // namespace detail

Spectrogram stft(const Eigen::Ref<const Eigen::ArrayXd>& x,
                 const StftConfig& cfg) {
  cfg.validate();
  if (x.size() < 1) throw std::invalid_argument("stft: empty signal");
  if (!x.allFinite()) throw std::invalid_argument("stft: non-finite samples");

  const int n = cfg.n_fft;
  const Eigen::Index pad = n / 2;
  const Eigen::ArrayXd padded = detail::reflect_pad(x, pad);
  const Eigen::ArrayXd w = hann_window(n);
  const Eigen::Index frames = x.size() / cfg.hop + 1;

  Spectrogram out;
  out.n_fft = n;
  out.hop = cfg.hop;
  out.original_length = x.size();
  out.bins.resize(frames, n / 2 + 1);

  Eigen::FFT<double> fft;
  Eigen::VectorXcd frame(n), spec(n);
  for (Eigen::Index m = 0; m < frames; ++m) {
    frame = (padded.segment(m * cfg.hop, n) * w)
                .matrix()
                .cast<std::complex<double>>();
    fft.fwd(spec, frame);
    out.bins.row(m) = spec.head(n / 2 + 1).transpose();
  }
  return out;
}

Spectrogram stft(const Signal& x, const StftConfig& cfg) {
  return stft(x.samples, cfg);
}

Eigen::ArrayXd istft(const Spectrogram& X) {
  X.validate();
  const int n = X.n_fft;
  const Eigen::Index pad = n / 2;
  const Eigen::Index frames = X.frames();
  const Eigen::Index padded_length =
      std::max(X.original_length + 2 * pad, (frames - 1) * X.hop + n);

  Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(padded_length);
  Eigen::FFT<double> fft;
  Eigen::VectorXcd full(n), time(n);
  for (Eigen::Index m = 0; m < frames; ++m) {
    full.head(n / 2 + 1) = X.bins.row(m).transpose();
    // Conjugate-symmetric extension; the stored Nyquist bin stays as given,
    // its imaginary part (like the DC bin's) is dropped by the real cast.
    full.tail(n / 2 - 1) =
        X.bins.row(m).segment(1, n / 2 - 1).conjugate().reverse().transpose();
    fft.inv(time, full);
    acc.segment(m * X.hop, n) += time.real().array();
  }

  const WindowEnvelope env =
      window_envelope(StftConfig{n, X.hop}, frames, padded_length);
  Eigen::ArrayXd out(X.original_length);
  for (Eigen::Index t = 0; t < X.original_length; ++t) {
    const double s = env.overlap_sum[pad + t];
    if (s == 0.0)
      throw std::runtime_error("istft: zero window overlap at output sample");
    out[t] = acc[pad + t] / std::max(s, kEnvelopeFloor);
  }
  return out;
}

}  // namespace phaseaug
