// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "phaseaug/grad.hpp"

#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace phaseaug {

namespace {
constexpr double kEnvelopeFloor = 1e-11;
}

// Derivation sketch, per frame of length N with one-sided bins 0..N/2:
//
// forward istft: y[u] = (1/N) [ Re X[0]
//                  + 2 sum_{k=1}^{N/2-1} (Re X[k] cos(2pi uk/N)
//                                         - Im X[k] sin(2pi uk/N))
//                  + Re X[N/2] (-1)^u ],
// so the adjoint of the per-frame inverse is G[k] = c_k * DFT(y_hat)[k]
// with c_0 = c_{N/2} = 1/N and c_k = 2/N otherwise, the DC and Nyquist
// results kept real. Envelope division, overlap-add scatter and the
// mirror padding transpose to diagonal scaling, frame gathering and
// index-wise accumulation respectively.
Spectrogram istft_adjoint(const Eigen::Ref<const Eigen::ArrayXd>& g,
                          const StftConfig& cfg) {
  cfg.validate();
  if (g.size() < 1) throw std::invalid_argument("istft_adjoint: empty tangent");
  if (!g.allFinite())
    throw std::invalid_argument("istft_adjoint: non-finite tangent");

  const int n = cfg.n_fft;
  const Eigen::Index pad = n / 2;
  const Eigen::Index frames = g.size() / cfg.hop + 1;
  const Eigen::Index padded_length = g.size() + 2 * pad;

  const WindowEnvelope env = window_envelope(cfg, frames, padded_length);
  Eigen::ArrayXd acc_grad = Eigen::ArrayXd::Zero(padded_length);
  for (Eigen::Index t = 0; t < g.size(); ++t) {
    const double s = env.overlap_sum[pad + t];
    if (s == 0.0)
      throw std::runtime_error("istft_adjoint: zero window overlap");
    acc_grad[pad + t] = g[t] / std::max(s, kEnvelopeFloor);
  }

  Spectrogram G;
  G.n_fft = n;
  G.hop = cfg.hop;
  G.original_length = g.size();
  G.bins.resize(frames, n / 2 + 1);

  Eigen::FFT<double> fft;
  Eigen::VectorXcd frame(n), spec(n);
  const double inv_n = 1.0 / n;
  for (Eigen::Index m = 0; m < frames; ++m) {
    frame = acc_grad.segment(m * cfg.hop, n)
                .matrix()
                .cast<std::complex<double>>();
    fft.fwd(spec, frame);
    G.bins(m, 0) = std::complex<double>(spec[0].real() * inv_n, 0.0);
    for (int k = 1; k < n / 2; ++k) G.bins(m, k) = 2.0 * inv_n * spec[k];
    G.bins(m, n / 2) = std::complex<double>(spec[n / 2].real() * inv_n, 0.0);
  }
  return G;
}

Eigen::ArrayXd stft_adjoint(const Spectrogram& G) {
  G.validate();
  const int n = G.n_fft;
  const Eigen::Index pad = n / 2;
  const Eigen::Index out_length = G.original_length;
  const Eigen::Index padded_length =
      std::max(out_length + 2 * pad, (G.frames() - 1) * G.hop + n);

  const Eigen::ArrayXd w = hann_window(n);
  Eigen::ArrayXd padded_grad = Eigen::ArrayXd::Zero(padded_length);

  Eigen::FFT<double> fft;
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd time(n);
  for (Eigen::Index m = 0; m < G.frames(); ++m) {
    full.head(n / 2 + 1) = G.bins.row(m).transpose();
    // Re sum_{k=0}^{N/2} G[k] e^{+j 2pi uk/N}: unscaled inverse transform
    // of the one-sided bins with the upper half left at zero.
    fft.inv(time, full);
    padded_grad.segment(m * G.hop, n) +=
        w * static_cast<double>(n) * time.real().array();
  }

  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(out_length);
  for (Eigen::Index i = 0; i < padded_length; ++i)
    out[detail::mirror_index(i - pad, out_length)] += padded_grad[i];
  return out;
}

TangentSignal phaseaug_adjoint(const Eigen::Ref<const Eigen::ArrayXd>& g,
                               const PhaseVector& phi, const StftConfig& cfg) {
  if (phi.n_fft != cfg.n_fft)
    throw std::invalid_argument("phaseaug_adjoint: phi/config n_fft mismatch");
  PhaseVector reversed = phi;
  reversed.angles = -phi.angles;
  reversed.angles[0] = 0.0;
  return stft_adjoint(rotate_spectrogram(istft_adjoint(g, cfg), reversed));
}

TangentSignal time_shift_ddelta(const Eigen::Ref<const Eigen::ArrayXd>& x,
                                double delta, const StftConfig& cfg) {
  cfg.validate();
  detail::check_shift_bound(delta, cfg);
  Spectrogram X = stft(x, cfg);
  const PhaseVector ref = phi_ref(cfg.n_fft);
  for (Eigen::Index k = 0; k < X.num_bins(); ++k) {
    const double a = ref.angles[k];
    X.bins.col(k) *= std::complex<double>(0.0, -a) *
                     std::complex<double>(std::cos(delta * a),
                                          -std::sin(delta * a));
  }
  return istft(X);
}

}  // namespace phaseaug
