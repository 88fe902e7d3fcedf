// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <Eigen/Dense>

namespace phaseaug {

// Mono audio buffer. Samples are dimensionless amplitudes, nominally in
// [-1, 1]. The sample rate is metadata carried for file I/O and metrics;
// no transform in this header depends on it.
struct Signal {
  Eigen::ArrayXd samples;
  int sample_rate = 22050;
};

struct StftConfig {
  int n_fft = 1024;  // transform size N, even
  int hop = 256;     // hop size d, 0 < d <= N

  int num_bins() const { return n_fft / 2 + 1; }
  void validate() const;
};

// One-sided complex spectrogram: frames x (n_fft/2 + 1) bins.
struct Spectrogram {
  Eigen::MatrixXcd bins;
  int n_fft = 0;
  int hop = 0;
  Eigen::Index original_length = 0;  // sample count of the source signal

  Eigen::Index frames() const { return bins.rows(); }
  Eigen::Index num_bins() const { return bins.cols(); }
  void validate() const;
};

// w[n] = (1 - cos(2*pi*n/N)) / 2 for n = 0..N-1.
Eigen::ArrayXd hann_window(int n_fft);

// Analysis window together with the per-sample sum of plain window values
// over all frames, in padded coordinates. The sum is the normalizer of the
// inverse transform; for N=1024, d=256 it equals 2 exactly in the interior.
struct WindowEnvelope {
  Eigen::ArrayXd taps;
  Eigen::ArrayXd overlap_sum;
};

WindowEnvelope window_envelope(const StftConfig& cfg, Eigen::Index frames,
                               Eigen::Index padded_length);

// Centered framing: the input is extended by n_fft/2 mirrored samples on
// each side, frames are taken every hop samples, Hann-windowed and
// transformed, keeping bins 0..N/2. Frame count is floor(len(x)/hop) + 1.
Spectrogram stft(const Eigen::Ref<const Eigen::ArrayXd>& x,
                 const StftConfig& cfg);
Spectrogram stft(const Signal& x, const StftConfig& cfg);

// Overlap-add inverse. Rows are extended by conjugate symmetry, inverse
// transformed, overlap-added, divided by the window overlap sum, and
// trimmed back to original_length samples. The output is real by
// construction: imaginary parts of the DC and Nyquist bins never reach it.
Eigen::ArrayXd istft(const Spectrogram& X);

namespace detail {

// Mirror extension without edge duplication, bouncing for pad >= len(x).
Eigen::ArrayXd reflect_pad(const Eigen::Ref<const Eigen::ArrayXd>& x,
                           Eigen::Index pad);

// Source index in [0, length) for an arbitrary (possibly out-of-range)
// mirrored position.
Eigen::Index mirror_index(Eigen::Index pos, Eigen::Index length);

}  // namespace detail

}  // namespace phaseaug
