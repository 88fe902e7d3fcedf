// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <array>

#include "phaseaug/stft.hpp"

namespace phaseaug {

struct MelConfig {
  int sample_rate = 22050;
  int n_mels = 80;
  double f_min = 0.0;
  double f_max = 8000.0;
  StftConfig stft;
  double floor = 1e-5;  // clamp before the natural log

  void validate() const;
};

// Triangular filterbank on the mel scale m(f) = 2595 log10(1 + f/700),
// area-normalized rows, shape n_mels x (n_fft/2 + 1).
Eigen::MatrixXd mel_filterbank(const MelConfig& cfg);

// Magnitude transform pooled through the filterbank, natural log with
// floor clamp. Shape frames x n_mels.
Eigen::MatrixXd mel_spectrogram(const Signal& x, const MelConfig& cfg);

// Mean absolute difference of the two log-mel matrices.
double mel_mae(const Signal& a, const Signal& b, const MelConfig& cfg);

struct StftResolution {
  int n_fft = 0;
  int hop = 0;
  int window_length = 0;  // must equal n_fft (Hann analysis of full frames)
};

struct MultiResConfig {
  std::array<StftResolution, 3> resolutions = {{{512, 128, 512},
                                                {1024, 256, 1024},
                                                {2048, 512, 2048}}};
  void validate() const;
};

// Mean over resolutions of spectral convergence ||A|-|B||_F / ||A||_F plus
// the L1 log-magnitude term. Zero for identical inputs.
double mstft_distance(const Signal& a, const Signal& b,
                      const MultiResConfig& cfg);

}  // namespace phaseaug
