// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include "phaseaug/rng.hpp"
#include "phaseaug/stft.hpp"

namespace phaseaug {

// Deterministic synthetic material for self-checks and demos.

// Random multi-tone signal whose content lies strictly below
// band_fraction * Nyquist, peak-normalized to 0.9.
Eigen::ArrayXd band_limited_noise(RngState& rng, Eigen::Index length,
                                  double band_fraction);

// Speech-like harmonic stack (f0 in 90..220 Hz, partials below 5.5 kHz)
// with a slow syllabic amplitude envelope and a touch of noise.
Signal synthetic_utterance(RngState& rng, Eigen::Index length,
                           int sample_rate);

// Circular shift by k samples (positive k delays).
Eigen::ArrayXd circular_shift(const Eigen::Ref<const Eigen::ArrayXd>& x,
                              Eigen::Index k);

}  // namespace phaseaug
