// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include "phaseaug/stft.hpp"

namespace phaseaug {

// Per-bin rotation angles in radians, one per one-sided bin. The DC entry
// is pinned to zero so a rotation can never introduce a DC offset.
struct PhaseVector {
  Eigen::ArrayXd angles;  // length n_fft/2 + 1, angles[0] == 0
  int n_fft = 0;

  void validate() const;
};

// Reference slope 2*pi/N * [0, 1, ..., N/2]: rotating by delta * phi_ref
// advances the signal by delta samples, -delta * phi_ref delays it.
PhaseVector phi_ref(int n_fft);

// Multiplies column k by e^{j*phi[k]}, applied to the (re, im) pair as the
// 2x2 rotation [cos -sin; sin cos]. Bin magnitudes are unchanged exactly.
Spectrogram rotate_spectrogram(const Spectrogram& X, const PhaseVector& phi);

// istft(rotate_spectrogram(stft(x), phi)): rotates the phase of every
// frequency bin without touching magnitudes. Output length equals input
// length.
Eigen::ArrayXd phaseaug(const Eigen::Ref<const Eigen::ArrayXd>& x,
                        const PhaseVector& phi, const StftConfig& cfg);
Signal phaseaug(const Signal& x, const PhaseVector& phi,
                const StftConfig& cfg);

// Fractional delay by delta samples (delta may be any real with
// |delta| <= n_fft/8), realized as phaseaug(x, -delta * phi_ref).
Eigen::ArrayXd time_shift(const Eigen::Ref<const Eigen::ArrayXd>& x,
                          double delta, const StftConfig& cfg);
Signal time_shift(const Signal& x, double delta, const StftConfig& cfg);

namespace detail {
void check_shift_bound(double delta, const StftConfig& cfg);
}

}  // namespace phaseaug
