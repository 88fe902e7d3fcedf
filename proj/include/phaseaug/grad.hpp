// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include "phaseaug/phaseaug.hpp"

namespace phaseaug {

// Perturbation direction / gradient carrier, same length as the primal.
using TangentSignal = Eigen::ArrayXd;

// Adjoint of the real-linear map A(x) = phaseaug(x, phi, cfg) under the
// standard inner products: <A x, g> == <x, phaseaug_adjoint(g, phi, cfg)>
// for all x and g of equal length. This is the backward pass a framework
// would compute for the rotation pipeline.
TangentSignal phaseaug_adjoint(const Eigen::Ref<const Eigen::ArrayXd>& g,
                               const PhaseVector& phi, const StftConfig& cfg);

// Adjoint building blocks. The spectrogram inner product is the real dot
// product over interleaved (re, im) components of the stored one-sided
// bins. istft_adjoint takes a tangent of the same length as the signal the
// forward istft produced and yields a spectrogram tangent; stft_adjoint
// maps a spectrogram tangent back to signal space.
Spectrogram istft_adjoint(const Eigen::Ref<const Eigen::ArrayXd>& g,
                          const StftConfig& cfg);
Eigen::ArrayXd stft_adjoint(const Spectrogram& G);

// Derivative of time_shift(x, delta, cfg) with respect to delta: the
// inverse transform of stft(x) .* (-j phi_ref) e^{-j delta phi_ref}
// through the same windowed pipeline.
TangentSignal time_shift_ddelta(const Eigen::Ref<const Eigen::ArrayXd>& x,
                                double delta, const StftConfig& cfg);

}  // namespace phaseaug
