// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "phaseaug/phaseaug.hpp"

#include <stdexcept>

namespace phaseaug {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void PhaseVector::validate() const {
  if (n_fft < 2 || n_fft % 2 != 0)
    throw std::invalid_argument("PhaseVector: n_fft must be even and >= 2");
  if (angles.size() != n_fft / 2 + 1)
    throw std::invalid_argument("PhaseVector: need n_fft/2 + 1 angles");
  if (!angles.allFinite())
    throw std::invalid_argument("PhaseVector: non-finite angles");
  if (angles[0] != 0.0)
    throw std::invalid_argument(
        "PhaseVector: angles[0] must be 0 (DC-offset guard)");
}

PhaseVector phi_ref(int n_fft) {
  if (n_fft < 2 || n_fft % 2 != 0)
    throw std::invalid_argument("phi_ref: n_fft must be even and >= 2");
  PhaseVector phi;
  phi.n_fft = n_fft;
  phi.angles = 2.0 * kPi / n_fft *
               Eigen::ArrayXd::LinSpaced(n_fft / 2 + 1, 0.0, n_fft / 2.0);
  phi.angles[0] = 0.0;
  return phi;
}

Spectrogram rotate_spectrogram(const Spectrogram& X, const PhaseVector& phi) {
  X.validate();
  phi.validate();
  if (phi.n_fft != X.n_fft)
    throw std::invalid_argument("rotate_spectrogram: n_fft mismatch");

  Spectrogram out = X;
  for (Eigen::Index k = 0; k < out.num_bins(); ++k) {
    const double c = std::cos(phi.angles[k]);
    const double s = std::sin(phi.angles[k]);
    // (re, im) -> (re*c - im*s, re*s + im*c)
    out.bins.col(k) *= std::complex<double>(c, s);
  }
  return out;
}

Eigen::ArrayXd phaseaug(const Eigen::Ref<const Eigen::ArrayXd>& x,
                        const PhaseVector& phi, const StftConfig& cfg) {
  if (phi.n_fft != cfg.n_fft)
    throw std::invalid_argument("phaseaug: phi/config n_fft mismatch");
  return istft(rotate_spectrogram(stft(x, cfg), phi));
}

Signal phaseaug(const Signal& x, const PhaseVector& phi,
                const StftConfig& cfg) {
  return Signal{phaseaug(x.samples, phi, cfg), x.sample_rate};
}

namespace detail {
void check_shift_bound(double delta, const StftConfig& cfg) {
  if (!std::isfinite(delta) || std::abs(delta) > cfg.n_fft / 8.0)
    throw std::invalid_argument("time_shift: |delta| must be <= n_fft/8");
}
}  // namespace detail

Eigen::ArrayXd time_shift(const Eigen::Ref<const Eigen::ArrayXd>& x,
                          double delta, const StftConfig& cfg) {
  cfg.validate();
  detail::check_shift_bound(delta, cfg);
  PhaseVector phi = phi_ref(cfg.n_fft);
  phi.angles *= -delta;
  phi.angles[0] = 0.0;
  return phaseaug(x, phi, cfg);
}

Signal time_shift(const Signal& x, double delta, const StftConfig& cfg) {
  return Signal{time_shift(x.samples, delta, cfg), x.sample_rate};
}

}  // namespace phaseaug
