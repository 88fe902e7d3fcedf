// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "phaseaug/filter.hpp"

#include <cmath>
#include <stdexcept>

namespace phaseaug {

namespace {
constexpr double kPi = 3.14159265358979323846;

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}
}  // namespace

void FilterSpec::validate() const {
  if (kernel_size < 8)
    throw std::invalid_argument("FilterSpec: kernel_size must be >= 8");
  if (!(cutoff > 0.0 && cutoff < 0.5))
    throw std::invalid_argument("FilterSpec: cutoff must be in (0, 0.5)");
  if (!(transition_half_width > 0.0))
    throw std::invalid_argument("FilterSpec: transition_half_width must be > 0");
}

namespace detail {

double bessel_i0(double x) {
  // Power series; converges quickly for the beta range used here.
  double sum = 1.0, term = 1.0;
  const double y = x * x / 4.0;
  for (int k = 1; k < 200; ++k) {
    term *= y / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

double kaiser_beta(double attenuation_db) {
  if (attenuation_db > 50.0) return 0.1102 * (attenuation_db - 8.7);
  if (attenuation_db >= 21.0)
    return 0.5842 * std::pow(attenuation_db - 21.0, 0.4) +
           0.07886 * (attenuation_db - 21.0);
  return 0.0;
}

}  // namespace detail

FilterKernel design_kaiser_sinc(const FilterSpec& spec) {
  spec.validate();
  const int L = spec.kernel_size;
  const double attenuation =
      2.285 * (L - 1) * kPi * (2.0 * spec.transition_half_width) + 7.95;
  const double beta = detail::kaiser_beta(attenuation);
  const double i0_beta = detail::bessel_i0(beta);

  FilterKernel kernel;
  kernel.spec = spec;
  kernel.beta = beta;
  kernel.taps.resize(L);
  const double center = (L - 1) / 2.0;
  for (int n = 0; n < L; ++n) {
    const double m = n - center;
    const double r = 2.0 * m / (L - 1);  // in [-1, 1]
    const double window = detail::bessel_i0(beta * std::sqrt(1.0 - r * r)) / i0_beta;
    kernel.taps[n] = 2.0 * spec.cutoff * sinc(2.0 * spec.cutoff * m) * window;
  }
  kernel.taps /= kernel.taps.sum();
  return kernel;
}

Eigen::ArrayXd filter_mu(const Eigen::Ref<const Eigen::ArrayXd>& mu_extended,
                         const FilterKernel& kernel) {
  const Eigen::Index L = kernel.taps.size();
  const Eigen::Index n_out = mu_extended.size() - L + 1;
  if (n_out < 1)
    throw std::invalid_argument(
        "filter_mu: input must be at least kernel_size samples long");
  Eigen::ArrayXd out(n_out);
  for (Eigen::Index j = 0; j < n_out; ++j)
    out[j] = (mu_extended.segment(j, L) * kernel.taps).sum();
  return out;
}

}  // namespace phaseaug
