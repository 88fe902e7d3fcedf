// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <Eigen/Dense>

namespace phaseaug {

// Kaiser-windowed sinc low-pass design parameters. Frequencies are
// normalized to cycles per sample of the sequence being filtered.
struct FilterSpec {
  int kernel_size = 128;
  double cutoff = 0.05;
  double transition_half_width = 0.06;

  void validate() const;
};

struct FilterKernel {
  Eigen::ArrayXd taps;  // symmetric, unit DC gain
  FilterSpec spec;
  double beta = 0.0;  // Kaiser shape parameter used by the design

  double sum() const { return taps.sum(); }
  double sum_squares() const { return taps.square().sum(); }
};

// Ideal low-pass sinc at spec.cutoff, shaped by a Kaiser window whose beta
// follows from the attenuation estimate
//   A = 2.285 * (L - 1) * pi * (2 * transition_half_width) + 7.95
// and normalized to unit DC gain so that the mean of a filtered sequence
// is preserved.
FilterKernel design_kaiser_sinc(const FilterSpec& spec);

// Valid-mode correlation: out[j] = sum_i in[j + i] * taps[i], producing
// len(in) - kernel_size + 1 outputs. No padding; the caller supplies the
// kernel_size - 1 extra input samples.
Eigen::ArrayXd filter_mu(const Eigen::Ref<const Eigen::ArrayXd>& mu_extended,
                         const FilterKernel& kernel);

namespace detail {
double bessel_i0(double x);
double kaiser_beta(double attenuation_db);
}  // namespace detail

}  // namespace phaseaug
