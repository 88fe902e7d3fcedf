// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <utility>
#include <vector>

#include "phaseaug/filter.hpp"
#include "phaseaug/phaseaug.hpp"
#include "phaseaug/rng.hpp"

namespace phaseaug {

struct PolicyConfig {
  double delta_max = 2.0;    // |mean time-shift| bound, samples
  double sigma2 = 6.0;       // per-bin shift variance before filtering
  double probability = 1.0;  // augmentation probability
  StftConfig stft;
  FilterSpec filter;
  std::uint64_t seed = 0;

  void validate() const;
};

// One draw of the augmentation policy:
//   delta  ~ Uniform(-delta_max, delta_max)
//   mu     ~ Normal(delta * 1, sigma2 * I), extended by kernel_size - 1
//   mu_l   = filter_mu(mu)            (per-bin time shifts, smoothed)
//   phi    = mu_l * phi_ref, phi[0] = 0
struct PhaseDraw {
  double delta = 0.0;
  Eigen::ArrayXd mu_filtered;
  PhaseVector phi;
};

PhaseDraw sample_phase_draw(RngState& rng, const PolicyConfig& cfg,
                            const FilterKernel& kernel);
PhaseVector sample_phase_vector(RngState& rng, const PolicyConfig& cfg);

struct AugmentResult {
  Signal output;
  bool augmented = false;
  double delta = 0.0;  // meaningful only when augmented
};

// With probability cfg.probability applies a freshly drawn phase rotation;
// otherwise routes the signal through the plain transform round trip so
// both branches share the same numerical noise floor.
AugmentResult augment_traced(const Signal& x, RngState& rng,
                             const PolicyConfig& cfg);
Signal augment(const Signal& x, RngState& rng, const PolicyConfig& cfg);

// Draws a single phi (exactly one sample_phase_draw from rng) and applies
// it to both signals. Intended for paired real/generated discriminator
// inputs; callers wanting fresh views per step sample again — phi is never
// cached across calls. Any spectral reconstruction loss belongs on the
// un-augmented pair, not on these outputs.
std::pair<Signal, Signal> augment_pair(const Signal& x_real,
                                       const Signal& x_gen, RngState& rng,
                                       const PolicyConfig& cfg);

// Element i is augmented with rng.substream(i), so its output depends only
// on (seed, i, xs[i]): reordering or dropping other elements never changes
// it, and elements may be processed concurrently. The parent rng is not
// advanced.
std::vector<Signal> augment_batch(const std::vector<Signal>& xs,
                                  const RngState& rng,
                                  const PolicyConfig& cfg);

namespace detail {
// Test hook: Algorithm step 1 replaced by a fixed delta. Not part of the
// sampling path.
PhaseDraw sample_phase_draw_pinned(RngState& rng, const PolicyConfig& cfg,
                                   const FilterKernel& kernel,
                                   double pinned_delta);
}  // namespace detail

}  // namespace phaseaug
