// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "phaseaug/policy.hpp"

#include <cmath>
#include <stdexcept>

namespace phaseaug {

void PolicyConfig::validate() const {
  if (!(delta_max >= 0.0))
    throw std::invalid_argument("PolicyConfig: delta_max must be >= 0");
  if (!(sigma2 >= 0.0))
    throw std::invalid_argument("PolicyConfig: sigma2 must be >= 0");
  if (!(probability >= 0.0 && probability <= 1.0))
    throw std::invalid_argument("PolicyConfig: probability must be in [0, 1]");
  stft.validate();
  filter.validate();
}

namespace {

PhaseDraw finish_draw(RngState& rng, const PolicyConfig& cfg,
                      const FilterKernel& kernel, double delta) {
  const Eigen::Index n_bins = cfg.stft.num_bins();
  const Eigen::Index n_ext = n_bins + kernel.taps.size() - 1;

  PhaseDraw draw;
  draw.delta = delta;
  const Eigen::ArrayXd mu =
      rng.normal_vector(n_ext, delta, std::sqrt(cfg.sigma2));
  draw.mu_filtered = filter_mu(mu, kernel);
  const PhaseVector ref = phi_ref(cfg.stft.n_fft);
  draw.phi.n_fft = cfg.stft.n_fft;
  draw.phi.angles = draw.mu_filtered * ref.angles;
  draw.phi.angles[0] = 0.0;
  return draw;
}

}  // namespace

PhaseDraw sample_phase_draw(RngState& rng, const PolicyConfig& cfg,
                            const FilterKernel& kernel) {
  cfg.validate();
  const double delta = rng.uniform(-cfg.delta_max, cfg.delta_max);
  return finish_draw(rng, cfg, kernel, delta);
}

PhaseVector sample_phase_vector(RngState& rng, const PolicyConfig& cfg) {
  return sample_phase_draw(rng, cfg, design_kaiser_sinc(cfg.filter)).phi;
}

namespace detail {
PhaseDraw sample_phase_draw_pinned(RngState& rng, const PolicyConfig& cfg,
                                   const FilterKernel& kernel,
                                   double pinned_delta) {
  cfg.validate();
  return finish_draw(rng, cfg, kernel, pinned_delta);
}
}  // namespace detail

AugmentResult augment_traced(const Signal& x, RngState& rng,
                             const PolicyConfig& cfg) {
  cfg.validate();
  AugmentResult result;
  const double coin = rng.uniform(0.0, 1.0);
  if (coin < cfg.probability) {
    const FilterKernel kernel = design_kaiser_sinc(cfg.filter);
    const PhaseDraw draw = sample_phase_draw(rng, cfg, kernel);
    result.output = phaseaug(x, draw.phi, cfg.stft);
    result.augmented = true;
    result.delta = draw.delta;
  } else {
    result.output = Signal{istft(stft(x, cfg.stft)), x.sample_rate};
  }
  return result;
}

Signal augment(const Signal& x, RngState& rng, const PolicyConfig& cfg) {
  return augment_traced(x, rng, cfg).output;
}

std::pair<Signal, Signal> augment_pair(const Signal& x_real,
                                       const Signal& x_gen, RngState& rng,
                                       const PolicyConfig& cfg) {
  if (x_real.samples.size() != x_gen.samples.size())
    throw std::invalid_argument("augment_pair: length mismatch");
  const PhaseVector phi = sample_phase_vector(rng, cfg);
  return {phaseaug(x_real, phi, cfg.stft), phaseaug(x_gen, phi, cfg.stft)};
}

std::vector<Signal> augment_batch(const std::vector<Signal>& xs,
                                  const RngState& rng,
                                  const PolicyConfig& cfg) {
  if (xs.empty()) throw std::invalid_argument("augment_batch: empty batch");
  std::vector<Signal> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RngState sub = rng.substream(i);
    out.push_back(augment(xs[i], sub, cfg));
  }
  return out;
}

}  // namespace phaseaug
