// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace phaseaug {

// Deterministic, seedable generator. The raw engine is std::mt19937_64,
// whose output sequence is fixed by the standard; the uniform and normal
// transforms are implemented here rather than with std::*_distribution so
// the draw sequence does not depend on the standard library in use.
//
// Substreams are derived from the construction seed only, never from the
// evolving engine state: substream(k) of a given RngState is the same
// regardless of how many values have been drawn from it.
class RngState {
 public:
  explicit RngState(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  // Independent generator keyed by (seed, key).
  RngState substream(std::uint64_t key) const;

  // Uniform draw in [lo, hi).
  double uniform(double lo, double hi);

  // Gaussian draw (Box-Muller; pairs are cached).
  double normal(double mean, double stddev);

  Eigen::ArrayXd uniform_vector(Eigen::Index n, double lo, double hi);
  Eigen::ArrayXd normal_vector(Eigen::Index n, double mean, double stddev);

  std::uint64_t next_u64() { return engine_(); }

 private:
  double next_unit();  // [0, 1)

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

namespace detail {
std::uint64_t splitmix64(std::uint64_t z);
}

}  // namespace phaseaug
