// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "phaseaug/rng.hpp"

#include <cmath>

namespace phaseaug {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

namespace detail {
std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

RngState::RngState(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RngState RngState::substream(std::uint64_t key) const {
  return RngState(detail::splitmix64(seed_ + detail::splitmix64(key)));
}

double RngState::next_unit() {
  // 53 uniformly distributed mantissa bits.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngState::uniform(double lo, double hi) {
  return lo + next_unit() * (hi - lo);
}

double RngState::normal(double mean, double stddev) {
  if (has_spare_) {
    has_spare_ = false;
    return mean + stddev * spare_;
  }
  const double u1 = 1.0 - next_unit();  // (0, 1], keeps log finite
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = kTwoPi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return mean + stddev * r * std::cos(theta);
}

Eigen::ArrayXd RngState::uniform_vector(Eigen::Index n, double lo, double hi) {
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = uniform(lo, hi);
  return out;
}

Eigen::ArrayXd RngState::normal_vector(Eigen::Index n, double mean,
                                       double stddev) {
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = normal(mean, stddev);
  return out;
}

}  // namespace phaseaug
