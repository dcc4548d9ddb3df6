// Copyright 2026 The fracpoisson Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef FRACPOISSON_SIMULATE_HPP
#define FRACPOISSON_SIMULATE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "fracpoisson/params.hpp"

namespace fracpoisson {

struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const RngSpec&, const RngSpec&) = default;
};

/// xoshiro256** with jump-ahead. Satisfies UniformRandomBitGenerator.
///
/// Stream s of seed x starts from the SplitMix64-seeded state advanced by
/// s long jumps (2^192 steps each); jump() advances 2^128 steps and is used
/// to carve independent blocks out of a stream.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed = 0);
  static Xoshiro256 for_stream(const RngSpec& spec);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  void jump();
  void long_jump();

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform_open();

  friend bool operator==(const Xoshiro256&, const Xoshiro256&) = default;

 private:
  void apply_jump(const std::array<std::uint64_t, 4>& table);
  std::array<std::uint64_t, 4> s_{};
};

/// One draw of S_alpha(t), Laplace transform exp(-t s^alpha), by Kanter's
/// representation scaled by t^{1/alpha}. alpha = 1 returns t.
double sample_stable(double alpha, double t, Xoshiro256& rng);

/// One draw of the tempered stable S_{alpha,mu}(t), Laplace transform
/// exp(-t((s + mu)^alpha - mu^alpha)). The interval is split into
/// ceil(t mu^alpha / ln 2) chunks and each chunk is an exponential-rejection
/// draw against sample_stable. More than 10^6 rejections raise SamplingStall.
double sample_tempered_stable(double alpha, double mu, double t, Xoshiro256& rng);

/// First passage Y_{beta,nu}(t) = inf{y : S_{beta,nu}(y) > t}.
///
/// Walks S_{beta,nu} with steps of grid_dt (0 selects 0.01 t) until it passes
/// t, then halves the crossing step up to 20 times. Each halving redraws the
/// two half-step increments conditioned on the event the walk observed (their
/// sum exceeds the remaining distance). If that conditioned redraw needs more
/// than 16 attempts, the crossing is carried by one jump inside a short
/// interval and a uniform point of the interval is returned. More than 10^8
/// walk steps raise SamplingStall.
double sample_inverse_subordinator(double beta, double nu, double t, Xoshiro256& rng,
                                   double grid_dt = 0.0);

struct PathGrid {
  std::vector<double> times;
  std::vector<double> values;
};

/// S_{alpha,mu} sampled on `times` (increasing, >= 0) from independent
/// increments; values are non-decreasing with S(0) = 0.
PathGrid sample_subordinator_path(double alpha, double mu, const std::vector<double>& times,
                                  Xoshiro256& rng);

struct SampleSet {
  ProcessParams params;
  double t = 0.0;
  std::vector<std::int64_t> counts;
  std::size_t n = 0;
  RngSpec rng;
  double grid_dt = 0.0;
};

/// n independent draws of N(t) through the subordination chain
/// Poisson(lambda * S_{alpha,mu}(Y_{beta,nu}(t))); beta = 1 skips the inverse
/// subordinator and alpha = 1 the outer one.
///
/// Draws are generated in fixed blocks, each with its own jump-separated
/// generator, so the output is identical for any thread count.
SampleSet sample_process(const ProcessParams& params, double t, std::size_t n,
                         const RngSpec& rng, double grid_dt = 0.0);

/// Renewal construction: Mittag-Leffler waiting times
/// T = lambda^{-1/beta} E^{1/beta} S_beta(1) counted up to t.
SampleSet sample_tfpp_renewal(double lambda, double beta, double t, std::size_t n,
                              const RngSpec& rng);

/// Relative frequencies of 0..k_max; mass above k_max is dropped.
std::vector<double> empirical_pmf(const SampleSet& set, int k_max);

/// Series form of the density of S_alpha(t),
/// (1/pi) sum_{k>=1} (-1)^{k+1} Gamma(alpha k + 1)/k! t^k x^{-(alpha k + 1)} sin(pi alpha k),
/// truncated after `terms` terms. Accurate away from x = 0.
double stable_density_series(double alpha, double x, double t = 1.0, int terms = 60);

}  // namespace fracpoisson

#endif  // FRACPOISSON_SIMULATE_HPP
