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

#include "fracpoisson/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fracpoisson/detail/parallel.hpp"
#include "fracpoisson/detail/real.hpp"
#include "fracpoisson/errors.hpp"

namespace fracpoisson {

namespace {

constexpr std::array<std::uint64_t, 4> kJump = {0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                                                0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
constexpr std::array<std::uint64_t, 4> kLongJump = {0x76e15d3efefdcbbfULL, 0xc5004e441c522fb3ULL,
                                                    0x77710069854ee241ULL, 0x39109bb02acbe635ULL};

constexpr std::size_t kBlockSize = 8192;
constexpr long kMaxRejections = 1'000'000;
constexpr long kMaxWalkSteps = 100'000'000;
constexpr int kRefinementStages = 20;
constexpr int kRefinementAttempts = 16;
// Above this mean the Poisson draw uses the normal approximation; its
// relative error is far below the spread of the count.
constexpr double kNormalPoissonMean = 1e15;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter(message);
}

double default_grid_dt(double grid_dt, double t) { return grid_dt > 0 ? grid_dt : 0.01 * t; }

std::int64_t poisson_draw(double mean, Xoshiro256& rng) {
  if (mean <= 0) return 0;
  if (mean > kNormalPoissonMean) {
    std::normal_distribution<double> normal(mean, std::sqrt(mean));
    return static_cast<std::int64_t>(std::llround(std::max(0.0, normal(rng))));
  }
  std::poisson_distribution<std::int64_t> dist(mean);
  return dist(rng);
}

// Increment of S_{alpha,mu} over a step of length dt.
double subordinator_increment(double alpha, double mu, double dt, Xoshiro256& rng) {
  if (alpha == 1.0) return dt;
  return mu > 0 ? sample_tempered_stable(alpha, mu, dt, rng) : sample_stable(alpha, dt, rng);
}

std::int64_t draw_count(const ProcessParams& p, double t, double grid_dt, Xoshiro256& rng) {
  double clock = t;
  if (p.beta < 1.0) clock = sample_inverse_subordinator(p.beta, p.nu, t, rng, grid_dt);
  if (p.alpha < 1.0 && clock > 0) clock = subordinator_increment(p.alpha, p.mu, clock, rng);
  return poisson_draw(p.lambda * clock, rng);
}

template <class Draw>
std::vector<std::int64_t> blocked_draws(std::size_t n, const RngSpec& spec, Draw draw) {
  const std::size_t blocks = (n + kBlockSize - 1) / kBlockSize;
  std::vector<Xoshiro256> gens;
  gens.reserve(blocks);
  Xoshiro256 g = Xoshiro256::for_stream(spec);
  for (std::size_t b = 0; b < blocks; ++b) {
    gens.push_back(g);
    g.jump();
  }
  std::vector<std::int64_t> out(n);
  detail::parallel_for(blocks, [&](std::size_t b) {
    Xoshiro256 rng = gens[b];
    const std::size_t end = std::min(n, (b + 1) * kBlockSize);
    for (std::size_t i = b * kBlockSize; i < end; ++i) out[i] = draw(rng);
  });
  return out;
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

Xoshiro256 Xoshiro256::for_stream(const RngSpec& spec) {
  Xoshiro256 g(spec.seed);
  for (std::uint64_t i = 0; i < spec.stream; ++i) g.long_jump();
  return g;
}

Xoshiro256::result_type Xoshiro256::operator()() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

void Xoshiro256::apply_jump(const std::array<std::uint64_t, 4>& table) {
  std::array<std::uint64_t, 4> acc{};
  for (std::uint64_t word : table) {
    for (int b = 0; b < 64; ++b) {
      if (word & (std::uint64_t{1} << b)) {
        for (int i = 0; i < 4; ++i) acc[i] ^= s_[i];
      }
      (*this)();
    }
  }
  s_ = acc;
}

void Xoshiro256::jump() { apply_jump(kJump); }
void Xoshiro256::long_jump() { apply_jump(kLongJump); }

double Xoshiro256::uniform_open() {
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double sample_stable(double alpha, double t, Xoshiro256& rng) {
  require(alpha > 0 && alpha <= 1, "sample_stable: alpha must lie in (0, 1]");
  require(t > 0 && std::isfinite(t), "sample_stable: t must be > 0");
  if (alpha == 1.0) return t;
  const double u = std::numbers::pi * rng.uniform_open();
  const double e = -std::log(rng.uniform_open());
  // Kanter: sin(a u) / sin(u)^{1/a} * (sin((1-a) u) / e)^{(1-a)/a}
  const double log_x = std::log(std::sin(alpha * u)) - std::log(std::sin(u)) / alpha +
                       (1.0 - alpha) / alpha * (std::log(std::sin((1.0 - alpha) * u)) - std::log(e));
  return std::exp(log_x + std::log(t) / alpha);
}

double sample_tempered_stable(double alpha, double mu, double t, Xoshiro256& rng) {
  require(alpha > 0 && alpha <= 1, "sample_tempered_stable: alpha must lie in (0, 1]");
  require(mu >= 0 && std::isfinite(mu), "sample_tempered_stable: mu must be >= 0");
  require(t > 0 && std::isfinite(t), "sample_tempered_stable: t must be > 0");
  if (mu == 0.0 || alpha == 1.0) return sample_stable(alpha, t, rng);
  const double chunks_exact = std::ceil(t * std::pow(mu, alpha) / std::numbers::ln2);
  const long chunks = std::max(1L, static_cast<long>(chunks_exact));
  const double dt = t / static_cast<double>(chunks);
  long rejections = 0;
  double total = 0.0;
  for (long c = 0; c < chunks; ++c) {
    while (true) {
      const double x = sample_stable(alpha, dt, rng);
      if (rng.uniform_open() < std::exp(-mu * x)) {
        total += x;
        break;
      }
      if (++rejections > kMaxRejections) {
        throw SamplingStall("sample_tempered_stable: rejection cap exceeded");
      }
    }
  }
  return total;
}

double sample_inverse_subordinator(double beta, double nu, double t, Xoshiro256& rng,
                                   double grid_dt) {
  require(beta > 0 && beta < 1, "sample_inverse_subordinator: beta must lie in (0, 1)");
  require(nu >= 0 && std::isfinite(nu), "sample_inverse_subordinator: nu must be >= 0");
  require(t >= 0 && std::isfinite(t), "sample_inverse_subordinator: t must be >= 0");
  require(grid_dt >= 0 && std::isfinite(grid_dt), "sample_inverse_subordinator: grid_dt must be > 0");
  if (t == 0.0) return 0.0;
  auto increment = [&](double dt) { return subordinator_increment(beta, nu, dt, rng); };

  double step = default_grid_dt(grid_dt, t);
  double level = 0.0;
  double remaining = t;  // t - S(level)
  for (long steps = 0;; ++steps) {
    if (steps >= kMaxWalkSteps) {
      throw SamplingStall("sample_inverse_subordinator: walk step cap exceeded");
    }
    const double x = increment(step);
    if (x > remaining) break;
    remaining -= x;
    level += step;
  }
  // The crossing lies in (level, level + step]. Only the event "increment
  // exceeds remaining" has been observed, so each stage redraws the two
  // half-step increments conditioned on that event. When the conditioned
  // redraw gets expensive the crossing is carried by a single jump whose
  // time is uniform on the interval, and a uniform point is returned.
  for (int stage = 0; stage < kRefinementStages; ++stage) {
    const double half = 0.5 * step;
    bool accepted = false;
    double a = 0.0;
    for (int attempt = 0; attempt < kRefinementAttempts; ++attempt) {
      a = increment(half);
      const double b = increment(half);
      if (a + b > remaining) {
        accepted = true;
        break;
      }
    }
    if (!accepted) return level + step * rng.uniform_open();
    if (a <= remaining) {
      remaining -= a;
      level += half;
    }
    step = half;
  }
  return level + 0.5 * step;
}

PathGrid sample_subordinator_path(double alpha, double mu, const std::vector<double>& times,
                                  Xoshiro256& rng) {
  require(alpha > 0 && alpha <= 1, "sample_subordinator_path: alpha must lie in (0, 1]");
  require(mu >= 0, "sample_subordinator_path: mu must be >= 0");
  PathGrid path;
  path.times = times;
  double prev_t = 0.0, value = 0.0;
  for (double t : times) {
    require(t >= prev_t, "sample_subordinator_path: times must be increasing and >= 0");
    if (t > prev_t) value += subordinator_increment(alpha, mu, t - prev_t, rng);
    path.values.push_back(value);
    prev_t = t;
  }
  return path;
}

SampleSet sample_process(const ProcessParams& params, double t, std::size_t n,
                         const RngSpec& rng, double grid_dt) {
  params.validate();
  require(n >= 1, "sample_process: n must be >= 1");
  require(t >= 0 && std::isfinite(t), "sample_process: t must be >= 0");
  require(grid_dt >= 0, "sample_process: grid_dt must be > 0");
  SampleSet set;
  set.params = params;
  set.t = t;
  set.n = n;
  set.rng = rng;
  set.grid_dt = default_grid_dt(grid_dt, t);
  if (t == 0.0) {
    set.counts.assign(n, 0);
    return set;
  }
  const double dt = set.grid_dt;
  set.counts = blocked_draws(n, rng, [&](Xoshiro256& g) { return draw_count(params, t, dt, g); });
  return set;
}

SampleSet sample_tfpp_renewal(double lambda, double beta, double t, std::size_t n,
                              const RngSpec& rng) {
  require(lambda > 0 && std::isfinite(lambda), "sample_tfpp_renewal: lambda must be > 0");
  require(beta > 0 && beta <= 1, "sample_tfpp_renewal: beta must lie in (0, 1]");
  require(t >= 0 && std::isfinite(t), "sample_tfpp_renewal: t must be >= 0");
  require(n >= 1, "sample_tfpp_renewal: n must be >= 1");
  SampleSet set;
  set.params = ProcessParams{lambda, 1.0, beta, 0.0, 0.0};
  set.t = t;
  set.n = n;
  set.rng = rng;
  const double scale = std::pow(lambda, -1.0 / beta);
  set.counts = blocked_draws(n, rng, [&](Xoshiro256& g) {
    std::int64_t count = 0;
    double arrival = 0.0;
    while (true) {
      const double e = -std::log(g.uniform_open());
      arrival += scale * std::pow(e, 1.0 / beta) * sample_stable(beta, 1.0, g);
      if (arrival > t) return count;
      ++count;
    }
  });
  return set;
}

std::vector<double> empirical_pmf(const SampleSet& set, int k_max) {
  require(k_max >= 0, "empirical_pmf: k_max must be >= 0");
  std::vector<double> pmf(k_max + 1, 0.0);
  for (std::int64_t c : set.counts) {
    if (c >= 0 && c <= k_max) pmf[c] += 1.0;
  }
  if (!set.counts.empty()) {
    for (double& v : pmf) v /= static_cast<double>(set.counts.size());
  }
  return pmf;
}

double stable_density_series(double alpha, double x, double t, int terms) {
  require(alpha > 0 && alpha < 1, "stable_density_series: alpha must lie in (0, 1)");
  require(x > 0 && t > 0, "stable_density_series: x and t must be > 0");
  const double log_x = std::log(x), log_t = std::log(t);
  double sum = 0.0;
  for (int k = 1; k <= terms; ++k) {
    const double log_mag = static_cast<double>(detail::lgamma_ld(alpha * k + 1.0) -
                                               detail::lgamma_ld(k + 1.0)) +
                           k * log_t - (alpha * k + 1.0) * log_x;
    const double term = std::exp(log_mag) * std::sin(std::numbers::pi * alpha * k);
    sum += (k % 2 == 1) ? term : -term;
  }
  return sum / std::numbers::pi;
}

}  // namespace fracpoisson
