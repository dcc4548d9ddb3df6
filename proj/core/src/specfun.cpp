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

#include "fracpoisson/specfun.hpp"

#include <cmath>
#include <string>

#include "fracpoisson/detail/partial_sum.hpp"
#include "fracpoisson/detail/real.hpp"
#include "fracpoisson/errors.hpp"

namespace fracpoisson {

namespace {

using detail::digits_needed;
using detail::PartialSum;

constexpr int kProductCutoff = 64;
constexpr double kTargetDigits = 15.0;
// Relative accuracy is meaningless for a result that vanishes; cap the
// cancellation ratio we try to resolve.
constexpr double kMaxCancellationDigits = 30.0;

struct Evaluated {
  double value = 0.0;
  double log10_mass = 0.0;
  double log10_abs = 0.0;
  int terms = 0;
  bool converged = false;
  unsigned digits = 0;
};

// (c)_n z^n / n! / Gamma(a n + b), optionally pairing consecutive terms to
// damp the alternation for negative arguments.
template <class R>
Evaluated prabhakar_series(double a, double b, double c, double z,
                           const SeriesConfig& config, bool pair_terms) {
  using std::abs;
  PartialSum<R> sum(config);
  const R ar(a), br(b), cr(c), zr(z);
  R coef(1);
  R pending(0);
  bool has_pending = false;
  bool converged = false;
  for (int n = 0; !sum.exhausted(); ++n) {
    R term = coef * detail::recip_gamma(R(ar * n + br));
    if (pair_terms) {
      if (!has_pending) {
        pending = term;
        has_pending = true;
      } else {
        sum.add(pending + term, R(abs(pending) + abs(term)));
        has_pending = false;
      }
    } else {
      sum.add(term);
    }
    if (sum.done()) {
      converged = true;
      break;
    }
    coef *= (cr + n) * zr / (n + 1);
  }
  if (has_pending) sum.add(pending);
  Evaluated out;
  out.value = detail::to_double(sum.value());
  out.log10_mass = detail::log10_magnitude(sum.mass());
  out.log10_abs = detail::log10_magnitude(R(abs(sum.value())));
  out.terms = sum.terms();
  out.converged = converged;
  out.digits = detail::digits10_of<R>();
  return out;
}

double evaluate_prabhakar(const char* name, double a, double b, double c, double z,
                          const SeriesConfig& config) {
  config.validate();
  if (!(a > 0)) {
    throw InvalidParameter(std::string(name) + ": order a must be > 0");
  }
  if (z == 0.0) {
    return detail::to_double(detail::recip_gamma(static_cast<long double>(b)));
  }
  const bool pair_terms = z <= -1.0 && a <= 1.0;
  auto run = [&]<class R>() { return prabhakar_series<R>(a, b, c, z, config, pair_terms); };

  Evaluated result = run.template operator()<long double>();
  while (true) {
    if (!result.converged) {
      throw NonConvergence(name, std::string(name) + ": series did not converge within " +
                                     std::to_string(config.max_terms) + " terms");
    }
    double ratio = result.log10_mass -
                   std::max(result.log10_abs, result.log10_mass - kMaxCancellationDigits);
    unsigned needed = digits_needed(ratio, kTargetDigits);
    if (needed <= result.digits) return result.value;
    if (result.digits >= detail::kMaxLadderDigits) {
      throw NonConvergence(name, std::string(name) + ": cancellation exceeds the precision ladder");
    }
    result = detail::with_precision(needed, run);
  }
}

}  // namespace

double gen_binomial(double a, int k) {
  if (k < 0) throw InvalidParameter("gen_binomial: k must be >= 0");
  if (k == 0) return 1.0;
  if (k <= kProductCutoff) {
    return detail::to_double(detail::binom_product<long double>(a, k));
  }
  const long double al = a;
  if (detail::is_integer(al)) {
    if (al >= 0) {
      if (al < k) return 0.0;
      return static_cast<double>(
          std::exp(detail::lgamma_ld(al + 1) - detail::lgamma_ld(static_cast<long double>(k) + 1) -
                   detail::lgamma_ld(al - k + 1)));
    }
    // Gamma(a+1) has a pole; use C(a, k) = (-1)^k C(k - a - 1, k).
    const long double m = k - al - 1;
    long double mag = std::exp(detail::lgamma_ld(m + 1) - detail::lgamma_ld(static_cast<long double>(k) + 1) -
                               detail::lgamma_ld(m - k + 1));
    return static_cast<double>(k % 2 == 0 ? mag : -mag);
  }
  int s1 = 1, s2 = 1;
  long double lg = detail::lgamma_signed(al + 1, s1) - detail::lgamma_ld(static_cast<long double>(k) + 1) -
                   detail::lgamma_signed(al - k + 1, s2);
  long double mag = std::exp(lg);
  return static_cast<double>(s1 * s2 > 0 ? mag : -mag);
}

double pochhammer(double x, int k) {
  if (k < 0) throw InvalidParameter("pochhammer: k must be >= 0");
  if (k == 0) return 1.0;
  const long double xl = x;
  if (k <= kProductCutoff) {
    long double out = 1;
    for (int j = 0; j < k; ++j) out *= (xl + j);
    return static_cast<double>(out);
  }
  if (detail::is_nonpositive_integer(xl)) {
    // The product passes through zero once k > -x.
    if (k > -xl) return 0.0;
    // (x)_k = (-1)^k Gamma(1 - x) / Gamma(1 - x - k)
    long double mag = std::exp(detail::lgamma_ld(1 - xl) - detail::lgamma_ld(1 - xl - k));
    return static_cast<double>(k % 2 == 0 ? mag : -mag);
  }
  int s1 = 1, s2 = 1;
  long double lg = detail::lgamma_signed(xl + k, s1) - detail::lgamma_signed(xl, s2);
  long double mag = std::exp(lg);
  return static_cast<double>(s1 * s2 > 0 ? mag : -mag);
}

double mittag_leffler(double a, double b, double z, const SeriesConfig& config) {
  return evaluate_prabhakar("mittag_leffler", a, b, 1.0, z, config);
}

double prabhakar_ml(double a, double b, double c, double z, const SeriesConfig& config) {
  return evaluate_prabhakar("prabhakar_ml", a, b, c, z, config);
}

}  // namespace fracpoisson
