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

#ifndef FRACPOISSON_DETAIL_REAL_HPP
#define FRACPOISSON_DETAIL_REAL_HPP

// Working-precision ladder. Series with heavy alternating cancellation are
// first summed in long double; when the accumulated |term| mass says the
// result cannot be trusted, the same code is re-run in MPFR at a compile-time
// precision picked from the ladder below.

#include <cmath>
#include <limits>
#include <type_traits>

#include <boost/multiprecision/mpfr.hpp>

namespace fracpoisson::detail {

namespace bmp = boost::multiprecision;

template <unsigned Digits10>
using MpReal = bmp::number<bmp::mpfr_float_backend<Digits10, bmp::allocate_stack>, bmp::et_off>;

template <class R>
struct is_mp_real : std::false_type {};
template <unsigned D>
struct is_mp_real<MpReal<D>> : std::true_type {};

inline constexpr unsigned kLongDoubleDigits = 18;
inline constexpr unsigned kMaxLadderDigits = 1280;

template <class R>
inline constexpr unsigned digits10_of() {
  if constexpr (is_mp_real<R>::value) {
    return std::numeric_limits<R>::digits10;
  } else {
    return kLongDoubleDigits;
  }
}

/// Calls f.template operator()<R>() for the cheapest ladder type that carries
/// at least `digits` significant decimal digits.
template <class F>
decltype(auto) with_precision(unsigned digits, F&& f) {
  if (digits <= kLongDoubleDigits) return f.template operator()<long double>();
  if (digits <= 40) return f.template operator()<MpReal<40>>();
  if (digits <= 80) return f.template operator()<MpReal<80>>();
  if (digits <= 160) return f.template operator()<MpReal<160>>();
  if (digits <= 320) return f.template operator()<MpReal<320>>();
  if (digits <= 640) return f.template operator()<MpReal<640>>();
  return f.template operator()<MpReal<1280>>();
}

/// The ladder rung that with_precision() would select for `digits`; 0 when
/// the request exceeds the top of the ladder.
inline unsigned ladder_rung(unsigned digits) {
  if (digits <= kLongDoubleDigits) return kLongDoubleDigits;
  for (unsigned rung = 40; rung <= kMaxLadderDigits; rung *= 2) {
    if (digits <= rung) return rung;
  }
  return 0;
}

// lgamma with the sign of Gamma(x) reported separately; +inf at poles.
inline long double lgamma_signed(long double x, int& sign) {
  return ::lgammal_r(x, &sign);
}

inline long double lgamma_ld(long double x) {
  int sign = 1;
  return ::lgammal_r(x, &sign);
}

template <unsigned D>
MpReal<D> lgamma_signed(const MpReal<D>& x, int& sign) {
  MpReal<D> out;
  mpfr_lgamma(out.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
  return out;
}

template <class R>
bool is_nonpositive_integer(const R& x) {
  using std::floor;
  return x <= 0 && floor(x) == x;
}

template <class R>
bool is_integer(const R& x) {
  using std::floor;
  return floor(x) == x;
}

/// 1/Gamma(x), with the value 0 at the poles x = 0, -1, -2, ...
template <class R>
R recip_gamma(const R& x) {
  using std::exp;
  if (is_nonpositive_integer(x)) return R(0);
  int sign = 1;
  R lg = lgamma_signed(x, sign);
  R out = exp(-lg);
  return sign < 0 ? R(-out) : out;
}

/// Generalized binomial coefficient C(a, k) via the falling product
/// a(a-1)...(a-k+1)/k!. Vanishes exactly when a is an integer in [0, k).
template <class R>
R binom_product(const R& a, int k) {
  R out(1);
  for (int j = 0; j < k; ++j) {
    out *= (a - j);
    out /= (j + 1);
  }
  return out;
}

template <class R>
double to_double(const R& x) {
  if constexpr (is_mp_real<R>::value) {
    return x.template convert_to<double>();
  } else {
    return static_cast<double>(x);
  }
}

// log10 of a non-negative magnitude; -inf for zero. Never overflows.
template <class R>
double log10_magnitude(const R& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  if constexpr (is_mp_real<R>::value) {
    return bmp::log10(bmp::abs(x)).template convert_to<double>();
  } else {
    return static_cast<double>(std::log10(std::fabs(x)));
  }
}

/// Digits required so that rounding noise of size 10^-digits * |term mass|
/// stays below 10^-target_digits absolute, plus guard digits for the
/// per-term error of exp/lgamma.
inline unsigned digits_needed(double log10_mass, double target_digits) {
  constexpr double kGuard = 3.0;
  if (!std::isfinite(log10_mass)) {
    return log10_mass < 0 ? kLongDoubleDigits : kMaxLadderDigits + 1;
  }
  double d = std::ceil(log10_mass + target_digits + kGuard);
  if (d < 1) return 1;
  if (d > 1e6) return kMaxLadderDigits + 1;
  return static_cast<unsigned>(d);
}

}  // namespace fracpoisson::detail

#endif  // FRACPOISSON_DETAIL_REAL_HPP
