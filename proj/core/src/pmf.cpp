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

#include "fracpoisson/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>

#include "fracpoisson/detail/parallel.hpp"
#include "fracpoisson/detail/partial_sum.hpp"
#include "fracpoisson/detail/real.hpp"
#include "fracpoisson/errors.hpp"

namespace fracpoisson {

namespace {

using detail::PartialSum;

// Absolute accuracy the precision ladder aims for. The guard digits inside
// digits_needed() put the realized error well below this.
constexpr double kTargetDigits = 12.0;

// Above this mu/lambda the literal mu-power expansions converge too slowly
// (and diverge for mu >= lambda); the binomial closed form takes over.
constexpr double kLiteralTemperingRatio = 0.5;

struct RawColumn {
  std::vector<double> p;
  std::vector<double> log10_mass;
  std::vector<int> terms;
  std::vector<LevelTerms> levels;
};

std::string describe(double t) {
  std::ostringstream os;
  os.precision(17);
  os << t;
  return os.str();
}

[[noreturn]] void fail_level(const std::string& level, int k, double t) {
  throw NonConvergence(level, "pmf: " + level + "-series did not converge at k=" +
                                  std::to_string(k) + ", t=" + describe(t));
}

class LevelStats {
 public:
  void see(const std::string& level, int terms) {
    auto& slot = max_[level];
    slot = std::max(slot, terms);
  }
  std::vector<LevelTerms> list(const std::vector<std::string>& order) const {
    std::vector<LevelTerms> out;
    for (const auto& name : order) {
      auto it = max_.find(name);
      out.push_back({name, it == max_.end() ? 0 : it->second});
    }
    return out;
  }

 private:
  std::map<std::string, int> max_;
};

// One PartialSum per state k, with a mask for entries that are known to be
// identically zero.
template <class R>
class ColumnSums {
 public:
  ColumnSums(int k_max, const SeriesConfig& config, const std::vector<bool>* zero = nullptr)
      : ColumnSums(k_max, PartialSum<R>(config), zero) {}

  // Nested sums: stop at the working epsilon.
  static ColumnSums nested(int k_max, const SeriesConfig& config) {
    return ColumnSums(k_max, detail::nested_sum<R>(config), nullptr);
  }

 private:
  ColumnSums(int k_max, const PartialSum<R>& proto, const std::vector<bool>* zero)
      : sums_(k_max + 1, proto), done_at_(k_max + 1, 0) {
    for (int k = 0; k <= k_max; ++k) {
      if (zero != nullptr && (*zero)[k]) sums_[k].finish();
    }
  }

 public:
  bool done(int k) const { return sums_[k].done(); }

  // Marks every open entry as complete: the remaining terms vanish exactly.
  void finish_all() {
    for (std::size_t k = 0; k < sums_.size(); ++k) {
      if (!sums_[k].done()) {
        sums_[k].finish();
        done_at_[k] = sums_[k].terms();
      }
    }
  }

  void add(int k, const R& term, const R& mass) {
    sums_[k].add(term, mass);
    if (sums_[k].done()) done_at_[k] = sums_[k].terms();
  }

  // Index of the first unfinished entry, or -1.
  int first_open() const {
    for (std::size_t k = 0; k < sums_.size(); ++k) {
      if (!sums_[k].done()) return static_cast<int>(k);
    }
    return -1;
  }

  bool exhausted(int k) const { return sums_[k].exhausted(); }
  const PartialSum<R>& operator[](int k) const { return sums_[k]; }
  int size() const { return static_cast<int>(sums_.size()); }
  int done_at(int k) const { return done_at_[k]; }
  int max_terms() const {
    int out = 0;
    for (const auto& s : sums_) out = std::max(out, s.terms());
    return out;
  }

 private:
  std::vector<PartialSum<R>> sums_;
  std::vector<int> done_at_;
};

template <class R>
RawColumn finish_column(const ColumnSums<R>& sums, const R& prefactor) {
  using std::abs;
  RawColumn out;
  for (int k = 0; k < sums.size(); ++k) {
    out.p.push_back(detail::to_double(R(prefactor * sums[k].value())));
    out.log10_mass.push_back(detail::log10_magnitude(R(abs(prefactor) * sums[k].mass())));
    out.terms.push_back(sums.done_at(k));
  }
  return out;
}

// (-1)^k C(a, k) for k = 0..k_max, scaled by scale^k.
template <class R>
void signed_binomial_row(const R& a, const R& scale, std::vector<R>& row) {
  row[0] = 1;
  for (std::size_t k = 1; k < row.size(); ++k) {
    row[k] = row[k - 1] * (R(static_cast<long>(k) - 1) - a) / static_cast<long>(k) * scale;
  }
}

// P_k(t) = prefactor * sum_r (-x)^r g_r row_r[k], with g_r = 1/Gamma(1 + r beta)
// and rows that do not depend on t.
template <class R>
class RowSeries {
 public:
  // Fills row[k] and its rounding mass for series index r.
  using RowFn = std::function<void(int, std::vector<R>&, std::vector<R>&)>;

  RowSeries(int k_max, const SeriesConfig& config, double beta, RowFn row_fn,
            std::vector<bool> zero)
      : k_max_(k_max), config_(config), beta_(beta), row_fn_(std::move(row_fn)),
        zero_(std::move(zero)) {}

  RawColumn column(const R& x, const R& prefactor, double t) {
    using std::abs;
    ColumnSums<R> sums(k_max_, config_, &zero_);
    R power(1);
    for (int r = 0;; ++r) {
      if (r > 0) power *= -x;
      const R w = power * weight(r);
      const R w_abs = abs(w);
      const Row& row = row_at(r);
      for (int k = 0; k <= k_max_; ++k) {
        if (sums.done(k)) continue;
        sums.add(k, w * row.value[k], w_abs * row.mass[k]);
      }
      int open = sums.first_open();
      if (open < 0) break;
      if (sums.exhausted(open)) fail_level("r", open, t);
    }
    RawColumn out = finish_column(sums, prefactor);
    out.levels = {{"r", sums.max_terms()}};
    return out;
  }

 private:
  struct Row {
    std::vector<R> value;
    std::vector<R> mass;
  };

  const R& weight(int r) {
    while (static_cast<int>(weights_.size()) <= r) {
      const int j = static_cast<int>(weights_.size());
      if (beta_ == 1.0) {
        weights_.push_back(j == 0 ? R(1) : R(weights_.back() / j));
      } else {
        weights_.push_back(detail::recip_gamma(R(R(1) + R(j) * R(beta_))));
      }
    }
    return weights_[r];
  }

  const Row& row_at(int r) {
    while (static_cast<int>(rows_.size()) <= r) {
      Row row{std::vector<R>(k_max_ + 1), std::vector<R>(k_max_ + 1)};
      row_fn_(static_cast<int>(rows_.size()), row.value, row.mass);
      rows_.push_back(std::move(row));
    }
    return rows_[r];
  }

  int k_max_;
  SeriesConfig config_;
  double beta_;
  RowFn row_fn_;
  std::vector<bool> zero_;
  std::vector<R> weights_;
  std::vector<Row> rows_;
};

template <class R>
typename RowSeries<R>::RowFn binomial_rows(double alpha, R q) {
  return [alpha, q](int r, std::vector<R>& row, std::vector<R>& mass) {
    using std::abs;
    signed_binomial_row(R(R(alpha) * r), q, row);
    for (std::size_t k = 0; k < row.size(); ++k) mass[k] = abs(row[k]);
  };
}

// Coefficients c_k of w^k in (1 - 2uw + w^2)^gamma by the three-term
// recurrence (n+1) c_{n+1} = 2u(n - gamma) c_n - (n - 1 - 2 gamma) c_{n-1}.
// mass bounds the rounding scale of the recurrence.
template <class R>
void gegenbauer_row(const R& gamma, const R& u, std::vector<R>& c, std::vector<R>& mass) {
  using std::abs;
  c[0] = 1;
  mass[0] = 1;
  if (c.size() == 1) return;
  c[1] = -2 * u * gamma;
  mass[1] = abs(c[1]);
  for (std::size_t n = 1; n + 1 < c.size(); ++n) {
    const R nn(static_cast<long>(n));
    const R a = 2 * u * (nn - gamma);
    const R b = nn - 1 - 2 * gamma;
    c[n + 1] = (a * c[n] - b * c[n - 1]) / (nn + 1);
    mass[n + 1] = (abs(a) * mass[n] + abs(b) * mass[n - 1]) / (nn + 1);
  }
}

// Coefficient rows of (1-w)^{alpha1 m + alpha2 (r - m)} summed against C(r, m).
template <class R>
typename RowSeries<R>::RowFn composite_rows(double alpha1, double alpha2, int k_max) {
  return [alpha1, alpha2, k_max](int r, std::vector<R>& row, std::vector<R>& mass) {
    using std::abs;
    std::fill(row.begin(), row.end(), R(0));
    std::fill(mass.begin(), mass.end(), R(0));
    std::vector<R> b(k_max + 1);
    R choose(1);
    for (int m = 0; m <= r; ++m) {
      if (m > 0) choose = choose * (r - m + 1) / m;
      signed_binomial_row(R(R(alpha1) * m + R(alpha2) * (r - m)), R(1), b);
      for (int k = 0; k <= k_max; ++k) {
        row[k] += choose * b[k];
        mass[k] += choose * abs(b[k]);
      }
    }
  };
}

// Literal double series for the tempered space-fractional process:
// e^{t mu^alpha} (-1)^k sum_m (mu/lambda)^m sum_r (-t lambda^alpha)^r / r!
//   C(alpha r, m) C(alpha r - m, k).
template <class R>
RawColumn tempered_sfpp_literal(double lambda, double alpha, double mu, int k_max, double t,
                                const SeriesConfig& config) {
  using std::abs;
  using std::exp;
  using std::pow;
  const R al(alpha);
  const R rho = R(mu) / R(lambda);
  const R x = pow(R(lambda), al) * R(t);
  ColumnSums<R> outer(k_max, config);
  LevelStats stats;
  std::vector<R> row(k_max + 1);
  R rho_m(1);
  for (int m = 0;; ++m) {
    if (m > 0) rho_m *= rho;
    auto inner = ColumnSums<R>::nested(k_max, config);
    R w(1);
    for (int r = 0;; ++r) {
      if (r > 0) w = w * (-x) / r;
      const R a = al * r;
      const R c_am = detail::binom_product(a, m);
      if (c_am != 0) {
        signed_binomial_row(R(a - m), R(1), row);
      } else {
        std::fill(row.begin(), row.end(), R(0));
      }
      const R scale = w * c_am;
      const R scale_abs = abs(scale);
      for (int k = 0; k <= k_max; ++k) {
        if (inner.done(k)) continue;
        inner.add(k, scale * row[k], scale_abs * abs(row[k]));
      }
      int open = inner.first_open();
      if (open < 0) break;
      if (inner.exhausted(open)) fail_level("r", open, t);
    }
    stats.see("r", inner.max_terms());
    for (int k = 0; k <= k_max; ++k) {
      if (outer.done(k)) continue;
      outer.add(k, rho_m * inner[k].value(), rho_m * inner[k].mass());
    }
    if (mu == 0.0) {
      // Only m = 0 survives.
      outer.finish_all();
      break;
    }
    int open = outer.first_open();
    if (open < 0) break;
    if (outer.exhausted(open)) fail_level("m", open, t);
  }
  stats.see("m", outer.max_terms());
  RawColumn out = finish_column(outer, R(exp(R(t) * pow(R(mu), al))));
  out.levels = stats.list({"m", "r"});
  return out;
}

// Quadruple series of the tempered time-space-fractional process,
//   e^{-t nu} sum_m (t nu)^m sum_r (-t^beta)^r M^r_{beta, beta r + m + 1}((t nu)^beta) C_{r,k},
// with C_{r,k} = sum_h C(r,h) (-mu^alpha)^{r-h} L_{h,k} and
// L_{h,k} = (-1)^k sum_l C(alpha h, l) C(alpha h - l, k) mu^l lambda^{alpha h - l}.
// Only L_1 is summed over l; see c_row. The tables do not depend on t and are cached.
template <class R>
class TemperedTimeSpace {
 public:
  TemperedTimeSpace(const ProcessParams& p, int k_max, const SeriesConfig& config)
      : p_(p), k_max_(k_max), config_(config) {
    using std::pow;
    literal_l_ = p.mu <= kLiteralTemperingRatio * p.lambda;
    const R al(p.alpha);
    mu_alpha_ = p.mu == 0.0 ? R(0) : R(pow(R(p.mu), al));
    q_ = R(p.lambda) / R(R(p.mu) + R(p.lambda));
  }

  RawColumn column(double t) {
    using std::abs;
    using std::exp;
    using std::pow;
    const R tr(t);
    const R s = pow(tr, R(p_.beta));
    const R tv = tr * R(p_.nu);
    const R y = p_.nu == 0.0 ? R(0) : R(pow(tv, R(p_.beta)));
    LevelStats stats;
    // phi[j] = sum_m (t nu)^m / Gamma(beta j + m + 1). Every term is positive, so
    // summing m first for each j changes neither the value nor the mass, and it
    // spares re-running the r and n levels once per m.
    std::vector<R> phi;
    auto phi_at = [&](int j) -> const R& {
      while (static_cast<int>(phi.size()) <= j) {
        const int jj = static_cast<int>(phi.size());
        R g = recip_gamma_beta(jj);
        if (p_.nu == 0.0) {
          phi.push_back(g);
          continue;
        }
        auto sum = detail::nested_sum<R>(config_);
        for (int m = 0;; ++m) {
          if (m > 0) g = g * tv / R(R(p_.beta) * jj + m);
          sum.add(g);
          if (sum.done()) break;
          if (sum.exhausted()) fail_level("m", -1, t);
        }
        stats.see("m", sum.terms());
        phi.push_back(sum.value());
      }
      return phi[j];
    };
    ColumnSums<R> sums(k_max_, config_);
    R s_r(1);
    for (int r = 0;; ++r) {
      if (r > 0) s_r *= -s;
      const R ml = prabhakar(r, y, phi_at, t, stats);
      const Row& c = c_row(r, t, stats);
      const R scale = s_r * ml;
      const R scale_abs = abs(scale);
      for (int k = 0; k <= k_max_; ++k) {
        if (sums.done(k)) continue;
        sums.add(k, scale * c.value[k], scale_abs * c.mass[k]);
      }
      int open = sums.first_open();
      if (open < 0) break;
      if (sums.exhausted(open)) fail_level("r", open, t);
    }
    stats.see("r", sums.max_terms());
    stats.see("l", l_terms_);
    RawColumn out = finish_column(sums, R(exp(-tv)));
    out.levels = stats.list({"m", "r", "n", "l"});
    return out;
  }

 private:
  struct Row {
    std::vector<R> value;
    std::vector<R> mass;
  };

  const R& recip_gamma_beta(int j) {
    while (static_cast<int>(g_.size()) <= j) {
      const long jj = static_cast<long>(g_.size());
      g_.push_back(detail::recip_gamma(R(R(p_.beta) * jj + 1)));
    }
    return g_[j];
  }

  // sum_m (t nu)^m M^r_{beta, beta r + m + 1}(y) = sum_n (r)_n y^n / n! phi[r + n].
  // All terms are non-negative.
  template <class Recip>
  R prabhakar(int r, const R& y, Recip& recip, double t, LevelStats& stats) {
    if (r == 0 || y == 0) return recip(r);
    auto sum = detail::nested_sum<R>(config_);
    R coef(1);
    for (int n = 0;; ++n) {
      sum.add(coef * recip(r + n));
      if (sum.done()) break;
      if (sum.exhausted()) fail_level("n", -1, t);
      coef = coef * (r + n) * y / (n + 1);
    }
    stats.see("n", sum.terms());
    return sum.value();
  }

  const Row& l_row(int h, double t) {
    using std::abs;
    using std::pow;
    while (static_cast<int>(l_rows_.size()) <= h) {
      const int hh = static_cast<int>(l_rows_.size());
      const R a = R(p_.alpha) * hh;
      Row row{std::vector<R>(k_max_ + 1), std::vector<R>(k_max_ + 1)};
      if (!literal_l_) {
        // (mu + lambda)^{alpha h} C(alpha h, k) (-q)^k
        signed_binomial_row(a, q_, row.value);
        const R scale = pow(R(R(p_.mu) + R(p_.lambda)), a);
        for (int k = 0; k <= k_max_; ++k) {
          row.value[k] *= scale;
          row.mass[k] = abs(row.value[k]);
        }
      } else {
        const R rho = R(p_.mu) / R(p_.lambda);
        const R lam_a = pow(R(p_.lambda), a);
        auto sums = ColumnSums<R>::nested(k_max_, config_);
        std::vector<R> b(k_max_ + 1);
        R rho_l(1);
        for (int l = 0;; ++l) {
          if (l > 0) rho_l *= rho;
          const R c_al = detail::binom_product(a, l);
          const R scale = rho_l * c_al * lam_a;
          if (scale != 0) {
            signed_binomial_row(R(a - l), R(1), b);
          } else {
            std::fill(b.begin(), b.end(), R(0));
          }
          for (int k = 0; k <= k_max_; ++k) {
            if (sums.done(k)) continue;
            sums.add(k, scale * b[k], abs(scale) * abs(b[k]));
          }
          // The l-sum is finite when mu = 0 or alpha h is an integer.
          if (p_.mu == 0.0 || (detail::is_integer(a) && R(l) >= a)) sums.finish_all();
          int open = sums.first_open();
          if (open < 0) break;
          if (sums.exhausted(open)) fail_level("l", open, t);
        }
        l_terms_ = std::max(l_terms_, sums.max_terms());
        for (int k = 0; k <= k_max_; ++k) {
          row.value[k] = sums[k].value();
          row.mass[k] = sums[k].mass();
        }
      }
      l_rows_.push_back(std::move(row));
    }
    return l_rows_[h];
  }

  // C_{r,k} = [w^k] psi(w)^r with psi(w) = L_{1}(w) - mu^alpha. Summing the binomial
  // h-expansion of psi^r directly costs r log10(((mu+lambda)^alpha + mu^alpha) / psi(0))
  // digits to cancellation, so the rows are built by repeated truncated multiplication.
  const Row& c_row(int r, double t, LevelStats&) {
    using std::abs;
    if (c_rows_.empty()) {
      Row one{std::vector<R>(k_max_ + 1, R(0)), std::vector<R>(k_max_ + 1, R(0))};
      one.value[0] = R(1);
      one.mass[0] = R(1);
      c_rows_.push_back(std::move(one));
    }
    if (static_cast<int>(c_rows_.size()) <= r && psi_.value.empty()) {
      psi_ = l_row(1, t);
      psi_.value[0] -= mu_alpha_;
      // The subtraction of mu^alpha is a one-off relative error in psi_0, which
      // powers of psi do not amplify; the l-sum masses of the other
      // coefficients carry through.
      psi_.mass[0] = abs(psi_.value[0]);
    }
    while (static_cast<int>(c_rows_.size()) <= r) {
      const Row& prev = c_rows_.back();
      Row row{std::vector<R>(k_max_ + 1, R(0)), std::vector<R>(k_max_ + 1, R(0))};
      for (int k = 0; k <= k_max_; ++k) {
        for (int j = 0; j <= k; ++j) {
          row.value[k] += prev.value[j] * psi_.value[k - j];
          row.mass[k] += prev.mass[j] * psi_.mass[k - j];
        }
      }
      c_rows_.push_back(std::move(row));
    }
    return c_rows_[r];
  }

  ProcessParams p_;
  int k_max_;
  SeriesConfig config_;
  bool literal_l_ = true;
  R mu_alpha_;
  R q_;
  int l_terms_ = 0;
  std::vector<R> g_;
  std::vector<Row> l_rows_;
  Row psi_;
  std::vector<Row> c_rows_;
};

// Shared interface of the per-precision column evaluators.
template <class R>
class ColumnEvaluator {
 public:
  virtual ~ColumnEvaluator() = default;
  virtual RawColumn column(double t) = 0;
};

template <class R>
class RowSeriesEvaluator : public ColumnEvaluator<R> {
 public:
  // x(t) = x_scale * t^time_power; prefactor(t) = exp(log_prefactor_rate * t).
  RowSeriesEvaluator(RowSeries<R> series, R x_scale, double time_power, R log_prefactor_rate)
      : series_(std::move(series)), x_scale_(std::move(x_scale)), time_power_(time_power),
        rate_(std::move(log_prefactor_rate)) {}

  RawColumn column(double t) override {
    using std::exp;
    using std::pow;
    const R tr(t);
    const R x = x_scale_ * (time_power_ == 1.0 ? tr : R(pow(tr, R(time_power_))));
    return series_.column(x, R(exp(rate_ * tr)), t);
  }

 private:
  RowSeries<R> series_;
  R x_scale_;
  double time_power_;
  R rate_;
};

template <class R>
class TemperedSfppLiteralEvaluator : public ColumnEvaluator<R> {
 public:
  TemperedSfppLiteralEvaluator(const ProcessParams& p, int k_max, const SeriesConfig& config)
      : p_(p), k_max_(k_max), config_(config) {}
  RawColumn column(double t) override {
    return tempered_sfpp_literal<R>(p_.lambda, p_.alpha, p_.mu, k_max_, t, config_);
  }

 private:
  ProcessParams p_;
  int k_max_;
  SeriesConfig config_;
};

template <class R>
class TemperedTimeSpaceEvaluator : public ColumnEvaluator<R> {
 public:
  TemperedTimeSpaceEvaluator(const ProcessParams& p, int k_max, const SeriesConfig& config)
      : impl_(p, k_max, config) {}
  RawColumn column(double t) override { return impl_.column(t); }

 private:
  TemperedTimeSpace<R> impl_;
};

std::vector<bool> no_zeros(int k_max) { return std::vector<bool>(k_max + 1, false); }

template <class R>
std::unique_ptr<ColumnEvaluator<R>> make_evaluator(Family family, const ModelParams& params,
                                                   int k_max, const SeriesConfig& config) {
  using std::pow;
  using Rows = RowSeriesEvaluator<R>;
  auto rows = [&](double beta, typename RowSeries<R>::RowFn fn, std::vector<bool> zero) {
    return RowSeries<R>(k_max, config, beta, std::move(fn), std::move(zero));
  };
  switch (family) {
    case Family::poisson:
    case Family::tfpp:
    case Family::sfpp:
    case Family::tsfpp: {
      const auto& p = std::get<ProcessParams>(params);
      // Poisson and TFPP are the alpha = 1 slice; SFPP the beta = 1 slice.
      const double alpha = (family == Family::poisson || family == Family::tfpp) ? 1.0 : p.alpha;
      const double beta = (family == Family::poisson || family == Family::sfpp) ? 1.0 : p.beta;
      return std::make_unique<Rows>(rows(beta, binomial_rows<R>(alpha, R(1)), no_zeros(k_max)),
                                    R(pow(R(p.lambda), R(alpha))), beta, R(0));
    }
    case Family::tempered_sfpp: {
      const auto& p = std::get<ProcessParams>(params);
      if (p.mu <= kLiteralTemperingRatio * p.lambda) {
        return std::make_unique<TemperedSfppLiteralEvaluator<R>>(p, k_max, config);
      }
      // e^{t mu^alpha} sum_r (-t (mu+lambda)^alpha)^r / r! C(alpha r, k) (-q)^k
      const R al(p.alpha);
      const R q = R(p.lambda) / R(R(p.mu) + R(p.lambda));
      return std::make_unique<Rows>(rows(1.0, binomial_rows<R>(p.alpha, q),
                                         no_zeros(k_max)),
                                    R(pow(R(R(p.mu) + R(p.lambda)), al)), 1.0,
                                    R(pow(R(p.mu), al)));
    }
    case Family::tempered_tsfpp: {
      const auto& p = std::get<ProcessParams>(params);
      if (p.beta == 1.0) return make_evaluator<R>(Family::tempered_sfpp, params, k_max, config);
      return std::make_unique<TemperedTimeSpaceEvaluator<R>>(p, k_max, config);
    }
    case Family::gegenbauer:
    case Family::gegenbauer_ts: {
      const auto& g = std::get<GegenbauerParams>(params);
      const double beta = family == Family::gegenbauer ? 1.0 : g.beta;
      std::vector<bool> zero = no_zeros(k_max);
      if (g.u == 0.0) {
        for (int k = 1; k <= k_max; k += 2) zero[k] = true;
      }
      const double d = g.d;
      const double u = g.u;
      auto fn = [d, u](int r, std::vector<R>& row, std::vector<R>& mass) {
        gegenbauer_row(R(R(d) * r), R(u), row, mass);
      };
      return std::make_unique<Rows>(rows(beta, fn, std::move(zero)),
                                    R(pow(R(g.lambda), R(2 * R(d)))), beta, R(0));
    }
    case Family::composite: {
      const auto& c = std::get<CompositeParams>(params);
      return std::make_unique<Rows>(
          rows(1.0, composite_rows<R>(c.alpha1, c.alpha2, k_max), no_zeros(k_max)),
          R(c.lambda), 1.0, R(0));
    }
  }
  throw InvalidParameter("pmf: unknown family");
}

unsigned required_digits(const RawColumn& col) {
  unsigned out = 0;
  for (double m : col.log10_mass) out = std::max(out, detail::digits_needed(m, kTargetDigits));
  return out;
}

PmfColumn delta_column(int k_max) {
  PmfColumn col;
  col.p.assign(k_max + 1, 0.0);
  col.p[0] = 1.0;
  col.terms_used.assign(k_max + 1, 0);
  col.working_digits = 0;
  return col;
}

PmfColumn poisson_column(double lambda, int k_max, double t) {
  PmfColumn col;
  col.t = t;
  for (int k = 0; k <= k_max; ++k) col.p.push_back(poisson_pmf(lambda, k, t));
  col.terms_used.assign(k_max + 1, 1);
  col.working_digits = 16;
  return col;
}

// Evaluates every column in long double, then re-runs the columns whose
// cancellation mass demands it at the ladder rung that covers the need.
std::vector<PmfColumn> evaluate_grid(Family family, const ModelParams& params, int k_max,
                                     const std::vector<double>& ts, const SeriesConfig& config) {
  std::vector<PmfColumn> out(ts.size());
  std::vector<unsigned> need(ts.size(), 0);

  auto pass = [&]<class R>(const std::vector<std::size_t>& idx) {
    detail::parallel_chunks(idx.size(), [&](std::size_t begin, std::size_t end) {
      std::unique_ptr<ColumnEvaluator<R>> ev;
      for (std::size_t n = begin; n < end; ++n) {
        const std::size_t i = idx[n];
        if (ts[i] == 0.0) {
          out[i] = delta_column(k_max);
          need[i] = 0;
          continue;
        }
        if (!ev) ev = make_evaluator<R>(family, params, k_max, config);
        RawColumn raw = ev->column(ts[i]);
        PmfColumn col;
        col.t = ts[i];
        col.p = std::move(raw.p);
        col.terms_used = std::move(raw.terms);
        col.levels = std::move(raw.levels);
        col.working_digits = detail::digits10_of<R>();
        need[i] = required_digits(RawColumn{{}, raw.log10_mass, {}, {}});
        out[i] = std::move(col);
      }
    });
  };

  std::vector<std::size_t> all(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) all[i] = i;
  pass.template operator()<long double>(all);

  while (true) {
    std::map<unsigned, std::vector<std::size_t>> by_rung;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (need[i] <= out[i].working_digits || ts[i] == 0.0) continue;
      const unsigned rung = detail::ladder_rung(need[i]);
      if (rung == 0 || rung <= out[i].working_digits) {
        throw NonConvergence("precision", "pmf: cancellation exceeds the precision ladder at t=" +
                                              describe(ts[i]));
      }
      by_rung[rung].push_back(i);
    }
    if (by_rung.empty()) break;
    for (const auto& [rung, idx] : by_rung) {
      detail::with_precision(rung, [&]<class R>() { pass.template operator()<R>(idx); });
    }
  }
  for (std::size_t i = 0; i < ts.size(); ++i) out[i].t = ts[i];
  return out;
}

void check_k_t(int k, double t) {
  if (k < 0) throw InvalidParameter("pmf: k must be >= 0");
  if (!(t >= 0) || !std::isfinite(t)) throw InvalidParameter("pmf: t must be finite and >= 0");
}

// The family must match the parameter alternative; slices ignore the fields
// they pin (alpha for tfpp, beta for sfpp, tempering outside the tempered families).
void check_family(Family family, const ModelParams& params) {
  bool ok = false;
  switch (family) {
    case Family::gegenbauer:
    case Family::gegenbauer_ts:
      ok = std::holds_alternative<GegenbauerParams>(params);
      break;
    case Family::composite:
      ok = std::holds_alternative<CompositeParams>(params);
      break;
    default:
      ok = std::holds_alternative<ProcessParams>(params);
  }
  if (!ok) {
    throw InvalidParameter("pmf: parameters do not belong to family " +
                           std::string(family_name(family)));
  }
}

double scalar(Family family, const ModelParams& params, int k, double t,
              const SeriesConfig& config) {
  check_k_t(k, t);
  config.validate();
  validate(params);
  if (t == 0.0) return k == 0 ? 1.0 : 0.0;
  return evaluate_grid(family, params, k, {t}, config)[0].p[k];
}

ProcessParams process(double lambda, double alpha, double beta, double mu, double nu) {
  return ProcessParams{lambda, alpha, beta, mu, nu};
}

}  // namespace

double poisson_pmf(double lambda, int k, double t) {
  check_k_t(k, t);
  if (!(lambda > 0) || !std::isfinite(lambda)) throw InvalidParameter("lambda must be > 0");
  if (t == 0.0) return k == 0 ? 1.0 : 0.0;
  const long double x = static_cast<long double>(lambda) * t;
  const long double lp = k * std::log(x) - x - detail::lgamma_ld(static_cast<long double>(k) + 1);
  return static_cast<double>(std::exp(lp));
}

double tfpp_pmf(double lambda, double beta, int k, double t, const SeriesConfig& config) {
  return scalar(Family::tfpp, process(lambda, 1, beta, 0, 0), k, t, config);
}

double sfpp_pmf(double lambda, double alpha, int k, double t, const SeriesConfig& config) {
  return scalar(Family::sfpp, process(lambda, alpha, 1, 0, 0), k, t, config);
}

double tsfpp_pmf(double lambda, double alpha, double beta, int k, double t,
                 const SeriesConfig& config) {
  return scalar(Family::tsfpp, process(lambda, alpha, beta, 0, 0), k, t, config);
}

double tempered_sfpp_pmf(double lambda, double alpha, double mu, int k, double t,
                         const SeriesConfig& config) {
  return scalar(Family::tempered_sfpp, process(lambda, alpha, 1, mu, 0), k, t, config);
}

double tempered_tsfpp_pmf(double lambda, double alpha, double beta, double mu, double nu,
                          int k, double t, const SeriesConfig& config) {
  return scalar(Family::tempered_tsfpp, process(lambda, alpha, beta, mu, nu), k, t, config);
}

double gegenbauer_pmf(const GegenbauerParams& params, int k, double t,
                      const SeriesConfig& config) {
  GegenbauerParams p = params;
  p.beta = 1.0;
  return scalar(Family::gegenbauer, p, k, t, config);
}

double gegenbauer_ts_pmf(const GegenbauerParams& params, int k, double t,
                         const SeriesConfig& config) {
  return scalar(Family::gegenbauer_ts, params, k, t, config);
}

double composite_shift_pmf(double lambda, double alpha1, double alpha2, int k, double t,
                           const SeriesConfig& config) {
  return scalar(Family::composite, CompositeParams{lambda, alpha1, alpha2}, k, t, config);
}

PmfTable pmf_table(Family family, const ModelParams& params, int k_max,
                   const std::vector<double>& t_grid, const SeriesConfig& config) {
  config.validate();
  validate(params);
  if (k_max < 0) throw InvalidParameter("pmf_table: k_max must be >= 0");
  check_family(family, params);
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    check_k_t(0, t_grid[i]);
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
      throw InvalidParameter("pmf_table: t grid must be strictly increasing");
    }
  }
  PmfTable table;
  table.params = params;
  table.family = family;
  table.k_max = k_max;
  table.t = t_grid;
  if (family == Family::poisson) {
    const double lambda = std::get<ProcessParams>(params).lambda;
    for (double t : t_grid) {
      table.columns.push_back(t == 0.0 ? delta_column(k_max) : poisson_column(lambda, k_max, t));
      table.columns.back().t = t;
    }
    return table;
  }
  table.columns = evaluate_grid(family, params, k_max, t_grid, config);
  return table;
}

PmfTable pmf_table(const ModelParams& params, int k_max, const std::vector<double>& t_grid,
                   const SeriesConfig& config) {
  validate(params);
  return pmf_table(classify(params), params, k_max, t_grid, config);
}

PmfColumn pmf_column(const ModelParams& params, int k_max, double t,
                     const SeriesConfig& config) {
  return std::move(pmf_table(params, k_max, {t}, config).columns.front());
}

}  // namespace fracpoisson
