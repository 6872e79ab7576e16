/*
 * Copyright 2026 The oskr Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Decryption failure probability.
//
// Per coefficient the decoder sees Err = C + eps_v with
//   C = sum_{n*l} (e + eps1) * r  +  sum_{n*l} s * (e1 + eps2)  +  e2,
// eps1 / eps2 the rounding errors of t and u, and eps_v the rounding error
// of v. Coefficients are treated as independent and the per-coefficient
// probability p is aggregated with the union bound n * p.
//
// Two models are available.
//
//   exact      eps_v = j / g with j uniform on the centred residues mod q
//              for the single-rounding decoder; the double-rounding decoder
//              sees the integer law x - Decompress(Compress(x)). A message
//              symbol k is encoded at round(qk/m), so decoding succeeds iff
//              -q/2m <= Err + o_k < q/2m with o_k = round(qk/m) - qk/m, and
//              the worst k is taken.
//
//   published  reproduces the figures in circulation for the single-rounding
//              decoder. Only the lattice-aligned points j = 0 mod g are
//              visited, each with weight 1/q, which drops every fractional
//              eps_v and lowers p by roughly a factor g. The double-rounding
//              decoder is the same under both models.

#ifndef OSKR_FAILURE_HPP_
#define OSKR_FAILURE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "oskr/cpapke.hpp"
#include "oskr/modring.hpp"
#include "oskr/params.hpp"

namespace oskr {

using real = long double;

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(real x) {
    real t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      c_ += (sum_ - t) + x;
    else
      c_ += (x - t) + sum_;
    sum_ = t;
  }
  real value() const { return sum_ + c_; }

 private:
  real sum_ = 0, c_ = 0;
};

// Probability mass function on the integers [lo, lo + size).
class Pmf {
 public:
  Pmf() : lo_(0), p_{1} {}
  Pmf(int lo, std::vector<real> p) : lo_(lo), p_(std::move(p)) { trim(); }

  static Pmf point(int v) { return Pmf(v, {1}); }
  static Pmf from_map(const std::map<int, real>& m) {
    if (m.empty()) throw std::invalid_argument("Pmf: empty support");
    int lo = m.begin()->first, hi = m.rbegin()->first;
    std::vector<real> p(static_cast<std::size_t>(hi - lo + 1), 0);
    for (auto [k, v] : m) p[static_cast<std::size_t>(k - lo)] += v;
    return Pmf(lo, std::move(p));
  }

  int min() const { return lo_; }
  int max() const { return lo_ + static_cast<int>(p_.size()) - 1; }
  std::size_t size() const { return p_.size(); }
  real operator()(int x) const {
    if (x < lo_ || x > max()) return 0;
    return p_[static_cast<std::size_t>(x - lo_)];
  }

  real total() const {
    CompensatedSum s;
    for (real v : p_) s.add(v);
    return s.value();
  }
  real mean() const {
    CompensatedSum s;
    for (std::size_t i = 0; i < p_.size(); ++i) s.add(p_[i] * (lo_ + static_cast<int>(i)));
    return s.value();
  }
  real variance() const {
    real mu = mean();
    CompensatedSum s;
    for (std::size_t i = 0; i < p_.size(); ++i) {
      real d = lo_ + static_cast<int>(i) - mu;
      s.add(p_[i] * d * d);
    }
    return s.value();
  }

  // Drops outer entries below `floor` (absolute).
  void prune(real floor) {
    std::size_t a = 0, b = p_.size();
    while (a + 1 < b && p_[a] < floor) ++a;
    while (b > a + 1 && p_[b - 1] < floor) --b;
    if (a == 0 && b == p_.size()) return;
    p_ = std::vector<real>(p_.begin() + static_cast<std::ptrdiff_t>(a), p_.begin() + static_cast<std::ptrdiff_t>(b));
    lo_ += static_cast<int>(a);
  }

  const std::vector<real>& probs() const { return p_; }

 private:
  void trim() {
    if (p_.empty()) throw std::invalid_argument("Pmf: empty support");
    std::size_t a = 0, b = p_.size();
    while (a + 1 < b && p_[a] == 0) ++a;
    while (b > a + 1 && p_[b - 1] == 0) --b;
    if (a || b != p_.size()) {
      p_ = std::vector<real>(p_.begin() + static_cast<std::ptrdiff_t>(a), p_.begin() + static_cast<std::ptrdiff_t>(b));
      lo_ += static_cast<int>(a);
    }
  }

  int lo_;
  std::vector<real> p_;
};

struct PmfLimits {
  std::size_t max_support = 1u << 22;
  // Entries below this are discarded after every convolution. Failure
  // probabilities of interest are above 2^-300.
  real prune_below = std::pow(2.0L, -700);
};

inline Pmf pmf_cbd(int eta) {
  if (eta < 0) throw std::invalid_argument("pmf_cbd: negative eta");
  if (eta == 0) return Pmf::point(0);
  std::vector<real> p(static_cast<std::size_t>(2 * eta + 1));
  real denom = std::ldexp(1.0L, 2 * eta);
  for (int k = -eta; k <= eta; ++k) {
    real c = 1;
    for (int i = 1; i <= k + eta; ++i) c = c * (2 * eta - i + 1) / i;
    p[static_cast<std::size_t>(k + eta)] = c / denom;
  }
  return Pmf(-eta, std::move(p));
}

// Decompress(Compress(x, d), d) - x mod+- q for x uniform on Z_q. The law is
// not symmetric, so the sign matters where it is added to v.
inline Pmf pmf_round_error(int q, int d) {
  int full = 0;
  while ((1 << full) < q) ++full;
  if (d >= full) return Pmf::point(0);
  Modulus mq(q);
  std::map<int, real> m;
  for (int x = 0; x < q; ++x) m[centered(decompress(compress(x, d, mq), d, mq) - x, q)] += 1.0L / q;
  return Pmf::from_map(m);
}

inline Pmf pmf_convolve(const Pmf& a, const Pmf& b, const PmfLimits& lim = {}) {
  std::size_t n = a.size() + b.size() - 1;
  if (n > lim.max_support) throw std::length_error("pmf: support exceeds cap of " + std::to_string(lim.max_support));
  std::vector<real> out(n, 0);
  const auto& pa = a.probs();
  const auto& pb = b.probs();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    real x = pa[i];
    if (x == 0) continue;
    real* o = out.data() + i;
    for (std::size_t j = 0; j < pb.size(); ++j) o[j] += x * pb[j];
  }
  Pmf r(a.min() + b.min(), std::move(out));
  r.prune(lim.prune_below);
  return r;
}

inline Pmf pmf_product(const Pmf& a, const Pmf& b) {
  std::map<int, real> m;
  for (int x = a.min(); x <= a.max(); ++x)
    for (int y = b.min(); y <= b.max(); ++y) {
      real v = a(x) * b(y);
      if (v != 0) m[x * y] += v;
    }
  return Pmf::from_map(m);
}

// Law of the sum of `count` independent copies, by repeated squaring.
inline Pmf pmf_iterated_sum(const Pmf& p, int count, const PmfLimits& lim = {}) {
  if (count < 0) throw std::invalid_argument("pmf_iterated_sum: negative count");
  Pmf result = Pmf::point(0), base = p;
  bool have = false;
  while (count) {
    if (count & 1) {
      result = have ? pmf_convolve(result, base, lim) : base;
      have = true;
    }
    count >>= 1;
    if (count) base = pmf_convolve(base, base, lim);
  }
  return result;
}

enum class FailureModel { published, exact };

inline FailureModel parse_failure_model(const std::string& s) {
  if (s == "published") return FailureModel::published;
  if (s == "exact") return FailureModel::exact;
  throw std::invalid_argument("unknown failure model '" + s + "' (published|exact)");
}

struct DeltaReport {
  real p_coeff = 0;   // per-coefficient failure probability
  real log2_delta = 0;  // log2(n * p_coeff); -inf when p is zero
  std::size_t support_b1 = 0, support_b2 = 0, support_c = 0;
  int lo = 0, hi = 0;   // success interval for Err scaled by 2m: [lo, hi)
};

// Law of C: both inner-product terms and e2.
inline Pmf error_law(const ParamSet& p, std::size_t* sb1 = nullptr, std::size_t* sb2 = nullptr,
                     const PmfLimits& lim = {}) {
  Pmf b1 = pmf_product(pmf_convolve(pmf_cbd(p.eta_e_keygen), pmf_round_error(p.q, p.d_k)), pmf_cbd(p.eta_s));
  Pmf b2 = pmf_product(pmf_cbd(p.eta_s), pmf_convolve(pmf_cbd(p.eta_e), pmf_round_error(p.q, p.d_u)));
  if (sb1) *sb1 = b1.size();
  if (sb2) *sb2 = b2.size();
  int terms = p.n * p.l;
  Pmf c = pmf_convolve(pmf_iterated_sum(b1, terms, lim), pmf_iterated_sum(b2, terms, lim), lim);
  return pmf_convolve(c, pmf_cbd(p.eta_e), lim);
}

namespace detail {

inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

}  // namespace detail

// Success interval for Err when symbol k is sent, scaled by 2m: decoding
// succeeds iff lo <= 2m * Err < hi.
inline std::pair<int64_t, int64_t> symbol_interval_2m(const ParamSet& p, int k) {
  Modulus mq(p.q);
  // 2m * o_k = 2m * enc(k) - 2kq
  int64_t o = 2LL * p.m * decompress(k, p.d_m(), mq) - 2LL * k * p.q;
  return {-p.q - o, p.q - o};
}

// Intersection over all symbols: decoding succeeds whatever was sent.
inline std::pair<int64_t, int64_t> success_interval_2m(const ParamSet& p) {
  int64_t lo = std::numeric_limits<int64_t>::min(), hi = std::numeric_limits<int64_t>::max();
  for (int k = 0; k < p.m; ++k) {
    auto [l, h] = symbol_interval_2m(p, k);
    lo = std::max(lo, l);
    hi = std::min(hi, h);
  }
  return {lo, hi};
}

// Per-coefficient failure probability and union bound over n coefficients.
// The published model charges every coefficient with the worst symbol's
// interval; the exact model averages over uniformly drawn symbols and, for
// the single-rounding decoder, over every centred value of the rounding
// offset rather than only the lattice-aligned ones.
inline DeltaReport delta_report(const ParamSet& p, DecryptVariant variant, FailureModel model = FailureModel::published,
                                const PmfLimits& lim = {}) {
  DeltaReport rep;
  Pmf c = error_law(p, &rep.support_b1, &rep.support_b2, lim);
  rep.support_c = c.size();
  auto [lo_all, hi_all] = success_interval_2m(p);
  rep.lo = static_cast<int>(lo_all);
  rep.hi = static_cast<int>(hi_all);
  const int64_t m2 = 2LL * p.m, g = p.g(), q = p.q;

  std::vector<std::pair<int64_t, int64_t>> intervals;
  if (model == FailureModel::exact) {
    for (int k = 0; k < p.m; ++k) intervals.push_back(symbol_interval_2m(p, k));
  } else {
    intervals.push_back({lo_all, hi_all});
  }
  const real weight = 1.0L / static_cast<real>(intervals.size());
  CompensatedSum fail;

  for (auto [lo, hi] : intervals) {
    if (variant == DecryptVariant::original) {
      Pmf err = pmf_convolve(c, pmf_round_error(p.q, p.d_v), lim);
      for (int x = err.min(); x <= err.max(); ++x)
        if (m2 * x < lo || m2 * x >= hi) fail.add(weight * err(x));
    } else if (model == FailureModel::exact) {
      // j over centred residues [-(q-1)/2, (q-1)/2]; Err = c + j/g.
      const int64_t jmin = -(q - 1) / 2, jmax = (q - 1) / 2;
      auto count_below = [&](int64_t bound_num, int64_t den) {  // #{j : j < bound_num/den}
        int64_t top = detail::ceil_div(bound_num, den) - 1;
        return std::clamp<int64_t>(top - jmin + 1, 0, jmax - jmin + 1);
      };
      for (int x = c.min(); x <= c.max(); ++x) {
        real px = c(x);
        if (px == 0) continue;
        // fail iff m2*(g*x + j) < g*lo  or  m2*(g*x + j) >= g*hi
        int64_t below = count_below(g * lo - m2 * g * x, m2);
        int64_t not_above = count_below(g * hi - m2 * g * x, m2);
        int64_t bad = below + (jmax - jmin + 1 - not_above);
        if (bad) fail.add(weight * px * static_cast<real>(bad) / static_cast<real>(q));
      }
    } else {
      // Lattice-aligned points only: Err = x + i, |g*i| <= (q-1)/2.
      const int64_t imax = ((q - 1) / 2) / g;
      for (int x = c.min(); x <= c.max(); ++x) {
        real px = c(x);
        if (px == 0) continue;
        int64_t bad = 0;
        // fail iff m2*(x+i) < lo or m2*(x+i) >= hi
        int64_t i_lo = detail::ceil_div(lo, m2) - x;  // smallest i with m2*(x+i) >= lo
        int64_t i_hi = detail::ceil_div(hi, m2) - x;  // smallest i with m2*(x+i) >= hi
        bad += std::clamp<int64_t>(i_lo - (-imax), 0, 2 * imax + 1);
        bad += std::clamp<int64_t>(imax - i_hi + 1, 0, 2 * imax + 1);
        if (bad)
          fail.add(weight * px * static_cast<real>(std::min<int64_t>(bad, 2 * imax + 1)) / static_cast<real>(q));
      }
    }
  }
  rep.p_coeff = fail.value();
  real d = static_cast<real>(p.n) * rep.p_coeff;
  // The twice construction decrypts two independent messages:
  // 1 - (1 - d)^2 = d * (2 - d).
  if (p.approach == Approach::twice) d *= 2 - d;
  rep.log2_delta = d > 0 ? std::log2(d) : -std::numeric_limits<real>::infinity();
  return rep;
}

inline double delta(const ParamSet& p, DecryptVariant variant, FailureModel model = FailureModel::published) {
  return static_cast<double>(delta_report(p, variant, model).log2_delta);
}

}  // namespace oskr

#endif  // OSKR_FAILURE_HPP_
