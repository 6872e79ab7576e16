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

// Negacyclic NTT engine over Z_q[x]/(x^n + 1).
//
// One engine covers four variants. The polynomial is split into A = 2^alpha
// interleaved parts f(x) = sum_s x^s f_s(x^A); every part is transformed with
// a transform cropped by beta levels, leaving residues modulo (y^B - r_i) with
// B = 2^beta. Classic is (0, 0), T-NTT is (0, beta), Pt-NTT is (alpha, 0) and
// H-NTT is (alpha, beta).
//
// Transform-domain layout: part s occupies [s*n', (s+1)*n') with n' = n/A,
// and inside a part block i occupies [i*B, (i+1)*B) in the order produced by
// Cooley-Tukey butterflies with bit-reversed twiddles.

#ifndef OSKR_NTT_HPP_
#define OSKR_NTT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "oskr/modring.hpp"

namespace oskr {

struct OpCounter {
  uint64_t muls = 0;
  uint64_t adds = 0;
  void mul(uint64_t k = 1) { muls += k; }
  void add(uint64_t k = 1) { adds += k; }
};

// Drop-in for OpCounter that compiles to nothing.
struct NullCounter {
  void mul(uint64_t = 1) {}
  void add(uint64_t = 1) {}
};

enum class Variant { classic, t_ntt, pt_ntt, h_ntt };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::classic: return "classic";
    case Variant::t_ntt: return "t";
    case Variant::pt_ntt: return "pt";
    case Variant::h_ntt: return "h";
  }
  return "?";
}

inline Variant parse_variant(const std::string& s) {
  if (s == "classic") return Variant::classic;
  if (s == "t" || s == "t-ntt" || s == "tntt") return Variant::t_ntt;
  if (s == "pt" || s == "pt-ntt" || s == "ptntt") return Variant::pt_ntt;
  if (s == "h" || s == "h-ntt" || s == "hntt") return Variant::h_ntt;
  throw std::invalid_argument("unknown NTT variant '" + s + "'");
}

inline int ilog2(int x) {
  int r = 0;
  while ((1 << r) < x) ++r;
  return r;
}

inline int bitrev(int x, int bits) {
  int r = 0;
  for (int i = 0; i < bits; ++i) r |= ((x >> i) & 1) << (bits - 1 - i);
  return r;
}

// Smallest element of multiplicative order exactly `order` (a power of two).
inline int smallest_root(int q, int order) {
  if ((q - 1) % order != 0) return 0;
  Modulus mq(q);
  for (int x = 2; x < q; ++x) {
    if (order == 1) return 1;
    if (mq.pow(x, order / 2) == q - 1) return x;
  }
  return 0;
}

// Worst-case magnitude of a lane after `levels` forward butterfly levels
// without reduction, starting from canonical input.
inline long long lazy_bound(int q, int levels) { return static_cast<long long>(q) * (levels + 1); }

class NttPlan {
 public:
  NttPlan(int n, int q, int alpha, int beta) : n_(n), alpha_(alpha), beta_(beta), mq_(q) {
    if (n < 1 || (n & (n - 1)) != 0) throw std::invalid_argument("ntt: n must be a power of two");
    if (alpha < 0 || beta < 0) throw std::invalid_argument("ntt: negative depth");
    if (beta > 6) throw std::invalid_argument("ntt: basecase blocks above 64 coefficients are not supported");
    sub_n_ = n >> alpha;
    block_ = 1 << beta;
    if (sub_n_ < block_) throw std::invalid_argument("ntt: alpha + beta exceeds log2 n");
    levels_ = ilog2(sub_n_) - beta;
    int order = 2 << levels_;
    if ((q - 1) % order != 0)
      throw std::invalid_argument("ntt: no root of order " + std::to_string(order) + " mod " + std::to_string(q) +
                                  " for (n=" + std::to_string(n) + ", alpha=" + std::to_string(alpha) +
                                  ", beta=" + std::to_string(beta) + ")");
    zeta_ = smallest_root(q, order);
    // Barrett every two levels, or every level when 3q overflows 16 bits.
    lazy_levels_ = lazy_bound(q, 2) < (1 << 15) ? 2 : 1;
    int size = 1 << levels_;
    zetas_.resize(size);
    zetas_inv_.resize(size);
    for (int k = 0; k < size; ++k) {
      int z = mq_.pow(zeta_, static_cast<uint64_t>(bitrev(k, levels_)));
      zetas_[k] = mq_.to_mont(z);
      zetas_inv_[k] = mq_.to_mont(mq_.inv(z));
    }
    scale_ = mq_.to_mont(mq_.inv(size));
    roots_.resize(sub_n_ / block_);
    for (int i = 0; i < static_cast<int>(roots_.size()); ++i) roots_[i] = mq_.to_mont(root(i));
  }

  int n() const { return n_; }
  int q() const { return mq_.q(); }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  int parts() const { return 1 << alpha_; }
  int sub_n() const { return sub_n_; }
  int block() const { return block_; }
  int levels() const { return levels_; }
  int zeta() const { return zeta_; }
  // Forward levels run between Barrett reductions.
  int lazy_levels() const { return lazy_levels_; }
  const Modulus& mod() const { return mq_; }
  const std::vector<int16_t>& zetas() const { return zetas_; }
  const std::vector<int16_t>& zetas_inv() const { return zetas_inv_; }

  // Residue-ring constant r_i of block i, canonical. Taken from the twiddle
  // table: r_{2j} = zetas[2^(L-1) + j], r_{2j+1} = -r_{2j}.
  int root(int i) const {
    if (levels_ == 0) return q() - 1;
    int half = 1 << (levels_ - 1);
    int z = mq_.reduce32(mq_.fqmul(zetas_[half + i / 2], 1));
    return (i & 1) ? (z == 0 ? 0 : q() - z) : z;
  }

  // Bytes of the forward and inverse twiddle tables.
  std::size_t table_bytes() const { return (zetas_.size() + zetas_inv_.size()) * sizeof(int16_t); }

  // Identity of the twiddle tables; plans with equal keys share tables.
  std::tuple<int, int, int> table_key() const { return {q(), sub_n_, beta_}; }

  // Forward transform of one part (length n'), in place.
  template <class C = NullCounter>
  void forward_part(std::span<int16_t> a, C& cnt) const {
    int k = 1, depth = 0;
    for (int len = sub_n_ / 2; len >= block_; len >>= 1, ++depth) {
      if (depth && depth % lazy_levels_ == 0)
        for (auto& x : a) x = mq_.barrett_reduce(x);
      for (int start = 0; start < sub_n_; start += 2 * len) {
        int16_t z = zetas_[k++];
        for (int j = start; j < start + len; ++j) {
          int16_t t = mq_.fqmul(z, a[j + len]);
          a[j + len] = static_cast<int16_t>(a[j] - t);
          a[j] = static_cast<int16_t>(a[j] + t);
        }
        cnt.mul(len);
        cnt.add(2 * len);
      }
    }
    for (auto& x : a) x = mq_.barrett_reduce(x);
  }

  // Inverse of forward_part including the 2^-L scaling, in place.
  template <class C = NullCounter>
  void inverse_part(std::span<int16_t> a, C& cnt) const {
    for (int len = block_; len <= sub_n_ / 2; len <<= 1) {
      int first = sub_n_ / (2 * len);
      for (int start = 0; start < sub_n_; start += 2 * len) {
        int16_t z = zetas_inv_[first + start / (2 * len)];
        for (int j = start; j < start + len; ++j) {
          int16_t t = a[j];
          a[j] = mq_.barrett_reduce(static_cast<int16_t>(t + a[j + len]));
          a[j + len] = mq_.fqmul(z, static_cast<int16_t>(t - a[j + len]));
        }
        cnt.mul(len);
        cnt.add(2 * len);
      }
    }
    for (auto& x : a) x = mq_.barrett_reduce(mq_.fqmul(x, scale_));
    cnt.mul(sub_n_);
  }

  // Product of two transformed parts modulo (y^B - r_i) per block, Karatsuba
  // pairs. out may alias neither input.
  template <class C = NullCounter>
  void basemul_part(std::span<const int16_t> a, std::span<const int16_t> b, std::span<int16_t> out, C& cnt) const {
    const int B = block_;
    int16_t d[64];
    for (int blk = 0; blk < sub_n_ / B; ++blk) {
      const int16_t* x = a.data() + blk * B;
      const int16_t* y = b.data() + blk * B;
      int16_t r = roots_[blk];
      int32_t acc[64];
      int terms[64];
      std::fill_n(acc, B, 0);
      std::fill_n(terms, B, 0);
      for (int s = 0; s < B; ++s) {
        d[s] = mq_.mul(x[s], y[s]);
        cnt.mul();
        place(acc, terms, s + s, d[s], r, cnt);
      }
      for (int s = 0; s < B; ++s)
        for (int t = s + 1; t < B; ++t) {
          int16_t p = mq_.mul(mq_.add(x[s], x[t]), mq_.add(y[s], y[t]));
          p = mq_.sub(mq_.sub(p, d[s]), d[t]);
          cnt.mul();
          cnt.add(4);
          place(acc, terms, s + t, p, r, cnt);
        }
      for (int s = 0; s < B; ++s) {
        out[blk * B + s] = mq_.reduce32(acc[s]);
        if (terms[s] > 1) cnt.add(terms[s] - 1);
      }
    }
  }

  // Multiply a transformed part by y, i.e. shift every block with wrap-around
  // by r_i. One multiplication per block.
  template <class C = NullCounter>
  void mul_by_y_part(std::span<int16_t> a, C& cnt) const {
    const int B = block_;
    for (int blk = 0; blk < sub_n_ / B; ++blk) {
      int16_t* x = a.data() + blk * B;
      int16_t top = mq_.barrett_reduce(mq_.fqmul(x[B - 1], roots_[blk]));
      for (int s = B - 1; s > 0; --s) x[s] = x[s - 1];
      x[0] = top;
      cnt.mul();
    }
  }

  // Full forward transform of a degree-n polynomial.
  template <class C = NullCounter>
  std::vector<int16_t> forward(std::span<const int16_t> f, C& cnt) const {
    check_len(f.size());
    const int A = parts();
    std::vector<int16_t> out(n_);
    for (int s = 0; s < A; ++s)
      for (int j = 0; j < sub_n_; ++j) out[s * sub_n_ + j] = f[A * j + s];
    for (int s = 0; s < A; ++s) forward_part(std::span<int16_t>(out).subspan(s * sub_n_, sub_n_), cnt);
    return out;
  }
  std::vector<int16_t> forward(std::span<const int16_t> f) const {
    NullCounter c;
    return forward(f, c);
  }

  template <class C = NullCounter>
  std::vector<int16_t> inverse(std::span<const int16_t> fh, C& cnt) const {
    check_len(fh.size());
    const int A = parts();
    std::vector<int16_t> tmp(fh.begin(), fh.end());
    for (int s = 0; s < A; ++s) inverse_part(std::span<int16_t>(tmp).subspan(s * sub_n_, sub_n_), cnt);
    std::vector<int16_t> out(n_);
    for (int s = 0; s < A; ++s)
      for (int j = 0; j < sub_n_; ++j) out[A * j + s] = tmp[s * sub_n_ + j];
    return out;
  }
  std::vector<int16_t> inverse(std::span<const int16_t> fh) const {
    NullCounter c;
    return inverse(fh, c);
  }

  // Product in the transform domain: h_k = sum_{s+t=k mod A} [y if s+t>=A]
  // f_s g_t, with off-diagonal pairs folded by Karatsuba.
  template <class C = NullCounter>
  std::vector<int16_t> mul_transformed(std::span<const int16_t> a, std::span<const int16_t> b, C& cnt) const {
    check_len(a.size());
    check_len(b.size());
    const int A = parts(), N = sub_n_;
    auto part = [&](std::span<const int16_t> v, int s) { return v.subspan(s * N, N); };
    std::vector<int32_t> acc(n_, 0);
    std::vector<int> terms(A, 0);
    std::vector<std::vector<int16_t>> diag(A, std::vector<int16_t>(N));
    std::vector<int16_t> sa(N), sb(N), prod(N);

    auto deposit = [&](int idx, std::vector<int16_t>& v) {
      if (idx >= A) {
        mul_by_y_part(std::span<int16_t>(v), cnt);
        idx -= A;
      }
      for (int j = 0; j < N; ++j) acc[idx * N + j] += v[j];
      if (terms[idx]++) cnt.add(N);
    };

    for (int s = 0; s < A; ++s) basemul_part(part(a, s), part(b, s), std::span<int16_t>(diag[s]), cnt);
    for (int s = 0; s < A; ++s) {
      std::vector<int16_t> v = diag[s];
      deposit(2 * s, v);
    }
    for (int s = 0; s < A; ++s)
      for (int t = s + 1; t < A; ++t) {
        for (int j = 0; j < N; ++j) {
          sa[j] = mq_.add(a[s * N + j], a[t * N + j]);
          sb[j] = mq_.add(b[s * N + j], b[t * N + j]);
        }
        cnt.add(2 * N);
        basemul_part(std::span<const int16_t>(sa), std::span<const int16_t>(sb), std::span<int16_t>(prod), cnt);
        for (int j = 0; j < N; ++j) prod[j] = mq_.sub(mq_.sub(prod[j], diag[s][j]), diag[t][j]);
        cnt.add(2 * N);
        deposit(s + t, prod);
      }
    std::vector<int16_t> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = mq_.reduce32(acc[i]);
    return out;
  }
  std::vector<int16_t> mul_transformed(std::span<const int16_t> a, std::span<const int16_t> b) const {
    NullCounter c;
    return mul_transformed(a, b, c);
  }

  // Full pipeline: two forward transforms, product, one inverse.
  template <class C = NullCounter>
  std::vector<int16_t> multiply(std::span<const int16_t> f, std::span<const int16_t> g, C& cnt) const {
    auto fh = forward(f, cnt);
    auto gh = forward(g, cnt);
    auto hh = mul_transformed(std::span<const int16_t>(fh), std::span<const int16_t>(gh), cnt);
    return inverse(std::span<const int16_t>(hh), cnt);
  }
  std::vector<int16_t> multiply(std::span<const int16_t> f, std::span<const int16_t> g) const {
    NullCounter c;
    return multiply(f, g, c);
  }

 private:
  void check_len(std::size_t len) const {
    if (len != static_cast<std::size_t>(n_))
      throw std::invalid_argument("ntt: expected " + std::to_string(n_) + " coefficients, got " + std::to_string(len));
  }

  // Adds term v to coefficient idx of a block product, wrapping idx >= B
  // through a multiplication by r. Counts one addition per extra term.
  template <class C>
  void place(int32_t* acc, int* terms, int idx, int16_t v, int16_t r_mont, C& cnt) const {
    if (idx >= block_) {
      v = mq_.barrett_reduce(mq_.fqmul(v, r_mont));
      cnt.mul();
      idx -= block_;
    }
    acc[idx] += v;
    ++terms[idx];
  }

  int n_, alpha_, beta_;
  Modulus mq_;
  int sub_n_ = 0, block_ = 0, levels_ = 0, zeta_ = 0, lazy_levels_ = 1;
  std::vector<int16_t> zetas_, zetas_inv_, roots_;
  int16_t scale_ = 0;
};

// Plan for a named variant; rejects depths that do not belong to it.
inline NttPlan make_plan(Variant v, int n, int q, int alpha, int beta) {
  switch (v) {
    case Variant::classic:
      if (alpha || beta) throw std::invalid_argument("classic NTT has alpha = beta = 0");
      break;
    case Variant::t_ntt:
      if (alpha) throw std::invalid_argument("T-NTT has alpha = 0");
      break;
    case Variant::pt_ntt:
      if (beta) throw std::invalid_argument("Pt-NTT has beta = 0");
      break;
    case Variant::h_ntt:
      break;
  }
  return NttPlan(n, q, alpha, beta);
}

// O(n^2) negacyclic product, the reference for every variant.
inline std::vector<int16_t> schoolbook(std::span<const int16_t> f, std::span<const int16_t> g, int q) {
  const std::size_t n = f.size();
  if (g.size() != n) throw std::invalid_argument("schoolbook: length mismatch");
  std::vector<int64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int64_t p = static_cast<int64_t>(f[i]) * g[j];
      if (i + j < n)
        acc[i + j] += p;
      else
        acc[i + j - n] -= p;
    }
  std::vector<int16_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    int64_t r = acc[i] % q;
    out[i] = static_cast<int16_t>(r < 0 ? r + q : r);
  }
  return out;
}

// a*d + b*c reusing s1 = a*c and s2 = b*d: one fresh multiplication.
inline int16_t karatsuba_pair(int16_t a, int16_t b, int16_t c, int16_t d, const Modulus& mq) {
  int16_t s1 = mq.mul(a, c), s2 = mq.mul(b, d);
  return mq.sub(mq.sub(mq.mul(mq.add(a, b), mq.add(c, d)), s1), s2);
}

struct Complexity {
  double muls;
  double adds;
};

// Closed forms for one full multiplication. The Pt-NTT form covers alpha >= 0
// with its alpha = 0 special case; the H-NTT form is the general expression.
inline Complexity complexity_printed(Variant v, int n, int alpha, int beta) {
  double N = n, lg = ilog2(n), a = alpha, b = beta;
  auto pow2 = [](double e) { return std::pow(2.0, e); };
  if (v == Variant::classic) return {1.5 * N * lg + 2 * N, 3 * N * lg};
  if (v == Variant::pt_ntt) {
    double tm = alpha == 0 ? 1.5 * N * lg + 2 * N : 1.5 * N * lg + (3 * pow2(a - 2) + 1.5 - 1.5 * a) * N;
    double ta = 3 * N * lg + (5 * pow2(a - 1) - 2.5 - 3 * a) * N;
    return {tm, ta};
  }
  if (v == Variant::t_ntt) alpha = 0, a = 0;
  double tm = 1.5 * N * lg +
              (3 * pow2(a + b - 3) + pow2(a - 2) + 3 * pow2(b - 3) + pow2(a - b - 2) - 1.5 * (a + b) + 1.25) * N;
  double ta = 3 * N * lg + (5 * pow2(a + b - 2) + 5 * pow2(b - 2) + 5 * pow2(a - 2) - 3 * (a + b) - 3.75) * N;
  return {tm, ta};
}

// Exact integer accounting of the engine: 2A forward and A inverse part
// transforms, A(A+1)/2 block products, floor(A^2/4) y-multiplications and
// 5A(A-1)/2 vector additions, where every block product costs B(B+1)/2 +
// floor(B^2/4) multiplications and 5B(B-1)/2 additions. Agrees with the
// closed forms whenever alpha, beta >= 1 and with the Pt-NTT form for all alpha.
inline Complexity complexity_formula(int n, int alpha, int beta) {
  uint64_t A = 1ULL << alpha, B = 1ULL << beta, Np = static_cast<uint64_t>(n) >> alpha;
  uint64_t L = static_cast<uint64_t>(ilog2(static_cast<int>(Np))) - beta;
  uint64_t blocks = Np / B;
  uint64_t fwd_m = Np / 2 * L, fwd_a = Np * L;
  uint64_t inv_m = Np / 2 * L + Np, inv_a = Np * L;
  uint64_t prods = A * (A + 1) / 2, ymuls = A * A / 4, vadds = 5 * A * (A - 1) / 2;
  uint64_t bm = B * (B + 1) / 2 + B * B / 4, ba = 5 * B * (B - 1) / 2;
  uint64_t muls = 2 * A * fwd_m + A * inv_m + prods * blocks * bm + ymuls * blocks;
  uint64_t adds = 2 * A * fwd_a + A * inv_a + prods * blocks * ba + vadds * Np;
  return {static_cast<double>(muls), static_cast<double>(adds)};
}

inline Complexity complexity_formula(Variant v, int n, int alpha, int beta) {
  switch (v) {
    case Variant::classic: return complexity_formula(n, 0, 0);
    case Variant::t_ntt: return complexity_formula(n, 0, beta);
    case Variant::pt_ntt: return complexity_formula(n, alpha, 0);
    case Variant::h_ntt: return complexity_formula(n, alpha, beta);
  }
  return {0, 0};
}

// Total twiddle-table bytes of a set of plans, counting shared tables once.
inline std::size_t table_footprint(const std::vector<NttPlan>& plans) {
  std::map<std::tuple<int, int, int>, std::size_t> tables;
  for (const auto& p : plans) tables[p.table_key()] = p.table_bytes();
  std::size_t total = 0;
  for (const auto& [key, bytes] : tables) total += bytes;
  return total;
}


}  // namespace oskr

#endif  // OSKR_NTT_HPP_
