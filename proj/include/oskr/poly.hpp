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

#ifndef OSKR_POLY_HPP_
#define OSKR_POLY_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oskr/keccak.hpp"
#include "oskr/ntt.hpp"
#include "oskr/params.hpp"

namespace oskr {

// Which representation the coefficients are in. Transform-domain values also
// record the layout they were produced with.
struct Domain {
  bool ntt = false;
  int alpha = 0;
  int beta = 0;

  static Domain normal() { return {}; }
  static Domain transformed(int alpha, int beta) { return {true, alpha, beta}; }
  static Domain of(const NttPlan& plan) { return transformed(plan.alpha(), plan.beta()); }
  bool operator==(const Domain&) const = default;

  std::string str() const {
    if (!ntt) return "normal";
    return "ntt(alpha=" + std::to_string(alpha) + ",beta=" + std::to_string(beta) + ")";
  }
};

struct Poly {
  std::vector<int16_t> coeffs;
  Domain domain;

  Poly() = default;
  explicit Poly(int n, Domain d = Domain::normal()) : coeffs(static_cast<std::size_t>(n), 0), domain(d) {}
  Poly(std::vector<int16_t> c, Domain d) : coeffs(std::move(c)), domain(d) {}

  int size() const { return static_cast<int>(coeffs.size()); }
  int16_t& operator[](int i) { return coeffs[static_cast<std::size_t>(i)]; }
  int16_t operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }
  bool operator==(const Poly&) const = default;
};

struct PolyVec {
  std::vector<Poly> elems;

  PolyVec() = default;
  PolyVec(int l, int n, Domain d = Domain::normal()) : elems(static_cast<std::size_t>(l), Poly(n, d)) {}

  int size() const { return static_cast<int>(elems.size()); }
  Poly& operator[](int i) { return elems[static_cast<std::size_t>(i)]; }
  const Poly& operator[](int i) const { return elems[static_cast<std::size_t>(i)]; }
  Domain domain() const { return elems.empty() ? Domain::normal() : elems.front().domain; }
  bool operator==(const PolyVec&) const = default;
};

// rows[i][j]; always in the transform domain.
using Matrix = std::vector<PolyVec>;

namespace detail {

inline void require_same(const Poly& a, const Poly& b, const char* op) {
  if (a.domain != b.domain)
    throw std::invalid_argument(std::string(op) + ": domain mismatch (" + a.domain.str() + " vs " + b.domain.str() + ")");
  if (a.size() != b.size()) throw std::invalid_argument(std::string(op) + ": length mismatch");
}

}  // namespace detail

// Centered binomial sample: coefficient i is popcount of bits [2i*eta,
// 2i*eta+eta) minus popcount of the next eta bits, bits read little-endian.
inline Poly cbd_sample(std::span<const uint8_t> buf, int eta, int n, int q) {
  if (eta < 1 || eta > 4) throw std::invalid_argument("cbd_sample: eta must be in [1, 4]");
  std::size_t need = static_cast<std::size_t>(2 * eta * n + 7) / 8;
  if (buf.size() < need)
    throw std::invalid_argument("cbd_sample: need " + std::to_string(need) + " bytes, got " + std::to_string(buf.size()));
  auto bit = [&](std::size_t i) { return (buf[i / 8] >> (i % 8)) & 1; };
  Poly r(n);
  for (int i = 0; i < n; ++i) {
    std::size_t base = static_cast<std::size_t>(2 * i * eta);
    int a = 0, b = 0;
    for (int j = 0; j < eta; ++j) {
      a += bit(base + j);
      b += bit(base + eta + j);
    }
    int v = a - b;
    r[i] = static_cast<int16_t>(v < 0 ? v + q : v);
  }
  return r;
}

// Uniform polynomial by rejection sampling ceil(log2 q)-bit candidates from an
// XOF stream. 12-bit candidates come three bytes per pair, wider ones two
// bytes each with the high bits masked.
inline Poly rej_uniform(Keccak& xof, int n, int q, Domain d) {
  int bits = ilog2(q);
  Poly r(n, d);
  int filled = 0;
  uint8_t buf[168];
  while (filled < n) {
    xof.squeeze(std::span<uint8_t>(buf, sizeof buf));
    if (bits == 12) {
      for (std::size_t pos = 0; pos + 3 <= sizeof buf && filled < n; pos += 3) {
        int d1 = buf[pos] | ((buf[pos + 1] & 0x0f) << 8);
        int d2 = (buf[pos + 1] >> 4) | (buf[pos + 2] << 4);
        if (d1 < q) r[filled++] = static_cast<int16_t>(d1);
        if (filled < n && d2 < q) r[filled++] = static_cast<int16_t>(d2);
      }
    } else {
      int mask = (1 << bits) - 1;
      for (std::size_t pos = 0; pos + 2 <= sizeof buf && filled < n; pos += 2) {
        int c = (buf[pos] | (buf[pos + 1] << 8)) & mask;
        if (c < q) r[filled++] = static_cast<int16_t>(c);
      }
    }
  }
  return r;
}

inline Keccak matrix_xof(std::span<const uint8_t> rho, uint8_t x, uint8_t y) {
  Keccak xof = shake128_ctx();
  uint8_t ext[2] = {x, y};
  xof.absorb(rho).absorb(ext);
  return xof;
}

// A[i][j] is sampled from XOF(rho || j || i); the transposed matrix feeds
// (i, j) instead, so gen_matrix(rho, p, true)[i][j] == gen_matrix(rho, p, false)[j][i].
inline Matrix gen_matrix(std::span<const uint8_t> rho, const ParamSet& p, bool transposed) {
  if (rho.size() != static_cast<std::size_t>(p.seed_bytes))
    throw std::invalid_argument("gen_matrix: seed must be " + std::to_string(p.seed_bytes) + " bytes");
  Domain d = Domain::transformed(p.alpha, p.beta);
  Matrix a(static_cast<std::size_t>(p.l), PolyVec(p.l, p.n, d));
  for (int i = 0; i < p.l; ++i)
    for (int j = 0; j < p.l; ++j) {
      Keccak xof = transposed ? matrix_xof(rho, static_cast<uint8_t>(i), static_cast<uint8_t>(j))
                              : matrix_xof(rho, static_cast<uint8_t>(j), static_cast<uint8_t>(i));
      a[i][j] = rej_uniform(xof, p.n, p.q, d);
    }
  return a;
}

inline Poly add(const Poly& a, const Poly& b, const Modulus& mq) {
  detail::require_same(a, b, "add");
  Poly r(a.size(), a.domain);
  for (int i = 0; i < a.size(); ++i) r[i] = mq.add(a[i], b[i]);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, const Modulus& mq) {
  detail::require_same(a, b, "sub");
  Poly r(a.size(), a.domain);
  for (int i = 0; i < a.size(); ++i) r[i] = mq.sub(a[i], b[i]);
  return r;
}

inline PolyVec add(const PolyVec& a, const PolyVec& b, const Modulus& mq) {
  if (a.size() != b.size()) throw std::invalid_argument("add: vector length mismatch");
  PolyVec r = a;
  for (int i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i], mq);
  return r;
}

inline PolyVec sub(const PolyVec& a, const PolyVec& b, const Modulus& mq) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: vector length mismatch");
  PolyVec r = a;
  for (int i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i], mq);
  return r;
}

inline Poly ntt(const Poly& f, const NttPlan& plan) {
  if (f.domain.ntt) throw std::invalid_argument("ntt: input already in the transform domain");
  return Poly(plan.forward(std::span<const int16_t>(f.coeffs)), Domain::of(plan));
}

inline Poly intt(const Poly& f, const NttPlan& plan) {
  if (f.domain != Domain::of(plan))
    throw std::invalid_argument("intt: expected " + Domain::of(plan).str() + ", got " + f.domain.str());
  return Poly(plan.inverse(std::span<const int16_t>(f.coeffs)), Domain::normal());
}

inline PolyVec ntt(const PolyVec& v, const NttPlan& plan) {
  PolyVec r = v;
  for (int i = 0; i < v.size(); ++i) r[i] = ntt(v[i], plan);
  return r;
}

inline PolyVec intt(const PolyVec& v, const NttPlan& plan) {
  PolyVec r = v;
  for (int i = 0; i < v.size(); ++i) r[i] = intt(v[i], plan);
  return r;
}

// sum_i a_i * b_i for transform-domain vectors.
inline Poly pointwise_acc(const PolyVec& a, const PolyVec& b, const NttPlan& plan) {
  if (a.size() != b.size() || a.size() == 0) throw std::invalid_argument("pointwise_acc: vector length mismatch");
  const Modulus& mq = plan.mod();
  Domain d = Domain::of(plan);
  Poly acc(plan.n(), d);
  for (int i = 0; i < a.size(); ++i) {
    detail::require_same(a[i], b[i], "pointwise_acc");
    if (a[i].domain != d) throw std::invalid_argument("pointwise_acc: operands not in " + d.str());
    auto p = plan.mul_transformed(std::span<const int16_t>(a[i].coeffs), std::span<const int16_t>(b[i].coeffs));
    for (int j = 0; j < plan.n(); ++j) acc[j] = mq.add(acc[j], p[static_cast<std::size_t>(j)]);
  }
  return acc;
}

}  // namespace oskr

#endif  // OSKR_POLY_HPP_
