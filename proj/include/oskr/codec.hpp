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

// Compression and wire format.
//
// Every field is a sequence of d-bit values packed little-endian: value i
// occupies bits [i*d, (i+1)*d) of the field, bit 0 being the least
// significant bit of byte 0. Coefficients are in natural order.
//
//   pk = t_0 || ... || t_{l-1} || rho
//        t is Compress(t, d_k) in the normal domain when d_k < ceil(log2 q),
//        otherwise the transform-domain vector at full width.
//   ct = Compress(u_0, d_u) || ... || Compress(u_{l-1}, d_u) || Compress(v, d_v)
//   cpa sk = s_0 || ... || s_{l-1}, transform domain, ceil(log2 q) bits each

#ifndef OSKR_CODEC_HPP_
#define OSKR_CODEC_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oskr/keccak.hpp"
#include "oskr/modring.hpp"
#include "oskr/params.hpp"
#include "oskr/poly.hpp"

namespace oskr {

namespace detail {

inline void check_bits(int d, const Modulus& mq) {
  if (d < 1 || d >= ilog2(mq.q()))
    throw std::invalid_argument("compression width " + std::to_string(d) + " out of range for q=" + std::to_string(mq.q()));
}

}  // namespace detail

// round(2^d / q * x) mod 2^d with halves rounded up, division-free.
inline int compress(int x, int d, const Modulus& mq) {
  detail::check_bits(d, mq);
  if (x < 0 || x >= mq.q()) throw std::invalid_argument("compress: input not canonical");
  uint64_t num = (static_cast<uint64_t>(x) << (d + 1)) + static_cast<uint64_t>(mq.q());
  return static_cast<int>((mq.div_floor(num) >> 1) & ((1u << d) - 1));
}

// round(q / 2^d * y) with halves rounded up.
inline int decompress(int y, int d, const Modulus& mq) {
  detail::check_bits(d, mq);
  if (y < 0 || y >= (1 << d)) throw std::invalid_argument("decompress: input out of range");
  return static_cast<int>((static_cast<int64_t>(y) * mq.q() + (1 << (d - 1))) >> d);
}

inline Bytes pack_values(std::span<const int16_t> v, int d) {
  std::size_t bits = v.size() * static_cast<std::size_t>(d);
  if (bits % 8) throw std::invalid_argument("pack: field is not byte aligned");
  Bytes out(bits / 8, 0);
  std::size_t pos = 0;
  for (int16_t x : v) {
    if (x < 0 || x >= (1 << d)) throw std::invalid_argument("pack: value does not fit in " + std::to_string(d) + " bits");
    for (int b = 0; b < d; ++b, ++pos)
      if ((x >> b) & 1) out[pos / 8] |= static_cast<uint8_t>(1u << (pos % 8));
  }
  return out;
}

inline std::vector<int16_t> unpack_values(std::span<const uint8_t> bytes, std::size_t count, int d) {
  if (bytes.size() * 8 != count * static_cast<std::size_t>(d))
    throw std::invalid_argument("unpack: expected " + std::to_string(count * d / 8) + " bytes, got " +
                                std::to_string(bytes.size()));
  std::vector<int16_t> out(count, 0);
  std::size_t pos = 0;
  for (auto& x : out)
    for (int b = 0; b < d; ++b, ++pos) x = static_cast<int16_t>(x | (((bytes[pos / 8] >> (pos % 8)) & 1) << b));
  return out;
}

inline Bytes pack_poly(const Poly& f, int d) { return pack_values(std::span<const int16_t>(f.coeffs), d); }

inline Poly unpack_poly(std::span<const uint8_t> bytes, int n, int d, Domain dom = Domain::normal()) {
  return Poly(unpack_values(bytes, static_cast<std::size_t>(n), d), dom);
}

inline Poly compress_poly(const Poly& f, int d, const Modulus& mq) {
  Poly r(f.size(), f.domain);
  for (int i = 0; i < f.size(); ++i) r[i] = static_cast<int16_t>(compress(f[i], d, mq));
  return r;
}

inline Poly decompress_poly(const Poly& f, int d, const Modulus& mq) {
  Poly r(f.size(), f.domain);
  for (int i = 0; i < f.size(); ++i) r[i] = static_cast<int16_t>(decompress(f[i], d, mq));
  return r;
}

struct DecodedPk {
  PolyVec t;  // decompressed (normal domain) or transform domain, see header
  Bytes rho;
};

struct DecodedCt {
  PolyVec u;                 // Decompress(c1, d_u), normal domain
  std::vector<int16_t> v;    // raw d_v-bit values of c2
};

inline std::size_t cpa_pk_bytes(const ParamSet& p) { return static_cast<std::size_t>(p.n * p.l * p.d_k / 8 + p.seed_bytes); }
inline std::size_t cpa_ct_bytes(const ParamSet& p) { return static_cast<std::size_t>((p.n * p.l * p.d_u + p.n * p.d_v) / 8); }
inline std::size_t cpa_sk_bytes(const ParamSet& p) { return static_cast<std::size_t>(p.n * p.l * p.log2q() / 8); }

// t is normal domain when the key is compressed, transform domain otherwise.
inline Bytes encode_pk(const PolyVec& t, std::span<const uint8_t> rho, const ParamSet& p) {
  Modulus mq(p.q);
  if (t.size() != p.l) throw std::invalid_argument("encode_pk: expected l polynomials");
  if (rho.size() != static_cast<std::size_t>(p.seed_bytes)) throw std::invalid_argument("encode_pk: bad seed length");
  Bytes out;
  for (int i = 0; i < p.l; ++i) {
    Bytes b;
    if (p.pk_compressed()) {
      if (t[i].domain.ntt) throw std::invalid_argument("encode_pk: compressed key needs the normal domain");
      b = pack_poly(compress_poly(t[i], p.d_k, mq), p.d_k);
    } else {
      if (!t[i].domain.ntt) throw std::invalid_argument("encode_pk: full-width key needs the transform domain");
      b = pack_poly(t[i], p.d_k);
    }
    out.insert(out.end(), b.begin(), b.end());
  }
  out.insert(out.end(), rho.begin(), rho.end());
  return out;
}

inline DecodedPk decode_pk(std::span<const uint8_t> pk, const ParamSet& p) {
  if (pk.size() != cpa_pk_bytes(p))
    throw std::invalid_argument("decode_pk: expected " + std::to_string(cpa_pk_bytes(p)) + " bytes, got " +
                                std::to_string(pk.size()));
  Modulus mq(p.q);
  std::size_t chunk = static_cast<std::size_t>(p.n * p.d_k / 8);
  DecodedPk r;
  r.t = PolyVec(p.l, p.n);
  for (int i = 0; i < p.l; ++i) {
    auto part = pk.subspan(static_cast<std::size_t>(i) * chunk, chunk);
    if (p.pk_compressed()) {
      r.t[i] = decompress_poly(unpack_poly(part, p.n, p.d_k), p.d_k, mq);
    } else {
      r.t[i] = unpack_poly(part, p.n, p.d_k, Domain::transformed(p.alpha, p.beta));
      for (auto c : r.t[i].coeffs)
        if (c >= p.q) throw std::invalid_argument("decode_pk: coefficient not reduced");
    }
  }
  auto seed = pk.subspan(static_cast<std::size_t>(p.l) * chunk);
  r.rho.assign(seed.begin(), seed.end());
  return r;
}

// u, v in the normal domain, canonical.
inline Bytes encode_ct(const PolyVec& u, const Poly& v, const ParamSet& p) {
  Modulus mq(p.q);
  if (u.size() != p.l) throw std::invalid_argument("encode_ct: expected l polynomials");
  Bytes out;
  for (int i = 0; i < p.l; ++i) {
    Bytes b = pack_poly(compress_poly(u[i], p.d_u, mq), p.d_u);
    out.insert(out.end(), b.begin(), b.end());
  }
  Bytes b = pack_poly(compress_poly(v, p.d_v, mq), p.d_v);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline DecodedCt decode_ct(std::span<const uint8_t> ct, const ParamSet& p) {
  if (ct.size() != cpa_ct_bytes(p))
    throw std::invalid_argument("decode_ct: expected " + std::to_string(cpa_ct_bytes(p)) + " bytes, got " +
                                std::to_string(ct.size()));
  Modulus mq(p.q);
  std::size_t chunk = static_cast<std::size_t>(p.n * p.d_u / 8);
  DecodedCt r;
  r.u = PolyVec(p.l, p.n);
  for (int i = 0; i < p.l; ++i)
    r.u[i] = decompress_poly(unpack_poly(ct.subspan(static_cast<std::size_t>(i) * chunk, chunk), p.n, p.d_u), p.d_u, mq);
  r.v = unpack_values(ct.subspan(static_cast<std::size_t>(p.l) * chunk), static_cast<std::size_t>(p.n), p.d_v);
  return r;
}

inline Bytes encode_sk(const PolyVec& s_hat, const ParamSet& p) {
  Bytes out;
  for (int i = 0; i < s_hat.size(); ++i) {
    if (!s_hat[i].domain.ntt) throw std::invalid_argument("encode_sk: secret must be in the transform domain");
    Bytes b = pack_poly(s_hat[i], p.log2q());
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

inline PolyVec decode_sk(std::span<const uint8_t> sk, const ParamSet& p) {
  if (sk.size() != cpa_sk_bytes(p)) throw std::invalid_argument("decode_sk: bad length");
  std::size_t chunk = static_cast<std::size_t>(p.n * p.log2q() / 8);
  PolyVec s(p.l, p.n);
  for (int i = 0; i < p.l; ++i) {
    s[i] = unpack_poly(sk.subspan(static_cast<std::size_t>(i) * chunk, chunk), p.n, p.log2q(),
                       Domain::transformed(p.alpha, p.beta));
    for (auto c : s[i].coeffs)
      if (c >= p.q) throw std::invalid_argument("decode_sk: coefficient not reduced");
  }
  return s;
}

}  // namespace oskr

#endif  // OSKR_CODEC_HPP_
