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

#ifndef OSKR_CPAPKE_HPP_
#define OSKR_CPAPKE_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "oskr/codec.hpp"
#include "oskr/keccak.hpp"
#include "oskr/ntt.hpp"
#include "oskr/params.hpp"
#include "oskr/poly.hpp"

namespace oskr {

enum class DecryptVariant { akcn, original };

inline DecryptVariant parse_decrypt_variant(const std::string& s) {
  if (s == "akcn") return DecryptVariant::akcn;
  if (s == "original") return DecryptVariant::original;
  throw std::invalid_argument("unknown decryption variant '" + s + "' (akcn|original)");
}

// Hash roles. Output widths follow the seed and message sizes of the set:
// SHA3-256 / SHA3-512 where the width matches, SHAKE256 otherwise.
class Symmetric {
 public:
  explicit Symmetric(const ParamSet& p) : p_(p) {}

  Bytes hash_h(std::span<const uint8_t> in) const { return p_.seed_bytes == 32 ? sha3_256(in) : sha3_512(in); }
  Bytes hash_msg(std::span<const uint8_t> in) const {
    return p_.msg_bytes() == 32 ? sha3_256(in) : p_.msg_bytes() == 64 ? sha3_512(in) : shake256(in, p_.msg_bytes());
  }
  Bytes hash_g(std::span<const uint8_t> in, std::size_t len) const { return len == 64 ? sha3_512(in) : shake256(in, len); }
  Bytes prf(std::span<const uint8_t> seed, uint8_t nonce, std::size_t len) const {
    uint8_t b[1] = {nonce};
    return shake256_ctx().absorb(seed).absorb(b).squeeze(len);
  }
  Bytes kdf(std::span<const uint8_t> in, std::size_t len) const { return shake256(in, len); }

 private:
  ParamSet p_;
};

struct CpaKeyPair {
  Bytes pk;
  Bytes sk;
};

class CpaPke {
 public:
  explicit CpaPke(const ParamSet& p) : p_(p), plan_(p.n, p.q, p.alpha, p.beta), mq_(p.q), sym_(p) { validate(p); }

  const ParamSet& params() const { return p_; }
  const NttPlan& plan() const { return plan_; }

  // coins: seed_bytes of randomness, expanded by G into rho || sigma.
  CpaKeyPair keygen(std::span<const uint8_t> coins) const {
    check_len(coins.size(), p_.seed_bytes, "keygen coins");
    Bytes g = sym_.hash_g(coins, 2 * static_cast<std::size_t>(p_.seed_bytes));
    std::span<const uint8_t> rho(g.data(), p_.seed_bytes), sigma(g.data() + p_.seed_bytes, p_.seed_bytes);
    Matrix a = gen_matrix(rho, p_, false);
    uint8_t nonce = 0;
    PolyVec s = sample_vec(sigma, p_.eta_s, nonce);
    PolyVec e = sample_vec(sigma, p_.eta_e_keygen, nonce);
    PolyVec s_hat = ntt(s, plan_);
    PolyVec t(p_.l, p_.n);
    for (int i = 0; i < p_.l; ++i) {
      Poly as = pointwise_acc(a[i], s_hat, plan_);
      t[i] = p_.pk_compressed() ? add(intt(as, plan_), e[i], mq_) : add(as, ntt(e[i], plan_), mq_);
    }
    return {encode_pk(t, rho, p_), encode_sk(s_hat, p_)};
  }

  // msg: n*d_m/8 bytes; coins: seed_bytes feeding the noise PRF.
  Bytes encrypt(std::span<const uint8_t> pk, std::span<const uint8_t> msg, std::span<const uint8_t> coins) const {
    check_len(msg.size(), p_.msg_bytes(), "message");
    check_len(coins.size(), p_.seed_bytes, "encryption coins");
    DecodedPk key = decode_pk(pk, p_);
    PolyVec t_hat = p_.pk_compressed() ? ntt(key.t, plan_) : key.t;
    Matrix at = gen_matrix(key.rho, p_, true);
    uint8_t nonce = 0;
    PolyVec r = sample_vec(coins, p_.eta_s, nonce);
    PolyVec e1 = sample_vec(coins, p_.eta_e, nonce);
    Poly e2 = sample(coins, p_.eta_e, nonce);
    PolyVec r_hat = ntt(r, plan_);
    PolyVec u(p_.l, p_.n);
    for (int i = 0; i < p_.l; ++i) u[i] = add(intt(pointwise_acc(at[i], r_hat, plan_), plan_), e1[i], mq_);
    Poly v = add(add(intt(pointwise_acc(t_hat, r_hat, plan_), plan_), e2, mq_), encode_message(msg), mq_);
    return encode_ct(u, v, p_);
  }

  Bytes decrypt(std::span<const uint8_t> sk, std::span<const uint8_t> ct, DecryptVariant variant) const {
    PolyVec s_hat = decode_sk(sk, p_);
    DecodedCt c = decode_ct(ct, p_);
    Poly sigma1 = intt(pointwise_acc(s_hat, ntt(c.u, plan_), plan_), plan_);
    std::vector<int16_t> k(static_cast<std::size_t>(p_.n));
    for (int i = 0; i < p_.n; ++i)
      k[static_cast<std::size_t>(i)] = static_cast<int16_t>(
          variant == DecryptVariant::akcn ? decode_akcn(sigma1[i], c.v[static_cast<std::size_t>(i)])
                                          : decode_original(sigma1[i], c.v[static_cast<std::size_t>(i)]));
    return pack_values(std::span<const int16_t>(k), p_.d_m());
  }

  // Message symbol k in [0, m) placed at round(q*k/m).
  Poly encode_message(std::span<const uint8_t> msg) const {
    auto k = unpack_values(msg, static_cast<std::size_t>(p_.n), p_.d_m());
    Poly r(p_.n);
    for (int i = 0; i < p_.n; ++i) r[i] = static_cast<int16_t>(decompress(k[static_cast<std::size_t>(i)], p_.d_m(), mq_));
    return r;
  }

  // Single rounding: round(m * (v/g - sigma1/q)) mod m, computed as
  // floor((2m(vq - sigma1 g) + gq) / 2gq), shifted positive by 2mgq.
  int decode_akcn(int sigma1, int v) const {
    int64_t g = p_.g(), q = p_.q, m = p_.m;
    int64_t x = 2 * m * (v * q - sigma1 * g) + g * q + 2 * m * g * q;
    return static_cast<int>(mq_.div_floor(static_cast<uint64_t>(x) >> (p_.d_v + 1)) % static_cast<uint64_t>(m));
  }

  // Double rounding: round(m/q * (Decompress(v) - sigma1)) mod m.
  int decode_original(int sigma1, int v) const {
    int64_t q = p_.q, m = p_.m;
    int64_t x = decompress(v, p_.d_v, mq_) - sigma1;
    x %= q;
    if (x < 0) x += q;
    return static_cast<int>(mq_.div_floor(static_cast<uint64_t>(2 * m * x + q) >> 1) % static_cast<uint64_t>(m));
  }

 private:
  static void check_len(std::size_t got, int want, const char* what) {
    if (got != static_cast<std::size_t>(want))
      throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) + " bytes, got " +
                                  std::to_string(got));
  }

  Poly sample(std::span<const uint8_t> seed, int eta, uint8_t& nonce) const {
    Bytes buf = sym_.prf(seed, nonce++, static_cast<std::size_t>(eta * p_.n / 4));
    return cbd_sample(buf, eta, p_.n, p_.q);
  }

  PolyVec sample_vec(std::span<const uint8_t> seed, int eta, uint8_t& nonce) const {
    PolyVec v(p_.l, p_.n);
    for (int i = 0; i < p_.l; ++i) v[i] = sample(seed, eta, nonce);
    return v;
  }

  ParamSet p_;
  NttPlan plan_;
  Modulus mq_;
  Symmetric sym_;
};

}  // namespace oskr

#endif  // OSKR_CPAPKE_HPP_
