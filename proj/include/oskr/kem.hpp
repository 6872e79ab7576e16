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

// CCA KEM by the Fujisaki-Okamoto transform with implicit rejection.
//
//   keygen:  (pk, sk') = CPA.keygen(d);  sk = sk' || pk || H(pk) || z
//   encaps:  m = H(x);  (Kbar, r) = G(m || H(pk));  c = CPA.enc(pk, m, r)
//            K = KDF(Kbar || H(c))
//   decaps:  m' = CPA.dec(sk', c);  (Kbar', r') = G(m' || H(pk))
//            K = KDF(Kbar' || H(c)) if CPA.enc(pk, m', r') == c
//                else KDF(z || H(c))
//
// The `twice` construction draws x, splits G(x) into two halves and runs
// encaps once per half under the same key; c = c1 || c2 and K = K1 || K2.

#ifndef OSKR_KEM_HPP_
#define OSKR_KEM_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "oskr/cpapke.hpp"
#include "oskr/params.hpp"
#include "oskr/rng.hpp"

namespace oskr {

struct KemKeyPair {
  Bytes pk;
  Bytes sk;
};

struct Encapsulation {
  Bytes ct;
  Bytes key;
};

class Kem {
 public:
  explicit Kem(const ParamSet& p) : p_(p), cpa_(p), sym_(p) {}

  const ParamSet& params() const { return p_; }
  const CpaPke& cpa() const { return cpa_; }
  EncodedSizes sizes() const { return encoded_sizes(p_); }

  KemKeyPair keygen_derand(std::span<const uint8_t> d, std::span<const uint8_t> z) const {
    if (z.size() != static_cast<std::size_t>(p_.seed_bytes)) throw std::invalid_argument("keygen: bad z length");
    CpaKeyPair kp = cpa_.keygen(d);
    Bytes sk = kp.sk;
    Bytes h = sym_.hash_h(kp.pk);
    sk.insert(sk.end(), kp.pk.begin(), kp.pk.end());
    sk.insert(sk.end(), h.begin(), h.end());
    sk.insert(sk.end(), z.begin(), z.end());
    return {kp.pk, sk};
  }

  KemKeyPair keygen(RandomSource& rng) const {
    Bytes d = rng.bytes(static_cast<std::size_t>(p_.seed_bytes));
    Bytes z = rng.bytes(static_cast<std::size_t>(p_.seed_bytes));
    return keygen_derand(d, z);
  }

  // One shot; x is msg_bytes of randomness.
  Encapsulation encaps_single(std::span<const uint8_t> pk, std::span<const uint8_t> x) const {
    check_pk(pk);
    if (x.size() != static_cast<std::size_t>(p_.msg_bytes())) throw std::invalid_argument("encaps: bad randomness length");
    Bytes m = sym_.hash_msg(x);
    Bytes kr = sym_.hash_g(concat(m, sym_.hash_h(pk)), static_cast<std::size_t>(p_.msg_bytes() + p_.seed_bytes));
    std::span<const uint8_t> kbar(kr.data(), static_cast<std::size_t>(p_.msg_bytes()));
    std::span<const uint8_t> coins(kr.data() + p_.msg_bytes(), static_cast<std::size_t>(p_.seed_bytes));
    Bytes ct = cpa_.encrypt(pk, m, coins);
    Bytes key = sym_.kdf(concat(kbar, sym_.hash_h(ct)), static_cast<std::size_t>(p_.msg_bytes()));
    return {ct, key};
  }

  // x: msg_bytes of randomness (both shots are derived from it for `twice`).
  Encapsulation encaps_derand(std::span<const uint8_t> pk, std::span<const uint8_t> x) const {
    if (p_.approach != Approach::twice) return encaps_single(pk, x);
    if (x.size() != static_cast<std::size_t>(p_.msg_bytes())) throw std::invalid_argument("encaps: bad randomness length");
    Bytes halves = sym_.hash_g(x, 2 * static_cast<std::size_t>(p_.msg_bytes()));
    std::span<const uint8_t> all(halves);
    Encapsulation a = encaps_single(pk, all.first(static_cast<std::size_t>(p_.msg_bytes())));
    Encapsulation b = encaps_single(pk, all.subspan(static_cast<std::size_t>(p_.msg_bytes())));
    return {concat(a.ct, b.ct), concat(a.key, b.key)};
  }

  Encapsulation encaps(std::span<const uint8_t> pk, RandomSource& rng) const {
    Bytes x = rng.bytes(static_cast<std::size_t>(p_.msg_bytes()));
    return encaps_derand(pk, x);
  }

  Bytes decaps(std::span<const uint8_t> sk, std::span<const uint8_t> ct,
               DecryptVariant variant = DecryptVariant::akcn) const {
    if (sk.size() != sizes().sk)
      throw std::invalid_argument("decaps: expected " + std::to_string(sizes().sk) + "-byte secret key, got " +
                                  std::to_string(sk.size()));
    if (ct.size() != sizes().ct)
      throw std::invalid_argument("decaps: expected " + std::to_string(sizes().ct) + "-byte ciphertext, got " +
                                  std::to_string(ct.size()));
    if (p_.approach != Approach::twice) return decaps_single(sk, ct, variant);
    std::size_t half = ct.size() / 2;
    return concat(decaps_single(sk, ct.first(half), variant), decaps_single(sk, ct.subspan(half), variant));
  }

 private:
  void check_pk(std::span<const uint8_t> pk) const {
    if (pk.size() != sizes().pk)
      throw std::invalid_argument("encaps: expected " + std::to_string(sizes().pk) + "-byte public key, got " +
                                  std::to_string(pk.size()));
  }

  Bytes decaps_single(std::span<const uint8_t> sk, std::span<const uint8_t> ct, DecryptVariant variant) const {
    std::size_t s_len = cpa_sk_bytes(p_), pk_len = sizes().pk, h_len = static_cast<std::size_t>(p_.seed_bytes);
    auto s = sk.first(s_len);
    auto pk = sk.subspan(s_len, pk_len);
    auto h = sk.subspan(s_len + pk_len, h_len);
    auto z = sk.subspan(s_len + pk_len + h_len);
    Bytes m = cpa_.decrypt(s, ct, variant);
    Bytes kr = sym_.hash_g(concat(m, h), static_cast<std::size_t>(p_.msg_bytes() + p_.seed_bytes));
    std::span<const uint8_t> kbar(kr.data(), static_cast<std::size_t>(p_.msg_bytes()));
    std::span<const uint8_t> coins(kr.data() + p_.msg_bytes(), static_cast<std::size_t>(p_.seed_bytes));
    Bytes cmp = cpa_.encrypt(pk, m, coins);
    uint8_t diff = 0;
    for (std::size_t i = 0; i < ct.size(); ++i) diff = static_cast<uint8_t>(diff | (cmp[i] ^ ct[i]));
    Bytes hc = sym_.hash_h(ct);
    return sym_.kdf(concat(diff == 0 ? kbar : z, hc), static_cast<std::size_t>(p_.msg_bytes()));
  }

  ParamSet p_;
  CpaPke cpa_;
  Symmetric sym_;
};

}  // namespace oskr

#endif  // OSKR_KEM_HPP_
