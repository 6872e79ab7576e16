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

#ifndef OSKR_MODRING_HPP_
#define OSKR_MODRING_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oskr {

// Scalar arithmetic modulo a 16-bit prime q. Values travel as int16 lanes
// with 32-bit products; the Montgomery radix is R = 2^16.
class Modulus {
 public:
  explicit Modulus(int q) : q_(q) {
    if (q < 3 || q >= (1 << 15) || q % 2 == 0)
      throw std::invalid_argument("modulus must be an odd value below 2^15, got " + std::to_string(q));
    // q^-1 mod 2^16 by Newton iteration
    uint32_t inv = static_cast<uint32_t>(q);
    for (int i = 0; i < 4; ++i) inv *= 2u - static_cast<uint32_t>(q) * inv;
    qinv_ = static_cast<int16_t>(static_cast<uint16_t>(inv));
    barrett_v_ = static_cast<int32_t>(((1LL << 26) + q / 2) / q);
    barrett32_ = (1LL << 40) / q;
    r_mod_ = static_cast<int16_t>((1LL << 16) % q);
    r2_mod_ = static_cast<int16_t>((1LL << 32) % q);
    // (b, s) for floor(a / q): b = ceil(2^s / q), exact for a < div_bound_.
    div_shift_ = 44;
    div_mul_ = ((1ULL << div_shift_) + q - 1) / q;
    // Exact when a * (b*q - 2^s) < 2^s, i.e. a < 2^s / (b*q - 2^s).
    uint64_t slack = div_mul_ * static_cast<uint64_t>(q) - (1ULL << div_shift_);
    div_bound_ = slack == 0 ? (1ULL << 32) : std::min<uint64_t>((1ULL << div_shift_) / slack, 1ULL << 32);
  }

  int q() const { return q_; }
  int16_t qinv() const { return qinv_; }
  int16_t r_mod() const { return r_mod_; }
  int16_t r2_mod() const { return r2_mod_; }

  // a * 2^-16 mod q for |a| <= 2^15 * q; result in (-q, q).
  int16_t montgomery_reduce(int32_t a) const {
    int16_t t = static_cast<int16_t>(static_cast<int16_t>(a) * qinv_);
    return static_cast<int16_t>((a - static_cast<int32_t>(t) * q_) >> 16);
  }

  // a*b*2^-16 mod q.
  int16_t fqmul(int16_t a, int16_t b) const {
    return montgomery_reduce(static_cast<int32_t>(a) * b);
  }

  // Canonical residue in [0, q) of any 16-bit signed value.
  int16_t barrett_reduce(int16_t a) const {
    int32_t t = (barrett_v_ * a + (1 << 25)) >> 26;
    int16_t r = static_cast<int16_t>(a - t * q_);
    r = static_cast<int16_t>(r + ((r >> 15) & q_));
    r = static_cast<int16_t>(r - q_);
    r = static_cast<int16_t>(r + ((r >> 15) & q_));
    return r;
  }

  // Canonical residue of a 32-bit value. The quotient estimate
  // (a * floor(2^40/q)) >> 40 is off by at most one either way.
  int16_t reduce32(int32_t a) const {
    int64_t t = (static_cast<int64_t>(a) * barrett32_) >> 40;
    int32_t r = static_cast<int32_t>(a - t * q_);
    if (r < 0) r += q_;
    if (r >= q_) r -= q_;
    return static_cast<int16_t>(r);
  }

  // a*b mod q, canonical.
  int16_t mul(int16_t a, int16_t b) const { return reduce32(static_cast<int32_t>(a) * b); }
  int16_t add(int16_t a, int16_t b) const {
    int32_t r = a + b;
    return static_cast<int16_t>(r >= q_ ? r - q_ : r);
  }
  int16_t sub(int16_t a, int16_t b) const {
    int32_t r = a - b;
    return static_cast<int16_t>(r < 0 ? r + q_ : r);
  }

  // Value in Montgomery form, a * 2^16 mod q, canonical.
  int16_t to_mont(int32_t a) const { return reduce32(static_cast<int32_t>((static_cast<int64_t>(a) << 16) % q_)); }

  int16_t pow(int64_t b, uint64_t e) const {
    int64_t r = 1;
    b %= q_;
    if (b < 0) b += q_;
    while (e) {
      if (e & 1) r = r * b % q_;
      b = b * b % q_;
      e >>= 1;
    }
    return static_cast<int16_t>(r);
  }
  int16_t inv(int64_t a) const { return pow(a, static_cast<uint64_t>(q_ - 2)); }

  // floor(a / q) as (a * b) >> s.
  uint64_t div_floor(uint64_t a) const {
    if (a >= div_bound_) throw std::out_of_range("div_floor: input beyond verified range");
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * div_mul_) >> div_shift_);
  }
  uint64_t div_bound() const { return div_bound_; }
  uint64_t div_mul() const { return div_mul_; }
  int div_shift() const { return div_shift_; }

 private:
  int q_;
  int16_t qinv_;
  int32_t barrett_v_;
  int64_t barrett32_;
  int16_t r_mod_;
  int16_t r2_mod_;
  int div_shift_;
  uint64_t div_mul_;
  uint64_t div_bound_;
};

// Centered representative in (-q/2, q/2].
inline int centered(int x, int q) {
  x %= q;
  if (x < 0) x += q;
  return x > q / 2 ? x - q : x;
}

}  // namespace oskr

#endif  // OSKR_MODRING_HPP_
