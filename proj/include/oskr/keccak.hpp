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

// FIPS 202 sponge: SHA3-256, SHA3-512, SHAKE128, SHAKE256.

#ifndef OSKR_KECCAK_HPP_
#define OSKR_KECCAK_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <vector>

namespace oskr {

using Bytes = std::vector<uint8_t>;

namespace detail {

inline constexpr std::array<uint64_t, 24> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

inline constexpr std::array<int, 25> kRho = {0,  1,  62, 28, 27, 36, 44, 6,  55, 20, 3,  10, 43,
                                             25, 39, 41, 45, 15, 21, 8,  18, 2,  61, 56, 14};

constexpr uint64_t rotl(uint64_t x, int r) { return r == 0 ? x : (x << r) | (x >> (64 - r)); }

inline void keccak_f1600(std::array<uint64_t, 25>& a) {
  for (int round = 0; round < 24; ++round) {
    uint64_t c[5], d[5];
    for (int x = 0; x < 5; ++x) c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
    for (int x = 0; x < 5; ++x) d[x] = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
    for (int i = 0; i < 25; ++i) a[i] ^= d[i % 5];
    uint64_t b[25];
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) b[y + 5 * ((2 * x + 3 * y) % 5)] = rotl(a[x + 5 * y], kRho[x + 5 * y]);
    for (int y = 0; y < 5; ++y)
      for (int x = 0; x < 5; ++x)
        a[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
    a[0] ^= kRoundConstants[round];
  }
}

}  // namespace detail

// Incremental sponge. Absorb any number of times, then squeeze any number of
// times; absorbing after the first squeeze is an error.
class Keccak {
 public:
  Keccak(std::size_t rate_bytes, uint8_t domain) : rate_(rate_bytes), domain_(domain) {}

  Keccak& absorb(std::span<const uint8_t> in) {
    if (squeezing_) throw std::logic_error("keccak: absorb after squeeze");
    for (uint8_t byte : in) {
      xor_byte(pos_, byte);
      if (++pos_ == rate_) {
        detail::keccak_f1600(state_);
        pos_ = 0;
      }
    }
    return *this;
  }

  void squeeze(std::span<uint8_t> out) {
    if (!squeezing_) {
      xor_byte(pos_, domain_);
      xor_byte(rate_ - 1, 0x80);
      detail::keccak_f1600(state_);
      pos_ = 0;
      squeezing_ = true;
    }
    for (auto& o : out) {
      if (pos_ == rate_) {
        detail::keccak_f1600(state_);
        pos_ = 0;
      }
      o = static_cast<uint8_t>(state_[pos_ / 8] >> (8 * (pos_ % 8)));
      ++pos_;
    }
  }

  Bytes squeeze(std::size_t len) {
    Bytes out(len);
    squeeze(out);
    return out;
  }

  std::size_t rate() const { return rate_; }

 private:
  void xor_byte(std::size_t i, uint8_t v) { state_[i / 8] ^= static_cast<uint64_t>(v) << (8 * (i % 8)); }

  std::array<uint64_t, 25> state_{};
  std::size_t rate_;
  uint8_t domain_;
  std::size_t pos_ = 0;
  bool squeezing_ = false;
};

inline Keccak shake128_ctx() { return Keccak(168, 0x1f); }
inline Keccak shake256_ctx() { return Keccak(136, 0x1f); }

inline Bytes sha3_256(std::span<const uint8_t> in) { return Keccak(136, 0x06).absorb(in).squeeze(32); }
inline Bytes sha3_512(std::span<const uint8_t> in) { return Keccak(72, 0x06).absorb(in).squeeze(64); }
inline Bytes shake128(std::span<const uint8_t> in, std::size_t len) { return shake128_ctx().absorb(in).squeeze(len); }
inline Bytes shake256(std::span<const uint8_t> in, std::size_t len) { return shake256_ctx().absorb(in).squeeze(len); }

inline Bytes concat(std::span<const uint8_t> a, std::span<const uint8_t> b) {
  Bytes out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace oskr

#endif  // OSKR_KECCAK_HPP_
