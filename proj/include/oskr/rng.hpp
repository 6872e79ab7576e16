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

#ifndef OSKR_RNG_HPP_
#define OSKR_RNG_HPP_

#include <cstdint>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>

#include "oskr/keccak.hpp"

namespace oskr {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<uint8_t> out) = 0;

  Bytes bytes(std::size_t n) {
    Bytes b(n);
    fill(b);
    return b;
  }
};

// Kernel entropy via /dev/urandom.
class OsRandom final : public RandomSource {
 public:
  OsRandom() : in_("/dev/urandom", std::ios::binary) {
    if (!in_) throw std::runtime_error("cannot open /dev/urandom");
  }
  void fill(std::span<uint8_t> out) override {
    in_.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!in_) throw std::runtime_error("short read from /dev/urandom");
  }

 private:
  std::ifstream in_;
};

// Deterministic stream: SHAKE256(seed) squeezed incrementally.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::span<const uint8_t> seed) : xof_(shake256_ctx()) { xof_.absorb(seed); }
  void fill(std::span<uint8_t> out) override { xof_.squeeze(out); }

 private:
  Keccak xof_;
};

inline Bytes from_hex(const std::string& hex) {
  if (hex.size() % 2) throw std::invalid_argument("hex string has odd length");
  Bytes out(hex.size() / 2);
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
  };
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<uint8_t>(nib(hex[2 * i]) << 4 | nib(hex[2 * i + 1]));
  return out;
}

inline std::string to_hex(std::span<const uint8_t> b, bool upper = true) {
  const char* digits = upper ? "0123456789ABCDEF" : "0123456789abcdef";
  std::string s;
  s.reserve(b.size() * 2);
  for (uint8_t x : b) {
    s.push_back(digits[x >> 4]);
    s.push_back(digits[x & 15]);
  }
  return s;
}

}  // namespace oskr

#endif  // OSKR_RNG_HPP_
