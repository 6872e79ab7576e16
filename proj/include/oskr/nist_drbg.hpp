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

// AES-256 CTR_DRBG without derivation function, as used by the NIST PQC KAT
// generator (rng.c). Needs OpenSSL libcrypto.

#ifndef OSKR_NIST_DRBG_HPP_
#define OSKR_NIST_DRBG_HPP_

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>

#include "oskr/rng.hpp"

namespace oskr {

class NistDrbg final : public RandomSource {
 public:
  // entropy: 48 bytes.
  explicit NistDrbg(std::span<const uint8_t> entropy) {
    if (entropy.size() != 48) throw std::invalid_argument("NIST DRBG seed must be 48 bytes");
    update(entropy.data());
    reseed_counter_ = 1;
  }

  void fill(std::span<uint8_t> out) override {
    std::size_t off = 0;
    std::array<uint8_t, 16> block{};
    while (off < out.size()) {
      increment_v();
      aes256_ecb(key_.data(), v_.data(), block.data());
      std::size_t take = std::min<std::size_t>(16, out.size() - off);
      std::memcpy(out.data() + off, block.data(), take);
      off += take;
    }
    update(nullptr);
    ++reseed_counter_;
  }

 private:
  static void aes256_ecb(const uint8_t* key, const uint8_t* in, uint8_t* out) {
    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    int len = 0;
    bool ok = ctx && EVP_EncryptInit_ex(ctx, EVP_aes_256_ecb(), nullptr, key, nullptr) == 1 &&
              EVP_CIPHER_CTX_set_padding(ctx, 0) == 1 && EVP_EncryptUpdate(ctx, out, &len, in, 16) == 1;
    EVP_CIPHER_CTX_free(ctx);
    if (!ok) throw std::runtime_error("AES-256-ECB failed");
  }

  void increment_v() {
    for (int j = 15; j >= 0; --j) {
      if (v_[static_cast<std::size_t>(j)] == 0xff) {
        v_[static_cast<std::size_t>(j)] = 0;
      } else {
        ++v_[static_cast<std::size_t>(j)];
        break;
      }
    }
  }

  void update(const uint8_t* provided) {
    std::array<uint8_t, 48> temp{};
    for (int i = 0; i < 3; ++i) {
      increment_v();
      aes256_ecb(key_.data(), v_.data(), temp.data() + 16 * i);
    }
    if (provided)
      for (int i = 0; i < 48; ++i) temp[static_cast<std::size_t>(i)] ^= provided[i];
    std::memcpy(key_.data(), temp.data(), 32);
    std::memcpy(v_.data(), temp.data() + 32, 16);
  }

  std::array<uint8_t, 32> key_{};
  std::array<uint8_t, 16> v_{};
  int reseed_counter_ = 0;
};

}  // namespace oskr

#endif  // OSKR_NIST_DRBG_HPP_
