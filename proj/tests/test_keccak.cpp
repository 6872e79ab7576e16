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

// Keccak sponge against OpenSSL's FIPS 202 implementation.

#include <gtest/gtest.h>
#include <openssl/evp.h>

#include <random>

#include "oskr/keccak.hpp"

namespace {

using oskr::Bytes;

Bytes openssl_digest(const EVP_MD* md, const Bytes& in, std::size_t out_len, bool xof) {
  Bytes out(out_len);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, md, nullptr);
  EVP_DigestUpdate(ctx, in.data(), in.size());
  if (xof) {
    EVP_DigestFinalXOF(ctx, out.data(), out.size());
  } else {
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx, out.data(), &len);
  }
  EVP_MD_CTX_free(ctx);
  return out;
}

Bytes random_bytes(std::mt19937_64& g, std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = static_cast<uint8_t>(g());
  return b;
}

TEST(Keccak, MatchesOpenSslAcrossRateBoundaries) {
  std::mt19937_64 g(7);
  for (std::size_t len : {0, 1, 71, 72, 73, 135, 136, 137, 167, 168, 169, 500, 1000}) {
    Bytes in = random_bytes(g, len);
    EXPECT_EQ(oskr::sha3_256(in), openssl_digest(EVP_sha3_256(), in, 32, false)) << len;
    EXPECT_EQ(oskr::sha3_512(in), openssl_digest(EVP_sha3_512(), in, 64, false)) << len;
    EXPECT_EQ(oskr::shake128(in, 500), openssl_digest(EVP_shake128(), in, 500, true)) << len;
    EXPECT_EQ(oskr::shake256(in, 300), openssl_digest(EVP_shake256(), in, 300, true)) << len;
  }
}

TEST(Keccak, IncrementalAbsorbAndSqueezeAgree) {
  std::mt19937_64 g(8);
  for (int trial = 0; trial < 50; ++trial) {
    Bytes in = random_bytes(g, g() % 600);
    Bytes want = oskr::shake128(in, 1000);
    auto ctx = oskr::shake128_ctx();
    std::size_t pos = 0;
    while (pos < in.size()) {
      std::size_t take = std::min<std::size_t>(g() % 200, in.size() - pos);
      ctx.absorb(std::span<const uint8_t>(in).subspan(pos, take));
      pos += take;
    }
    Bytes got;
    while (got.size() < want.size()) {
      Bytes part = ctx.squeeze(std::min<std::size_t>(g() % 300 + 1, want.size() - got.size()));
      got.insert(got.end(), part.begin(), part.end());
    }
    ASSERT_EQ(got, want);
  }
}

TEST(Keccak, AbsorbAfterSqueezeThrows) {
  auto ctx = oskr::shake256_ctx();
  ctx.squeeze(1);
  uint8_t b = 0;
  EXPECT_THROW(ctx.absorb(std::span<const uint8_t>(&b, 1)), std::logic_error);
}

TEST(Keccak, KnownEmptyDigest) {
  EXPECT_EQ(oskr::sha3_256({})[0], 0xa7);
  EXPECT_EQ(oskr::sha3_256({})[31], 0x4a);
}

}  // namespace
