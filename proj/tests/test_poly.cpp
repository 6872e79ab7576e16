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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "oskr/params.hpp"
#include "oskr/poly.hpp"
#include "test_util.hpp"

namespace {

using namespace oskr;

int centered_coeff(int16_t x, int q) { return x > q / 2 ? x - q : x; }

double binom(int n, int k) {
  double c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - i + 1) / i;
  return c;
}

TEST(Cbd, ZeroBufferGivesZeroPolynomial) {
  for (int eta = 1; eta <= 4; ++eta) {
    Bytes buf(static_cast<std::size_t>(eta * 256 / 4), 0);
    Poly f = cbd_sample(buf, eta, 256, 3329);
    for (int i = 0; i < 256; ++i) EXPECT_EQ(f[i], 0);
  }
}

TEST(Cbd, EqualHalvesCancel) {
  Bytes buf = {0x03};  // eta = 1: a = 1, b = 1 for the first coefficient
  Poly f = cbd_sample(buf, 1, 4, 3329);
  EXPECT_EQ(f[0], 0);
}

// Coefficient i of the buffer carries bit pattern i, so every pattern of
// 2*eta bits appears once.
TEST(Cbd, EnumeratedPatternsFollowTheBinomialLaw) {
  for (int eta = 1; eta <= 4; ++eta) {
    const int patterns = 1 << (2 * eta);
    Bytes buf(static_cast<std::size_t>(patterns * 2 * eta / 8 + 1), 0);
    for (int i = 0; i < patterns; ++i)
      for (int b = 0; b < 2 * eta; ++b)
        if ((i >> b) & 1) {
          std::size_t bit = static_cast<std::size_t>(i * 2 * eta + b);
          buf[bit / 8] = static_cast<uint8_t>(buf[bit / 8] | (1 << (bit % 8)));
        }
    Poly f = cbd_sample(buf, eta, patterns, 3329);
    std::map<int, int> hist;
    for (int i = 0; i < patterns; ++i) ++hist[centered_coeff(f[i], 3329)];
    for (int k = -eta; k <= eta; ++k) EXPECT_EQ(hist[k], binom(2 * eta, eta + k)) << "eta=" << eta << " k=" << k;
    if (eta == 2) {
      EXPECT_EQ(hist[0], 6);
    }
  }
}

TEST(Cbd, RandomOutputStaysInRange) {
  std::mt19937_64 g(11);
  for (int eta = 1; eta <= 4; ++eta)
    for (int trial = 0; trial < 100; ++trial) {
      Bytes buf(static_cast<std::size_t>(eta * 64));
      for (auto& b : buf) b = static_cast<uint8_t>(g());
      Poly f = cbd_sample(buf, eta, 256, 7681);
      for (int i = 0; i < 256; ++i) {
        int c = centered_coeff(f[i], 7681);
        ASSERT_GE(c, -eta);
        ASSERT_LE(c, eta);
      }
    }
}

TEST(Cbd, RejectsShortBufferAndBadEta) {
  Bytes buf(10);
  EXPECT_THROW(cbd_sample(buf, 2, 256, 3329), std::invalid_argument);
  EXPECT_THROW(cbd_sample(buf, 5, 4, 3329), std::invalid_argument);
}

class MatrixTest : public ::testing::TestWithParam<const char*> {};

TEST_P(MatrixTest, DeterministicAndTransposeContract) {
  ParamSet p = preset(GetParam());
  Bytes rho(static_cast<std::size_t>(p.seed_bytes), 0x5a);
  Matrix a = gen_matrix(rho, p, false), b = gen_matrix(rho, p, false), t = gen_matrix(rho, p, true);
  EXPECT_EQ(a, b);
  for (int i = 0; i < p.l; ++i)
    for (int j = 0; j < p.l; ++j) {
      EXPECT_EQ(a[i][j], t[j][i]);
      EXPECT_TRUE(a[i][j].domain.ntt);
      EXPECT_EQ(a[i][j].size(), p.n);
    }
  EXPECT_THROW(gen_matrix(Bytes(5), p, false), std::invalid_argument);
}

INSTANTIATE_TEST_SUITE_P(Presets, MatrixTest, ::testing::Values("oskr512", "oskr1024", "okai768", "okai1024"));

// Wilson-Hilferty approximation of the chi-square quantile.
double chi2_quantile(double df, double z) {
  double h = 2.0 / (9.0 * df);
  return df * std::pow(1 - h + z * std::sqrt(h), 3);
}

class UniformTest : public ::testing::TestWithParam<int> {};

TEST_P(UniformTest, ChiSquareOnAMillionDraws) {
  const int q = GetParam();
  std::vector<long> hist(static_cast<std::size_t>(q), 0);
  long total = 0;
  for (int k = 0; total < 1000000; ++k) {
    uint8_t rho[32] = {};
    rho[0] = static_cast<uint8_t>(k);
    rho[1] = static_cast<uint8_t>(k >> 8);
    Keccak xof = matrix_xof(rho, 0, 0);
    Poly f = rej_uniform(xof, 256, q, Domain::transformed(0, 1));
    for (int i = 0; i < 256; ++i) ++hist[static_cast<std::size_t>(f[i])];
    total += 256;
  }
  double expect = static_cast<double>(total) / q, chi2 = 0;
  for (long h : hist) chi2 += (h - expect) * (h - expect) / expect;
  EXPECT_LT(chi2, chi2_quantile(q - 1, 3.090));  // significance 0.001
}

// Candidates parsed independently from the raw SHAKE128 stream; rej_uniform
// must return exactly the accepted prefix, and the acceptance rate must be
// q / 2^ceil(log2 q) within 1%.
TEST_P(UniformTest, RejectionRateMatchesAnalyticValue) {
  const int q = GetParam(), bits = ilog2(q);
  uint8_t rho[32] = {1, 2, 3};
  Keccak raw = matrix_xof(rho, 0, 0), xof = matrix_xof(rho, 0, 0);
  std::vector<int> accepted;
  long candidates = 0;
  while (candidates < 1000000) {
    Bytes buf = raw.squeeze(168);
    auto take = [&](int c) {
      ++candidates;
      if (c < q) accepted.push_back(c);
    };
    if (bits == 12) {
      for (std::size_t pos = 0; pos < 168; pos += 3) {
        take(buf[pos] | ((buf[pos + 1] & 0x0f) << 8));
        take((buf[pos + 1] >> 4) | (buf[pos + 2] << 4));
      }
    } else {
      for (std::size_t pos = 0; pos < 168; pos += 2) take((buf[pos] | (buf[pos + 1] << 8)) & ((1 << bits) - 1));
    }
  }
  double rate = static_cast<double>(accepted.size()) / static_cast<double>(candidates);
  double want = static_cast<double>(q) / (1 << bits);
  EXPECT_NEAR(rate, want, 0.01 * want);
  Poly f = rej_uniform(xof, 512, q, Domain::normal());
  for (int i = 0; i < 512; ++i) ASSERT_EQ(f[i], accepted[static_cast<std::size_t>(i)]);
}

INSTANTIATE_TEST_SUITE_P(Moduli, UniformTest, ::testing::Values(3329, 7681));

TEST(PolyArith, AddSubAgainstIntegerOracle) {
  std::mt19937_64 g(12);
  Modulus mq(3329);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a(testutil::random_poly(g, 256, 3329), Domain::normal());
    Poly b(testutil::random_poly(g, 256, 3329), Domain::normal());
    Poly s = add(a, b, mq), d = sub(a, b, mq);
    for (int i = 0; i < 256; ++i) {
      ASSERT_EQ(s[i], (a[i] + b[i]) % 3329);
      ASSERT_EQ(d[i], ((a[i] - b[i]) % 3329 + 3329) % 3329);
    }
    EXPECT_EQ(add(a, Poly(256), mq), a);
    EXPECT_EQ(sub(a, a, mq), Poly(256));
  }
}

TEST(PolyArith, DomainMixingIsRejected) {
  NttPlan plan(256, 3329, 0, 1);
  Modulus mq(3329);
  Poly f(256), fh = ntt(f, plan);
  EXPECT_THROW(add(f, fh, mq), std::invalid_argument);
  EXPECT_THROW(sub(fh, f, mq), std::invalid_argument);
  EXPECT_THROW(ntt(fh, plan), std::invalid_argument);
  EXPECT_THROW(intt(f, plan), std::invalid_argument);
  PolyVec v(2, 256), vh = ntt(v, plan);
  EXPECT_THROW(pointwise_acc(v, v, plan), std::invalid_argument);
  EXPECT_THROW(pointwise_acc(v, vh, plan), std::invalid_argument);
  // A transform taken under another layout is not interchangeable either.
  NttPlan other(256, 3329, 1, 1);
  EXPECT_THROW(intt(fh, other), std::invalid_argument);
  EXPECT_NO_THROW(pointwise_acc(vh, vh, plan));
}

}  // namespace
