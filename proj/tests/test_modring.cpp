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

#include <cstdint>
#include <limits>
#include <random>

#include "oskr/modring.hpp"
#include "oskr/ntt.hpp"

namespace {

using oskr::Modulus;

int64_t canon(int64_t a, int64_t q) { return ((a % q) + q) % q; }

class ModringTest : public ::testing::TestWithParam<int> {};

TEST_P(ModringTest, BarrettExhaustiveOverInt16) {
  Modulus m(GetParam());
  for (int a = std::numeric_limits<int16_t>::min(); a <= std::numeric_limits<int16_t>::max(); ++a)
    ASSERT_EQ(m.barrett_reduce(static_cast<int16_t>(a)), canon(a, m.q())) << a;
}

TEST_P(ModringTest, MontgomeryRandomAndBoundaries) {
  Modulus m(GetParam());
  const int64_t q = m.q(), lim = (1LL << 15) * q;
  int64_t rinv = m.inv(1 << 16);
  auto check = [&](int64_t a) {
    int16_t r = m.montgomery_reduce(static_cast<int32_t>(a));
    ASSERT_GT(r, -q);
    ASSERT_LT(r, q);
    ASSERT_EQ(canon(r, q), canon(a * rinv, q)) << a;
  };
  for (int64_t a : {-lim, -lim + 1, int64_t{-1}, int64_t{0}, int64_t{1}, lim - 1}) check(a);
  std::mt19937_64 g(1);
  std::uniform_int_distribution<int64_t> d(-lim, lim - 1);
  for (int i = 0; i < 1000000; ++i) check(d(g));
}

TEST_P(ModringTest, Reduce32AndFieldOps) {
  Modulus m(GetParam());
  const int64_t q = m.q();
  for (int64_t a : {int64_t{std::numeric_limits<int32_t>::min()}, int64_t{std::numeric_limits<int32_t>::max()},
                    int64_t{0}, q - 1, q, -q, int64_t{-1}})
    EXPECT_EQ(m.reduce32(static_cast<int32_t>(a)), canon(a, q)) << a;
  std::mt19937_64 g(2);
  std::uniform_int_distribution<int32_t> d32;
  std::uniform_int_distribution<int> dq(0, m.q() - 1);
  for (int i = 0; i < 200000; ++i) {
    int32_t a = d32(g);
    ASSERT_EQ(m.reduce32(a), canon(a, q));
    int16_t x = static_cast<int16_t>(dq(g)), y = static_cast<int16_t>(dq(g));
    ASSERT_EQ(m.mul(x, y), canon(int64_t{x} * y, q));
    ASSERT_EQ(m.add(x, y), canon(x + y, q));
    ASSERT_EQ(m.sub(x, y), canon(x - y, q));
    ASSERT_EQ(canon(m.fqmul(m.to_mont(x), y), q), canon(int64_t{x} * y, q));
  }
  for (int a = 1; a < 200; ++a) EXPECT_EQ(canon(int64_t{m.inv(a)} * a, q), 1);
}

TEST_P(ModringTest, DivFloorExhaustiveThenRandom) {
  Modulus m(GetParam());
  const uint64_t q = static_cast<uint64_t>(m.q());
  for (uint64_t a = 0; a < (1u << 20); ++a) ASSERT_EQ(m.div_floor(a), a / q) << a;
  std::mt19937_64 g(3);
  std::uniform_int_distribution<uint64_t> d(0, m.div_bound() - 1);
  for (int i = 0; i < 1000000; ++i) {
    uint64_t a = d(g);
    ASSERT_EQ(m.div_floor(a), a / q) << a;
  }
  EXPECT_EQ(m.div_floor(m.div_bound() - 1), (m.div_bound() - 1) / q);
  EXPECT_THROW(m.div_floor(m.div_bound()), std::out_of_range);
  EXPECT_GE(m.div_bound(), 1ULL << 31);
}

TEST_P(ModringTest, LazyReductionScheduleStaysInBounds) {
  // Worst-case interval walk over a 256-point forward transform: each level
  // adds at most q - 1 (a Montgomery product) to a lane's magnitude, and every
  // multiplicand must satisfy |z * a| <= 2^15 q with |z| < q.
  const int q = GetParam();
  // 3329 has no 512th root, so its plans stop one level early.
  oskr::NttPlan plan(256, q, 0, q == 3329 ? 1 : 0);
  if (q == 7681 || q == 3329) {
    EXPECT_EQ(plan.lazy_levels(), 2);
  }
  int64_t bound = q - 1;
  for (int level = 0; level < plan.levels(); ++level) {
    if (level && level % plan.lazy_levels() == 0) bound = q - 1;
    ASSERT_LE(int64_t{q - 1} * bound, (int64_t{1} << 15) * q);
    bound += q - 1;
    ASSERT_LT(bound, 1 << 15) << "level " << level;
  }
  EXPECT_LT(oskr::lazy_bound(q, plan.lazy_levels()), 1 << 15);
}

INSTANTIATE_TEST_SUITE_P(Moduli, ModringTest, ::testing::Values(3329, 7681, 12289));

TEST(Modring, RejectsBadModuli) {
  EXPECT_THROW(Modulus(2), std::invalid_argument);
  EXPECT_THROW(Modulus(4096), std::invalid_argument);
  EXPECT_THROW(Modulus(40961), std::invalid_argument);
}

TEST(Modring, CenteredRepresentative) {
  EXPECT_EQ(oskr::centered(0, 17), 0);
  EXPECT_EQ(oskr::centered(8, 17), 8);
  EXPECT_EQ(oskr::centered(9, 17), -8);
  EXPECT_EQ(oskr::centered(-1, 17), -1);
}

}  // namespace
