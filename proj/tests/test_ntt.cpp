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

#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "oskr/ntt.hpp"
#include "oskr/params.hpp"
#include "test_util.hpp"

namespace {

using namespace oskr;
using testutil::random_poly;

struct Depth {
  Variant v;
  int alpha, beta;
};

const std::vector<Depth> kGrid = {
    {Variant::classic, 0, 0}, {Variant::t_ntt, 0, 1},  {Variant::t_ntt, 0, 2},
    {Variant::pt_ntt, 1, 0},  {Variant::pt_ntt, 2, 0}, {Variant::h_ntt, 1, 1},
    {Variant::h_ntt, 1, 2},   {Variant::h_ntt, 2, 1},  {Variant::h_ntt, 2, 2}};

// Every plan that can be built for (n, q), plus the exact layout of each
// parameter set with that ring.
std::vector<NttPlan> plans_for(int n, int q) {
  std::vector<NttPlan> out;
  std::set<std::pair<int, int>> seen;
  auto add = [&](int a, int b) {
    if (!seen.insert({a, b}).second) return;
    try {
      out.emplace_back(n, q, a, b);
    } catch (const std::invalid_argument&) {
    }
  };
  for (auto name : preset_names()) {
    auto p = preset(name);
    if (p.n == n && p.q == q) add(p.alpha, p.beta);
  }
  for (auto name : baseline_names()) {
    auto p = preset(name);
    if (p.n == n && p.q == q) add(p.alpha, p.beta);
  }
  for (const auto& d : kGrid) add(d.alpha, d.beta);
  return out;
}

class RingTest : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(RingTest, EveryLayoutMatchesSchoolbook) {
  auto [n, q] = GetParam();
  auto plans = plans_for(n, q);
  ASSERT_FALSE(plans.empty());
  std::mt19937_64 g(static_cast<uint64_t>(n * 100003 + q));
  for (int trial = 0; trial < 10000; ++trial) {
    auto f = random_poly(g, n, q), h = random_poly(g, n, q);
    auto want = schoolbook(f, h, q);
    for (const auto& plan : plans)
      ASSERT_EQ(plan.multiply(f, h), want) << "alpha=" << plan.alpha() << " beta=" << plan.beta() << " trial " << trial;
  }
}

TEST_P(RingTest, RoundTripAndLinearity) {
  auto [n, q] = GetParam();
  Modulus mq(q);
  std::mt19937_64 g(static_cast<uint64_t>(q));
  for (const auto& plan : plans_for(n, q)) {
    for (int trial = 0; trial < 10000; ++trial) {
      auto f = random_poly(g, n, q);
      ASSERT_EQ(plan.inverse(plan.forward(f)), f);
      if (trial % 10) continue;
      auto h = random_poly(g, n, q);
      std::vector<int16_t> s(f.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = mq.add(f[i], h[i]);
      auto fs = plan.forward(s), ff = plan.forward(f), fh = plan.forward(h);
      for (std::size_t i = 0; i < s.size(); ++i) ASSERT_EQ(fs[i], mq.add(ff[i], fh[i]));
    }
    std::vector<int16_t> zero(static_cast<std::size_t>(n), 0);
    EXPECT_EQ(plan.forward(zero), zero);
  }
}

INSTANTIATE_TEST_SUITE_P(PresetRings, RingTest,
                         ::testing::Values(std::make_tuple(256, 3329), std::make_tuple(512, 3329),
                                           std::make_tuple(256, 7681), std::make_tuple(512, 7681),
                                           std::make_tuple(512, 12289)));

TEST(Ntt, SmallestRootsAgainstBruteForce) {
  Modulus m3329(3329), m7681(7681);
  EXPECT_EQ(smallest_root(3329, 256), 17);
  for (auto [q, order] : std::vector<std::pair<int, int>>{{3329, 256}, {3329, 128}, {7681, 512}, {7681, 256},
                                                          {12289, 1024}}) {
    Modulus m(q);
    auto exact_order = [&](int x) {
      return m.pow(x, static_cast<uint64_t>(order)) == 1 && m.pow(x, static_cast<uint64_t>(order / 2)) != 1;
    };
    int r = smallest_root(q, order);
    EXPECT_TRUE(exact_order(r)) << q << " " << order;
    for (int x = 2; x < r; ++x) EXPECT_FALSE(exact_order(x)) << q << " " << order << " " << x;
  }
}

TEST(Ntt, TwiddleTablesAreBitReversedPowers) {
  for (auto [n, q, a, b] : std::vector<std::tuple<int, int, int, int>>{
           {256, 3329, 0, 1}, {512, 7681, 1, 1}, {256, 7681, 0, 0}, {512, 12289, 0, 0}}) {
    NttPlan plan(n, q, a, b);
    const Modulus& m = plan.mod();
    int order = 2 << plan.levels();
    EXPECT_EQ(m.pow(plan.zeta(), static_cast<uint64_t>(order / 2)), q - 1);
    int rinv = m.inv(1 << 16);
    for (int k = 0; k < (1 << plan.levels()); ++k) {
      int z = m.pow(plan.zeta(), static_cast<uint64_t>(bitrev(k, plan.levels())));
      int stored = static_cast<int>((int64_t{plan.zetas()[static_cast<std::size_t>(k)]} * rinv) % q);
      ASSERT_EQ((stored + q) % q, z);
      int stored_inv = static_cast<int>((int64_t{plan.zetas_inv()[static_cast<std::size_t>(k)]} * rinv) % q);
      ASSERT_EQ(int64_t{(stored_inv + q) % q} * z % q, 1);
    }
  }
}

TEST(Ntt, MissingRootsAndWrongDepthsAreRejected) {
  EXPECT_THROW(NttPlan(256, 3329, 0, 0), std::invalid_argument);  // no 512th root mod 3329
  EXPECT_THROW(NttPlan(255, 3329, 0, 1), std::invalid_argument);
  EXPECT_THROW(NttPlan(256, 3329, 5, 4), std::invalid_argument);
  EXPECT_THROW(make_plan(Variant::classic, 256, 7681, 1, 0), std::invalid_argument);
  EXPECT_THROW(make_plan(Variant::t_ntt, 256, 7681, 1, 1), std::invalid_argument);
  EXPECT_THROW(make_plan(Variant::pt_ntt, 256, 7681, 1, 1), std::invalid_argument);
  NttPlan plan(256, 3329, 0, 1);
  std::vector<int16_t> short_poly(100);
  EXPECT_THROW(plan.forward(short_poly), std::invalid_argument);
}

TEST(Ntt, TruncatedLayoutHas128LinearBlocks) {
  NttPlan plan(256, 3329, 0, 1);
  EXPECT_EQ(plan.sub_n() / plan.block(), 128);
  EXPECT_EQ(plan.block(), 2);
}

// Splitting into even/odd halves first and cropping the last level give the
// same residues: the T-NTT block i holds (f_even(r_i), f_odd(r_i)).
TEST(Ntt, TruncatedOutputDeinterleavesIntoSplitTransforms) {
  for (int q : {3329, 7681}) {
    NttPlan t(256, q, 0, 1), pt(256, q, 1, 0);
    std::mt19937_64 g(static_cast<uint64_t>(q) + 1);
    for (int trial = 0; trial < 1000; ++trial) {
      auto f = random_poly(g, 256, q);
      auto ft = t.forward(f), fp = pt.forward(f);
      for (int i = 0; i < 128; ++i) {
        ASSERT_EQ(ft[static_cast<std::size_t>(2 * i)], fp[static_cast<std::size_t>(i)]);
        ASSERT_EQ(ft[static_cast<std::size_t>(2 * i + 1)], fp[static_cast<std::size_t>(128 + i)]);
      }
    }
  }
}

TEST(Ntt, DepthTwoProductsAgree) {
  NttPlan t(256, 7681, 0, 2), pt(256, 7681, 2, 0), h(256, 7681, 2, 2), h11(256, 7681, 1, 1);
  std::mt19937_64 g(21);
  for (int trial = 0; trial < 2000; ++trial) {
    auto f = random_poly(g, 256, 7681), k = random_poly(g, 256, 7681);
    auto want = t.multiply(f, k);
    ASSERT_EQ(pt.multiply(f, k), want);
    ASSERT_EQ(h.multiply(f, k), want);
    ASSERT_EQ(h11.multiply(f, k), want);
  }
}

Complexity measure(const NttPlan& plan) {
  std::vector<int16_t> f(static_cast<std::size_t>(plan.n()), 3), g(f.size(), 5);
  OpCounter c;
  plan.multiply(f, g, c);
  return {static_cast<double>(c.muls), static_cast<double>(c.adds)};
}

TEST(Complexity, CountersEqualFormulaOnTheGrid) {
  int checked = 0;
  for (int n : {256, 512})
    for (int q : {7681, 3329, 12289})
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
          NttPlan* plan = nullptr;
          std::optional<NttPlan> holder;
          try {
            holder.emplace(n, q, a, b);
            plan = &*holder;
          } catch (const std::invalid_argument&) {
            continue;
          }
          auto got = measure(*plan), want = complexity_formula(n, a, b);
          EXPECT_EQ(got.muls, want.muls) << n << " " << q << " " << a << " " << b;
          EXPECT_EQ(got.adds, want.adds) << n << " " << q << " " << a << " " << b;
          ++checked;
        }
  EXPECT_GE(checked, 30);
}

TEST(Complexity, NamedValuesAtN256) {
  auto h = complexity_formula(Variant::h_ntt, 256, 1, 1);
  EXPECT_EQ(h.muls, 3392);
  EXPECT_EQ(h.adds, 6208);
  auto pt = complexity_formula(Variant::pt_ntt, 256, 1, 0);
  EXPECT_EQ(pt.muls, 3456);
  EXPECT_EQ(pt.adds, 6016);
  auto c = complexity_formula(Variant::classic, 256, 0, 0);
  EXPECT_EQ(c.muls, 1.5 * 256 * 8 + 2 * 256);
  EXPECT_EQ(c.adds, 3 * 256 * 8);
  EXPECT_EQ(measure(NttPlan(256, 7681, 1, 1)).muls, 3392);
  EXPECT_EQ(measure(NttPlan(256, 7681, 1, 1)).adds, 6208);

  // Classic multiplication = 2 forward + n pointwise + inverse with n scalings.
  NttPlan classic(256, 7681, 0, 0);
  std::vector<int16_t> f(256, 1);
  OpCounter fwd;
  classic.forward(f, fwd);
  EXPECT_EQ(fwd.muls, 1024u);
  EXPECT_EQ(fwd.adds, 2048u);
  EXPECT_EQ(2 * 1024 + 256 + (1024 + 256), c.muls);
}

TEST(Complexity, ClosedFormsAgreeWhereTheyApply) {
  for (int n : {256, 512, 1024}) {
    for (int a = 0; a <= 3; ++a) {
      auto p = complexity_printed(Variant::pt_ntt, n, a, 0), f = complexity_formula(Variant::pt_ntt, n, a, 0);
      EXPECT_EQ(p.muls, f.muls) << n << " " << a;
      EXPECT_EQ(p.adds, f.adds) << n << " " << a;
    }
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        auto p = complexity_printed(Variant::h_ntt, n, a, b), f = complexity_formula(n, a, b);
        EXPECT_EQ(p.muls, f.muls) << n << " " << a << " " << b;
        EXPECT_EQ(p.adds, f.adds) << n << " " << a << " " << b;
      }
  }
  auto classic = complexity_printed(Variant::classic, 256, 0, 0);
  EXPECT_EQ(classic.muls, complexity_formula(256, 0, 0).muls);
}

TEST(Karatsuba, PairMatchesDirectEvaluation) {
  Modulus mq(3329);
  EXPECT_EQ(karatsuba_pair(2, 3, 5, 7, mq), 29);
  EXPECT_EQ(karatsuba_pair(1, 0, 1, 0, mq), 0);
  std::mt19937_64 g(31);
  std::uniform_int_distribution<int> d(0, 3328);
  for (int i = 0; i < 100000; ++i) {
    int a = d(g), b = d(g), c = d(g), e = d(g);
    ASSERT_EQ(karatsuba_pair(static_cast<int16_t>(a), static_cast<int16_t>(b), static_cast<int16_t>(c),
                             static_cast<int16_t>(e), mq),
              (int64_t{a} * e + int64_t{b} * c) % 3329);
  }
}

TEST(Footprint, UnifiedModulusTablesUnderOneFifth) {
  std::vector<NttPlan> okai, aigis;
  for (auto name : {"okai512", "okai768", "okai1024"}) {
    auto p = preset(name);
    okai.emplace_back(p.n, p.q, p.alpha, p.beta);
  }
  for (auto name : {"aigis512", "aigis768", "aigis1024"}) {
    auto p = preset(name);
    aigis.emplace_back(p.n, p.q, p.alpha, p.beta);
  }
  std::size_t a = table_footprint(okai), b = table_footprint(aigis);
  EXPECT_EQ(a, 512u);
  EXPECT_EQ(b, 3072u);
  EXPECT_LE(static_cast<double>(a) / static_cast<double>(b), 0.20);
}

}  // namespace
