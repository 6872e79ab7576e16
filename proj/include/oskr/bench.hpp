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

// Wall-clock micro-benchmarks: median over many timed calls.

#ifndef OSKR_BENCH_HPP_
#define OSKR_BENCH_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "oskr/kem.hpp"
#include "oskr/ntt.hpp"
#include "oskr/rng.hpp"

namespace oskr {

struct BenchResult {
  std::string op;
  double median_ns;
  int iterations;
};

template <class F>
double median_ns(F&& f, int iterations) {
  std::vector<double> t(static_cast<std::size_t>(iterations));
  for (auto& x : t) {
    auto a = std::chrono::steady_clock::now();
    f();
    auto b = std::chrono::steady_clock::now();
    x = std::chrono::duration<double, std::nano>(b - a).count();
  }
  std::nth_element(t.begin(), t.begin() + iterations / 2, t.end());
  return t[static_cast<std::size_t>(iterations / 2)];
}

// Full ring multiplication (forward, product, inverse) under one plan.
inline BenchResult bench_multiply(const NttPlan& plan, int iterations, RandomSource& rng) {
  std::vector<int16_t> f(static_cast<std::size_t>(plan.n())), g(f.size());
  Bytes raw = rng.bytes(4 * f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    f[i] = static_cast<int16_t>((raw[4 * i] | raw[4 * i + 1] << 8) % plan.q());
    g[i] = static_cast<int16_t>((raw[4 * i + 2] | raw[4 * i + 3] << 8) % plan.q());
  }
  volatile int16_t sink = 0;
  double ns = median_ns([&] { sink = sink + plan.multiply(f, g)[0]; }, iterations);
  std::string name = "multiply n=" + std::to_string(plan.n()) + " q=" + std::to_string(plan.q()) +
                     " alpha=" + std::to_string(plan.alpha()) + " beta=" + std::to_string(plan.beta());
  return {name, ns, iterations};
}

inline std::vector<BenchResult> bench_kem(const ParamSet& p, int iterations, RandomSource& rng) {
  Kem kem(p);
  KemKeyPair kp = kem.keygen(rng);
  Encapsulation e = kem.encaps(kp.pk, rng);
  std::vector<BenchResult> out;
  std::string tag = std::string(p.name) + " ";
  out.push_back({tag + "keygen", median_ns([&] { kp = kem.keygen(rng); }, iterations), iterations});
  out.push_back({tag + "encaps", median_ns([&] { e = kem.encaps(kp.pk, rng); }, iterations), iterations});
  for (auto v : {DecryptVariant::akcn, DecryptVariant::original}) {
    std::string name = tag + "decaps " + (v == DecryptVariant::akcn ? "akcn" : "original");
    out.push_back({name, median_ns([&] { (void)kem.decaps(kp.sk, e.ct, v); }, iterations), iterations});
  }
  return out;
}

}  // namespace oskr

#endif  // OSKR_BENCH_HPP_
