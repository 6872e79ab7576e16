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

#include <cstdio>
#include <random>
#include <vector>

#include "oskr/oskr.hpp"

int main() {
  const int n = 256, q = 7681;
  std::mt19937_64 g(1);
  std::uniform_int_distribution<int> coeff(0, q - 1);
  std::vector<int16_t> f(n), h(n);
  for (int i = 0; i < n; ++i) {
    f[static_cast<std::size_t>(i)] = static_cast<int16_t>(coeff(g));
    h[static_cast<std::size_t>(i)] = static_cast<int16_t>(coeff(g));
  }
  auto want = oskr::schoolbook(f, h, q);
  std::printf("alpha beta   muls   adds  tables  product\n");
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      oskr::NttPlan plan(n, q, a, b);
      oskr::OpCounter c;
      bool ok = plan.multiply(f, h, c) == want;
      std::printf("%5d %4d %6llu %6llu %6zuB  %s\n", a, b, static_cast<unsigned long long>(c.muls),
                  static_cast<unsigned long long>(c.adds), plan.table_bytes(), ok ? "ok" : "WRONG");
    }
}
