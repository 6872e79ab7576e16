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

// log2 failure probability of each parameter set under both decoders.

#include <cstdio>
#include <string>

#include "oskr/oskr.hpp"

int main() {
  std::printf("%-10s %9s %9s %7s %7s\n", "set", "akcn", "original", "pk", "ct");
  auto row = [](std::string_view name) {
    auto p = oskr::preset(name);
    auto s = oskr::encoded_sizes(p);
    std::printf("%-10s %9.1f %9.1f %7zu %7zu\n", std::string(name).c_str(), oskr::delta(p, oskr::DecryptVariant::akcn),
                oskr::delta(p, oskr::DecryptVariant::original), s.pk, s.ct);
  };
  for (auto name : oskr::preset_names()) row(name);
  for (auto name : oskr::baseline_names()) row(name);
}
