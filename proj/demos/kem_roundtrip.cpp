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

// Key exchange between two parties under every preset.

#include <cstdio>

#include "oskr/oskr.hpp"

int main() {
  oskr::OsRandom rng;
  for (auto name : oskr::preset_names()) {
    oskr::Kem kem(oskr::preset(name));
    auto kp = kem.keygen(rng);
    auto sent = kem.encaps(kp.pk, rng);
    auto got = kem.decaps(kp.sk, sent.ct);
    std::printf("%-10s pk=%5zu ct=%5zu key=%s %s\n", std::string(name).c_str(), kp.pk.size(), sent.ct.size(),
                oskr::to_hex(got).substr(0, 16).c_str(), got == sent.key ? "agree" : "DIFFER");
  }
}
