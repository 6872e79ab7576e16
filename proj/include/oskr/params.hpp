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

#ifndef OSKR_PARAMS_HPP_
#define OSKR_PARAMS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oskr {

// How a 512-bit key is obtained from the underlying scheme. Everything that
// is not one of the 512-bit constructions is `single`.
enum class Approach { single, twice, wide_message, double_dim };

struct ParamSet {
  std::string_view name;
  int n;
  int q;
  int m;
  int l;
  int eta_s;
  int eta_e;
  // Noise bound of the key-generation error e. Kyber-512 draws e with the
  // secret width (3) while u, v errors use 2, so it differs from eta_e there.
  int eta_e_keygen;
  int d_k;
  int d_u;
  int d_v;
  int seed_bytes;
  int key_bytes;
  int alpha;
  int beta;
  Approach approach = Approach::single;

  constexpr int log2q() const {
    int b = 0;
    while ((1 << b) < q) ++b;
    return b;
  }
  constexpr int d_m() const {
    int b = 0;
    while ((1 << b) < m) ++b;
    return b;
  }
  constexpr int g() const { return 1 << d_v; }
  // Bytes of one message / one encapsulated secret for a single shot.
  constexpr int msg_bytes() const { return n * d_m() / 8; }
  constexpr bool pk_compressed() const { return d_k < log2q(); }
};

namespace detail {

// clang-format off
inline constexpr std::array<ParamSet, 9> kPresets = {{
  //  name         n    q     m  l  es ee ek dk  du  dv seed key a  b
  {"oskr512",    256, 3329, 2, 2, 3, 2, 3, 12, 10, 4, 32, 32, 0, 1},
  {"oskr768",    256, 3329, 2, 3, 2, 2, 2, 12, 10, 4, 32, 32, 0, 1},
  {"oskr1024",   512, 3329, 2, 2, 2, 2, 2, 12, 11, 5, 64, 64, 1, 1},
  {"okai512",    256, 7681, 2, 2, 1, 4, 4,  9,  8, 4, 32, 32, 0, 1},
  {"okai768",    256, 7681, 2, 3, 1, 4, 4,  9,  9, 4, 32, 32, 0, 1},
  {"okai1024",   512, 7681, 2, 2, 1, 4, 4, 10, 10, 3, 64, 64, 1, 1},
  {"approach1",  256, 3329, 2, 4, 2, 2, 2, 12, 11, 5, 32, 64, 0, 1, Approach::twice},
  {"approach2",  256, 7681, 4, 4, 2, 2, 2, 13, 11, 7, 32, 64, 0, 1, Approach::wide_message},
  {"approach3",  512, 3329, 2, 2, 2, 2, 2, 12, 11, 5, 64, 64, 1, 1, Approach::double_dim},
}};

// Unmodified schemes the presets are derived from. Used for failure-rate and
// root-table comparisons only; never instantiated as a KEM.
inline constexpr std::array<ParamSet, 6> kBaselines = {{
  {"kyber512",   256, 3329,  2, 2, 3,  2,  3, 12, 10, 4, 32, 32, 0, 1},
  {"kyber768",   256, 3329,  2, 3, 2,  2,  2, 12, 10, 4, 32, 32, 0, 1},
  {"kyber1024",  256, 3329,  2, 4, 2,  2,  2, 12, 11, 5, 32, 32, 0, 1},
  {"aigis512",   256, 7681,  2, 2, 2, 12, 12, 10,  9, 3, 32, 32, 0, 0},
  {"aigis768",   256, 7681,  2, 3, 1,  4,  4,  9,  9, 4, 32, 32, 0, 0},
  {"aigis1024",  512, 12289, 2, 2, 2,  8,  8, 11, 10, 4, 64, 64, 0, 0},
}};
// clang-format on

constexpr bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

constexpr bool is_pow2(int x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace detail

inline std::vector<std::string_view> preset_names() {
  std::vector<std::string_view> out;
  for (const auto& p : detail::kPresets) out.push_back(p.name);
  return out;
}

inline std::vector<std::string_view> baseline_names() {
  std::vector<std::string_view> out;
  for (const auto& p : detail::kBaselines) out.push_back(p.name);
  return out;
}

// Throws std::invalid_argument when an invariant of the set is broken.
inline void validate(const ParamSet& p) {
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string(p.name) + ": " + what);
  };
  if (!detail::is_prime(p.q)) fail("q is not prime");
  if (!detail::is_pow2(p.n)) fail("n is not a power of two");
  if (!detail::is_pow2(p.m) || p.m < 2) fail("m is not a power of two");
  if (p.g() % p.m != 0) fail("m does not divide 2^d_v");
  if (p.d_v >= p.log2q()) fail("d_v must be below ceil(log2 q)");
  if (p.d_u > p.log2q() || p.d_k > p.log2q()) fail("compression wider than q");
  if (p.alpha < 0 || p.beta < 0) fail("negative NTT depth");
  int e = p.alpha + p.beta - 1;
  long long need = e >= 0 ? (p.n >> e) : 2LL * p.n;
  if ((p.q - 1) % need != 0) fail("NTT roots do not exist for (n, q, alpha, beta)");
  int shots = p.approach == Approach::twice ? 2 : 1;
  if (p.key_bytes * 8 != p.n * p.d_m() * shots) fail("key length does not match n*log2(m)");
}

// Looks up a preset by name. Baseline schemes are accepted as well.
inline ParamSet preset(std::string_view name) {
  for (const auto& p : detail::kPresets)
    if (p.name == name) return p;
  for (const auto& p : detail::kBaselines)
    if (p.name == name) return p;
  std::string known;
  for (const auto& p : detail::kPresets) known += std::string(known.empty() ? "" : ", ") + std::string(p.name);
  throw std::invalid_argument("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

inline bool is_preset(std::string_view name) {
  for (const auto& p : detail::kPresets)
    if (p.name == name) return true;
  return false;
}

struct EncodedSizes {
  std::size_t pk;
  std::size_t ct;
  std::size_t sk;
};

// Byte lengths of the KEM encodings. For `twice` the ciphertext holds two
// single-shot ciphertexts under the same key pair.
inline EncodedSizes encoded_sizes(const ParamSet& p) {
  long long nl = 1LL * p.n * p.l;
  long long bits_pk = nl * p.d_k;
  long long bits_ct = nl * p.d_u + 1LL * p.n * p.d_v;
  long long bits_s = nl * p.log2q();
  if (bits_pk % 8 || bits_ct % 8 || bits_s % 8)
    throw std::invalid_argument(std::string(p.name) + ": encoding is not byte aligned");
  EncodedSizes s{};
  s.pk = static_cast<std::size_t>(bits_pk / 8 + p.seed_bytes);
  s.ct = static_cast<std::size_t>(bits_ct / 8);
  if (p.approach == Approach::twice) s.ct *= 2;
  // packed s || pk || H(pk) || z
  s.sk = static_cast<std::size_t>(bits_s / 8) + s.pk + 2 * static_cast<std::size_t>(p.seed_bytes);
  return s;
}

// |pk| + |ct| of the preset as actually encoded.
inline std::size_t bandwidth(const ParamSet& p) {
  auto s = encoded_sizes(p);
  return s.pk + s.ct;
}

// Closed-form bandwidth (bytes) of a 512-bit key construction built from the
// 256-bit base set `base`. `twice` runs the base scheme two times under one
// key; `wide_message` moves to m=4 and widens every compressed field by one
// bit; `double_dim` doubles n and halves l, so only the seed and v grow.
// The seed is counted as n bits, as in the single-shot formula.
inline std::size_t bandwidth(const ParamSet& base, Approach a) {
  long long n = base.n, nl = 1LL * base.n * base.l;
  long long bits = 0;
  switch (a) {
    case Approach::single:
      bits = n + nl * base.d_k + nl * base.d_u + n * base.d_v;
      break;
    case Approach::twice:
      bits = n + nl * base.d_k + 2 * (nl * base.d_u + n * base.d_v);
      break;
    case Approach::wide_message:
      bits = n + nl * (base.d_k + 1) + nl * (base.d_u + 1) + n * (base.d_v + 1);
      break;
    case Approach::double_dim:
      bits = 2 * n + nl * base.d_k + nl * base.d_u + 2 * n * base.d_v;
      break;
  }
  return static_cast<std::size_t>(bits / 8);
}

inline const char* approach_name(Approach a) {
  switch (a) {
    case Approach::single: return "single";
    case Approach::twice: return "twice";
    case Approach::wide_message: return "wide_message";
    case Approach::double_dim: return "double_dim";
  }
  return "?";
}

}  // namespace oskr

#endif  // OSKR_PARAMS_HPP_
