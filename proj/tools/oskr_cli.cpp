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

// oskr command-line tool.
//
// Exit status: 0 on success, 1 on malformed input, 2 when an internal
// invariant fails (a self-check inside kat or ntt-report).

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oskr/nist_drbg.hpp"
#include "oskr/oskr.hpp"

namespace {

using json = nlohmann::json;
using namespace oskr;

struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, std::span<const uint8_t> b) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
}

std::unique_ptr<RandomSource> make_rng(const std::string& seed_hex) {
  if (seed_hex.empty()) return std::make_unique<OsRandom>();
  return std::make_unique<SeededRandom>(from_hex(seed_hex));
}

json params_json(const ParamSet& p) {
  auto s = encoded_sizes(p);
  return {{"name", p.name},         {"n", p.n},           {"q", p.q},
          {"m", p.m},               {"l", p.l},           {"eta_s", p.eta_s},
          {"eta_e", p.eta_e},       {"eta_e_keygen", p.eta_e_keygen},
          {"d_k", p.d_k},           {"d_u", p.d_u},       {"d_v", p.d_v},
          {"seed_bytes", p.seed_bytes}, {"key_bytes", p.key_bytes},
          {"alpha", p.alpha},       {"beta", p.beta},     {"approach", approach_name(p.approach)},
          {"pk", s.pk},             {"ct", s.ct},         {"sk", s.sk},
          {"bandwidth", s.pk + s.ct}};
}

std::string params_line(const ParamSet& p) {
  auto s = encoded_sizes(p);
  std::ostringstream o;
  o << p.name << " n=" << p.n << " q=" << p.q << " m=" << p.m << " l=" << p.l << " eta_s=" << p.eta_s
    << " eta_e=" << p.eta_e << " d_k=" << p.d_k << " d_u=" << p.d_u << " d_v=" << p.d_v << " alpha=" << p.alpha
    << " beta=" << p.beta << " key=" << p.key_bytes << " pk=" << s.pk << " ct=" << s.ct << " sk=" << s.sk
    << " bandwidth=" << s.pk + s.ct;
  return o.str();
}

int cmd_params(const std::string& name, bool as_json) {
  std::vector<ParamSet> sets;
  if (name.empty()) {
    for (auto n : preset_names()) sets.push_back(preset(n));
    for (auto n : baseline_names()) sets.push_back(preset(n));
  } else {
    sets.push_back(preset(name));
  }
  if (as_json) {
    json arr = json::array();
    for (const auto& p : sets) arr.push_back(params_json(p));
    std::cout << (sets.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  } else {
    for (const auto& p : sets) std::cout << params_line(p) << "\n";
  }
  return 0;
}

int cmd_keygen(const ParamSet& p, const std::string& out, RandomSource& rng) {
  if (out.empty()) throw std::invalid_argument("keygen: --out PREFIX is required");
  Kem kem(p);
  auto kp = kem.keygen(rng);
  write_file(out + ".pk", kp.pk);
  write_file(out + ".sk", kp.sk);
  std::cout << "wrote " << out << ".pk (" << kp.pk.size() << " bytes) " << out << ".sk (" << kp.sk.size()
            << " bytes)\n";
  return 0;
}

int cmd_encaps(const ParamSet& p, const std::string& in, const std::string& out, RandomSource& rng) {
  if (in.empty() || out.empty()) throw std::invalid_argument("encaps: --in PK and --out PREFIX are required");
  Kem kem(p);
  auto e = kem.encaps(read_file(in), rng);
  write_file(out + ".ct", e.ct);
  write_file(out + ".ss", e.key);
  std::cout << "wrote " << out << ".ct (" << e.ct.size() << " bytes) " << out << ".ss (" << e.key.size()
            << " bytes)\n";
  return 0;
}

int cmd_decaps(const ParamSet& p, const std::string& in, const std::string& ct, const std::string& out,
               DecryptVariant v) {
  if (in.empty() || ct.empty() || out.empty())
    throw std::invalid_argument("decaps: --in SK, --ct CT and --out FILE are required");
  Kem kem(p);
  Bytes key = kem.decaps(read_file(in), read_file(ct), v);
  write_file(out, key);
  std::cout << "wrote " << out << " (" << key.size() << " bytes)\n";
  return 0;
}

// NIST request/response layout: per-vector seeds come from a DRBG seeded
// with 48 bytes of entropy (0..47 unless --seed is given), and each vector
// reseeds with its own seed.
int cmd_kat(const ParamSet& p, int count, const std::string& seed_hex, const std::string& out) {
  if (count < 0) throw std::invalid_argument("kat: --count must not be negative");
  Bytes entropy(48);
  for (int i = 0; i < 48; ++i) entropy[static_cast<std::size_t>(i)] = static_cast<uint8_t>(i);
  if (!seed_hex.empty()) entropy = from_hex(seed_hex);
  NistDrbg master(entropy);
  Kem kem(p);
  std::ostringstream o;
  o << "# " << p.name << "\n\n";
  for (int i = 0; i < count; ++i) {
    Bytes seed = master.bytes(48);
    NistDrbg drbg(seed);
    auto kp = kem.keygen(drbg);
    auto e = kem.encaps(kp.pk, drbg);
    if (kem.decaps(kp.sk, e.ct) != e.key) throw InvariantError("kat: decapsulation mismatch at count " + std::to_string(i));
    o << "count = " << i << "\nseed = " << to_hex(seed) << "\npk = " << to_hex(kp.pk) << "\nsk = " << to_hex(kp.sk)
      << "\nct = " << to_hex(e.ct) << "\nss = " << to_hex(e.key) << "\n\n";
  }
  if (out.empty()) {
    std::cout << o.str();
  } else {
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot write " + out);
    f << o.str();
  }
  return 0;
}

int cmd_delta(const ParamSet& p, DecryptVariant v, FailureModel model, bool as_json) {
  auto r = delta_report(p, v, model);
  double l2 = static_cast<double>(r.log2_delta);
  if (as_json) {
    json j = {{"preset", p.name},
              {"variant", v == DecryptVariant::akcn ? "akcn" : "original"},
              {"model", model == FailureModel::published ? "published" : "exact"},
              {"log2_delta", std::isfinite(l2) ? json(l2) : json("-inf")},
              {"support_b1", r.support_b1},
              {"support_b2", r.support_b2},
              {"support_err", r.support_c}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << std::fixed << std::setprecision(1) << l2 << "\n"
              << "support b1=" << r.support_b1 << " b2=" << r.support_b2 << " err=" << r.support_c << "\n";
  }
  return 0;
}

// Measured counters against the exact formula, one row per layout. With a
// variant given only that layout is reported; a mismatch exits with 2.
int cmd_ntt_report(int n, int q, const std::string& variant, int alpha, int beta, bool as_json) {
  std::vector<std::tuple<Variant, int, int>> layouts;
  if (variant.empty()) {
    layouts = {{Variant::classic, 0, 0}, {Variant::t_ntt, 0, 1}, {Variant::t_ntt, 0, 2},
               {Variant::pt_ntt, 1, 0},  {Variant::pt_ntt, 2, 0}, {Variant::h_ntt, 1, 1},
               {Variant::h_ntt, 1, 2},   {Variant::h_ntt, 2, 1},  {Variant::h_ntt, 2, 2}};
  } else {
    Variant v = parse_variant(variant);
    int a = v == Variant::pt_ntt || v == Variant::h_ntt ? 1 : 0, b = v == Variant::t_ntt || v == Variant::h_ntt ? 1 : 0;
    if (alpha >= 0) a = alpha;
    if (beta >= 0) b = beta;
    if ((v == Variant::classic && (a || b)) || (v == Variant::t_ntt && a) || (v == Variant::pt_ntt && b))
      throw std::invalid_argument("ntt-report: depths do not fit variant " + variant);
    layouts.emplace_back(v, a, b);
  }
  json rows = json::array();
  int failures = 0;
  for (auto [v, a, b] : layouts) {
    std::optional<NttPlan> plan;
    try {
      plan.emplace(make_plan(v, n, q, a, b));
    } catch (const std::invalid_argument&) {
      if (!variant.empty()) throw;
      continue;  // no root of the required order for this depth
    }
    std::vector<int16_t> f(static_cast<std::size_t>(n), 1), g(f.size(), 2);
    OpCounter c;
    plan->multiply(f, g, c);
    auto want = complexity_formula(v, n, a, b);
    auto printed = complexity_printed(v, n, a, b);
    bool ok = static_cast<double>(c.muls) == want.muls && static_cast<double>(c.adds) == want.adds;
    failures += !ok;
    rows.push_back({{"variant", variant_name(v)}, {"alpha", a}, {"beta", b}, {"muls", c.muls}, {"adds", c.adds},
                    {"formula_muls", want.muls}, {"formula_adds", want.adds}, {"printed_muls", printed.muls},
                    {"printed_adds", printed.adds}, {"table_bytes", plan->table_bytes()},
                    {"status", ok ? "pass" : "fail"}});
  }
  if (as_json) {
    std::cout << json{{"n", n}, {"q", q}, {"rows", rows}}.dump(2) << "\n";
  } else {
    std::cout << "n=" << n << " q=" << q << "\n";
    for (const auto& r : rows)
      std::cout << std::left << std::setw(8) << r["variant"].get<std::string>() << " alpha=" << r["alpha"]
                << " beta=" << r["beta"] << " muls=" << r["muls"] << "/" << r["formula_muls"].get<double>()
                << " adds=" << r["adds"] << "/" << r["formula_adds"].get<double>() << " tables=" << r["table_bytes"]
                << "B " << r["status"].get<std::string>() << "\n";
  }
  return failures ? 2 : 0;
}

int cmd_bench(const ParamSet& p, int iterations, RandomSource& rng, bool as_json) {
  if (iterations < 1) throw std::invalid_argument("bench: --count must be positive");
  std::vector<BenchResult> res;
  res.push_back(bench_multiply(NttPlan(256, 7681, 0, 0), iterations, rng));
  res.push_back(bench_multiply(NttPlan(256, 7681, 1, 1), iterations, rng));
  for (auto& r : bench_kem(p, iterations, rng)) res.push_back(r);
  if (as_json) {
    json arr = json::array();
    for (const auto& r : res) arr.push_back({{"op", r.op}, {"median_ns", r.median_ns}, {"iterations", r.iterations}});
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : res)
      std::cout << std::left << std::setw(40) << r.op << std::right << std::setw(12) << std::fixed
                << std::setprecision(0) << r.median_ns << " ns\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OSKR / OKAI key encapsulation toolkit"};
  app.require_subcommand(1);

  std::string preset_name = "oskr512", variant = "akcn", model = "published", in, out, ct, seed;
  bool as_json = false;
  int count = 25, ntt_n = 256, ntt_q = 7681, ntt_alpha = -1, ntt_beta = -1;
  std::string ntt_variant;

  auto* params = app.add_subcommand("params", "print parameter sets and encoded sizes");
  std::string params_name;
  params->add_option("name", params_name, "preset name (all when omitted)");
  params->add_option("--preset", params_name, "preset name");
  params->add_flag("--json", as_json);

  auto* keygen = app.add_subcommand("keygen", "write PREFIX.pk and PREFIX.sk");
  auto* encaps = app.add_subcommand("encaps", "encapsulate to a public key; writes PREFIX.ct and PREFIX.ss");
  auto* decaps = app.add_subcommand("decaps", "recover the shared key from a secret key and ciphertext");
  auto* kat = app.add_subcommand("kat", "emit NIST-style known-answer vectors");
  auto* delta_cmd = app.add_subcommand("delta", "log2 decryption failure probability");
  auto* report = app.add_subcommand("ntt-report", "operation counts of the NTT variants");
  auto* bench = app.add_subcommand("bench", "median timings in nanoseconds");

  for (auto* c : {keygen, encaps, decaps, kat, delta_cmd, bench}) c->add_option("--preset", preset_name, "preset name");
  for (auto* c : {keygen, encaps, kat, bench}) c->add_option("--seed", seed, "hex seed for deterministic randomness");
  for (auto* c : {decaps, delta_cmd}) c->add_option("--variant", variant, "akcn|original");
  encaps->add_option("--in", in, "public key file");
  decaps->add_option("--in", in, "secret key file");
  decaps->add_option("--ct", ct, "ciphertext file");
  for (auto* c : {keygen, encaps, decaps, kat}) c->add_option("--out", out, "output path or prefix");
  kat->add_option("--count", count, "number of vectors");
  delta_cmd->add_option("--model", model, "published|exact");
  report->add_option("--n", ntt_n, "ring dimension");
  report->add_option("--q", ntt_q, "modulus");
  report->add_option("--variant", ntt_variant, "classic|t|pt|h (all layouts when omitted)");
  report->add_option("--alpha", ntt_alpha, "split depth");
  report->add_option("--beta", ntt_beta, "cropped levels");
  bench->add_option("--count", count, "iterations per operation")->default_val(1000);
  for (auto* c : {delta_cmd, report, bench}) c->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*params) return cmd_params(params_name, as_json);
    if (*report) return cmd_ntt_report(ntt_n, ntt_q, ntt_variant, ntt_alpha, ntt_beta, as_json);
    ParamSet p = preset(preset_name);
    if (*keygen) return cmd_keygen(p, out, *make_rng(seed));
    if (*encaps) return cmd_encaps(p, in, out, *make_rng(seed));
    if (*decaps) return cmd_decaps(p, in, ct, out, parse_decrypt_variant(variant));
    if (*kat) return cmd_kat(p, count, seed, out);
    if (*delta_cmd) return cmd_delta(p, parse_decrypt_variant(variant), parse_failure_model(model), as_json);
    if (*bench) return cmd_bench(p, count, *make_rng(seed), as_json);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
