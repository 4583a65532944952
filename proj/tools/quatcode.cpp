// Copyright 2026 The quatcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// quatcode: build the MDS and quaternary codes, verify their parameters,
// designs and symmetries, and run the acceptance suite.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
// 3 resource limit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "quatcode/acceptance.hpp"
#include "quatcode/codes.hpp"
#include "quatcode/cyclotomic.hpp"
#include "quatcode/designs.hpp"
#include "quatcode/error.hpp"
#include "quatcode/projective.hpp"
#include "quatcode/subfield.hpp"
#include "quatcode/weights.hpp"

namespace {

using namespace quatcode;
using json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Config {
  bool long_mode = false;
  bool emit_blocks = false;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string format = "json";
  std::string output;

  EnumerationOptions enumeration() const {
    EnumerationOptions e;
    e.threads = threads;
    if (long_mode) e.budget = std::max<std::uint64_t>(e.budget, std::uint64_t{1} << 32);
    return e;
  }
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw InvalidArgument("cannot write " + cfg.output);
  out << text;
}

// Integers become decimal strings so that consumers never round large counts.
void stringify_integers(json& j) {
  if (j.is_number_integer()) {
    j = j.dump();
  } else if (j.is_structured()) {
    for (auto& child : j) stringify_integers(child);
  }
}

std::string dump(json j) {
  stringify_integers(j);
  return j.dump(2) + "\n";
}

json distribution_or_skip(const LinearCode& code, const EnumerationOptions& e,
                          std::optional<WeightDistribution>& out) {
  try {
    out = weight_distribution(code, e);
    return out->to_json();
  } catch (const ResourceLimit& ex) {
    return json{{"status", "skipped (budget)"}, {"reason", ex.what()}};
  }
}

int cmd_build(const Config& cfg, unsigned m, unsigned u) {
  const CyclicCode code = mds_family_code(m, u);
  const std::size_t n = code.length(), k = code.dimension();
  const auto dist = min_distance(code, cfg.enumeration());
  const std::size_t singleton = singleton_bound(n, k);
  const bool mds = dist.exact() ? dist.lower == singleton : bch_bound(code) == singleton;
  const bool reversible = is_reversible(code);
  const bool lcd = is_lcd(code.linear());

  json j;
  j["code"] = to_json(code);
  j["parameters"] = {{"n", n}, {"k", k}, {"d_lower", dist.lower}, {"d_upper", dist.upper}, {"method", dist.method}};
  j["bch_bound"] = bch_bound(code);
  j["singleton_bound"] = singleton;
  j["mds"] = mds;
  j["reversible"] = reversible;
  j["lcd"] = lcd;
  const bool ok = mds && reversible && lcd;
  j["passed"] = ok;
  emit(cfg, dump(j));
  return ok ? kPass : kFail;
}

int cmd_quaternary(const Config& cfg, unsigned h) {
  const auto tower = quaternary_tower(h);
  const CyclicCode parent = quaternary_parent(h);
  const CyclicCode code = quaternary_code(h);
  const LinearCode trace = quaternary_trace_code(h);
  const auto e = cfg.enumeration();

  std::optional<WeightDistribution> primal;
  json j;
  j["h"] = h;
  j["q"] = std::to_string(tower->q());
  j["subfield_subcode"] = to_json(code);
  j["subfield_subcode"]["derivation"] = {{"kind", "subfield_subcode"}, {"route", "defining_set"},
                                         {"parent", to_json(dual(parent))}};
  j["distribution"] = distribution_or_skip(code.linear(), e, primal);
  const Report delsarte = verify_delsarte(parent, *tower);
  j["delsarte"] = delsarte.to_json();

  Report checks;
  checks.title = "quaternary h=" + std::to_string(h);
  checks.add("dimension equals 2^h", code.dimension() == (std::size_t{1} << h));
  checks.add("trace code dimension equals n - 2^h", trace.dimension() == code.length() - code.dimension());
  checks.add("defining set equals T", code.defining_set() == build_T(h));
  const std::size_t d_design = 2 * (code.length() + 1) / 3;
  checks.add("BCH bound equals 2(4^h + 2)/3", bch_bound(code) == d_design, std::to_string(bch_bound(code)));
  if (primal) {
    const auto d = primal->min_distance().value_or(0);
    checks.add("minimum distance equals BCH bound", d == bch_bound(code), std::to_string(d));
    const auto dual_dist = macwilliams(*primal);
    j["dual_distribution"] = dual_dist.to_json();
    checks.add("MacWilliams dual has dimension n - 2^h", dual_dist.dimension == trace.dimension());
    if (h == 1) {
      j["note"] = "enumerated " + primal->enumerator() + "; the stated 1 + 15z^5 exceeds the Singleton bound";
    }
  } else {
    j["dual_distribution"] = json{{"status", "skipped (budget)"}};
  }
  checks.merge(delsarte, "delsarte: ");
  j["checks"] = checks.to_json();
  j["passed"] = checks.passed();

  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "code,weight,count\n";
    if (primal) {
      for (std::size_t i : primal->support()) os << "subcode," << i << ',' << primal->counts[i] << '\n';
      const auto d = macwilliams(*primal);
      for (std::size_t i : d.support()) os << "dual," << i << ',' << d.counts[i] << '\n';
    }
    emit(cfg, os.str());
  } else {
    emit(cfg, dump(j));
  }
  return checks.passed() ? kPass : kFail;
}

int cmd_designs(const Config& cfg, unsigned h, unsigned t, bool dual_side) {
  quaternary_tower(h);
  if (h == 4) throw ResourceLimit("support designs at h=4 would hold about 1.4e9 blocks in memory");
  const LinearCode primal = quaternary_code(h).linear();
  const LinearCode code = dual_side ? dual(primal) : primal;
  const auto e = cfg.enumeration();
  const auto designs = support_designs(code, e, dual_side ? "trace code" : "subfield subcode");
  const std::size_t q = code.length() - 1;

  json j;
  j["h"] = h;
  j["t"] = t;
  j["code"] = dual_side ? "trace code" : "subfield subcode";
  json list = json::array();
  std::ostringstream csv;
  csv << "k,b,lambda,codewords\n";
  bool ok = true;
  for (const auto& [k, d] : designs) {
    if (k < t || k >= q) continue;
    const auto verdict = verify_design(d, t, cfg.threads);
    ok = ok && verdict.is_design() && design_identity_holds(d, verdict);
    list.push_back(to_json(d, verdict, cfg.emit_blocks));
    csv << k << ',' << d.b() << ',' << (verdict.lambda ? std::to_string(*verdict.lambda) : "") << ','
        << d.codewords << '\n';
  }
  j["designs"] = std::move(list);
  try {
    const auto dist = weight_distribution(code, e);
    j["assmus_mattson"] = assmus_mattson(dist, macwilliams(dist), t).to_json();
  } catch (const ResourceLimit&) {
    j["assmus_mattson"] = json{{"status", "skipped (budget)"}};
  }
  j["passed"] = ok;
  emit(cfg, cfg.format == "csv" ? csv.str() : dump(j));
  return ok ? kPass : kFail;
}

int cmd_lemmas(const Config& cfg, unsigned hmax) {
  if (hmax < 1 || hmax > 10) throw InvalidArgument("--hmax must lie in 1..10");
  Report r;
  r.title = "lemmas";
  for (unsigned h = 1; h <= hmax; ++h) {
    r.merge(verify_partition(h), "h=" + std::to_string(h) + " ");
    r.merge(verify_exponent_lemmas(h), "h=" + std::to_string(h) + " ");
  }
  emit(cfg, dump(r.to_json()));
  return r.passed() ? kPass : kFail;
}

int cmd_group(const Config& cfg, unsigned h, std::size_t trials) {
  if (h < 1 || h > 3) throw InvalidArgument("group checks support 1 <= h <= 3");
  const UnitCircle U(quaternary_tower(h));
  const auto sample = stabilizer_sample(U, trials, cfg.seed);
  Report r;
  r.title = "group h=" + std::to_string(h);
  r.merge(verify_permutes_circle(sample, U));
  const auto designs = support_designs(quaternary_code(h).linear(), cfg.enumeration());
  for (const auto& [k, d] : designs) r.merge(verify_block_invariance(d, sample, U), "k=" + std::to_string(k) + " ");
  r.merge(verify_three_transitivity(U, trials, cfg.seed + 1, h <= 2));
  r.merge(verify_spectrum_lemma(h, trials, cfg.seed + 2));
  json j = r.to_json();
  json elements = json::array();
  for (const auto& e : sample) elements.push_back(e.to_json());
  j["elements"] = std::move(elements);
  j["seed"] = std::to_string(cfg.seed);
  emit(cfg, dump(j));
  return r.passed() ? kPass : kFail;
}

int cmd_acceptance(const Config& cfg) {
  AcceptanceOptions o;
  o.long_mode = cfg.long_mode;
  o.threads = cfg.threads;
  o.seed = cfg.seed;
  const auto results = run_acceptance(o, [](const CriterionResult& r) { std::cout << r.line() << std::endl; });
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (!cfg.output.empty()) emit(cfg, dump(to_json(results)));
  std::cout << (ok ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quatcode: quaternary subfield codes of MDS codes and their 3-designs"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h below
  Config cfg;
  app.add_flag("--long", cfg.long_mode, "allow enumerations up to 2^32 codewords");
  app.add_flag("--emit-blocks", cfg.emit_blocks, "include design blocks in JSON output");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--output", cfg.output, "write the report to a file");

  unsigned m = 0, u = 0, h = 0, t = 3, hmax = 8;
  std::size_t trials = 200;
  bool dual_side = false;
  auto* build = app.add_subcommand("build", "construct C_u over GF(2^m) and verify MDS and reversibility");
  build->add_option("-m,--m", m, "field degree")->required();
  build->add_option("-u,--u", u, "1 <= u <= 2^(m-1)")->required();
  auto* quaternary = app.add_subcommand("quaternary", "quaternary subfield subcode and trace code for q = 4^h");
  quaternary->add_option("--h", h, "1 <= h <= 4")->required();
  auto* designs = app.add_subcommand("designs", "support designs of the quaternary codes");
  designs->add_option("--h", h, "1 <= h <= 4")->required();
  designs->add_option("-t,--t", t, "design strength");
  designs->add_flag("--dual", dual_side, "use the trace code instead of the subfield subcode");
  auto* lemmas = app.add_subcommand("lemmas", "defining-set and exponent lemmas");
  lemmas->add_option("--hmax", hmax, "largest h");
  auto* group = app.add_subcommand("group", "stabilizer of U_{q+1} and the spectrum lemma");
  group->add_option("--h", h, "1 <= h <= 3")->required();
  group->add_option("--trials", trials, "samples per kind");
  auto* acceptance = app.add_subcommand("acceptance", "run every acceptance criterion");
  for (auto* sub : {build, quaternary, designs, lemmas, group, acceptance}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*build) return cmd_build(cfg, m, u);
    if (*quaternary) return cmd_quaternary(cfg, h);
    if (*designs) return cmd_designs(cfg, h, t, dual_side);
    if (*lemmas) return cmd_lemmas(cfg, hmax);
    if (*group) return cmd_group(cfg, h, trials);
    if (*acceptance) return cmd_acceptance(cfg);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
