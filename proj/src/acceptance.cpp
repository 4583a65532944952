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

#include "quatcode/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "quatcode/codes.hpp"
#include "quatcode/cyclotomic.hpp"
#include "quatcode/designs.hpp"
#include "quatcode/projective.hpp"
#include "quatcode/subfield.hpp"
#include "quatcode/weights.hpp"

namespace quatcode {

namespace {

using Expected = std::map<std::size_t, BigInt>;

// Distribution equals 1 + sum expected[i] z^i exactly.
bool matches(const WeightDistribution& d, const Expected& expected) {
  if (d.counts.empty() || d.counts[0] != 1) return false;
  for (std::size_t i = 1; i < d.counts.size(); ++i) {
    const auto it = expected.find(i);
    const BigInt want = it == expected.end() ? BigInt(0) : it->second;
    if (d.counts[i] != want) return false;
  }
  return true;
}

std::string params(std::size_t n, std::size_t k, std::size_t d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

EnumerationOptions enum_options(const AcceptanceOptions& o, std::uint64_t budget = default_budget()) {
  EnumerationOptions e;
  e.budget = budget;
  e.threads = o.threads;
  return e;
}

std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Number of blocks containing each 3-subset, by testing every block against
// every triple as bitmasks. Independent of the ranked counters.
std::optional<std::uint64_t> naive_lambda3(const SupportDesign& design) {
  const std::size_t v = design.v;
  const std::size_t words = (v + 63) / 64;
  std::vector<std::uint64_t> masks(design.blocks.size() * words, 0);
  for (std::size_t b = 0; b < design.blocks.size(); ++b) {
    for (auto p : design.blocks[b]) masks[b * words + p / 64] |= std::uint64_t{1} << (p % 64);
  }
  std::optional<std::uint64_t> lambda;
  std::vector<std::uint64_t> triple(words);
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = x + 1; y < v; ++y) {
      for (std::size_t z = y + 1; z < v; ++z) {
        std::fill(triple.begin(), triple.end(), 0);
        for (std::size_t p : {x, y, z}) triple[p / 64] |= std::uint64_t{1} << (p % 64);
        std::uint64_t count = 0;
        for (std::size_t b = 0; b < design.blocks.size(); ++b) {
          bool inside = true;
          for (std::size_t w = 0; w < words && inside; ++w) inside = (masks[b * words + w] & triple[w]) == triple[w];
          count += inside ? 1 : 0;
        }
        if (!lambda) lambda = count;
        if (*lambda != count) return std::nullopt;
      }
    }
  }
  return lambda;
}

std::string lambda_text(const DesignVerdict& v) {
  return v.lambda ? "lambda=" + std::to_string(*v.lambda) : "not a design";
}

// Verifies every design of weight below `below`, adding one check per weight.
void sweep_designs(Report& r, const std::string& label, const std::map<std::size_t, SupportDesign>& designs,
                   std::size_t below, unsigned threads) {
  std::size_t swept = 0;
  for (const auto& [k, d] : designs) {
    if (k >= below) continue;
    ++swept;
    const auto verdict = verify_design(d, 3, threads);
    r.add(label + " k=" + std::to_string(k) + " holds a 3-design", verdict.is_design() && design_identity_holds(d, verdict),
          "b=" + std::to_string(d.b()) + " " + lambda_text(verdict));
  }
  r.add(label + " has qualifying weights", swept > 0, std::to_string(swept) + " weights");
}

}  // namespace

std::string CriterionResult::line() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.1f s)", seconds);
  std::string status = skipped ? "SKIP" : (passed() ? "PASS" : "FAIL");
  std::string s = status + "  " + std::to_string(id) + "  " + name + (skipped ? "" : buf);
  if (skipped) {
    s += "  [requires --long]";
  } else if (const Check* f = report.first_failure()) {
    s += "  first failure: " + f->name + (f->detail.empty() ? "" : " (" + f->detail + ")");
  }
  return s;
}

Report criterion_mds_family(const AcceptanceOptions& options) {
  Report r;
  r.title = "MDS family";
  for (unsigned m = 1; m <= 4; ++m) {
    const std::uint64_t q = std::uint64_t{1} << m;
    for (unsigned u = 1; u <= q / 2; ++u) {
      const CyclicCode code = mds_family_code(m, u);
      const std::size_t n = q + 1, k = 2 * u - 1, d = q - 2 * u + 3;
      const std::string tag = "m=" + std::to_string(m) + " u=" + std::to_string(u);
      r.add(tag + " dimension", code.dimension() == k, std::to_string(code.dimension()));
      r.add(tag + " reversible and LCD", is_reversible(code) && is_lcd(code.linear()));
      const bool enumerable = k * m <= 24;
      if (enumerable) {
        const auto dist = weight_distribution(code.linear(), enum_options(options));
        const auto got = dist.min_distance().value_or(0);
        r.add(tag + " exhaustive parameters " + params(n, k, d), got == d && dist.total() == BigInt(pow_u64(q, k)),
              "d=" + std::to_string(got));
      } else {
        const unsigned bound = bch_bound(code);
        r.add(tag + " BCH bound equals Singleton bound " + std::to_string(d),
              bound == d && singleton_bound(n, k) == d, "BCH " + std::to_string(bound));
      }
    }
  }
  return r;
}

Report criterion_quaternary_parameters(const AcceptanceOptions& options) {
  Report r;
  r.title = "quaternary code parameters";
  const std::map<unsigned, Expected> expected = {
      {2, {{12, 204}, {16, 51}}},
      {3, {{44, 18720}, {48, 16380}, {52, 30240}, {64, 195}}},
  };
  for (const auto& [h, want] : expected) {
    const CyclicCode code = quaternary_code(h);
    const std::size_t n = (std::size_t{1} << (2 * h)) + 1;
    const std::size_t k = std::size_t{1} << h;
    const std::size_t d = 2 * (n + 1) / 3;
    const auto dist = weight_distribution(code.linear(), enum_options(options));
    const std::string tag = "h=" + std::to_string(h);
    r.add(tag + " defining set is T", code.defining_set() == build_T(h));
    r.add(tag + " dimension " + std::to_string(k), code.dimension() == k, std::to_string(code.dimension()));
    r.add(tag + " minimum distance " + std::to_string(d), dist.min_distance() == d,
          std::to_string(dist.min_distance().value_or(0)));
    r.add(tag + " weight enumerator", matches(dist, want), dist.enumerator());
    r.add(tag + " BCH bound on T is tight", bch_bound(code) == d, std::to_string(bch_bound(code)));
  }
  return r;
}

Report criterion_dual_parameters(const AcceptanceOptions& options) {
  Report r;
  r.title = "dual parameters";
  const std::map<unsigned, std::pair<std::size_t, std::size_t>> expected = {{2, {13, 4}}, {3, {57, 5}}};
  for (const auto& [h, kd] : expected) {
    const CyclicCode code = quaternary_code(h);
    const std::size_t n = code.length();
    const auto primal = weight_distribution(code.linear(), enum_options(options));
    const auto dual_dist = macwilliams(primal);
    const std::string tag = "h=" + std::to_string(h);
    r.add(tag + " MacWilliams dual " + params(n, kd.first, kd.second),
          dual_dist.dimension == kd.first && dual_dist.min_distance() == kd.second,
          params(n, dual_dist.dimension, dual_dist.min_distance().value_or(0)));
    r.add(tag + " dual total is 4^" + std::to_string(kd.first), dual_dist.total() == BigInt(1) << (2 * kd.first));
    r.add(tag + " double transform is the identity", macwilliams(dual_dist) == primal);
    if (h == 2) {
      // 4^13 = 2^26 codewords; the budget is raised for this cross-check only.
      const LinearCode dual_code = dual(code.linear());
      const auto enumerated = weight_distribution(dual_code, enum_options(options, std::uint64_t{1} << 26));
      r.add(tag + " dual enumerated over 4^13 codewords matches MacWilliams", enumerated == dual_dist,
            enumerated.enumerator());
    }
  }
  return r;
}

Report criterion_h1_oracle(const AcceptanceOptions& options) {
  Report r;
  r.title = "h=1 oracle";
  const CyclicCode code = quaternary_code(1);
  const auto oracle = weight_distribution_naive(code.linear());
  const auto packed = weight_distribution(code.linear(), enum_options(options));
  const auto d = oracle.min_distance().value_or(0);
  r.add("code is [5,2]", code.length() == 5 && code.dimension() == 2);
  r.add("16 codewords enumerated", oracle.total() == 16, oracle.total().str());
  r.add("field-arithmetic oracle and packed enumerator agree", oracle == packed, oracle.enumerator());
  r.add("oracle respects the Singleton bound", d <= singleton_bound(5, 2), "d=" + std::to_string(d));
  Expected stated = {{5, 15}};
  const bool agrees = matches(oracle, stated);
  r.add("discrepancy with stated enumerator 1 + 15z^5 recorded", !agrees,
        "oracle " + oracle.enumerator() + (agrees ? " agrees with" : " differs from") + " stated 1 + 15z^5");
  return r;
}

Report criterion_delsarte(const AcceptanceOptions& options) {
  Report r;
  r.title = "Delsarte duality";
  for (unsigned h = 1; h <= 4; ++h) {
    const auto tower = quaternary_tower(h);
    const CyclicCode parent = quaternary_parent(h);
    r.merge(verify_delsarte(parent, *tower), "h=" + std::to_string(h) + " ");
    const LinearCode sub = quaternary_code(h).linear();
    r.add("h=" + std::to_string(h) + " trace representation over T^c gives the subfield subcode",
          trace_representation_code(*tower, build_Tc(h)) == sub);
    std::vector<std::uint32_t> low;
    for (std::uint32_t i = 0; i <= tower->q() / 4; ++i) low.push_back(i);
    r.add("h=" + std::to_string(h) + " trace representation over 0..q/4 gives the trace code",
          trace_representation_code(*tower, IndexSet(tower->n(), low)) == quaternary_trace_code(h));
  }
  // Proper containment at m = 4.
  const auto tower = quaternary_tower(2);
  const CyclicCode parent = quaternary_parent(2);
  const LinearCode sub = subfield_subcode(parent, *tower).linear();
  const LinearCode trace = quaternary_trace_code(2);
  const auto d_sub = min_distance(sub, enum_options(options));
  const auto d_trace = min_distance(trace, enum_options(options));
  r.add("(C)|GF(4) is [17,5,9]", sub.dimension() == 5 && d_sub.exact() && d_sub.lower == 9,
        params(17, sub.dimension(), d_sub.lower) + " by " + d_sub.method);
  r.add("C^(4) is [17,13,4]", trace.dimension() == 13 && d_trace.exact() && d_trace.lower == 4,
        params(17, trace.dimension(), d_trace.lower) + " by " + d_trace.method);
  r.add("[17,5,9] is a proper subcode of [17,13,4]", trace.contains(sub) && sub.dimension() < trace.dimension());
  return r;
}

Report criterion_designs(const AcceptanceOptions& options) {
  Report r;
  r.title = "3-designs";
  const unsigned threads = options.threads;
  {
    const auto designs = support_designs(quaternary_code(2).linear(), enum_options(options), "h=2");
    const auto& d12 = designs.at(12);
    const auto v12 = verify_design(d12, 3, threads);
    r.add("h=2 k=12 is a 3-(17,12,22) design", v12.lambda == 22u && d12.b() == 68 && design_identity_holds(d12, v12),
          "b=" + std::to_string(d12.b()) + " " + lambda_text(v12));
    sweep_designs(r, "h=2", designs, 16, threads);
  }
  {
    const auto designs = support_designs(quaternary_code(3).linear(), enum_options(options), "h=3");
    const auto& d44 = designs.at(44);
    const auto v44 = verify_design(d44, 3, threads);
    r.add("h=3 k=44 is a 3-(65,44,1892) design",
          v44.lambda == 1892u && d44.b() == 6240 && design_identity_holds(d44, v44),
          "b=" + std::to_string(d44.b()) + " " + lambda_text(v44));
    sweep_designs(r, "h=3", designs, 64, threads);
    for (const auto& [k, lambda, blocks] : {std::tuple{48u, 2162u, 5460u}, std::tuple{52u, 5100u, 10080u}}) {
      const auto& d = designs.at(k);
      const auto verdict = verify_design(d, 3, threads);
      const auto oracle = naive_lambda3(d);
      r.add("h=3 k=" + std::to_string(k) + " lambda matches the incidence oracle",
            verdict.lambda && oracle && *verdict.lambda == *oracle && *oracle == lambda && d.b() == blocks &&
                design_identity_holds(d, verdict),
            "b=" + std::to_string(d.b()) + " " + lambda_text(verdict) + " oracle " +
                (oracle ? std::to_string(*oracle) : std::string("none")));
    }
  }
  {
    // C^(4) at h=2 has 4^13 codewords.
    const LinearCode trace = dual(quaternary_code(2).linear());
    const auto designs = support_designs(trace, enum_options(options, std::uint64_t{1} << 26), "h=2 dual");
    sweep_designs(r, "h=2 dual", designs, 16, threads);
  }
  return r;
}

Report criterion_lemmas(const AcceptanceOptions&) {
  Report r;
  r.title = "lemma suite";
  for (unsigned h = 1; h <= 8; ++h) {
    const std::string tag = "h=" + std::to_string(h) + " ";
    r.merge(verify_partition(h), tag);
    r.merge(verify_exponent_lemmas(h), tag);
  }
  return r;
}

Report criterion_group_action(const AcceptanceOptions& options) {
  Report r;
  r.title = "group action";
  for (unsigned h : {2u, 3u}) {
    const std::string tag = "h=" + std::to_string(h) + " ";
    const UnitCircle U(quaternary_tower(h));
    const auto sample = stabilizer_sample(U, 200, options.seed + h);
    r.merge(verify_permutes_circle(sample, U), tag);
    const auto designs = support_designs(quaternary_code(h).linear(), enum_options(options));
    for (const auto& [k, d] : designs) {
      const Report inv = verify_block_invariance(d, sample, U);
      std::size_t ok = 0;
      for (const auto& c : inv.checks) ok += c.passed ? 1 : 0;
      const Check* f = inv.first_failure();
      r.add(tag + "k=" + std::to_string(k) + " blocks invariant under " + std::to_string(sample.size()) + " elements",
            inv.passed() && !inv.checks.empty(),
            std::to_string(ok) + "/" + std::to_string(inv.checks.size()) + (f ? "; " + f->name + ": " + f->detail : ""));
    }
    r.merge(verify_three_transitivity(U, 100, options.seed + 10 + h, h <= 2), tag);
  }
  r.merge(verify_spectrum_lemma(1, 0, options.seed), "h=1 ");
  r.merge(verify_spectrum_lemma(2, 500, options.seed + 2), "h=2 ");
  r.merge(verify_spectrum_lemma(3, 500, options.seed + 3), "h=3 ");
  r.merge(verify_pgl2_order(Field::make(2)), "q=4 ");
  r.merge(verify_pgl2_order(Field::make(4)), "q=16 ");
  return r;
}

Report criterion_h4_long(const AcceptanceOptions& options) {
  Report r;
  r.title = "h=4 enumerator";
  const Expected want = {{172, 28422144},   {176, 25794576},  {180, 258365184}, {184, 234877440},
                         {188, 1160570880}, {192, 469178172}, {196, 1348867584}, {200, 301985280},
                         {204, 394752000},  {208, 41942400},  {212, 30198528},  {240, 12336},
                         {256, 771}};
  const CyclicCode code = quaternary_code(4);
  r.add("code is [257,16]", code.length() == 257 && code.dimension() == 16);
  const auto dist = weight_distribution(code.linear(), enum_options(options, std::uint64_t{1} << 32));
  r.add("weight enumerator over 4^16 codewords", matches(dist, want), dist.enumerator());
  const auto dual_dist = macwilliams(dist);
  r.add("dual is [257,241,8]", dual_dist.dimension == 241 && dual_dist.min_distance() == 8u,
        params(257, dual_dist.dimension, dual_dist.min_distance().value_or(0)));
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  using Fn = Report (*)(const AcceptanceOptions&);
  const std::vector<std::pair<std::string, Fn>> criteria = {
      {"MDS family C_u parameters, reversibility, BCH = Singleton", criterion_mds_family},
      {"quaternary codes [17,4,12] and [65,8,44] with exact enumerators", criterion_quaternary_parameters},
      {"duals [17,13,4] and [65,57,5] via MacWilliams, 4^13 cross-check", criterion_dual_parameters},
      {"h=1 oracle enumerator and stated-enumerator discrepancy", criterion_h1_oracle},
      {"Delsarte duality h=1..4 and [17,5,9] < [17,13,4]", criterion_delsarte},
      {"3-designs at h=2,3 and on the h=2 dual", criterion_designs},
      {"lemma suite h=1..8", criterion_lemmas},
      {"stabilizer action, spectrum lemma, |PGL2|", criterion_group_action},
      {"h=4 enumerator and dual distance 8", criterion_h4_long},
  };
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult res;
    res.id = static_cast<int>(i + 1);
    res.name = criteria[i].first;
    res.report.title = res.name;
    if (res.id == 9 && !options.long_mode) {
      res.skipped = true;
    } else {
      const auto start = std::chrono::steady_clock::now();
      try {
        res.report = criteria[i].second(options);
        if (res.report.checks.empty()) res.report.add("criterion ran at least one check", false);
      } catch (const std::exception& ex) {
        res.report.add("criterion completed", false, ex.what());
      }
      res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (on_result) on_result(res);
    results.push_back(std::move(res));
  }
  return results;
}

nlohmann::ordered_json to_json(const std::vector<CriterionResult>& results, bool with_timing) {
  nlohmann::ordered_json j;
  bool all = true;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& res : results) {
    nlohmann::ordered_json e;
    e["id"] = res.id;
    e["name"] = res.name;
    e["status"] = res.skipped ? "skipped" : (res.passed() ? "pass" : "fail");
    if (with_timing && !res.skipped) e["seconds"] = res.seconds;
    if (!res.skipped) e["report"] = res.report.to_json();
    all = all && res.passed();
    arr.push_back(std::move(e));
  }
  j["passed"] = all;
  j["criteria"] = std::move(arr);
  return j;
}

}  // namespace quatcode
