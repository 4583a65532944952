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

#include "quatcode/designs.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>
#include <unordered_set>

#include "quatcode/error.hpp"

namespace quatcode {

namespace {

constexpr std::size_t kMaxWords = 5;
using Mask = std::array<std::uint64_t, kMaxWords>;

struct MaskHash {
  std::size_t operator()(const Mask& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : m) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

Block mask_to_block(const Mask& m, std::size_t n) {
  Block b;
  for (std::size_t j = 0; j < n; ++j) {
    if ((m[j / 64] >> (j % 64)) & 1u) b.push_back(static_cast<std::uint32_t>(j));
  }
  return b;
}

// Small binomials C(a, b) for a <= 320, b <= 8, as machine words.
class BinomialTable {
 public:
  BinomialTable(std::size_t n, std::size_t t) : t_(t), c_((n + 1) * (t + 1), 0) {
    for (std::size_t a = 0; a <= n; ++a) {
      at(a, 0) = 1;
      for (std::size_t b = 1; b <= t && b <= a; ++b) at(a, b) = at(a - 1, b - 1) + (b <= a - 1 ? at(a - 1, b) : 0);
    }
  }
  std::uint64_t operator()(std::size_t a, std::size_t b) const { return b > a ? 0 : c_[a * (t_ + 1) + b]; }

 private:
  std::uint64_t& at(std::size_t a, std::size_t b) { return c_[a * (t_ + 1) + b]; }
  std::size_t t_;
  std::vector<std::uint64_t> c_;
};

// Adds one to the counter of every t-subset of `block`.
void count_block(const Block& block, unsigned t, const BinomialTable& C, std::vector<std::uint32_t>& counters) {
  const std::size_t k = block.size();
  if (t == 0) {
    ++counters[0];
    return;
  }
  if (t == 3) {
    for (std::size_t c = 2; c < k; ++c) {
      const std::uint64_t rc = C(block[c], 3);
      for (std::size_t b = 1; b < c; ++b) {
        const std::uint64_t rb = rc + C(block[b], 2);
        for (std::size_t a = 0; a < b; ++a) ++counters[rb + block[a]];
      }
    }
    return;
  }
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < t; ++i) r += C(block[idx[i]], i + 1);
    ++counters[r];
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == k - t + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t colex_rank(const Block& sorted) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += static_cast<std::uint64_t>(binomial(sorted[i], i + 1));
  return r;
}

Block colex_unrank(std::uint64_t rank, std::size_t t) {
  Block out(t);
  for (std::size_t i = t; i > 0; --i) {
    std::uint32_t x = static_cast<std::uint32_t>(i - 1);
    while (binomial(x + 1, i) <= rank) ++x;
    out[i - 1] = x;
    rank -= static_cast<std::uint64_t>(binomial(x, i));
  }
  return out;
}

std::map<std::size_t, SupportDesign> support_designs(const LinearCode& code, const EnumerationOptions& options,
                                                     const std::string& source) {
  const std::size_t n = code.length();
  if (n > 64 * kMaxWords) throw InvalidArgument("support designs are limited to length " + std::to_string(64 * kMaxWords));
  const std::uint64_t total = codebook_size(code);
  if (total > options.budget) {
    throw ResourceLimit("support collection over " + std::to_string(total) + " codewords exceeds the budget of " +
                        std::to_string(options.budget));
  }
  const PackedGenerators gens(code);
  std::vector<std::uint64_t> per_weight(n + 1, 0);
  std::map<std::size_t, std::vector<Mask>> masks;

  if (n <= 24) {
    // Dense bitmap over all 2^n subsets.
    std::vector<bool> seen(std::size_t{1} << n, false);
    for_each_codeword(gens, 0, total, [&](std::uint64_t, const std::uint64_t* cw) {
      std::uint64_t s = 0;
      gens.support_of(cw, &s);
      ++per_weight[static_cast<std::size_t>(std::popcount(s))];
      seen[s] = true;
    });
    for (std::uint64_t s = 1; s < seen.size(); ++s) {
      if (seen[s]) masks[static_cast<std::size_t>(std::popcount(s))].push_back(Mask{s});
    }
  } else {
    std::unordered_set<Mask, MaskHash> seen;
    for_each_codeword(gens, 0, total, [&](std::uint64_t, const std::uint64_t* cw) {
      Mask s{};
      gens.support_of(cw, s.data());
      unsigned w = 0;
      for (auto x : s) w += static_cast<unsigned>(std::popcount(x));
      ++per_weight[w];
      if (w != 0) seen.insert(s);
    });
    for (const auto& s : seen) {
      unsigned w = 0;
      for (auto x : s) w += static_cast<unsigned>(std::popcount(x));
      masks[w].push_back(s);
    }
  }

  std::map<std::size_t, SupportDesign> out;
  for (auto& [w, list] : masks) {
    SupportDesign d;
    d.v = n;
    d.k = w;
    d.codewords = per_weight[w];
    d.source = source;
    d.blocks.reserve(list.size());
    for (const auto& m : list) d.blocks.push_back(mask_to_block(m, n));
    std::sort(d.blocks.begin(), d.blocks.end());
    out.emplace(w, std::move(d));
  }
  return out;
}

SupportDesign supports(const LinearCode& code, std::size_t k, const EnumerationOptions& options,
                       const std::string& source) {
  auto all = support_designs(code, options, source);
  auto it = all.find(k);
  if (it != all.end()) return std::move(it->second);
  SupportDesign empty;
  empty.v = code.length();
  empty.k = k;
  empty.source = source;
  return empty;
}

SupportDesign complete_design(std::size_t v, std::size_t k) {
  if (k > v) throw InvalidArgument("block size exceeds the number of points");
  SupportDesign d;
  d.v = v;
  d.k = k;
  d.source = "complete";
  Block idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<std::uint32_t>(i);
  while (true) {
    d.blocks.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == v - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(d.blocks.begin(), d.blocks.end());
  return d;
}

DesignVerdict verify_design(const SupportDesign& design, unsigned t, unsigned threads) {
  if (t > design.k || design.k > design.v) throw InvalidArgument("verify_design needs t <= k <= v");
  if (t > 8) throw InvalidArgument("strength above 8 is not supported");
  const BinomialTable C(design.v, t);
  const std::uint64_t cells = C(design.v, t);
  DesignVerdict verdict;
  verdict.t = t;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, design.blocks.size())));
  std::vector<std::vector<std::uint32_t>> partial(threads, std::vector<std::uint32_t>(cells, 0));
  std::atomic<std::size_t> next{0};
  constexpr std::size_t kBatch = 64;
  auto worker = [&](unsigned id) {
    for (std::size_t b = next.fetch_add(kBatch); b < design.blocks.size(); b = next.fetch_add(kBatch)) {
      const std::size_t e = std::min(design.blocks.size(), b + kBatch);
      for (std::size_t i = b; i < e; ++i) count_block(design.blocks[i], t, C, partial[id]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
  }
  std::vector<std::uint64_t> counters(cells, 0);
  for (const auto& p : partial) {
    for (std::uint64_t r = 0; r < cells; ++r) counters[r] += p[r];
  }

  const std::uint64_t lambda = counters.empty() ? 0 : counters[0];
  for (std::uint64_t r = 0; r < cells; ++r) {
    if (counters[r] != lambda) {
      verdict.counterexample = colex_unrank(r, t);
      verdict.counterexample_count = counters[r];
      return verdict;
    }
  }
  verdict.lambda = lambda;
  return verdict;
}

bool design_identity_holds(const SupportDesign& design, const DesignVerdict& verdict) {
  if (!verdict.lambda) return false;
  return BigInt(design.b()) * binomial(design.k, verdict.t) == BigInt(*verdict.lambda) * binomial(design.v, verdict.t);
}

namespace {

std::size_t am_w(std::size_t v, std::uint64_t q, std::size_t d) {
  std::size_t best = 0;
  for (std::size_t w = 0; w <= v; ++w) {
    const std::size_t floor_part = static_cast<std::size_t>((w + q - 2) / (q - 1));
    if (w < floor_part + d) best = w;
  }
  return best;
}

}  // namespace

AssmusMattson assmus_mattson(const WeightDistribution& code, const WeightDistribution& dual, unsigned t) {
  if (code.length != dual.length || code.field_size != dual.field_size) {
    throw InvalidArgument("distributions of different lengths or alphabets");
  }
  AssmusMattson r;
  r.t = t;
  const std::size_t v = code.length;
  const std::uint64_t q = code.field_size;
  r.d = code.min_distance().value_or(v + 1);
  r.d_perp = dual.min_distance().value_or(v + 1);
  r.applicable = t < r.d && t <= v;
  r.w = am_w(v, q, r.d);
  r.w_perp = am_w(v, q, r.d_perp);
  for (std::size_t i = 1; i + t <= v; ++i) {
    if (dual.counts[i] != 0) ++r.s;
  }
  r.condition = r.applicable && r.s + t <= r.d;
  if (r.condition) {
    for (std::size_t i = r.d; i <= r.w; ++i) {
      if (code.counts[i] != 0) r.certified.push_back(i);
    }
    for (std::size_t i = r.d_perp; i <= std::min(v - t, r.w_perp); ++i) {
      if (dual.counts[i] != 0) r.certified_dual.push_back(i);
    }
  }
  return r;
}

nlohmann::ordered_json AssmusMattson::to_json() const {
  nlohmann::ordered_json j;
  j["t"] = t;
  j["applicable"] = applicable;
  j["d"] = d;
  j["d_perp"] = d_perp;
  j["w"] = w;
  j["w_perp"] = w_perp;
  j["s"] = s;
  j["condition_s_le_d_minus_t"] = condition;
  j["certified_weights"] = certified;
  j["certified_dual_weights"] = certified_dual;
  return j;
}

nlohmann::ordered_json to_json(const SupportDesign& design, const DesignVerdict& verdict, bool emit_blocks) {
  nlohmann::ordered_json j;
  j["v"] = design.v;
  j["k"] = design.k;
  j["t"] = verdict.t;
  j["lambda"] = verdict.lambda ? nlohmann::ordered_json(std::to_string(*verdict.lambda)) : nlohmann::ordered_json();
  j["b"] = std::to_string(design.b());
  j["codewords"] = std::to_string(design.codewords);
  j["identity_b_Ckt_eq_lambda_Cvt"] = design_identity_holds(design, verdict);
  if (verdict.counterexample) {
    j["counterexample"] = *verdict.counterexample;
    j["counterexample_count"] = std::to_string(verdict.counterexample_count);
  } else {
    j["counterexample"] = nullptr;
  }
  if (!design.source.empty()) j["source"] = design.source;
  if (emit_blocks) j["blocks"] = design.blocks;
  return j;
}

}  // namespace quatcode
