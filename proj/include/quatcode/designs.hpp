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

/**
 * @file designs.hpp
 * @brief Support designs of linear codes and exact t-design verification.
 *
 * The blocks of weight k are the distinct supports of weight-k codewords.
 * verify_design() counts, for every t-subset of points, how many blocks
 * contain it; the t-subsets are ranked in colex order so the counters form
 * one flat array of C(v, t) entries.
 */

#ifndef QUATCODE_DESIGNS_HPP
#define QUATCODE_DESIGNS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatcode/codes.hpp"
#include "quatcode/report.hpp"
#include "quatcode/weights.hpp"

namespace quatcode {

using Block = std::vector<std::uint32_t>;

struct SupportDesign {
  std::size_t v = 0;
  std::size_t k = 0;
  std::vector<Block> blocks;  // sorted points, blocks in lexicographic order
  /// Number of codewords whose supports produced the blocks.
  std::uint64_t codewords = 0;
  std::string source;

  std::size_t b() const { return blocks.size(); }
};

struct DesignVerdict {
  unsigned t = 0;
  std::optional<std::uint64_t> lambda;
  /// First t-subset (in colex order) whose count differs from that of {0..t-1}.
  std::optional<Block> counterexample;
  std::uint64_t counterexample_count = 0;

  bool is_design() const { return lambda.has_value(); }
};

BigInt binomial(std::size_t n, std::size_t k);

/// Colex rank of a sorted t-subset: sum_i C(x_i, i + 1).
std::uint64_t colex_rank(const Block& sorted);
Block colex_unrank(std::uint64_t rank, std::size_t t);

/**
 * Support designs of every nonzero weight, collected in one enumeration of
 * the code. Throws ResourceLimit when the code exceeds options.budget.
 */
std::map<std::size_t, SupportDesign> support_designs(const LinearCode& code, const EnumerationOptions& options = {},
                                                     const std::string& source = {});

/// Support design of weight k alone (empty when A_k = 0).
SupportDesign supports(const LinearCode& code, std::size_t k, const EnumerationOptions& options = {},
                       const std::string& source = {});

/// All k-subsets of v points.
SupportDesign complete_design(std::size_t v, std::size_t k);

/// Exact incidence count at strength t; requires t <= k <= v.
DesignVerdict verify_design(const SupportDesign& design, unsigned t, unsigned threads = 1);

/// b * C(k, t) == lambda * C(v, t) in exact arithmetic; false if no lambda.
bool design_identity_holds(const SupportDesign& design, const DesignVerdict& verdict);

struct AssmusMattson {
  unsigned t = 0;
  bool applicable = false;  // t < d
  std::size_t d = 0;
  std::size_t d_perp = 0;
  std::size_t w = 0;
  std::size_t w_perp = 0;
  std::size_t s = 0;
  bool condition = false;  // s <= d - t
  /// Weights of the code, then of the dual, the theorem certifies.
  std::vector<std::size_t> certified;
  std::vector<std::size_t> certified_dual;

  nlohmann::ordered_json to_json() const;
};

/// Evaluates the Assmus-Mattson hypotheses from the two distributions.
AssmusMattson assmus_mattson(const WeightDistribution& code, const WeightDistribution& dual, unsigned t);

/// {v, k, t, lambda, b, ...}; blocks included only on request.
nlohmann::ordered_json to_json(const SupportDesign& design, const DesignVerdict& verdict, bool emit_blocks = false);

}  // namespace quatcode

#endif  // QUATCODE_DESIGNS_HPP
