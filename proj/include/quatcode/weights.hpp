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
 * @file weights.hpp
 * @brief Exact weight distributions by bit-packed Gray enumeration, and the
 *        MacWilliams transform in exact integer arithmetic.
 *
 * A code over GF(2^m) of dimension k is a GF(2)-space spanned by the m*k
 * vectors alpha^t * g_r. Each such vector is stored as m bit planes (plane p
 * holds bit p of every symbol), so a codeword's support is the OR of its
 * planes and its weight a popcount. Messages are traversed in binary
 * reflected Gray order: consecutive codewords differ by exactly one stored
 * vector, which costs m * ceil(n/64) XORs per step.
 */

#ifndef QUATCODE_WEIGHTS_HPP
#define QUATCODE_WEIGHTS_HPP

#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "quatcode/codes.hpp"

namespace quatcode {

using BigInt = boost::multiprecision::cpp_int;

/// 2^24, or the value of QUATCODE_BUDGET when set to a positive integer.
std::uint64_t default_budget();

struct EnumerationOptions {
  std::uint64_t budget = default_budget();
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

enum class Provenance { Exhaustive, MacWilliams };

std::string to_string(Provenance p);

struct WeightDistribution {
  std::size_t length = 0;
  std::uint64_t field_size = 2;
  std::size_t dimension = 0;
  std::vector<BigInt> counts;  // counts[i] = A_i, i = 0..length
  Provenance provenance = Provenance::Exhaustive;
  std::chrono::nanoseconds elapsed{0};

  /// Smallest nonzero weight, or nullopt for the zero code.
  std::optional<std::size_t> min_distance() const;
  BigInt total() const;
  /// Weights with nonzero count.
  std::vector<std::size_t> support() const;
  /// "1 + 204z^12 + 51z^16".
  std::string enumerator() const;
  nlohmann::ordered_json to_json(bool with_timing = true) const;
  /// "weight,count" header followed by one line per nonzero count.
  std::string to_csv() const;

  friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
    return a.length == b.length && a.field_size == b.field_size && a.dimension == b.dimension &&
           a.counts == b.counts;
  }
};

/// Builds a distribution from machine-word counts.
WeightDistribution make_distribution(std::size_t n, std::uint64_t field_size, std::size_t k,
                                     const std::vector<std::uint64_t>& counts);

/// The m*k generating vectors of a code, packed into bit planes.
class PackedGenerators {
 public:
  explicit PackedGenerators(const LinearCode& code);

  std::size_t length() const { return length_; }
  std::size_t words() const { return words_; }
  std::size_t planes() const { return planes_; }
  /// Number of GF(2) generators; the code has 2^count() codewords.
  std::size_t count() const { return count_; }
  /// Stride of one packed codeword: planes() * words().
  std::size_t stride() const { return planes_ * words_; }

  const std::uint64_t* vector(std::size_t i) const { return data_.data() + i * stride(); }

  /// Codeword number `index` of the Gray traversal, computed from scratch.
  void codeword_at(std::uint64_t index, std::uint64_t* out) const;
  /// OR of the planes, i.e. the support bitmask (words() words).
  void support_of(const std::uint64_t* packed, std::uint64_t* out) const;
  unsigned weight_of(const std::uint64_t* packed) const;
  std::vector<Elem> unpack(const std::uint64_t* packed) const;

 private:
  std::size_t length_;
  std::size_t words_;
  std::size_t planes_;
  std::size_t count_;
  std::vector<std::uint64_t> data_;
};

/**
 * Visits codewords with indices in [begin, end) in Gray order, calling
 * visit(index, packed) where `packed` points at stride() words. The first
 * codeword is computed from scratch, every later one incrementally.
 */
template <class Visitor>
void for_each_codeword(const PackedGenerators& gens, std::uint64_t begin, std::uint64_t end, Visitor&& visit) {
  if (begin >= end) return;
  std::vector<std::uint64_t> cw(gens.stride());
  gens.codeword_at(begin, cw.data());
  visit(begin, static_cast<const std::uint64_t*>(cw.data()));
  const std::size_t stride = gens.stride();
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const std::uint64_t* v = gens.vector(static_cast<std::size_t>(std::countr_zero(i)));
    for (std::size_t t = 0; t < stride; ++t) cw[t] ^= v[t];
    visit(i, static_cast<const std::uint64_t*>(cw.data()));
  }
}

/// Number of codewords as a 64-bit value; throws ResourceLimit if the code
/// has 2^63 or more codewords.
std::uint64_t codebook_size(const LinearCode& code);

/**
 * Exact weight distribution by exhaustive enumeration. Throws ResourceLimit
 * when the codebook exceeds options.budget. The result does not depend on
 * the thread count.
 */
WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options = {});

/// Reference enumerator: encodes every message with field arithmetic and
/// counts nonzero symbols. Single threaded and slow; for cross-checks.
WeightDistribution weight_distribution_naive(const LinearCode& code);

/// Weight distribution of the dual code via the MacWilliams identity.
WeightDistribution macwilliams(const WeightDistribution& dist);

/// Krawtchouk polynomial K_j(i) for length n over an alphabet of size q.
BigInt krawtchouk(std::size_t n, std::uint64_t q, std::size_t j, std::size_t i);

struct DistanceResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::string method;  // "exhaustive", "macwilliams", "bounds"
  bool exact() const { return lower == upper; }
};

/// Minimum distance: exhaustive if the code fits the budget, else via the
/// dual and MacWilliams, else the (lower, Singleton) bound pair. The zero
/// code reports n + 1.
DistanceResult min_distance(const LinearCode& code, const EnumerationOptions& options = {},
                            std::size_t known_lower_bound = 1);
DistanceResult min_distance(const CyclicCode& code, const EnumerationOptions& options = {});

}  // namespace quatcode

#endif  // QUATCODE_WEIGHTS_HPP
