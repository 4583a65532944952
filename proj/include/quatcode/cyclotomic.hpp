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
 * @file cyclotomic.hpp
 * @brief Cyclotomic cosets modulo n and the defining sets T, T^c of the
 *        quaternary codes of length 4^h + 1.
 *
 * T is the union of the 4-cyclotomic cosets of 0, 1, ..., 4^(h-1) modulo
 * n = 4^h + 1. T^c is given directly by base-4 digit strings
 * a_0 + a_1 4 + ... + a_(h-1) 4^(h-1) with a_0 in {2, 3} and a_i in {1, 2}.
 * verify_partition() checks that the two independently built sets split Z_n.
 */

#ifndef QUATCODE_CYCLOTOMIC_HPP
#define QUATCODE_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "quatcode/report.hpp"

namespace quatcode {

/// Sorted subset of Z_n with O(1) membership.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::uint32_t n, std::vector<std::uint32_t> elements);

  std::uint32_t modulus() const { return n_; }
  const std::vector<std::uint32_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(std::int64_t i) const;
  std::uint32_t min() const { return elements_.front(); }
  std::uint32_t max() const { return elements_.back(); }

  /// Z_n minus this set.
  IndexSet complement() const;
  /// { n - i mod n : i in set }.
  IndexSet negated() const;
  /// { b * i mod n : i in set }.
  IndexSet scaled(std::uint64_t b) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> elements_;
  std::vector<bool> member_;
};

/// Orbit of s under multiplication by b modulo n, sorted.
std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t s, std::uint32_t n, std::uint64_t b);

/// Union of the b-cyclotomic cosets of every element of `set`.
IndexSet coset_closure(const IndexSet& set, std::uint64_t b);

/// Partition of Z_n into b-cyclotomic cosets, ordered by leader.
class CosetSystem {
 public:
  /// Throws InvalidArgument unless gcd(n, b) = 1.
  CosetSystem(std::uint32_t n, std::uint64_t b);

  std::uint32_t modulus() const { return n_; }
  std::uint64_t multiplier() const { return b_; }
  const std::vector<std::vector<std::uint32_t>>& cosets() const { return cosets_; }
  const std::vector<std::uint32_t>& leaders() const { return leaders_; }
  const std::vector<std::uint32_t>& coset_of(std::uint32_t s) const { return cosets_.at(index_.at(s % n_)); }
  std::uint32_t leader_of(std::uint32_t s) const { return leaders_.at(index_.at(s % n_)); }

 private:
  std::uint32_t n_;
  std::uint64_t b_;
  std::vector<std::vector<std::uint32_t>> cosets_;
  std::vector<std::uint32_t> leaders_;
  std::vector<std::size_t> index_;
};

/// n = 4^h + 1.
std::uint32_t quaternary_length(unsigned h);

/// Union of the 4-cyclotomic cosets C_0, ..., C_(4^(h-1)) modulo 4^h + 1.
IndexSet build_T(unsigned h);

/// Digit-string description of the complement of T.
IndexSet build_Tc(unsigned h);

/// { 1 + sum e_i 4^i : e_i in {1, 2} }, the defining set of the dual code.
IndexSet build_E(unsigned h);

/**
 * Re-derives T (coset route) and T^c (digit route) and checks every
 * structural identity relating them: disjointness, covering, |T^c| = 2^h,
 * coset closure of T^c, the min/max formulas, the runs {0..delta} and
 * {n-delta..n-1} inside T, symmetry under i -> n - i, and E = -T^c = T^c.
 * Failures carry a counterexample element in the check detail.
 */
Report verify_partition(unsigned h);

}  // namespace quatcode

#endif  // QUATCODE_CYCLOTOMIC_HPP
