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
 * @file codes.hpp
 * @brief Linear and cyclic codes over binary fields.
 *
 * A LinearCode is kept as a generator matrix in reduced row echelon form, so
 * two codes are equal exactly when their stored matrices are identical.
 *
 * A CyclicCode of length n over GF(2^s) is described by its generator
 * polynomial and its defining set Z = { i : g(beta^i) = 0 }, where beta is
 * the primitive n-th root of unity of the code's SplittingField. The MDS
 * family C_u over GF(q), q = 2^m, has length q + 1 and defining set
 * { u, ..., q + 1 - u }.
 */

#ifndef QUATCODE_CODES_HPP
#define QUATCODE_CODES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "quatcode/cyclotomic.hpp"
#include "quatcode/galois.hpp"
#include "quatcode/linalg.hpp"
#include "quatcode/polynomial.hpp"

namespace quatcode {

class LinearCode {
 public:
  /// Row space of `rows`; the rows need not be independent.
  LinearCode(Matrix rows);
  static LinearCode zero(FieldPtr field, std::size_t n);
  static LinearCode full(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return generator_.field(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  /// Reduced row echelon generator matrix.
  const Matrix& generator() const { return generator_; }

  std::vector<Elem> encode(std::span<const Elem> message) const;
  bool contains(std::span<const Elem> word) const;
  bool contains(const LinearCode& sub) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  Matrix generator_;
};

/// Dual code with respect to the standard dot product.
LinearCode dual(const LinearCode& code);

/// dim(C + C^perp) == n, i.e. C meets its dual trivially.
bool is_lcd(const LinearCode& code);

/// Dimension of the intersection of two codes of the same length.
std::size_t intersection_dimension(const LinearCode& a, const LinearCode& b);

std::size_t singleton_bound(std::size_t n, std::size_t k);

class CyclicCode {
 public:
  /// Throws InvalidArgument unless `zeros` is a union of |base|-cyclotomic
  /// cosets modulo n.
  static CyclicCode from_defining_set(SplittingFieldPtr ctx, const IndexSet& zeros);
  /// Throws InvalidArgument unless g is monic and divides x^n - 1.
  static CyclicCode from_generator(SplittingFieldPtr ctx, const Polynomial& g);

  const SplittingFieldPtr& context() const { return ctx_; }
  const FieldPtr& field() const { return ctx_->base; }
  unsigned length() const { return ctx_->n; }
  std::size_t dimension() const { return ctx_->n - static_cast<std::size_t>(generator_.degree()); }
  const Polynomial& generator() const { return generator_; }
  /// (x^n - 1) / g(x).
  Polynomial check_polynomial() const;
  const IndexSet& defining_set() const { return zeros_; }
  /// Generator matrix built from the shifts x^i g(x), i < k.
  const LinearCode& linear() const { return linear_; }

  friend bool operator==(const CyclicCode& a, const CyclicCode& b) {
    return a.generator_ == b.generator_ && a.zeros_ == b.zeros_;
  }

 private:
  CyclicCode(SplittingFieldPtr ctx, Polynomial g, IndexSet zeros);

  SplittingFieldPtr ctx_;
  Polynomial generator_;
  IndexSet zeros_;
  LinearCode linear_;
};

/// BCH code over `base` of length n and designed distance delta with zeros
/// beta^offset, ..., beta^(offset + delta - 2).
CyclicCode bch_code(const FieldPtr& base, unsigned n, unsigned delta, std::int64_t offset);

/// C_u over GF(2^m): length 2^m + 1, zeros beta^u .. beta^(q+1-u), 1 <= u <= 2^(m-1).
CyclicCode mds_family_code(unsigned m, unsigned u);

/// The dual cyclic code, defining set { n - i : i not in Z }.
CyclicCode dual(const CyclicCode& code);

/// 1 + longest circular run of consecutive exponents in the defining set.
unsigned bch_bound(const IndexSet& zeros);
inline unsigned bch_bound(const CyclicCode& code) { return bch_bound(code.defining_set()); }

/// Defining set closed under i -> n - i.
bool is_reversible(const CyclicCode& code);

/// Defining set recomputed from scratch by evaluating g at every beta^i.
IndexSet zeros_of(const SplittingField& ctx, const Polynomial& g);

/// Cyclic shift (c_0..c_(n-1)) -> (c_(n-1), c_0, ..., c_(n-2)).
std::vector<Elem> cyclic_shift(std::span<const Elem> word);

/// JSON descriptor {field_degree, field_modulus, n, generator_coeffs,
/// defining_set}; generator coefficients are the field elements' bit vectors
/// as unsigned integers, lowest degree first.
nlohmann::ordered_json to_json(const CyclicCode& code);
CyclicCode cyclic_code_from_json(const nlohmann::ordered_json& j);

}  // namespace quatcode

#endif  // QUATCODE_CODES_HPP
