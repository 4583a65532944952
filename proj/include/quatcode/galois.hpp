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
 * @file galois.hpp
 * @brief Binary extension fields GF(2^k), subfield embeddings and traces.
 *
 * Elements are k-bit little-endian coefficient vectors of the residue class
 * representative modulo the field's modulus: bit i is the coefficient of x^i.
 * Every field uses the numerically smallest primitive polynomial of its degree
 * as modulus, so x (encoded as 2, or 1 for GF(2)) is a primitive element and
 * all derived objects are reproducible bit for bit.
 *
 * Fields are immutable and shared through FieldPtr. Fields of degree up to 16
 * carry log/antilog tables; larger degrees (up to 32) fall back to carry-less
 * multiplication with reduction.
 *
 * Subfields are not separate types: an Embedding maps GF(2^s) into GF(2^k)
 * (s | k) by sending the generator x of the small field to a root of the
 * small modulus inside the big field.
 */

#ifndef QUATCODE_GALOIS_HPP
#define QUATCODE_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace quatcode {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr unsigned kMaxDegree = 32;
  static constexpr unsigned kMaxTableDegree = 16;

  /// Returns the cached field of the given degree; throws InvalidArgument for
  /// degree 0 or degree above kMaxDegree.
  static FieldPtr make(unsigned degree);

  /// Builds a field from an explicit modulus. The modulus must be primitive.
  static FieldPtr with_modulus(unsigned degree, std::uint64_t modulus);

  unsigned degree() const { return degree_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t size() const { return std::uint64_t{1} << degree_; }
  std::uint64_t order() const { return size() - 1; }
  Elem primitive() const { return primitive_; }
  bool contains(Elem x) const { return static_cast<std::uint64_t>(x) < size(); }

  static Elem add(Elem x, Elem y) { return x ^ y; }
  Elem mul(Elem x, Elem y) const;
  Elem square(Elem x) const { return mul(x, x); }
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const;

  /// x^(2^s), the s-th power of the Frobenius map.
  Elem frobenius(Elem x, unsigned s = 1) const;

  /// alpha^e for the primitive element alpha, e taken modulo the group order.
  Elem exp(std::uint64_t e) const;

  /// Discrete logarithm to base alpha; x must be nonzero.
  std::uint64_t log(Elem x) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(Elem x) const;

  /// Distinct prime factors of 2^degree - 1.
  const std::vector<std::uint64_t>& order_factors() const { return factors_; }

 private:
  Field(unsigned degree, std::uint64_t modulus);

  Elem mul_slow(Elem x, Elem y) const;

  unsigned degree_;
  std::uint64_t modulus_;
  Elem primitive_ = 1;
  std::vector<std::uint64_t> factors_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

/// Carry-less product of two polynomials over GF(2) (operands < 2^32).
std::uint64_t clmul(std::uint64_t a, std::uint64_t b);

/// Remainder of a GF(2)[x] polynomial modulo another.
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m);

/// True iff the polynomial (bit vector, degree >= 1) is primitive over GF(2).
bool is_primitive_polynomial(std::uint64_t poly);

/// Lexicographically (numerically) smallest primitive polynomial of a degree.
std::uint64_t smallest_primitive_polynomial(unsigned degree);

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/**
 * Ring embedding GF(2^s) -> GF(2^k), s | k, fixed by the image of the small
 * field's generator x. The image is exactly the set of z with z^(2^s) = z.
 */
class Embedding {
 public:
  /// Embedding that sends x to the numerically smallest root of the small
  /// modulus in the big field. Throws InvalidTower if s does not divide k.
  static Embedding by_smallest_root(FieldPtr small, FieldPtr big);

  /// Embedding with an explicit generator image, which must be a root of the
  /// small modulus in the big field.
  static Embedding with_generator_image(FieldPtr small, FieldPtr big, Elem image);

  /// Process-wide cached smallest-root embedding.
  static const Embedding& canonical(const FieldPtr& small, const FieldPtr& big);

  const FieldPtr& small() const { return small_; }
  const FieldPtr& big() const { return big_; }
  Elem generator_image() const { return generator_image_; }
  unsigned relative_degree() const { return big_->degree() / small_->degree(); }

  Elem apply(Elem x) const;
  bool in_image(Elem z) const;
  std::optional<Elem> preimage(Elem z) const;
  /// Preimage of z; throws InvalidArgument when z is outside the subfield.
  Elem pull_back(Elem z) const;

  /// Relative trace Tr_{big/small}(z) = sum_i z^(2^(s i)) as an element of
  /// the big field.
  Elem trace_in_big(Elem z) const;
  /// Relative trace pulled back into the small field.
  Elem trace(Elem z) const { return pull_back(trace_in_big(z)); }

  /// outer o inner : GF(a) -> GF(b) -> GF(c).
  friend Embedding compose(const Embedding& outer, const Embedding& inner);

 private:
  Embedding(FieldPtr small, FieldPtr big, Elem image);

  FieldPtr small_;
  FieldPtr big_;
  Elem generator_image_;
  std::vector<Elem> forward_;
  std::vector<std::int64_t> inverse_dense_;
  std::unordered_map<Elem, Elem> inverse_sparse_;
};

/// Tr from the field of `big` down to `target`, using the canonical embedding.
Elem trace(const FieldPtr& big, Elem x, const FieldPtr& target);

/// [beta^0, ..., beta^(n-1)] with beta = alpha^((2^k - 1) / n).
std::vector<Elem> unity_roots(std::uint64_t n, const Field& field);

/**
 * Data needed to talk about zeros of length-n cyclic codes over `base`:
 * the smallest extension `big` of base containing n-th roots of unity, the
 * embedding base -> big and the primitive n-th root beta.
 */
struct SplittingField {
  FieldPtr base;
  FieldPtr big;
  std::shared_ptr<const Embedding> embedding;
  unsigned n = 0;
  Elem beta = 1;

  /// beta^i in the big field, i taken modulo n.
  Elem root(std::int64_t i) const;
};
using SplittingFieldPtr = std::shared_ptr<const SplittingField>;

/// Cached splitting field for (base, n); n must be odd.
SplittingFieldPtr splitting_field(const FieldPtr& base, unsigned n);

/**
 * The tower GF(2) < GF(4) < GF(q) < GF(q^2) for q = 2^m. GF(4) is present
 * only when m is even. Embeddings are mutually compatible:
 * emb_4_q2 == emb_q_q2 o emb_4_q.
 */
struct Tower {
  unsigned m = 0;
  FieldPtr gf_q;
  FieldPtr gf_q2;
  SplittingFieldPtr ctx_q;  // base GF(q), n = q + 1
  FieldPtr gf4;                                  // null for odd m
  SplittingFieldPtr ctx_4;                       // base GF(4), n = q + 1
  std::shared_ptr<const Embedding> emb_4_q;      // GF(4) -> GF(q)

  std::uint64_t q() const { return std::uint64_t{1} << m; }
  unsigned n() const { return static_cast<unsigned>(q() + 1); }
  bool has_gf4() const { return gf4 != nullptr; }

  /// Cached tower for 1 <= m <= 8.
  static std::shared_ptr<const Tower> get(unsigned m);
};
using TowerPtr = std::shared_ptr<const Tower>;

}  // namespace quatcode

#endif  // QUATCODE_GALOIS_HPP
