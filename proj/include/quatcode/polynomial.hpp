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

#ifndef QUATCODE_POLYNOMIAL_HPP
#define QUATCODE_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "quatcode/galois.hpp"

namespace quatcode {

/// Dense univariate polynomial over a binary field. coeffs()[i] is the
/// coefficient of x^i; the highest stored coefficient is nonzero.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field);
  Polynomial(FieldPtr field, std::vector<Elem> coeffs);

  static Polynomial constant(FieldPtr field, Elem c);
  /// x - r (= x + r).
  static Polynomial linear_root(FieldPtr field, Elem r);
  /// x^n - 1.
  static Polynomial xn_minus_1(FieldPtr field, unsigned n);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const { return leading() == 1; }

  Elem eval(Elem x) const;
  Polynomial monic() const;
  Polynomial scaled(Elem c) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
/// Monic lcm.
Polynomial lcm(const Polynomial& f, const Polynomial& g);

/// Re-expresses a polynomial whose coefficients lie in the image of `e`
/// over the subfield; throws InvalidArgument if a coefficient is outside it.
Polynomial restrict_coefficients(const Polynomial& f, const Embedding& e);
/// Embeds the coefficients of a subfield polynomial into the big field.
Polynomial extend_coefficients(const Polynomial& f, const Embedding& e);

/// Monic polynomial over the big field with the given roots.
Polynomial from_roots(const FieldPtr& field, const std::vector<Elem>& roots);

/**
 * Minimal polynomial of beta^s over ctx.base: the product of (x - beta^i)
 * over the |base|-cyclotomic coset of s modulo n. The product is formed in
 * the big field and every coefficient is checked to be Frobenius-fixed
 * before it is pulled back into the base field.
 */
Polynomial minimal_polynomial(const SplittingField& ctx, unsigned s);

/// Monic irreducible factors of x^n - 1 over ctx.base, one per coset leader
/// in increasing leader order.
std::vector<Polynomial> factor_xn_minus_1(const SplittingField& ctx);

}  // namespace quatcode

#endif  // QUATCODE_POLYNOMIAL_HPP
