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

#include "quatcode/polynomial.hpp"

#include <string>

#include "quatcode/cyclotomic.hpp"
#include "quatcode/error.hpp"

namespace quatcode {

namespace {

void require_same_field(const Polynomial& f, const Polynomial& g) {
  if (f.field()->degree() != g.field()->degree() || f.field()->modulus() != g.field()->modulus()) {
    throw InvalidArgument("polynomials over different fields");
  }
}

}  // namespace

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (!field_->contains(c)) throw InvalidArgument("coefficient outside the field");
  }
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(FieldPtr field, Elem c) { return Polynomial(std::move(field), {c}); }

Polynomial Polynomial::linear_root(FieldPtr field, Elem r) { return Polynomial(std::move(field), {r, 1}); }

Polynomial Polynomial::xn_minus_1(FieldPtr field, unsigned n) {
  std::vector<Elem> c(n + 1, 0);
  c[0] = 1;
  c[n] ^= 1;
  return Polynomial(std::move(field), std::move(c));
}

Elem Polynomial::eval(Elem x) const {
  Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->mul(acc, x) ^ *it;
  return acc;
}

Polynomial Polynomial::scaled(Elem c) const {
  std::vector<Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_field(f, g);
  std::vector<Elem> out(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) ^ g.coeff(i);
  return Polynomial(f.field_, std::move(out));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_field(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.field_);
  std::vector<Elem> out(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
  const Field& F = *f.field_;
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] ^= F.mul(f.coeffs_[i], g.coeffs_[j]);
  }
  return Polynomial(f.field_, std::move(out));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return f.field_->degree() == g.field_->degree() && f.field_->modulus() == g.field_->modulus() &&
         f.coeffs_ == g.coeffs_;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const Field& F = *f.field();
  std::vector<Elem> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {Polynomial(f.field()), f};
  std::vector<Elem> quot(f.degree() - dg + 1, 0);
  const Elem lead_inv = F.inv(g.leading());
  for (int i = f.degree(); i >= dg; --i) {
    const Elem c = F.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quot[i - dg] = c;
    for (int j = 0; j <= dg; ++j) rem[i - dg + j] ^= F.mul(c, g.coeffs()[j]);
  }
  rem.resize(dg);
  return {Polynomial(f.field(), std::move(quot)), Polynomial(f.field(), std::move(rem))};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.field());
  auto [q, r] = divmod(f * g, gcd(f, g));
  return q.monic();
}

Polynomial restrict_coefficients(const Polynomial& f, const Embedding& e) {
  std::vector<Elem> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto p = e.preimage(f.coeffs()[i]);
    if (!p) throw InvalidArgument("coefficient " + std::to_string(i) + " is not in the subfield");
    out[i] = *p;
  }
  return Polynomial(e.small(), std::move(out));
}

Polynomial extend_coefficients(const Polynomial& f, const Embedding& e) {
  std::vector<Elem> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = e.apply(f.coeffs()[i]);
  return Polynomial(e.big(), std::move(out));
}

Polynomial from_roots(const FieldPtr& field, const std::vector<Elem>& roots) {
  std::vector<Elem> c{1};
  c.reserve(roots.size() + 1);
  for (Elem r : roots) {
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] ^ field->mul(c[i], r);
    c[0] = field->mul(c[0], r);
  }
  return Polynomial(field, std::move(c));
}

Polynomial minimal_polynomial(const SplittingField& ctx, unsigned s) {
  const std::vector<std::uint32_t> coset = cyclotomic_coset(s % ctx.n, ctx.n, ctx.base->size());
  std::vector<Elem> roots;
  roots.reserve(coset.size());
  for (std::uint32_t i : coset) roots.push_back(ctx.root(i));
  Polynomial in_big = from_roots(ctx.big, roots);
  const unsigned sd = ctx.base->degree();
  for (Elem c : in_big.coeffs()) {
    if (ctx.big->frobenius(c, sd) != c) {
      throw InvalidArgument("minimal polynomial coefficient not fixed by the base Frobenius");
    }
  }
  return restrict_coefficients(in_big, *ctx.embedding);
}

std::vector<Polynomial> factor_xn_minus_1(const SplittingField& ctx) {
  CosetSystem cs(ctx.n, ctx.base->size());
  std::vector<Polynomial> out;
  out.reserve(cs.leaders().size());
  for (std::uint32_t leader : cs.leaders()) out.push_back(minimal_polynomial(ctx, leader));
  return out;
}

}  // namespace quatcode
