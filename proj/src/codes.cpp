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

#include "quatcode/codes.hpp"

#include <algorithm>
#include <string>

#include "quatcode/error.hpp"

namespace quatcode {

namespace {

bool same_field(const Field& a, const Field& b) { return a.degree() == b.degree() && a.modulus() == b.modulus(); }

LinearCode shifts_of(const SplittingField& ctx, const Polynomial& g) {
  const std::size_t n = ctx.n;
  const std::size_t k = n - static_cast<std::size_t>(g.degree());
  Matrix m(ctx.base, k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) m.at(i, i + j) = g.coeffs()[j];
  }
  return LinearCode(std::move(m));
}

}  // namespace

// ---------------------------------------------------------------------------
// LinearCode

LinearCode::LinearCode(Matrix rows) : generator_(std::move(rows)) { generator_.rref(); }

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) { return LinearCode(Matrix(std::move(field), n)); }

LinearCode LinearCode::full(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return LinearCode(std::move(m));
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
  if (message.size() != dimension()) throw InvalidArgument("message length must equal the code dimension");
  const Field& F = *field();
  std::vector<Elem> out(length(), 0);
  for (std::size_t r = 0; r < dimension(); ++r) {
    if (message[r] == 0) continue;
    auto row = generator_.row(r);
    for (std::size_t j = 0; j < length(); ++j) out[j] ^= F.mul(message[r], row[j]);
  }
  return out;
}

bool LinearCode::contains(std::span<const Elem> word) const {
  if (word.size() != length()) return false;
  const Field& F = *field();
  std::vector<Elem> w(word.begin(), word.end());
  for (std::size_t r = 0; r < dimension(); ++r) {
    const Elem f = w[generator_.pivots()[r]];
    if (f == 0) continue;
    auto row = generator_.row(r);
    for (std::size_t j = 0; j < length(); ++j) w[j] ^= F.mul(f, row[j]);
  }
  return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool LinearCode::contains(const LinearCode& sub) const {
  if (!same_field(*field(), *sub.field()) || sub.length() != length()) return false;
  for (std::size_t r = 0; r < sub.dimension(); ++r) {
    if (!contains(sub.generator().row(r))) return false;
  }
  return true;
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return same_field(*a.field(), *b.field()) && a.generator_ == b.generator_;
}

LinearCode dual(const LinearCode& code) {
  const std::size_t n = code.length();
  const Matrix& g = code.generator();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : g.pivots()) is_pivot[p] = true;
  Matrix h(code.field(), n);
  std::vector<Elem> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[j] = 1;
    for (std::size_t r = 0; r < g.rows(); ++r) v[g.pivots()[r]] = g.at(r, j);
    h.append_row(v);
  }
  return LinearCode(std::move(h));
}

std::size_t intersection_dimension(const LinearCode& a, const LinearCode& b) {
  if (!same_field(*a.field(), *b.field()) || a.length() != b.length()) {
    throw InvalidArgument("codes over different fields or lengths");
  }
  Matrix stacked = a.generator();
  stacked.append_rows(b.generator());
  return a.dimension() + b.dimension() - rank(std::move(stacked));
}

bool is_lcd(const LinearCode& code) { return intersection_dimension(code, dual(code)) == 0; }

std::size_t singleton_bound(std::size_t n, std::size_t k) { return n - k + 1; }

// ---------------------------------------------------------------------------
// CyclicCode

CyclicCode::CyclicCode(SplittingFieldPtr ctx, Polynomial g, IndexSet zeros)
    : ctx_(std::move(ctx)), generator_(std::move(g)), zeros_(std::move(zeros)), linear_(shifts_of(*ctx_, generator_)) {}

CyclicCode CyclicCode::from_defining_set(SplittingFieldPtr ctx, const IndexSet& zeros) {
  if (zeros.modulus() != ctx->n) throw InvalidArgument("defining set modulus differs from the code length");
  if (!(coset_closure(zeros, ctx->base->size()) == zeros)) {
    throw InvalidArgument("defining set is not a union of cyclotomic cosets");
  }
  std::vector<Elem> roots;
  roots.reserve(zeros.size());
  for (std::uint32_t i : zeros.elements()) roots.push_back(ctx->root(i));
  Polynomial g = restrict_coefficients(from_roots(ctx->big, roots), *ctx->embedding);
  return CyclicCode(ctx, std::move(g), zeros);
}

CyclicCode CyclicCode::from_generator(SplittingFieldPtr ctx, const Polynomial& g) {
  if (!same_field(*g.field(), *ctx->base)) throw InvalidArgument("generator polynomial over the wrong field");
  if (g.is_zero() || !g.is_monic()) throw InvalidArgument("generator polynomial must be monic");
  if (!divmod(Polynomial::xn_minus_1(ctx->base, ctx->n), g).second.is_zero()) {
    throw InvalidArgument("generator polynomial does not divide x^n - 1");
  }
  IndexSet zeros = zeros_of(*ctx, g);
  return CyclicCode(ctx, g, std::move(zeros));
}

Polynomial CyclicCode::check_polynomial() const {
  return divmod(Polynomial::xn_minus_1(ctx_->base, ctx_->n), generator_).first;
}

IndexSet zeros_of(const SplittingField& ctx, const Polynomial& g) {
  const Polynomial in_big = extend_coefficients(g, *ctx.embedding);
  std::vector<std::uint32_t> out;
  Elem x = 1;
  for (std::uint32_t i = 0; i < ctx.n; ++i) {
    if (in_big.eval(x) == 0) out.push_back(i);
    x = ctx.big->mul(x, ctx.beta);
  }
  return IndexSet(ctx.n, std::move(out));
}

CyclicCode bch_code(const FieldPtr& base, unsigned n, unsigned delta, std::int64_t offset) {
  if (delta < 2 || delta > n) {
    throw InvalidArgument("designed distance must satisfy 2 <= delta <= n, got " + std::to_string(delta));
  }
  auto ctx = splitting_field(base, n);
  Polynomial g = Polynomial::constant(base, 1);
  const std::int64_t nn = n;
  for (std::int64_t i = offset; i <= offset + static_cast<std::int64_t>(delta) - 2; ++i) {
    g = lcm(g, minimal_polynomial(*ctx, static_cast<unsigned>(((i % nn) + nn) % nn)));
  }
  return CyclicCode::from_generator(ctx, g);
}

CyclicCode mds_family_code(unsigned m, unsigned u) {
  auto tower = Tower::get(m);
  const std::uint64_t q = tower->q();
  if (u < 1 || u > q / 2) {
    throw InvalidArgument("u must satisfy 1 <= u <= 2^(m-1) = " + std::to_string(q / 2) + ", got " +
                          std::to_string(u));
  }
  std::vector<std::uint32_t> zeros;
  for (std::uint64_t i = u; i <= q + 1 - u; ++i) zeros.push_back(static_cast<std::uint32_t>(i));
  return CyclicCode::from_defining_set(tower->ctx_q, IndexSet(tower->n(), std::move(zeros)));
}

CyclicCode dual(const CyclicCode& code) {
  return CyclicCode::from_defining_set(code.context(), code.defining_set().complement().negated());
}

unsigned bch_bound(const IndexSet& zeros) {
  const std::uint32_t n = zeros.modulus();
  if (zeros.empty()) return 1;
  if (zeros.size() == n) return n + 1;
  std::uint32_t start = 0;
  while (zeros.contains(start)) ++start;
  unsigned best = 0;
  unsigned run = 0;
  for (std::uint32_t s = 1; s <= n; ++s) {
    if (zeros.contains(static_cast<std::int64_t>(start) + s)) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best + 1;
}

bool is_reversible(const CyclicCode& code) { return code.defining_set().negated() == code.defining_set(); }

std::vector<Elem> cyclic_shift(std::span<const Elem> word) {
  std::vector<Elem> out(word.size());
  if (word.empty()) return out;
  out[0] = word.back();
  std::copy(word.begin(), word.end() - 1, out.begin() + 1);
  return out;
}

nlohmann::ordered_json to_json(const CyclicCode& code) {
  nlohmann::ordered_json j;
  j["field_degree"] = code.field()->degree();
  j["field_modulus"] = code.field()->modulus();
  j["n"] = code.length();
  j["dimension"] = code.dimension();
  j["generator_coeffs"] = code.generator().coeffs();
  j["defining_set"] = code.defining_set().elements();
  return j;
}

CyclicCode cyclic_code_from_json(const nlohmann::ordered_json& j) {
  const unsigned degree = j.at("field_degree").get<unsigned>();
  FieldPtr base = Field::make(degree);
  if (j.contains("field_modulus") && j.at("field_modulus").get<std::uint64_t>() != base->modulus()) {
    base = Field::with_modulus(degree, j.at("field_modulus").get<std::uint64_t>());
  }
  const unsigned n = j.at("n").get<unsigned>();
  auto ctx = splitting_field(base, n);
  CyclicCode code =
      CyclicCode::from_generator(ctx, Polynomial(base, j.at("generator_coeffs").get<std::vector<Elem>>()));
  const IndexSet stated(n, j.at("defining_set").get<std::vector<std::uint32_t>>());
  if (!(stated == code.defining_set())) throw InvalidArgument("descriptor defining set disagrees with its generator");
  return code;
}

}  // namespace quatcode
