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

#include "quatcode/galois.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "quatcode/error.hpp"

namespace quatcode {

namespace {

unsigned poly_degree(std::uint64_t p) { return p == 0 ? 0 : 63 - std::countl_zero(p); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return gf2_mod(clmul(a, b), m);
}

std::uint64_t powmod_x(std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1;
  std::uint64_t base = gf2_mod(2, m);
  while (e != 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Evaluates a GF(2)[x] polynomial at an element of `field`.
Elem eval_gf2_poly(std::uint64_t poly, const Field& field, Elem x) {
  Elem acc = 0;
  for (int i = static_cast<int>(poly_degree(poly)); i >= 0; --i) {
    acc = field.mul(acc, x);
    if ((poly >> i) & 1) acc ^= 1;
  }
  return acc;
}

}  // namespace

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
  return a;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_primitive_polynomial(std::uint64_t poly) {
  const unsigned k = poly_degree(poly);
  if (k == 0 || k > Field::kMaxDegree) return false;
  const std::uint64_t order = (std::uint64_t{1} << k) - 1;
  if (powmod_x(order, poly) != 1) return false;
  for (std::uint64_t p : distinct_prime_factors(order)) {
    if (powmod_x(order / p, poly) == 1) return false;
  }
  return true;
}

std::uint64_t smallest_primitive_polynomial(unsigned degree) {
  if (degree == 0 || degree > Field::kMaxDegree) {
    throw InvalidArgument("field degree must be in [1, 32], got " + std::to_string(degree));
  }
  const std::uint64_t lo = std::uint64_t{1} << degree;
  for (std::uint64_t cand = lo | 1; cand < (lo << 1); cand += 2) {
    if (is_primitive_polynomial(cand)) return cand;
  }
  throw InvalidArgument("no primitive polynomial found");  // unreachable
}

// ---------------------------------------------------------------------------
// Field

Field::Field(unsigned degree, std::uint64_t modulus) : degree_(degree), modulus_(modulus) {
  factors_ = distinct_prime_factors(order());
  primitive_ = static_cast<Elem>(gf2_mod(2, modulus_));
  if (degree_ <= kMaxTableDegree) {
    const std::uint64_t ord = order();
    exp_.resize(2 * ord + 1);
    log_.assign(size(), 0);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < ord; ++i) {
      exp_[i] = static_cast<Elem>(v);
      log_[v] = static_cast<std::uint32_t>(i);
      v = mulmod(v, primitive_, modulus_);
    }
    for (std::uint64_t i = ord; i < exp_.size(); ++i) exp_[i] = exp_[i - ord];
  }
}

FieldPtr Field::with_modulus(unsigned degree, std::uint64_t modulus) {
  if (degree == 0 || degree > kMaxDegree || poly_degree(modulus) != degree) {
    throw InvalidArgument("modulus degree mismatch");
  }
  if (!is_primitive_polynomial(modulus)) throw InvalidArgument("modulus is not primitive");
  return FieldPtr(new Field(degree, modulus));
}

FieldPtr Field::make(unsigned degree) {
  static std::mutex mu;
  static std::map<unsigned, FieldPtr> cache;
  if (degree == 0 || degree > kMaxDegree) {
    throw InvalidArgument("field degree must be in [1, 32], got " + std::to_string(degree));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  FieldPtr f(new Field(degree, smallest_primitive_polynomial(degree)));
  cache.emplace(degree, f);
  return f;
}

Elem Field::mul_slow(Elem x, Elem y) const { return static_cast<Elem>(mulmod(x, y, modulus_)); }

Elem Field::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  if (!exp_.empty()) return exp_[log_[x] + log_[y]];
  return mul_slow(x, y);
}

Elem Field::inv(Elem x) const {
  if (x == 0) throw InvalidArgument("inverse of zero");
  if (!exp_.empty()) return exp_[order() - log_[x]];
  return pow(x, order() - 1);
}

Elem Field::pow(Elem x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  if (!exp_.empty()) return exp_[(static_cast<std::uint64_t>(log_[x]) * (e % order())) % order()];
  Elem result = 1;
  Elem base = x;
  while (e != 0) {
    if (e & 1) result = mul_slow(result, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::frobenius(Elem x, unsigned s) const {
  for (unsigned i = 0; i < s; ++i) x = mul(x, x);
  return x;
}

Elem Field::exp(std::uint64_t e) const {
  e %= order();
  if (!exp_.empty()) return exp_[e];
  return pow(primitive_, e);
}

std::uint64_t Field::log(Elem x) const {
  if (x == 0) throw InvalidArgument("log of zero");
  if (exp_.empty()) throw InvalidArgument("discrete log needs a tabulated field (degree <= 16)");
  return log_[x];
}

std::uint64_t Field::element_order(Elem x) const {
  if (x == 0) throw InvalidArgument("order of zero");
  std::uint64_t n = order();
  for (std::uint64_t p : factors_) {
    while (n % p == 0 && pow(x, n / p) == 1) n /= p;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Embedding

Embedding::Embedding(FieldPtr small, FieldPtr big, Elem image)
    : small_(std::move(small)), big_(std::move(big)), generator_image_(image) {
  if (small_->degree() > Field::kMaxTableDegree) {
    throw InvalidTower("subfield embeddings support subfields of degree <= 16");
  }
  const std::uint64_t ss = small_->size();
  forward_.resize(ss);
  std::vector<Elem> powers(small_->degree());
  Elem p = 1;
  for (unsigned i = 0; i < small_->degree(); ++i) {
    powers[i] = p;
    p = big_->mul(p, image);
  }
  for (std::uint64_t x = 0; x < ss; ++x) {
    Elem acc = 0;
    for (unsigned i = 0; i < small_->degree(); ++i) {
      if ((x >> i) & 1) acc ^= powers[i];
    }
    forward_[x] = acc;
  }
  if (big_->degree() <= Field::kMaxTableDegree) {
    inverse_dense_.assign(big_->size(), -1);
    for (std::uint64_t x = 0; x < ss; ++x) inverse_dense_[forward_[x]] = static_cast<std::int64_t>(x);
  } else {
    for (std::uint64_t x = 0; x < ss; ++x) inverse_sparse_.emplace(forward_[x], static_cast<Elem>(x));
  }
}

Embedding Embedding::with_generator_image(FieldPtr small, FieldPtr big, Elem image) {
  if (big->degree() % small->degree() != 0) {
    throw InvalidTower("GF(2^" + std::to_string(small->degree()) + ") is not a subfield of GF(2^" +
                       std::to_string(big->degree()) + ")");
  }
  if (!big->contains(image) || eval_gf2_poly(small->modulus(), *big, image) != 0) {
    throw InvalidArgument("generator image is not a root of the subfield modulus");
  }
  return Embedding(std::move(small), std::move(big), image);
}

Embedding Embedding::by_smallest_root(FieldPtr small, FieldPtr big) {
  const unsigned s = small->degree();
  const unsigned k = big->degree();
  if (k % s != 0) {
    throw InvalidTower("GF(2^" + std::to_string(s) + ") is not a subfield of GF(2^" + std::to_string(k) + ")");
  }
  if (s == k && small->modulus() == big->modulus()) {
    return Embedding(small, big, big->primitive());
  }
  // Roots of the small modulus lie in the unique subfield of order 2^s,
  // which is generated by alpha^((2^k - 1) / (2^s - 1)).
  const Elem gamma = big->pow(big->primitive(), big->order() / small->order());
  Elem best = 0;
  bool found = false;
  Elem z = 1;
  for (std::uint64_t j = 0; j < small->order(); ++j) {
    if (eval_gf2_poly(small->modulus(), *big, z) == 0 && (!found || z < best)) {
      best = z;
      found = true;
    }
    z = big->mul(z, gamma);
  }
  if (!found) throw InvalidTower("subfield modulus has no root in the big field");
  return Embedding(std::move(small), std::move(big), best);
}

const Embedding& Embedding::canonical(const FieldPtr& small, const FieldPtr& big) {
  using Key = std::tuple<unsigned, std::uint64_t, unsigned, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<Embedding>> cache;
  const Key key{small->degree(), small->modulus(), big->degree(), big->modulus()};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto e = std::make_unique<Embedding>(by_smallest_root(small, big));
  const Embedding& ref = *e;
  cache.emplace(key, std::move(e));
  return ref;
}

Elem Embedding::apply(Elem x) const { return forward_.at(x); }

std::optional<Elem> Embedding::preimage(Elem z) const {
  if (!inverse_dense_.empty()) {
    if (z >= inverse_dense_.size() || inverse_dense_[z] < 0) return std::nullopt;
    return static_cast<Elem>(inverse_dense_[z]);
  }
  auto it = inverse_sparse_.find(z);
  if (it == inverse_sparse_.end()) return std::nullopt;
  return it->second;
}

bool Embedding::in_image(Elem z) const { return preimage(z).has_value(); }

Elem Embedding::pull_back(Elem z) const {
  auto p = preimage(z);
  if (!p) throw InvalidArgument("element is not in the subfield image");
  return *p;
}

Elem Embedding::trace_in_big(Elem z) const {
  Elem acc = 0;
  const unsigned s = small_->degree();
  for (unsigned i = 0; i < relative_degree(); ++i) {
    acc ^= z;
    z = big_->frobenius(z, s);
  }
  return acc;
}

Embedding compose(const Embedding& outer, const Embedding& inner) {
  if (inner.big_->degree() != outer.small_->degree() || inner.big_->modulus() != outer.small_->modulus()) {
    throw InvalidTower("embeddings do not chain");
  }
  return Embedding::with_generator_image(inner.small_, outer.big_, outer.apply(inner.generator_image_));
}

Elem trace(const FieldPtr& big, Elem x, const FieldPtr& target) {
  return Embedding::canonical(target, big).trace(x);
}

std::vector<Elem> unity_roots(std::uint64_t n, const Field& field) {
  if (n == 0 || field.order() % n != 0) {
    throw InvalidArgument(std::to_string(n) + " does not divide 2^" + std::to_string(field.degree()) + " - 1");
  }
  const Elem beta = field.exp(field.order() / n);
  std::vector<Elem> out(n);
  Elem v = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    out[i] = v;
    v = field.mul(v, beta);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Splitting fields and the quaternary tower

Elem SplittingField::root(std::int64_t i) const {
  const std::int64_t nn = n;
  return big->pow(beta, static_cast<std::uint64_t>(((i % nn) + nn) % nn));
}

SplittingFieldPtr splitting_field(const FieldPtr& base, unsigned n) {
  if (n == 0 || n % 2 == 0) throw InvalidArgument("cyclic code length must be odd, got " + std::to_string(n));
  using Key = std::tuple<unsigned, std::uint64_t, unsigned>;
  static std::mutex mu;
  static std::map<Key, SplittingFieldPtr> cache;
  const Key key{base->degree(), base->modulus(), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const unsigned s = base->degree();
  unsigned big_degree = 0;
  for (unsigned k = s; k <= Field::kMaxDegree; k += s) {
    if (((std::uint64_t{1} << k) - 1) % n == 0) {
      big_degree = k;
      break;
    }
  }
  if (big_degree == 0) {
    throw InvalidArgument("no extension of degree <= 32 contains primitive " + std::to_string(n) + "-th roots of unity");
  }
  auto sf = std::make_shared<SplittingField>();
  sf->base = base;
  sf->big = big_degree == s ? base : Field::make(big_degree);
  sf->embedding = std::make_shared<Embedding>(Embedding::canonical(base, sf->big));
  sf->n = n;
  sf->beta = sf->big->pow(sf->big->primitive(), sf->big->order() / n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, sf).first->second;
}

TowerPtr Tower::get(unsigned m) {
  if (m < 1 || m > 8) throw InvalidArgument("tower exponent m must be in [1, 8], got " + std::to_string(m));
  static std::mutex mu;
  static std::map<unsigned, TowerPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto t = std::make_shared<Tower>();
  t->m = m;
  t->gf_q = Field::make(m);
  t->gf_q2 = Field::make(2 * m);
  t->ctx_q = splitting_field(t->gf_q, t->n());
  if (m % 2 == 0) {
    t->gf4 = Field::make(2);
    t->ctx_4 = splitting_field(t->gf4, t->n());
    // GF(4) -> GF(q) is chosen so that it agrees with both canonical maps
    // into GF(q^2).
    const Elem omega_in_q = t->ctx_q->embedding->pull_back(t->ctx_4->embedding->generator_image());
    t->emb_4_q = std::make_shared<Embedding>(Embedding::with_generator_image(t->gf4, t->gf_q, omega_in_q));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, t).first->second;
}

}  // namespace quatcode
