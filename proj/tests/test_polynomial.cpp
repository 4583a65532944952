#include <doctest.h>

#include <random>

#include "quatcode/error.hpp"
#include "quatcode/polynomial.hpp"

using namespace quatcode;

namespace {

Polynomial random_poly(const FieldPtr& F, int degree, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = static_cast<Elem>(rng() % F->size());
  c.back() = static_cast<Elem>(1 + rng() % (F->size() - 1));
  return Polynomial(F, c);
}

}  // namespace

TEST_CASE("division identity f = q g + r with deg r < deg g") {
  std::mt19937_64 rng(3);
  const FieldPtr F = Field::make(4);
  for (int i = 0; i < 200; ++i) {
    const Polynomial f = random_poly(F, static_cast<int>(rng() % 12), rng);
    const Polynomial g = random_poly(F, 1 + static_cast<int>(rng() % 6), rng);
    const auto [q, r] = divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
  }
  CHECK_THROWS_AS(divmod(Polynomial::constant(F, 1), Polynomial(F)), InvalidArgument);
}

TEST_CASE("gcd divides both arguments and lcm is a common multiple") {
  std::mt19937_64 rng(5);
  const FieldPtr F = Field::make(2);
  for (int i = 0; i < 100; ++i) {
    const Polynomial common = random_poly(F, 1 + static_cast<int>(rng() % 3), rng);
    const Polynomial f = common * random_poly(F, static_cast<int>(rng() % 4), rng);
    const Polynomial g = common * random_poly(F, static_cast<int>(rng() % 4), rng);
    const Polynomial d = gcd(f, g);
    CHECK(d.is_monic());
    CHECK(divmod(f, d).second.is_zero());
    CHECK(divmod(g, d).second.is_zero());
    CHECK(divmod(d, common.monic()).second.is_zero());
    const Polynomial l = lcm(f, g);
    CHECK(divmod(l, f).second.is_zero());
    CHECK(divmod(l, g).second.is_zero());
  }
}

TEST_CASE("from_roots vanishes exactly at its roots") {
  const FieldPtr F = Field::make(4);
  const std::vector<Elem> roots = {1, 3, 7, 12};
  const Polynomial p = from_roots(F, roots);
  CHECK(p.degree() == 4);
  CHECK(p.is_monic());
  for (Elem x = 0; x < 16; ++x) {
    const bool root = std::find(roots.begin(), roots.end(), x) != roots.end();
    CHECK((p.eval(x) == 0) == root);
  }
}

TEST_CASE("minimal polynomials factor x^n - 1 over the base field") {
  for (auto [deg, n] : {std::pair{2u, 5u}, std::pair{2u, 17u}, std::pair{4u, 17u}, std::pair{1u, 15u},
                        std::pair{2u, 65u}, std::pair{3u, 9u}}) {
    const auto ctx = splitting_field(Field::make(deg), n);
    const auto factors = factor_xn_minus_1(*ctx);
    Polynomial prod = Polynomial::constant(ctx->base, 1);
    for (const auto& f : factors) {
      CHECK(f.is_monic());
      prod = prod * f;
    }
    CHECK(prod == Polynomial::xn_minus_1(ctx->base, n));
  }
}

TEST_CASE("minimal polynomial of beta^s has the coset of s as its roots") {
  const auto ctx = splitting_field(Field::make(2), 17);  // 4-cosets mod 17
  const Polynomial m1 = minimal_polynomial(*ctx, 1);
  CHECK(m1.degree() == 4);  // ord_17(4) = 4
  const Polynomial big = extend_coefficients(m1, *ctx->embedding);
  for (std::uint32_t i = 0; i < 17; ++i) {
    const bool in_coset = i == 1 || i == 4 || i == 16 || i == 13;
    CHECK((big.eval(ctx->root(i)) == 0) == in_coset);
  }
  CHECK(minimal_polynomial(*ctx, 0).degree() == 1);
}

TEST_CASE("restriction rejects coefficients outside the subfield") {
  const FieldPtr small = Field::make(2);
  const FieldPtr big = Field::make(4);
  const Embedding& e = Embedding::canonical(small, big);
  const Polynomial inside(big, {e.apply(2), 1, e.apply(3)});
  CHECK(restrict_coefficients(inside, e) == Polynomial(small, {2, 1, 3}));
  const Polynomial outside(big, {2, 1});  // x is not in GF(4) inside GF(16)
  CHECK_THROWS_AS(restrict_coefficients(outside, e), InvalidArgument);
}
