#include <doctest.h>

#include <random>

#include "quatcode/error.hpp"
#include "quatcode/galois.hpp"

using namespace quatcode;

namespace {

// Trial division by every polynomial of degree <= deg/2.
bool irreducible_by_trial_division(std::uint64_t f) {
  const int deg = 63 - __builtin_clzll(f);
  for (std::uint64_t g = 2; g < (std::uint64_t{1} << (deg / 2 + 1)); ++g) {
    if (gf2_mod(f, g) == 0) return false;
  }
  return true;
}

// x has multiplicative order 2^deg - 1 modulo f, by repeated multiplication.
bool x_has_full_order(std::uint64_t f) {
  const int deg = 63 - __builtin_clzll(f);
  const std::uint64_t order = (std::uint64_t{1} << deg) - 1;
  std::uint64_t x = 1;
  for (std::uint64_t i = 1; i <= order; ++i) {
    x = gf2_mod(x << 1, f);
    if (x == 1) return i == order;
  }
  return false;
}

}  // namespace

TEST_CASE("smallest primitive polynomials agree with a brute-force search") {
  for (unsigned deg = 1; deg <= 12; ++deg) {
    std::uint64_t expected = 0;
    for (std::uint64_t f = std::uint64_t{1} << deg; f < (std::uint64_t{2} << deg); ++f) {
      if (irreducible_by_trial_division(f) && x_has_full_order(f)) {
        expected = f;
        break;
      }
    }
    CHECK(smallest_primitive_polynomial(deg) == expected);
    CHECK(is_primitive_polynomial(expected));
  }
  CHECK(smallest_primitive_polynomial(2) == 0b111);
  CHECK(smallest_primitive_polynomial(4) == 0b10011);
  CHECK_FALSE(is_primitive_polynomial(0b11111));  // x^4+x^3+x^2+x+1 is irreducible but not primitive
}

TEST_CASE("field axioms hold exhaustively in GF(16) and GF(64)") {
  for (unsigned deg : {4u, 6u}) {
    const FieldPtr F = Field::make(deg);
    const Elem q = static_cast<Elem>(F->size());
    for (Elem a = 0; a < q; ++a) {
      CHECK(F->mul(a, 1) == a);
      CHECK(F->mul(a, 0) == 0);
      if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
      CHECK(F->pow(a, F->size()) == a);
      for (Elem b = 0; b < q; ++b) {
        CHECK(F->mul(a, b) == F->mul(b, a));
        CHECK(F->mul(a, b ^ 1) == (F->mul(a, b) ^ a));
      }
    }
  }
}

TEST_CASE("table-free multiplication agrees with tables on random elements") {
  std::mt19937_64 rng(7);
  for (unsigned deg : {16u, 20u, 24u}) {
    const FieldPtr F = Field::make(deg);
    for (int i = 0; i < 2000; ++i) {
      const Elem a = static_cast<Elem>(rng() % F->size());
      const Elem b = static_cast<Elem>(rng() % F->size());
      const Elem c = static_cast<Elem>(rng() % F->size());
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->mul(a, b ^ c) == (F->mul(a, b) ^ F->mul(a, c)));
      if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
    }
  }
}

TEST_CASE("primitive element has full order and log inverts exp") {
  const FieldPtr F = Field::make(8);
  CHECK(F->element_order(F->primitive()) == 255);
  for (std::uint64_t e = 0; e < 255; ++e) CHECK(F->log(F->exp(e)) == e);
  CHECK(F->element_order(F->exp(17)) == 15);
}

TEST_CASE("embeddings are injective ring homomorphisms onto the fixed field") {
  for (auto [s, k] : {std::pair{2u, 4u}, std::pair{2u, 8u}, std::pair{4u, 8u}, std::pair{3u, 6u}}) {
    const FieldPtr small = Field::make(s);
    const FieldPtr big = Field::make(k);
    const Embedding& e = Embedding::canonical(small, big);
    std::size_t image_size = 0;
    for (Elem z = 0; z < big->size(); ++z) {
      const bool fixed = big->frobenius(z, s) == z;
      CHECK(e.in_image(z) == fixed);
      image_size += fixed ? 1 : 0;
    }
    CHECK(image_size == small->size());
    for (Elem a = 0; a < small->size(); ++a) {
      CHECK(e.pull_back(e.apply(a)) == a);
      for (Elem b = 0; b < small->size(); ++b) {
        CHECK(e.apply(small->mul(a, b)) == big->mul(e.apply(a), e.apply(b)));
        CHECK(e.apply(a ^ b) == (e.apply(a) ^ e.apply(b)));
      }
    }
  }
  CHECK_THROWS_AS(Embedding::by_smallest_root(Field::make(3), Field::make(4)), InvalidTower);
}

TEST_CASE("relative trace is GF(small)-linear and surjective") {
  const FieldPtr small = Field::make(2);
  const FieldPtr big = Field::make(6);
  const Embedding& e = Embedding::canonical(small, big);
  std::vector<std::size_t> fibre(small->size(), 0);
  for (Elem z = 0; z < big->size(); ++z) {
    const Elem t = e.trace(z);
    ++fibre[t];
    for (Elem a = 0; a < small->size(); ++a) CHECK(e.trace(big->mul(e.apply(a), z)) == small->mul(a, t));
  }
  for (auto f : fibre) CHECK(f == big->size() / small->size());
}

TEST_CASE("tower embeddings are compatible") {
  for (unsigned m : {2u, 4u, 6u, 8u}) {
    const auto tower = Tower::get(m);
    REQUIRE(tower->has_gf4());
    const Embedding& q_q2 = *tower->ctx_q->embedding;
    const Embedding& four_q2 = *tower->ctx_4->embedding;
    for (Elem a = 0; a < 4; ++a) CHECK(q_q2.apply(tower->emb_4_q->apply(a)) == four_q2.apply(a));
    CHECK(tower->ctx_q->beta == tower->ctx_4->beta);
    CHECK(tower->ctx_q->big->degree() == 2 * m);
  }
  CHECK_FALSE(Tower::get(3)->has_gf4());
}

TEST_CASE("beta is a primitive n-th root of unity") {
  const auto tower = Tower::get(4);
  const SplittingField& ctx = *tower->ctx_q;
  const Field& big = *ctx.big;
  CHECK(big.element_order(ctx.beta) == 17);
  const auto roots = unity_roots(17, big);
  REQUIRE(roots.size() == 17);
  for (std::uint32_t i = 0; i < 17; ++i) CHECK(roots[i] == ctx.root(i));
  CHECK_THROWS_AS(unity_roots(7, big), InvalidArgument);
}
