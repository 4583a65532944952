#include <doctest.h>

#include <random>

#include "quatcode/codes.hpp"
#include "quatcode/error.hpp"
#include "quatcode/weights.hpp"

using namespace quatcode;

namespace {

// Number of weight-w words of an [n, k, n-k+1] MDS code over GF(q).
BigInt mds_weight_count(std::size_t n, std::size_t k, std::uint64_t q, std::size_t w) {
  const std::size_t d = n - k + 1;
  if (w == 0) return 1;
  if (w < d) return 0;
  auto C = [](std::size_t a, std::size_t b) {
    BigInt r = 1;
    for (std::size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  BigInt sum = 0;
  for (std::size_t j = 0; j <= w - d; ++j) {
    BigInt term = C(w, j) * (pow(BigInt(q), static_cast<unsigned>(w - d + 1 - j)) - 1);
    sum += (j % 2 == 0) ? term : BigInt(-term);
  }
  return C(n, w) * sum;
}

}  // namespace

TEST_CASE("MDS family examples") {
  const CyclicCode c45 = mds_family_code(4, 5);
  CHECK(c45.length() == 17);
  CHECK(c45.dimension() == 9);
  CHECK(bch_bound(c45) == 9);

  const CyclicCode c21 = mds_family_code(2, 1);
  CHECK(c21.length() == 5);
  CHECK(c21.dimension() == 1);
  CHECK(weight_distribution(c21.linear()).min_distance() == 5u);

  const CyclicCode c32 = mds_family_code(3, 2);
  const auto dist = weight_distribution(c32.linear());
  CHECK(c32.dimension() == 3);
  CHECK(dist.min_distance() == 7u);

  CHECK_THROWS_AS(mds_family_code(4, 9), InvalidArgument);
  CHECK_THROWS_AS(mds_family_code(4, 0), InvalidArgument);
}

TEST_CASE("MDS weight distributions match the closed-form MDS counts") {
  for (auto [m, u] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{4u, 2u}}) {
    const CyclicCode code = mds_family_code(m, u);
    const auto dist = weight_distribution(code.linear());
    const std::uint64_t q = std::uint64_t{1} << m;
    for (std::size_t w = 0; w <= code.length(); ++w) {
      CHECK(dist.counts[w] == mds_weight_count(code.length(), code.dimension(), q, w));
    }
  }
}

TEST_CASE("property: C_u is reversible, LCD and MDS by the BCH bound for m <= 5") {
  for (unsigned m = 1; m <= 5; ++m) {
    const std::uint64_t q = std::uint64_t{1} << m;
    for (unsigned u = 1; u <= q / 2; ++u) {
      const CyclicCode c = mds_family_code(m, u);
      CHECK(c.dimension() == 2 * u - 1);
      CHECK(is_reversible(c));
      CHECK(is_lcd(c.linear()));
      CHECK(bch_bound(c) == q - 2 * u + 3);
    }
  }
}

TEST_CASE("generator and defining set describe the same cyclic code") {
  const CyclicCode c = mds_family_code(4, 3);
  CHECK(zeros_of(*c.context(), c.generator()) == c.defining_set());
  const CyclicCode again = CyclicCode::from_generator(c.context(), c.generator());
  CHECK(again == c);
  CHECK(c.generator() * c.check_polynomial() == Polynomial::xn_minus_1(c.field(), c.length()));
}

TEST_CASE("cyclic codes are closed under the cyclic shift") {
  std::mt19937_64 rng(11);
  const CyclicCode c = mds_family_code(3, 3);
  std::vector<Elem> msg(c.dimension());
  for (int i = 0; i < 50; ++i) {
    for (auto& x : msg) x = static_cast<Elem>(rng() % 8);
    const auto w = c.linear().encode(msg);
    CHECK(c.linear().contains(cyclic_shift(w)));
  }
}

TEST_CASE("duals: defining-set dual equals the null-space dual") {
  for (auto [m, u] : {std::pair{2u, 2u}, std::pair{4u, 3u}, std::pair{4u, 5u}, std::pair{6u, 17u}}) {
    const CyclicCode c = mds_family_code(m, u);
    const CyclicCode d = dual(c);
    CHECK(d.linear() == dual(c.linear()));
    CHECK(dual(d) == c);
    CHECK(d.dimension() + c.dimension() == c.length());
  }
}

TEST_CASE("linear code basics") {
  const FieldPtr F = Field::make(2);
  const LinearCode z = LinearCode::zero(F, 6);
  CHECK(z.dimension() == 0);
  CHECK(dual(z) == LinearCode::full(F, 6));
  Matrix rep(F, 1, 7);
  for (std::size_t j = 0; j < 7; ++j) rep.at(0, j) = 1;
  const LinearCode r(rep);
  CHECK(weight_distribution(r).min_distance() == 7u);
  CHECK(min_distance(r).lower == 7);
  CHECK(singleton_bound(7, 1) == 7);
}

TEST_CASE("BCH bound of special defining sets") {
  CHECK(bch_bound(IndexSet(7, {})) == 1);
  CHECK(bch_bound(IndexSet(7, {0, 1, 2, 3, 4, 5, 6})) == 8);
  CHECK(bch_bound(IndexSet(7, {5, 6, 0, 1})) == 5);  // wraps around
  CHECK(bch_bound(IndexSet(7, {1, 3})) == 2);
}

TEST_CASE("BCH codes over GF(2)") {
  const CyclicCode hamming = bch_code(Field::make(1), 7, 3, 1);
  CHECK(hamming.dimension() == 4);
  CHECK(weight_distribution(hamming.linear()).min_distance() == 3u);
  const CyclicCode bch15 = bch_code(Field::make(1), 15, 5, 1);
  CHECK(bch15.dimension() == 7);
  CHECK(weight_distribution(bch15.linear()).min_distance() == 5u);
}

TEST_CASE("invalid cyclic code inputs are rejected") {
  const auto ctx = splitting_field(Field::make(2), 17);
  CHECK_THROWS_AS(CyclicCode::from_defining_set(ctx, IndexSet(17, {1})), InvalidArgument);
  CHECK_THROWS_AS(CyclicCode::from_generator(ctx, Polynomial(Field::make(2), {1, 1, 1})), InvalidArgument);
  CHECK_THROWS_AS(CyclicCode::from_generator(ctx, Polynomial(Field::make(4), {1, 1})), InvalidArgument);
}

TEST_CASE("JSON descriptor round trip") {
  const CyclicCode c = mds_family_code(4, 5);
  const auto j = to_json(c);
  CHECK(j.at("n") == 17);
  CHECK(cyclic_code_from_json(j) == c);
  auto bad = j;
  bad["defining_set"] = std::vector<std::uint32_t>{1, 2};
  CHECK_THROWS_AS(cyclic_code_from_json(bad), InvalidArgument);
}
