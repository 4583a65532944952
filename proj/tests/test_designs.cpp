#include <doctest.h>

#include <random>

#include "quatcode/designs.hpp"
#include "quatcode/error.hpp"
#include "quatcode/subfield.hpp"

using namespace quatcode;

namespace {

// Blocks through {x, y, z}, by scanning every block.
std::uint64_t blocks_through(const SupportDesign& d, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
  std::uint64_t count = 0;
  for (const auto& b : d.blocks) {
    const auto has = [&](std::uint32_t p) { return std::binary_search(b.begin(), b.end(), p); };
    count += (has(x) && has(y) && has(z)) ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("colex rank and unrank are inverse bijections") {
  for (std::size_t t = 1; t <= 4; ++t) {
    const std::uint64_t total = static_cast<std::uint64_t>(binomial(12, t));
    for (std::uint64_t r = 0; r < total; ++r) {
      const Block b = colex_unrank(r, t);
      REQUIRE(b.size() == t);
      CHECK(std::is_sorted(b.begin(), b.end()));
      CHECK(b.back() < 12);
      CHECK(colex_rank(b) == r);
    }
  }
  CHECK(binomial(65, 3) == 43680);
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("h = 2 supports: 204 codewords give 68 blocks, a 3-(17,12,22) design") {
  const auto designs = support_designs(quaternary_code(2).linear());
  REQUIRE(designs.count(12) == 1);
  const SupportDesign& d = designs.at(12);
  CHECK(d.codewords == 204);
  CHECK(d.b() == 68);
  const DesignVerdict v = verify_design(d, 3);
  CHECK(v.lambda == 22u);
  CHECK(design_identity_holds(d, v));
  for (std::uint32_t x = 0; x < 17; ++x) {
    for (std::uint32_t y = x + 1; y < 17; ++y) {
      for (std::uint32_t z = y + 1; z < 17; ++z) CHECK(blocks_through(d, x, y, z) == 22);
    }
  }
  CHECK(designs.at(16).b() == 17);
  CHECK(verify_design(designs.at(16), 3).lambda == 14u);
}

TEST_CASE("h = 3 supports at k = 44: 18720 codewords, 6240 blocks, lambda = 1892") {
  const SupportDesign d = supports(quaternary_code(3).linear(), 44);
  CHECK(d.codewords == 18720);
  CHECK(d.b() == 6240);
  const DesignVerdict v = verify_design(d, 3, 4);
  CHECK(v.lambda == 1892u);
  CHECK(design_identity_holds(d, v));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    Block s = colex_unrank(rng() % 43680, 3);
    CHECK(blocks_through(d, s[0], s[1], s[2]) == 1892);
  }
}

TEST_CASE("thread count does not change the verdict") {
  const SupportDesign d = supports(quaternary_code(3).linear(), 52);
  const DesignVerdict one = verify_design(d, 3, 1);
  for (unsigned t : {2u, 5u, 8u}) CHECK(verify_design(d, 3, t).lambda == one.lambda);
}

TEST_CASE("property: complete designs have lambda = C(v - t, k - t)") {
  for (std::size_t v = 3; v <= 9; ++v) {
    for (std::size_t k = 1; k <= v; ++k) {
      const SupportDesign d = complete_design(v, k);
      CHECK(d.b() == static_cast<std::size_t>(binomial(v, k)));
      for (unsigned t = 1; t <= std::min<std::size_t>(k, 3); ++t) {
        const DesignVerdict verdict = verify_design(d, t);
        CHECK(verdict.lambda == static_cast<std::uint64_t>(binomial(v - t, k - t)));
        CHECK(design_identity_holds(d, verdict));
      }
    }
  }
}

TEST_CASE("non-designs report a counterexample") {
  SupportDesign d;
  d.v = 5;
  d.k = 3;
  d.blocks = {{0, 1, 2}, {0, 1, 3}};
  const DesignVerdict v = verify_design(d, 1);
  CHECK_FALSE(v.is_design());
  REQUIRE(v.counterexample.has_value());
  CHECK(*v.counterexample == Block{2});  // point counts are 2, 2, 1, 1, 0
  CHECK(v.counterexample_count == 1);
  CHECK_FALSE(design_identity_holds(d, v));

  SupportDesign empty;
  empty.v = 6;
  empty.k = 3;
  CHECK(verify_design(empty, 2).lambda == 0u);
  CHECK_THROWS_AS(verify_design(d, 9), InvalidArgument);
}

TEST_CASE("support designs of the zero code and budget limits") {
  CHECK(support_designs(LinearCode::zero(Field::make(2), 5)).empty());
  EnumerationOptions tiny{100, 1};
  CHECK_THROWS_AS(support_designs(quaternary_code(2).linear(), tiny), ResourceLimit);
}

TEST_CASE("Assmus-Mattson bookkeeping") {
  const auto primal = weight_distribution(quaternary_code(3).linear());
  const auto dual = macwilliams(primal);
  const AssmusMattson am = assmus_mattson(primal, dual, 3);
  CHECK(am.applicable);
  CHECK(am.d == 44);
  CHECK(am.d_perp == 5);
  CHECK(am.condition == (am.s <= am.d - 3));
  // Whatever the theorem certifies, the designs are verified directly.
  for (std::size_t k : primal.support()) {
    if (k == 0 || k >= 65) continue;
    CHECK(verify_design(supports(quaternary_code(3).linear(), k), 3, 4).is_design());
  }

  const auto small = weight_distribution(quaternary_code(1).linear());  // d = 4
  CHECK_FALSE(assmus_mattson(small, macwilliams(small), 4).applicable);
}

TEST_CASE("JSON export keeps large integers as strings") {
  const SupportDesign d = supports(quaternary_code(2).linear(), 12);
  const auto j = to_json(d, verify_design(d, 3), true);
  CHECK(j.at("lambda") == "22");
  CHECK(j.at("b") == "68");
  CHECK(j.at("blocks").size() == 68);
  CHECK(j.at("identity_b_Ckt_eq_lambda_Cvt") == true);
}
