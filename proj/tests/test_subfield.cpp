#include <doctest.h>

#include <random>

#include "quatcode/error.hpp"
#include "quatcode/subfield.hpp"
#include "quatcode/weights.hpp"

using namespace quatcode;

TEST_CASE("quaternary codes at h = 2: parent [17,9,9], subcode [17,4,12] and trace code [17,13,4]") {
  const CyclicCode parent = quaternary_parent(2);
  CHECK(parent.length() == 17);
  CHECK(parent.dimension() == 9);
  CHECK(bch_bound(parent) == 9);

  const CyclicCode sub = quaternary_code(2);
  CHECK(sub.dimension() == 4);
  CHECK(sub.defining_set() == build_T(2));
  CHECK(weight_distribution(sub.linear()).min_distance() == 12u);

  const LinearCode tr = quaternary_trace_code(2);
  CHECK(tr.dimension() == 13);
  CHECK(tr == dual(sub.linear()));
}

TEST_CASE("h = 3: subcode dimension 8 and trace code dimension 57") {
  CHECK(quaternary_code(3).dimension() == 8);
  CHECK(quaternary_trace_code(3).dimension() == 57);
}

TEST_CASE("property: the quaternary subcode has dimension 2^h and zeros T") {
  for (unsigned h = 1; h <= 4; ++h) {
    const CyclicCode c = quaternary_code(h);
    CHECK(c.dimension() == (std::size_t{1} << h));
    CHECK(c.defining_set() == build_T(h));
    CHECK(c.field()->size() == 4);
  }
  CHECK_THROWS_AS(quaternary_tower(0), InvalidTower);
  CHECK_THROWS_AS(quaternary_tower(5), InvalidTower);
}

TEST_CASE("defining-set route agrees with the coordinate expansion") {
  for (unsigned h = 1; h <= 3; ++h) {
    const auto tower = quaternary_tower(h);
    const CyclicCode pd = dual(quaternary_parent(h));
    CHECK(subfield_subcode(pd, *tower).linear() == subfield_subcode_expand(pd.linear(), *tower));
  }
}

TEST_CASE("component filter agrees with the other routes on small parents") {
  {
    const auto tower = quaternary_tower(1);
    const CyclicCode pd = dual(quaternary_parent(1));
    CHECK(subfield_subcode_filter(pd.linear(), *tower, 1u << 20) == subfield_subcode(pd, *tower).linear());
  }
  const auto tower = quaternary_tower(2);
  for (unsigned u : {2u, 3u}) {
    const CyclicCode c = mds_family_code(4, u);  // 16^3 and 16^5 codewords
    const LinearCode filtered = subfield_subcode_filter(c.linear(), *tower, 1u << 20);
    CHECK(filtered == subfield_subcode(c, *tower).linear());
    CHECK(filtered == subfield_subcode_expand(c.linear(), *tower));
  }
  CHECK_THROWS_AS(subfield_subcode_filter(quaternary_parent(2).linear(), *tower, 1000), ResourceLimit);
}

TEST_CASE("degenerate parents: full space and zero code") {
  const auto tower = quaternary_tower(2);
  const LinearCode full = LinearCode::full(tower->gf_q, 17);
  CHECK(subfield_subcode_expand(full, *tower) == LinearCode::full(tower->gf4, 17));
  CHECK(subfield_code(full, *tower) == LinearCode::full(tower->gf4, 17));
  const LinearCode zero = LinearCode::zero(tower->gf_q, 17);
  CHECK(subfield_code(zero, *tower).dimension() == 0);
  CHECK(subfield_subcode_expand(zero, *tower).dimension() == 0);
  CHECK(verify_delsarte(full, *tower).passed());
  CHECK(verify_delsarte(zero, *tower).passed());
}

TEST_CASE("property: duality of trace code and subfield subcode for h = 1..4") {
  for (unsigned h = 1; h <= 4; ++h) {
    const Report r = verify_delsarte(quaternary_parent(h), *quaternary_tower(h));
    INFO("h=" << h << " " << (r.first_failure() ? r.first_failure()->detail : ""));
    CHECK(r.passed());
  }
}

TEST_CASE("property: duality holds for random parents over GF(16)") {
  std::mt19937_64 rng(314);
  const auto tower = quaternary_tower(2);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 3 + rng() % 10;
    Matrix g(tower->gf_q, 1 + rng() % std::min<std::size_t>(n - 1, 5), n);
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t j = 0; j < n; ++j) g.at(r, j) = static_cast<Elem>(rng() % 16);
    }
    const LinearCode parent(std::move(g));
    CHECK(verify_delsarte(parent, *tower).passed());
    CHECK(subfield_subcode_filter(parent, *tower, 1u << 22) == subfield_subcode_expand(parent, *tower));
  }
}

TEST_CASE("containment: [17,5,9] subcode is properly inside [17,13,4]") {
  const auto tower = quaternary_tower(2);
  const LinearCode parent = quaternary_parent(2).linear();
  const LinearCode sub = subfield_subcode_expand(parent, *tower);
  const LinearCode tr = quaternary_trace_code(2);
  CHECK(sub.dimension() == 5);
  CHECK(weight_distribution(sub).min_distance() == 9u);
  CHECK(tr.contains(sub));
  CHECK(sub.dimension() < tr.dimension());
}

TEST_CASE("GF(4)-bases") {
  const auto tower = quaternary_tower(3);
  CHECK(is_gf4_basis(*tower, default_gf4_basis(*tower)));
  CHECK_FALSE(is_gf4_basis(*tower, {1, 1, 2}));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) CHECK(is_gf4_basis(*tower, random_gf4_basis(*tower, rng)));
}

TEST_CASE("trace representation spans the trace code over exponents 0..q/4") {
  for (unsigned h = 1; h <= 3; ++h) {
    const auto tower = quaternary_tower(h);
    const std::uint32_t n = tower->n();
    std::vector<std::uint32_t> low;
    for (std::uint32_t i = 0; i <= tower->q() / 4; ++i) low.push_back(i);
    CHECK(trace_representation_code(*tower, IndexSet(n, low)) == quaternary_trace_code(h));
    CHECK(trace_representation_code(*tower, build_Tc(h)) == quaternary_code(h).linear());
  }
}

TEST_CASE("random trace-representation words lie in the subcode") {
  const auto tower = quaternary_tower(2);
  const LinearCode sub = quaternary_code(2).linear();
  const Field& big = *tower->ctx_4->big;
  std::mt19937_64 rng(5);
  const IndexSet Tc = build_Tc(2);
  Matrix collected(tower->gf4, 17);
  for (int i = 0; i < 200; ++i) {
    std::vector<TraceTerm> terms;
    for (std::uint32_t e : Tc.elements()) terms.emplace_back(e, static_cast<Elem>(rng() % big.size()));
    const auto w = trace_representation_word(*tower, terms);
    CHECK(sub.contains(w));
    collected.append_row(w);
  }
  CHECK(LinearCode(std::move(collected)) == sub);  // 200 random words span all 4 dimensions
}
