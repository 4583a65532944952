#include <doctest.h>

#include <random>
#include <set>

#include "quatcode/error.hpp"
#include "quatcode/projective.hpp"
#include "quatcode/subfield.hpp"

using namespace quatcode;

namespace {

std::vector<LinearFractionalMap> all_maps(const FieldPtr& F) {
  std::vector<LinearFractionalMap> out;
  const Elem q = static_cast<Elem>(F->size());
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) {
      for (Elem c = 0; c < q; ++c) {
        for (Elem d = 0; d < q; ++d) {
          if ((F->mul(a, d) ^ F->mul(b, c)) == 0) continue;
          const LinearFractionalMap g(F, a, b, c, d);
          if (g.a() == a && g.b() == b && g.c() == c && g.d() == d) out.push_back(g);  // normalized only
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("identity and normalization") {
  const FieldPtr F = Field::make(4);
  const auto id = LinearFractionalMap::identity(F);
  for (Elem x = 0; x < 16; ++x) CHECK(id.apply_finite(x) == x);
  CHECK(id.apply(ProjPoint::infinity()) == ProjPoint::infinity());
  CHECK(LinearFractionalMap(F, 5, 0, 0, 5) == id);
  CHECK_THROWS_AS(LinearFractionalMap(F, 1, 1, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(LinearFractionalMap(F, 0, 1, 1, 0).apply_finite(0), InvalidArgument);
}

TEST_CASE("PGL_2(4) group axioms, exhaustively") {
  const FieldPtr F = Field::make(2);
  const auto G = all_maps(F);
  REQUIRE(G.size() == 60);
  const auto id = LinearFractionalMap::identity(F);
  for (const auto& f : G) {
    CHECK(f * f.inverse() == id);
    CHECK(f * id == f);
    for (const auto& g : G) {
      for (Elem x = 0; x < 4; ++x) {
        const ProjPoint p = ProjPoint::finite(x);
        CHECK((f * g).apply(p) == f.apply(g.apply(p)));
      }
      for (const auto& h : G) {
        if ((f.a() + g.b() + h.c()) % 5 == 0) CHECK((f * g) * h == f * (g * h));  // a fifth of the triples
      }
    }
  }
}

TEST_CASE("|PGL_2(q)| = (q+1) q (q-1) for q in {2, 4, 8, 16}") {
  for (unsigned deg : {1u, 2u, 3u, 4u}) {
    const Report r = verify_pgl2_order(Field::make(deg));
    INFO(deg << ": " << (r.first_failure() ? r.first_failure()->name + " " + r.first_failure()->detail : ""));
    CHECK(r.passed());
  }
}

TEST_CASE("finite triple formula agrees with the general triple map") {
  const FieldPtr F = Field::make(4);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Elem a = rng() % 16, b = rng() % 16, c = rng() % 16;
    if (a == b || b == c || a == c) continue;
    const auto g = standard_triple_formula(F, a, b, c);
    CHECK(g == map_from_standard_triple(F, ProjPoint::finite(a), ProjPoint::finite(b), ProjPoint::finite(c)));
    CHECK(g.apply(ProjPoint::infinity()) == ProjPoint::finite(a));
    CHECK(g.apply_finite(0) == b);
    CHECK(g.apply_finite(1) == c);
  }
  CHECK_THROWS_AS(map_from_standard_triple(F, ProjPoint::finite(1), ProjPoint::finite(1), ProjPoint::finite(2)),
                  InvalidArgument);
}

TEST_CASE("unit circle of order q + 1") {
  for (unsigned h = 1; h <= 3; ++h) {
    const UnitCircle U(quaternary_tower(h));
    CHECK(U.size() == (1u << (2 * h)) + 1);
    std::size_t members = 0;
    for (Elem x = 0; x < U.field()->size(); ++x) {
      const bool in = U.contains(x);
      members += in ? 1 : 0;
      CHECK(in == U.index_of(x).has_value());
      if (in) CHECK(U.point(*U.index_of(x)) == x);
    }
    CHECK(members == U.size());
  }
}

TEST_CASE("stabilizer kinds") {
  const UnitCircle U(quaternary_tower(2));
  const Field& F = *U.field();
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto e2 = random_element(U, StabilizerKind::II, rng);
    CHECK(e2.map * e2.map == LinearFractionalMap::identity(U.field()));  // u -> u0/u is an involution
    const auto e3 = random_element(U, StabilizerKind::III, rng);
    const auto back = classify(U, e3.map);
    REQUIRE(back.has_value());
    CHECK(back->kind == StabilizerKind::III);
    CHECK(back->u0 == e3.u0);
    CHECK(back->c == e3.c);
  }
  CHECK_THROWS_AS(make_kind_i(U, 0), InvalidArgument);
  CHECK_THROWS_AS(make_kind_iii(U, 1, U.point(3)), InvalidArgument);
  CHECK_FALSE(classify(U, LinearFractionalMap(U.field(), 1, 1, 0, 1)).has_value());  // translation
  const Elem outside = [&] {
    for (Elem c = 2;; ++c) {
      if (!U.contains(c)) return c;
    }
  }();
  CHECK_FALSE(classify(U, LinearFractionalMap(U.field(), outside, 0, 0, 1)).has_value());
  (void)F;
}

TEST_CASE("stabilizer is sharply 3-transitive on U_{q+1}, exhaustively for h = 1, 2") {
  for (unsigned h = 1; h <= 2; ++h) {
    const UnitCircle U(quaternary_tower(h));
    const Report r = verify_three_transitivity(U, 300, 9 + h, true);
    INFO(h << ": " << (r.first_failure() ? r.first_failure()->name + " " + r.first_failure()->detail : ""));
    CHECK(r.passed());
    CHECK(verify_permutes_circle(all_stabilizer_elements(U), U).passed());
  }
  const UnitCircle U3(quaternary_tower(3));
  CHECK(verify_three_transitivity(U3, 300, 5, false).passed());
}

TEST_CASE("stabilizer samples are closed under composition and reproducible") {
  const UnitCircle U(quaternary_tower(3));
  const auto a = stabilizer_sample(U, 30, 77);
  const auto b = stabilizer_sample(U, 30, 77);
  REQUIRE(a.size() == 120);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].map == b[i].map);
  CHECK(verify_permutes_circle(a, U).passed());
}

TEST_CASE("block invariance: cyclic shift and inversion preserve the h = 2 blocks") {
  const auto tower = quaternary_tower(2);
  const UnitCircle U(tower);
  const SupportDesign d = supports(quaternary_code(2).linear(), 12);
  const std::vector<StabilizerElement> simple = {make_kind_i(U, U.point(1)), make_kind_ii(U, U.point(0))};
  CHECK(verify_block_invariance(d, simple, U).passed());
  CHECK(verify_block_invariance(d, all_stabilizer_elements(U), U).passed());

  SupportDesign lone;
  lone.v = 17;
  lone.k = 3;
  lone.blocks = {{0, 1, 2}};
  const Report r = verify_block_invariance(lone, {make_kind_i(U, U.point(1))}, U);
  CHECK_FALSE(r.passed());
}

TEST_CASE("spectrum inverts evaluation") {
  const UnitCircle U(quaternary_tower(2));
  const Field& F = *U.field();
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    std::vector<Elem> b(U.size());
    for (auto& x : b) x = (rng() % 3 == 0) ? static_cast<Elem>(rng() % F.size()) : 0;
    std::vector<Elem> values(U.size(), 0);
    for (std::uint32_t j = 0; j < U.size(); ++j) {
      for (std::uint32_t l = 0; l < U.size(); ++l) values[j] ^= F.mul(b[l], U.point((j * l) % U.size()));
    }
    CHECK(spectrum(U, values) == b);
  }
  CHECK(spectrum(U, std::vector<Elem>(U.size(), 0)) == std::vector<Elem>(U.size(), 0));
  CHECK_THROWS_AS(spectrum(U, {1, 2}), InvalidArgument);
}

TEST_CASE("exponent lemmas for h = 1..8") {
  for (unsigned h = 1; h <= 8; ++h) {
    const Report r = verify_exponent_lemmas(h);
    INFO(h << ": " << (r.first_failure() ? r.first_failure()->name + " " + r.first_failure()->detail : ""));
    CHECK(r.passed());
  }
}

TEST_CASE("spectrum lemma: exhaustive at h = 1, sampled at h = 2") {
  const Report r1 = verify_spectrum_lemma(1, 0, 1);
  INFO((r1.first_failure() ? r1.first_failure()->name + " " + r1.first_failure()->detail : std::string()));
  CHECK(r1.passed());
  CHECK(verify_spectrum_lemma(2, 50, 2).passed());
  CHECK_THROWS_AS(verify_spectrum_lemma(4, 1, 1), InvalidArgument);
}
