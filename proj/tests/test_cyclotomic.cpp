#include <doctest.h>

#include <set>

#include "quatcode/cyclotomic.hpp"
#include "quatcode/error.hpp"

using namespace quatcode;

namespace {

std::vector<std::uint32_t> elems(const IndexSet& s) { return s.elements(); }

// Orbits of x -> b x mod n by plain iteration.
std::set<std::set<std::uint32_t>> orbits(std::uint32_t n, std::uint64_t b) {
  std::set<std::set<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < n; ++s) {
    std::set<std::uint32_t> o;
    std::uint64_t x = s;
    do {
      o.insert(static_cast<std::uint32_t>(x));
      x = (x * b) % n;
    } while (x != s);
    out.insert(o);
  }
  return out;
}

}  // namespace

TEST_CASE("small T and T^c by hand") {
  CHECK(elems(build_Tc(1)) == std::vector<std::uint32_t>{2, 3});
  CHECK(elems(build_T(1)) == std::vector<std::uint32_t>{0, 1, 4});
  CHECK(elems(build_Tc(2)) == std::vector<std::uint32_t>{6, 7, 10, 11});
  CHECK(build_T(2).size() == 13);
  CHECK(build_E(2) == build_Tc(2));
}

TEST_CASE("coset system matches brute-force orbits") {
  for (auto [n, b] : {std::pair{17u, 4ull}, std::pair{65u, 4ull}, std::pair{257u, 16ull}, std::pair{15u, 2ull}}) {
    const CosetSystem sys(n, b);
    std::set<std::set<std::uint32_t>> got;
    for (const auto& c : sys.cosets()) got.insert(std::set<std::uint32_t>(c.begin(), c.end()));
    CHECK(got == orbits(n, b));
    for (std::uint32_t s = 0; s < n; ++s) {
      const auto& c = sys.coset_of(s);
      CHECK(sys.leader_of(s) == *std::min_element(c.begin(), c.end()));
    }
  }
  CHECK_THROWS_AS(CosetSystem(16, 4), InvalidArgument);
}

TEST_CASE("partition lemmas hold for h = 1..8") {
  for (unsigned h = 1; h <= 8; ++h) {
    const Report r = verify_partition(h);
    INFO("h=" << h << " " << (r.first_failure() ? r.first_failure()->name + ": " + r.first_failure()->detail : ""));
    CHECK(r.passed());
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("IndexSet algebra") {
  const IndexSet s(10, {1, 2, 7});
  CHECK(elems(s.complement()) == std::vector<std::uint32_t>{0, 3, 4, 5, 6, 8, 9});
  CHECK(elems(s.negated()) == std::vector<std::uint32_t>{3, 8, 9});
  CHECK(s.contains(-3));
  CHECK(s.contains(12));
  CHECK_FALSE(s.contains(3));
  CHECK(elems(coset_closure(IndexSet(17, {1}), 4)) == std::vector<std::uint32_t>{1, 4, 13, 16});
}

TEST_CASE("property: T is closed under x4 and negation, T^c has 2^h elements") {
  for (unsigned h = 1; h <= 6; ++h) {
    const IndexSet T = build_T(h);
    const IndexSet Tc = build_Tc(h);
    CHECK(Tc.size() == (std::size_t{1} << h));
    CHECK(T.scaled(4) == T);
    CHECK(T.negated() == T);
    CHECK(Tc.complement() == T);
    CHECK(Tc.negated() == Tc);
  }
}
