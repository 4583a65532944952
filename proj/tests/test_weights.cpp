#include <doctest.h>

#include <cstdlib>
#include <random>

#include "quatcode/error.hpp"
#include "quatcode/subfield.hpp"
#include "quatcode/weights.hpp"

using namespace quatcode;

namespace {

LinearCode random_code(const FieldPtr& F, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  Matrix m(F, k, n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < n; ++j) m.at(r, j) = static_cast<Elem>(rng() % F->size());
  }
  return LinearCode(std::move(m));
}

}  // namespace

TEST_CASE("packed enumeration agrees with the field-arithmetic oracle") {
  std::mt19937_64 rng(1);
  for (unsigned deg : {1u, 2u, 3u, 4u}) {
    const FieldPtr F = Field::make(deg);
    for (int i = 0; i < 5; ++i) {
      const std::size_t n = 3 + rng() % 70;
      const std::size_t k = 1 + rng() % (12 / deg);
      const LinearCode c = random_code(F, k, n, rng);
      CHECK(weight_distribution(c) == weight_distribution_naive(c));
    }
  }
}

TEST_CASE("quaternary examples: [17,4] and [65,8] enumerators") {
  const auto d2 = weight_distribution(quaternary_code(2).linear());
  CHECK(d2.enumerator() == "1 + 204z^12 + 51z^16");
  const auto d3 = weight_distribution(quaternary_code(3).linear());
  CHECK(d3.enumerator() == "1 + 18720z^44 + 16380z^48 + 30240z^52 + 195z^64");
  CHECK(d3.total() == BigInt(1) << 16);
}

TEST_CASE("h=1: the [5,2] code enumerated over 16 codewords") {
  const LinearCode c = quaternary_code(1).linear();
  const auto d = weight_distribution_naive(c);
  CHECK(d.total() == 16);
  CHECK(d.enumerator() == "1 + 15z^4");
  CHECK(min_distance(c).method == "exhaustive");
}

TEST_CASE("parallel chunking does not change the counts") {
  const LinearCode c = quaternary_code(3).linear();
  EnumerationOptions one{default_budget(), 1};
  const auto base = weight_distribution(c, one);
  for (unsigned t : {2u, 3u, 7u, 16u}) {
    EnumerationOptions o{default_budget(), t};
    CHECK(weight_distribution(c, o) == base);
  }
}

TEST_CASE("Gray traversal agrees with from-scratch codewords at 10^5 checkpoints") {
  const LinearCode c = dual(quaternary_code(2).linear());  // 2^26 codewords
  const PackedGenerators gens(c);
  REQUIRE(gens.count() == 26);
  std::mt19937_64 rng(99);
  const std::uint64_t total = std::uint64_t{1} << gens.count();
  std::vector<std::uint64_t> checkpoints(100000);
  for (auto& x : checkpoints) x = rng() % total;
  std::sort(checkpoints.begin(), checkpoints.end());
  std::size_t next = 0;
  std::size_t mismatches = 0;
  std::vector<std::uint64_t> fresh(gens.stride());
  for_each_codeword(gens, 0, total, [&](std::uint64_t i, const std::uint64_t* cw) {
    while (next < checkpoints.size() && checkpoints[next] == i) {
      gens.codeword_at(i, fresh.data());
      if (!std::equal(fresh.begin(), fresh.end(), cw) || gens.weight_of(fresh.data()) != gens.weight_of(cw)) {
        ++mismatches;
      }
      ++next;
    }
  });
  CHECK(next == checkpoints.size());
  CHECK(mismatches == 0);
}

TEST_CASE("unpacked Gray codewords are codewords") {
  const LinearCode c = quaternary_code(2).linear();
  const PackedGenerators gens(c);
  std::size_t seen = 0;
  for_each_codeword(gens, 0, std::uint64_t{1} << gens.count(), [&](std::uint64_t, const std::uint64_t* cw) {
    CHECK(c.contains(gens.unpack(cw)));
    ++seen;
  });
  CHECK(seen == 256);
}

TEST_CASE("MacWilliams: dual parameters and double transform") {
  const auto d2 = weight_distribution(quaternary_code(2).linear());
  const auto m2 = macwilliams(d2);
  CHECK(m2.dimension == 13);
  CHECK(m2.min_distance() == 4u);
  CHECK(m2.provenance == Provenance::MacWilliams);
  CHECK(macwilliams(m2) == d2);
  const auto m3 = macwilliams(weight_distribution(quaternary_code(3).linear()));
  CHECK(m3.dimension == 57);
  CHECK(m3.min_distance() == 5u);
}

TEST_CASE("property: MacWilliams of a random code equals the enumerated dual") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    const FieldPtr F = Field::make(1 + static_cast<unsigned>(rng() % 3));
    const std::size_t n = 4 + rng() % 9;
    const LinearCode c = random_code(F, 1 + rng() % (n - 1), n, rng);
    const auto primal = weight_distribution(c);
    CHECK(macwilliams(primal) == weight_distribution(dual(c)));
    CHECK(primal.counts[0] == 1);
    CHECK(primal.total() == BigInt(1) << (c.dimension() * F->degree()));
  }
}

TEST_CASE("Krawtchouk values") {
  CHECK(krawtchouk(5, 4, 0, 3) == 1);
  CHECK(krawtchouk(5, 4, 1, 0) == 15);
  CHECK(krawtchouk(5, 4, 1, 5) == -5);
  CHECK(krawtchouk(3, 2, 2, 1) == -1);
}

TEST_CASE("zero code and budget handling") {
  const auto z = weight_distribution(LinearCode::zero(Field::make(2), 9));
  CHECK(z.counts[0] == 1);
  CHECK(z.total() == 1);
  CHECK_FALSE(z.min_distance().has_value());
  CHECK(min_distance(LinearCode::zero(Field::make(2), 9)).lower == 10);

  EnumerationOptions tiny{1000, 1};
  CHECK_THROWS_AS(weight_distribution(quaternary_code(3).linear(), tiny), ResourceLimit);
  const auto d = min_distance(quaternary_trace_code(2), tiny);  // dual has 256 codewords
  CHECK(d.method == "macwilliams");
  CHECK(d.lower == 4);
  const auto b = min_distance(quaternary_parent(3), EnumerationOptions{16, 1});
  CHECK(b.method == "bounds");
  CHECK(b.lower == b.upper);  // MDS: BCH bound reaches Singleton
}

TEST_CASE("QUATCODE_BUDGET overrides the default budget") {
  ::setenv("QUATCODE_BUDGET", "12345", 1);
  CHECK(default_budget() == 12345);
  ::setenv("QUATCODE_BUDGET", "garbage", 1);
  CHECK(default_budget() == (std::uint64_t{1} << 24));
  ::unsetenv("QUATCODE_BUDGET");
  CHECK(default_budget() == (std::uint64_t{1} << 24));
}

TEST_CASE("exports") {
  const auto d = weight_distribution(quaternary_code(2).linear());
  CHECK(d.to_csv() == "weight,count\n0,1\n12,204\n16,51\n");
  const auto j = d.to_json(false);
  CHECK(j.at("counts").at("12") == "204");
  CHECK(j.at("provenance") == "exhaustive");
  CHECK_FALSE(j.contains("elapsed_ms"));
}
