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

#include "quatcode/projective.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "quatcode/cyclotomic.hpp"
#include "quatcode/error.hpp"
#include "quatcode/subfield.hpp"

namespace quatcode {

namespace {

using Vec2 = std::array<Elem, 2>;

constexpr std::size_t kMaskWords = 5;
using PointMask = std::array<std::uint64_t, kMaskWords>;

PointMask mask_of(const Block& b) {
  PointMask m{};
  for (auto p : b) m[p / 64] |= std::uint64_t{1} << (p % 64);
  return m;
}

Vec2 homogeneous(ProjPoint p) { return p.infinite ? Vec2{1, 0} : Vec2{p.x, 1}; }

std::string word_of(const Block& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + "}";
}

std::string element_name(const StabilizerElement& e) {
  std::string s = "kind " + to_string(e.kind) + " u0=" + std::to_string(e.u0);
  if (e.kind == StabilizerKind::III) s += " c=" + std::to_string(e.c);
  return s;
}

}  // namespace

std::string to_string(const ProjPoint& p) { return p.infinite ? "inf" : std::to_string(p.x); }

// ---------------------------------------------------------------------------
// LinearFractionalMap

LinearFractionalMap::LinearFractionalMap(FieldPtr field, Elem a, Elem b, Elem c, Elem d)
    : field_(std::move(field)), m_{a, b, c, d} {
  const Field& F = *field_;
  for (Elem x : m_) {
    if (!F.contains(x)) throw InvalidArgument("matrix entry outside the field");
  }
  if ((F.mul(a, d) ^ F.mul(b, c)) == 0) throw InvalidArgument("singular matrix does not define a map");
  const Elem lead = *std::find_if(m_.begin(), m_.end(), [](Elem x) { return x != 0; });
  if (lead != 1) {
    const Elem s = F.inv(lead);
    for (Elem& x : m_) x = F.mul(x, s);
  }
}

LinearFractionalMap LinearFractionalMap::identity(FieldPtr field) {
  return LinearFractionalMap(std::move(field), 1, 0, 0, 1);
}

ProjPoint LinearFractionalMap::apply(ProjPoint p) const {
  const Field& F = *field_;
  const Vec2 v = homogeneous(p);
  const Elem x = F.mul(a(), v[0]) ^ F.mul(b(), v[1]);
  const Elem y = F.mul(c(), v[0]) ^ F.mul(d(), v[1]);
  if (y == 0) return ProjPoint::infinity();
  return ProjPoint::finite(F.div(x, y));
}

Elem LinearFractionalMap::apply_finite(Elem x) const {
  const ProjPoint p = apply(ProjPoint::finite(x));
  if (p.infinite) throw InvalidArgument("map sends " + std::to_string(x) + " to infinity");
  return p.x;
}

LinearFractionalMap LinearFractionalMap::inverse() const { return LinearFractionalMap(field_, d(), b(), c(), a()); }

LinearFractionalMap operator*(const LinearFractionalMap& f, const LinearFractionalMap& g) {
  const Field& F = *f.field_;
  return LinearFractionalMap(f.field_, F.mul(f.a(), g.a()) ^ F.mul(f.b(), g.c()),
                             F.mul(f.a(), g.b()) ^ F.mul(f.b(), g.d()),
                             F.mul(f.c(), g.a()) ^ F.mul(f.d(), g.c()),
                             F.mul(f.c(), g.b()) ^ F.mul(f.d(), g.d()));
}

LinearFractionalMap map_from_standard_triple(const FieldPtr& field, ProjPoint p, ProjPoint r, ProjPoint s) {
  const Field& F = *field;
  const Vec2 vp = homogeneous(p), vr = homogeneous(r), vs = homogeneous(s);
  // Solve lambda vp + mu vr = vs; the columns of the matrix are lambda vp and mu vr.
  const Elem det = F.mul(vp[0], vr[1]) ^ F.mul(vr[0], vp[1]);
  if (det == 0 || p == s || r == s) throw InvalidArgument("triple points must be distinct");
  const Elem lambda = F.div(F.mul(vs[0], vr[1]) ^ F.mul(vr[0], vs[1]), det);
  const Elem mu = F.div(F.mul(vp[0], vs[1]) ^ F.mul(vs[0], vp[1]), det);
  return LinearFractionalMap(field, F.mul(lambda, vp[0]), F.mul(mu, vr[0]), F.mul(lambda, vp[1]),
                             F.mul(mu, vr[1]));
}

LinearFractionalMap map_triple(const FieldPtr& field, const std::array<ProjPoint, 3>& from,
                               const std::array<ProjPoint, 3>& to) {
  return map_from_standard_triple(field, to[0], to[1], to[2]) *
         map_from_standard_triple(field, from[0], from[1], from[2]).inverse();
}

LinearFractionalMap standard_triple_formula(const FieldPtr& field, Elem a, Elem b, Elem c) {
  const Field& F = *field;
  return LinearFractionalMap(field, F.mul(a, b ^ c), F.mul(b, c ^ a), b ^ c, c ^ a);
}

Report verify_pgl2_order(const FieldPtr& field) {
  const Field& F = *field;
  const std::uint64_t q = F.size();
  const std::uint64_t points = q + 1;
  auto code = [q](ProjPoint p) { return p.infinite ? q : static_cast<std::uint64_t>(p.x); };

  std::vector<bool> seen(points * points * points, false);
  std::uint64_t count = 0;
  std::uint64_t bad_triples = 0;
  std::uint64_t repeats = 0;
  std::uint64_t reconstruct_failures = 0;
  std::uint64_t formula_failures = 0;
  auto visit = [&](const LinearFractionalMap& g) {
    ++count;
    const ProjPoint p = g.apply(ProjPoint::infinity());
    const ProjPoint r = g.apply(ProjPoint::finite(0));
    const ProjPoint s = g.apply(ProjPoint::finite(1));
    if (p == r || p == s || r == s) {
      ++bad_triples;
      return;
    }
    const std::uint64_t key = (code(p) * points + code(r)) * points + code(s);
    if (seen[key]) ++repeats;
    seen[key] = true;
    if (!(map_from_standard_triple(field, p, r, s) == g)) ++reconstruct_failures;
    if (!p.infinite && !r.infinite && !s.infinite && !(standard_triple_formula(field, p.x, r.x, s.x) == g)) {
      ++formula_failures;
    }
  };
  for (std::uint64_t b = 0; b < q; ++b) {
    for (std::uint64_t c = 0; c < q; ++c) {
      for (std::uint64_t d = 0; d < q; ++d) {
        if ((d ^ F.mul(static_cast<Elem>(b), static_cast<Elem>(c))) == 0) continue;
        visit(LinearFractionalMap(field, 1, static_cast<Elem>(b), static_cast<Elem>(c), static_cast<Elem>(d)));
      }
    }
  }
  for (std::uint64_t c = 1; c < q; ++c) {
    for (std::uint64_t d = 0; d < q; ++d) visit(LinearFractionalMap(field, 0, 1, static_cast<Elem>(c), static_cast<Elem>(d)));
  }

  Report report;
  report.title = "pgl2 order q=" + std::to_string(q);
  const std::uint64_t expected = (q + 1) * q * (q - 1);
  report.add("number of normalized invertible matrices equals (q+1)q(q-1)", count == expected,
             std::to_string(count) + " vs " + std::to_string(expected));
  report.add("images of (inf,0,1) are distinct-point triples", bad_triples == 0, std::to_string(bad_triples) + " bad");
  report.add("triple map is injective", repeats == 0, std::to_string(repeats) + " repeated triples");
  report.add("map is recovered from its triple", reconstruct_failures == 0,
             std::to_string(reconstruct_failures) + " failures");
  report.add("finite triple formula agrees", formula_failures == 0, std::to_string(formula_failures) + " failures");
  return report;
}

// ---------------------------------------------------------------------------
// UnitCircle

UnitCircle::UnitCircle(TowerPtr tower) : tower_(std::move(tower)), field_(tower_->ctx_q->big) {
  const SplittingField& ctx = *tower_->ctx_q;
  points_.resize(ctx.n);
  for (std::uint32_t j = 0; j < ctx.n; ++j) points_[j] = ctx.root(j);
  step_ = field_->log(ctx.beta);
}

bool UnitCircle::contains(Elem x) const { return x != 0 && field_->pow(x, size()) == 1; }

std::optional<std::uint32_t> UnitCircle::index_of(Elem x) const {
  if (x == 0 || !field_->contains(x)) return std::nullopt;
  const std::uint64_t l = field_->log(x);
  if (l % step_ != 0) return std::nullopt;
  const std::uint64_t j = l / step_;
  if (j >= size() || points_[j] != x) return std::nullopt;
  return static_cast<std::uint32_t>(j);
}

// ---------------------------------------------------------------------------
// Stabilizer

std::string to_string(StabilizerKind k) {
  switch (k) {
    case StabilizerKind::I: return "I";
    case StabilizerKind::II: return "II";
    case StabilizerKind::III: return "III";
  }
  return "?";
}

nlohmann::ordered_json StabilizerElement::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  j["u0"] = u0;
  if (kind == StabilizerKind::III) j["c"] = c;
  j["matrix"] = {map.a(), map.b(), map.c(), map.d()};
  return j;
}

StabilizerElement make_kind_i(const UnitCircle& U, Elem u0) {
  if (!U.contains(u0)) throw InvalidArgument("u0 must lie in U_{q+1}");
  return {StabilizerKind::I, u0, 0, LinearFractionalMap(U.field(), u0, 0, 0, 1)};
}

StabilizerElement make_kind_ii(const UnitCircle& U, Elem u0) {
  if (!U.contains(u0)) throw InvalidArgument("u0 must lie in U_{q+1}");
  return {StabilizerKind::II, u0, 0, LinearFractionalMap(U.field(), 0, u0, 1, 0)};
}

StabilizerElement make_kind_iii(const UnitCircle& U, Elem u0, Elem c) {
  if (!U.contains(u0)) throw InvalidArgument("u0 must lie in U_{q+1}");
  if (c == 0 || U.contains(c)) throw InvalidArgument("c must be nonzero and outside U_{q+1}");
  const Field& F = *U.field();
  const Elem cq = F.pow(c, U.size() - 1);
  return {StabilizerKind::III, u0, c, LinearFractionalMap(U.field(), 1, F.mul(cq, u0), c, u0)};
}

std::optional<StabilizerElement> classify(const UnitCircle& U, const LinearFractionalMap& map) {
  const Field& F = *U.field();
  std::optional<StabilizerElement> out;
  if (map.b() == 0 && map.c() == 0) {
    const Elem u0 = F.div(map.a(), map.d());
    if (U.contains(u0)) out = make_kind_i(U, u0);
  } else if (map.a() == 0 && map.d() == 0) {
    const Elem u0 = F.div(map.b(), map.c());
    if (U.contains(u0)) out = make_kind_ii(U, u0);
  } else if (map.a() != 0 && map.c() != 0) {
    const Elem u0 = F.div(map.d(), map.a());
    const Elem c = F.div(map.c(), map.a());
    if (U.contains(u0) && !U.contains(c)) out = make_kind_iii(U, u0, c);
  }
  if (out && !(out->map == map)) out.reset();
  return out;
}

std::vector<std::uint32_t> coordinate_permutation(const UnitCircle& U, const LinearFractionalMap& map) {
  std::vector<std::uint32_t> perm(U.size());
  for (std::uint32_t j = 0; j < U.size(); ++j) {
    const ProjPoint p = map.apply(ProjPoint::finite(U.point(j)));
    const auto idx = p.infinite ? std::nullopt : U.index_of(p.x);
    if (!idx) throw InvalidArgument("map sends beta^" + std::to_string(j) + " outside U_{q+1}");
    perm[j] = *idx;
  }
  return perm;
}

StabilizerElement random_element(const UnitCircle& U, StabilizerKind kind, std::mt19937_64& rng) {
  const Elem u0 = U.point(static_cast<std::uint32_t>(rng() % U.size()));
  switch (kind) {
    case StabilizerKind::I: return make_kind_i(U, u0);
    case StabilizerKind::II: return make_kind_ii(U, u0);
    case StabilizerKind::III: break;
  }
  const std::uint64_t order = U.field()->order();
  Elem c = 0;
  do {
    c = static_cast<Elem>(1 + rng() % order);
  } while (U.contains(c));
  return make_kind_iii(U, u0, c);
}

std::vector<StabilizerElement> stabilizer_sample(const UnitCircle& U, std::size_t per_kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<StabilizerElement> out;
  for (StabilizerKind kind : {StabilizerKind::I, StabilizerKind::II, StabilizerKind::III}) {
    for (std::size_t i = 0; i < per_kind; ++i) out.push_back(random_element(U, kind, rng));
  }
  for (std::size_t i = 0; i < per_kind; ++i) {
    const std::size_t len = 2 + rng() % 2;
    LinearFractionalMap g = LinearFractionalMap::identity(U.field());
    for (std::size_t s = 0; s < len; ++s) g = g * random_element(U, static_cast<StabilizerKind>(rng() % 3), rng).map;
    auto e = classify(U, g);
    if (!e) throw std::logic_error("product of stabilizer generators left the stabilizer");
    out.push_back(*e);
  }
  return out;
}

std::vector<StabilizerElement> all_stabilizer_elements(const UnitCircle& U) {
  std::vector<StabilizerElement> out;
  for (std::uint32_t j = 0; j < U.size(); ++j) out.push_back(make_kind_i(U, U.point(j)));
  for (std::uint32_t j = 0; j < U.size(); ++j) out.push_back(make_kind_ii(U, U.point(j)));
  for (std::uint32_t j = 0; j < U.size(); ++j) {
    for (Elem c = 1; c <= U.field()->order(); ++c) {
      if (!U.contains(c)) out.push_back(make_kind_iii(U, U.point(j), c));
    }
  }
  return out;
}

Report verify_three_transitivity(const UnitCircle& U, std::size_t trials, std::uint64_t seed, bool exhaustive) {
  Report report;
  report.title = "three-transitivity";
  const FieldPtr& F = U.field();
  const std::uint32_t n = U.size();
  std::mt19937_64 rng(seed);
  auto random_triple = [&]() {
    std::array<std::uint32_t, 3> t{};
    t[0] = static_cast<std::uint32_t>(rng() % n);
    do t[1] = static_cast<std::uint32_t>(rng() % n); while (t[1] == t[0]);
    do t[2] = static_cast<std::uint32_t>(rng() % n); while (t[2] == t[0] || t[2] == t[1]);
    return t;
  };
  std::size_t passed = 0;
  std::string failure;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto x = random_triple();
    const auto y = random_triple();
    std::array<ProjPoint, 3> from{}, to{};
    for (int s = 0; s < 3; ++s) {
      from[s] = ProjPoint::finite(U.point(x[s]));
      to[s] = ProjPoint::finite(U.point(y[s]));
    }
    const LinearFractionalMap g = map_triple(F, from, to);
    bool ok = g.apply(from[0]) == to[0] && g.apply(from[1]) == to[1] && g.apply(from[2]) == to[2];
    const auto kind = classify(U, g);
    ok = ok && kind.has_value();
    if (ok) {
      try {
        coordinate_permutation(U, g);
      } catch (const InvalidArgument&) {
        ok = false;
      }
    }
    if (ok) {
      ++passed;
    } else if (failure.empty()) {
      failure = "triple (" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) +
                ") -> (" + std::to_string(y[0]) + "," + std::to_string(y[1]) + "," + std::to_string(y[2]) + ")";
    }
  }
  report.add("random triples are mapped by a stabilizer element", passed == trials,
             std::to_string(passed) + "/" + std::to_string(trials) + (failure.empty() ? "" : "; first failure " + failure));

  if (exhaustive) {
    const auto all = all_stabilizer_elements(U);
    const std::uint64_t q = n - 1;
    const std::uint64_t expected = static_cast<std::uint64_t>(n) * q * (q - 1);
    report.add("stabilizer has (q+1)q(q-1) elements", all.size() == expected,
               std::to_string(all.size()) + " vs " + std::to_string(expected));
    std::set<std::array<Elem, 4>> maps;
    std::set<std::array<std::uint32_t, 3>> images;
    for (const auto& e : all) {
      maps.insert({e.map.a(), e.map.b(), e.map.c(), e.map.d()});
      const auto perm = coordinate_permutation(U, e.map);
      images.insert({perm[0], perm[1], perm[2]});
    }
    report.add("stabilizer elements are pairwise distinct", maps.size() == all.size(), std::to_string(maps.size()));
    report.add("action on ordered triples is sharply transitive", images.size() == expected,
               std::to_string(images.size()) + " image triples");
  }
  return report;
}

Report verify_permutes_circle(const std::vector<StabilizerElement>& elements, const UnitCircle& U) {
  Report report;
  report.title = "stabilizer permutes U";
  std::size_t passed = 0;
  std::string failure;
  for (const auto& e : elements) {
    bool ok = true;
    try {
      auto perm = coordinate_permutation(U, e.map);
      std::sort(perm.begin(), perm.end());
      for (std::uint32_t j = 0; j < perm.size(); ++j) ok = ok && perm[j] == j;
    } catch (const InvalidArgument&) {
      ok = false;
    }
    if (ok) {
      ++passed;
    } else if (failure.empty()) {
      failure = element_name(e);
    }
  }
  report.add("every element maps U_{q+1} bijectively onto itself", passed == elements.size(),
             std::to_string(passed) + "/" + std::to_string(elements.size()) +
                 (failure.empty() ? "" : "; first failure " + failure));
  return report;
}

Report verify_block_invariance(const SupportDesign& design, const std::vector<StabilizerElement>& elements,
                               const UnitCircle& U) {
  Report report;
  report.title = "block invariance k=" + std::to_string(design.k);
  if (design.v != U.size()) throw InvalidArgument("design points do not match U_{q+1}");
  if (design.v > 64 * kMaskWords) throw InvalidArgument("design too long for block masks");
  std::vector<PointMask> masks;
  masks.reserve(design.blocks.size());
  for (const auto& blk : design.blocks) masks.push_back(mask_of(blk));
  std::sort(masks.begin(), masks.end());
  for (const auto& e : elements) {
    std::string detail = "preserved";
    bool ok = true;
    try {
      const auto perm = coordinate_permutation(U, e.map);
      for (const auto& blk : design.blocks) {
        PointMask image{};
        for (auto p : blk) image[perm[p] / 64] |= std::uint64_t{1} << (perm[p] % 64);
        if (!std::binary_search(masks.begin(), masks.end(), image)) {
          Block mapped;
          for (auto p : blk) mapped.push_back(perm[p]);
          std::sort(mapped.begin(), mapped.end());
          ok = false;
          detail = "block " + word_of(blk) + " maps to non-block " + word_of(mapped);
          break;
        }
      }
    } catch (const InvalidArgument& ex) {
      ok = false;
      detail = ex.what();
    }
    report.add(element_name(e), ok, detail);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Spectrum lemma

std::vector<Elem> spectrum(const UnitCircle& U, const std::vector<Elem>& values) {
  const std::uint32_t n = U.size();
  if (values.size() != n) throw InvalidArgument("need one value per point of U_{q+1}");
  const Field& F = *U.field();
  // 1/n = 1 because n = q + 1 is odd.
  std::vector<Elem> b(n, 0);
  for (std::uint32_t l = 0; l < n; ++l) {
    Elem s = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (values[j] == 0) continue;
      const std::uint64_t e = (static_cast<std::uint64_t>(j) * l) % n;
      s ^= F.mul(values[j], U.point(static_cast<std::uint32_t>((n - e) % n)));
    }
    b[l] = s;
  }
  return b;
}

namespace {

// The set of l with nonzero b_l for g(u) = (c u + 1)^w f((u + c^q)/(c u + 1)).
std::vector<std::uint32_t> transformed_support(const UnitCircle& U, const IndexSet& E, const std::vector<Elem>& a,
                                               Elem c, std::uint64_t w) {
  const Field& F = *U.field();
  const Elem cq = F.pow(c, U.size() - 1);
  std::vector<Elem> values(U.size());
  for (std::uint32_t j = 0; j < U.size(); ++j) {
    const Elem u = U.point(j);
    const Elem den = F.mul(c, u) ^ 1;
    const Elem x = F.div(u ^ cq, den);
    Elem fx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) fx ^= F.mul(a[i], F.pow(x, E.elements()[i]));
    values[j] = F.mul(F.pow(den, w), fx);
  }
  const auto b = spectrum(U, values);
  std::vector<std::uint32_t> support;
  for (std::uint32_t l = 0; l < b.size(); ++l) {
    if (b[l] != 0) support.push_back(l);
  }
  return support;
}

bool within(const std::vector<std::uint32_t>& support, const IndexSet& E) {
  return std::all_of(support.begin(), support.end(), [&](std::uint32_t l) { return E.contains(l); });
}

}  // namespace

Report verify_exponent_lemmas(unsigned h) {
  Report report;
  report.title = "exponent lemmas h=" + std::to_string(h);
  const IndexSet E = build_E(h);
  const std::uint64_t q = std::uint64_t{1} << (2 * h);
  const std::uint64_t q2 = q * q;
  const std::uint64_t w = 2 * (q2 - 1) / 3;

  // E as { 1 + sum e_i 4^i : e_i in {1, 2} }.
  std::vector<std::uint32_t> digits_form;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h); ++mask) {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < h; ++i) e += (1 + ((mask >> i) & 1u)) << (2 * i);
    digits_form.push_back(static_cast<std::uint32_t>(e));
  }
  const IndexSet param(static_cast<std::uint32_t>(q + 1), digits_form);
  report.add("E equals {1 + sum e_i 4^i : e_i in {1,2}}", param == E, std::to_string(E.size()) + " elements");

  std::size_t expansion_mismatch = 0;
  std::size_t outside_E = 0;
  std::string first;
  for (std::uint32_t e : param.elements()) {
    std::vector<unsigned> ei(h);
    for (unsigned i = 0; i < h; ++i) ei[i] = static_cast<unsigned>(((e - 1) >> (2 * i)) & 3u);
    const std::uint64_t A = q2 - 1 - q * e;
    const std::uint64_t B = w + (q - 1) * e - q2 + 1;
    // (x + 1)^B = sum over bit-submasks s of B of x^s.
    std::vector<std::uint64_t> expanded;
    for (std::uint64_t s = B;; s = (s - 1) & B) {
      expanded.push_back(A + s);
      if (s == 0) break;
    }
    std::sort(expanded.begin(), expanded.end());
    std::vector<std::uint64_t> lemma;
    std::vector<unsigned> v(2 * h, 0);
    while (true) {
      std::uint64_t l = 0;
      for (unsigned i = 0; i < h; ++i) {
        l += static_cast<std::uint64_t>(v[i]) << (2 * i);
        l += static_cast<std::uint64_t>(3 - ei[i] + v[h + i]) << (2 * (h + i));
      }
      lemma.push_back(l - 1);
      unsigned i = 0;
      for (; i < 2 * h; ++i) {
        const unsigned cap = i < h ? 2 - ei[i] : ei[i - h] - 1;
        if (v[i] < cap) {
          ++v[i];
          break;
        }
        v[i] = 0;
      }
      if (i == 2 * h) break;
    }
    std::sort(lemma.begin(), lemma.end());
    if (expanded != lemma) {
      ++expansion_mismatch;
      if (first.empty()) first = "e=" + std::to_string(e);
    }
    for (std::uint64_t l : lemma) {
      if (!E.contains(static_cast<std::int64_t>(l % (q + 1)))) {
        ++outside_E;
        if (first.empty()) first = "e=" + std::to_string(e) + " l=" + std::to_string(l);
      }
    }
  }
  report.add("monomial expansion matches the stated exponent set", expansion_mismatch == 0,
             std::to_string(expansion_mismatch) + " mismatches" + (first.empty() ? "" : "; " + first));
  report.add("every exponent reduces into E modulo q+1", outside_E == 0,
             std::to_string(outside_E) + " exponents outside E");
  return report;
}

Report verify_spectrum_lemma(unsigned h, std::size_t trials, std::uint64_t seed) {
  if (h < 1 || h > 3) throw InvalidArgument("spectrum lemma checks support 1 <= h <= 3");
  Report report;
  report.title = "spectrum lemma h=" + std::to_string(h);
  const UnitCircle U(quaternary_tower(h));
  const Field& F = *U.field();
  const IndexSet E = build_E(h);
  const std::uint64_t q2 = F.size();
  const std::uint64_t w = 2 * (q2 - 1) / 3;
  std::mt19937_64 rng(seed);

  std::vector<Elem> outside;
  for (Elem c = 1; c <= F.order(); ++c) {
    if (!U.contains(c)) outside.push_back(c);
  }

  const std::vector<Elem> zero(E.size(), 0);
  report.add("f = 0 has empty spectrum", transformed_support(U, E, zero, outside.front(), w).empty());

  std::size_t cases = 0;
  std::size_t passed = 0;
  std::string failure;
  auto run = [&](const std::vector<Elem>& a, Elem c) {
    ++cases;
    const auto support = transformed_support(U, E, a, c, w);
    if (within(support, E)) {
      ++passed;
    } else if (failure.empty()) {
      failure = "c=" + std::to_string(c);
    }
  };
  if (h == 1) {
    std::vector<Elem> a(E.size());
    for (std::uint64_t idx = 0; idx < q2 * q2; ++idx) {
      a[0] = static_cast<Elem>(idx % q2);
      a[1] = static_cast<Elem>(idx / q2);
      for (Elem c : outside) run(a, c);
    }
  } else {
    std::vector<Elem> a(E.size());
    for (std::size_t t = 0; t < trials; ++t) {
      for (auto& x : a) x = static_cast<Elem>(rng() % q2);
      run(a, outside[rng() % outside.size()]);
    }
  }
  report.add("transformed spectrum supported on E", passed == cases,
             std::to_string(passed) + "/" + std::to_string(cases) + (failure.empty() ? "" : "; first failure " + failure));

  // (u + c^q)^e (c u + 1)^(w - e) for single exponents e in E.
  std::size_t mono_cases = 0;
  std::size_t mono_passed = 0;
  for (std::uint32_t e : E.elements()) {
    for (int rep = 0; rep < 3; ++rep) {
      const Elem c = outside[rng() % outside.size()];
      const Elem cq = F.pow(c, U.size() - 1);
      std::vector<Elem> values(U.size());
      for (std::uint32_t j = 0; j < U.size(); ++j) {
        const Elem u = U.point(j);
        values[j] = F.mul(F.pow(u ^ cq, e), F.pow(F.mul(c, u) ^ 1, w - e));
      }
      const auto b = spectrum(U, values);
      bool ok = true;
      for (std::uint32_t l = 0; l < b.size(); ++l) ok = ok && (b[l] == 0 || E.contains(l));
      ++mono_cases;
      mono_passed += ok ? 1 : 0;
    }
  }
  report.add("single-exponent products supported on E", mono_passed == mono_cases,
             std::to_string(mono_passed) + "/" + std::to_string(mono_cases));
  report.merge(verify_exponent_lemmas(h));
  return report;
}

}  // namespace quatcode
