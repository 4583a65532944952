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

/**
 * @file projective.hpp
 * @brief PGL_2 acting on the projective line, the stabilizer of the unit
 *        circle U_{q+1} in GF(q^2), and checks of the lemmas showing that it
 *        preserves the support designs of the quaternary codes.
 *
 * Codeword coordinate j is identified with the point beta^j of U_{q+1},
 * beta the primitive (q+1)-th root of unity of the code's splitting field.
 * The stabilizer consists of three kinds of maps:
 *
 *   I    u -> u0 u
 *   II   u -> u0 / u
 *   III  u -> (u + c^q u0) / (c u + u0)
 *
 * with u0 in U_{q+1} and c in GF(q^2)^* outside U_{q+1}.
 */

#ifndef QUATCODE_PROJECTIVE_HPP
#define QUATCODE_PROJECTIVE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatcode/designs.hpp"
#include "quatcode/galois.hpp"
#include "quatcode/report.hpp"

namespace quatcode {

/// A point of PG(1, F): a field element or infinity.
struct ProjPoint {
  Elem x = 0;
  bool infinite = false;

  static ProjPoint finite(Elem v) { return {v, false}; }
  static ProjPoint infinity() { return {0, true}; }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

std::string to_string(const ProjPoint& p);

/// x -> (a x + b) / (c x + d), stored normalized so that the first nonzero
/// of (a, b, c, d) equals 1.
class LinearFractionalMap {
 public:
  /// Throws InvalidArgument if ad - bc = 0.
  LinearFractionalMap(FieldPtr field, Elem a, Elem b, Elem c, Elem d);
  static LinearFractionalMap identity(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  Elem a() const { return m_[0]; }
  Elem b() const { return m_[1]; }
  Elem c() const { return m_[2]; }
  Elem d() const { return m_[3]; }

  ProjPoint apply(ProjPoint p) const;
  Elem apply_finite(Elem x) const;
  LinearFractionalMap inverse() const;

  /// (f * g)(x) = f(g(x)).
  friend LinearFractionalMap operator*(const LinearFractionalMap& f, const LinearFractionalMap& g);
  friend bool operator==(const LinearFractionalMap& f, const LinearFractionalMap& g) { return f.m_ == g.m_; }

 private:
  FieldPtr field_;
  std::array<Elem, 4> m_;
};

/// The unique map sending (infinity, 0, 1) to (p, r, s); points distinct.
LinearFractionalMap map_from_standard_triple(const FieldPtr& field, ProjPoint p, ProjPoint r, ProjPoint s);
/// The unique map sending the triple `from` to the triple `to`.
LinearFractionalMap map_triple(const FieldPtr& field, const std::array<ProjPoint, 3>& from,
                               const std::array<ProjPoint, 3>& to);
/// Matrix [[a(b-c), b(c-a)], [b-c, c-a]] for finite distinct a, b, c.
LinearFractionalMap standard_triple_formula(const FieldPtr& field, Elem a, Elem b, Elem c);

/**
 * Enumerates PGL_2(F) as normalized invertible matrices, checks that their
 * count is (q+1) q (q-1) and that g -> g(infinity, 0, 1) is a bijection
 * onto ordered triples of distinct points.
 */
Report verify_pgl2_order(const FieldPtr& field);

/// U_{q+1} inside GF(q^2) with the coordinate labeling j <-> beta^j.
class UnitCircle {
 public:
  explicit UnitCircle(TowerPtr tower);

  const TowerPtr& tower() const { return tower_; }
  const FieldPtr& field() const { return field_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(points_.size()); }
  Elem point(std::uint32_t j) const { return points_[j]; }
  bool contains(Elem x) const;
  /// Coordinate index of a point of U_{q+1}; nullopt for other elements.
  std::optional<std::uint32_t> index_of(Elem x) const;

 private:
  TowerPtr tower_;
  FieldPtr field_;
  std::vector<Elem> points_;
  std::uint64_t step_;  // log of beta
};

enum class StabilizerKind { I, II, III };
std::string to_string(StabilizerKind k);

struct StabilizerElement {
  StabilizerKind kind = StabilizerKind::I;
  Elem u0 = 1;
  Elem c = 0;  // kind III only
  LinearFractionalMap map;

  nlohmann::ordered_json to_json() const;
};

StabilizerElement make_kind_i(const UnitCircle& U, Elem u0);
StabilizerElement make_kind_ii(const UnitCircle& U, Elem u0);
StabilizerElement make_kind_iii(const UnitCircle& U, Elem u0, Elem c);

/// Recognizes a map as one of the three kinds, or nullopt if it does not
/// stabilize U_{q+1}.
std::optional<StabilizerElement> classify(const UnitCircle& U, const LinearFractionalMap& map);

/// Image of coordinate j under the map; throws InvalidArgument if the map
/// does not send U_{q+1} into itself.
std::vector<std::uint32_t> coordinate_permutation(const UnitCircle& U, const LinearFractionalMap& map);

StabilizerElement random_element(const UnitCircle& U, StabilizerKind kind, std::mt19937_64& rng);
/// `per_kind` random elements of each kind, plus `per_kind` products of two
/// or three random generators (classified back into a kind).
std::vector<StabilizerElement> stabilizer_sample(const UnitCircle& U, std::size_t per_kind, std::uint64_t seed);

/// Every kind-I/II/III element; (q+1) q (q-1) of them.
std::vector<StabilizerElement> all_stabilizer_elements(const UnitCircle& U);

/**
 * For `trials` random pairs of ordered triples of distinct points of
 * U_{q+1}, builds the unique map between them and checks that it is a
 * stabilizer element of some kind. With exhaustive = true the whole
 * stabilizer is listed and sharp 3-transitivity is checked directly.
 */
Report verify_three_transitivity(const UnitCircle& U, std::size_t trials, std::uint64_t seed, bool exhaustive);

/// Checks that each element permutes the block set of the design.
Report verify_block_invariance(const SupportDesign& design, const std::vector<StabilizerElement>& elements,
                               const UnitCircle& U);

/// Exhaustive image check: each element maps U_{q+1} bijectively onto itself.
Report verify_permutes_circle(const std::vector<StabilizerElement>& elements, const UnitCircle& U);

/**
 * Spectrum of a function on U_{q+1}: the unique (b_l)_{l in Z_{q+1}} with
 * g(u) = sum_l b_l u^l, by the inverse discrete Fourier transform.
 */
std::vector<Elem> spectrum(const UnitCircle& U, const std::vector<Elem>& values);

/**
 * For f(u) = sum_{e in E} a_e u^e and c outside U_{q+1}, checks that
 * (c u + 1)^w f((u + c^q) / (c u + 1)), w = 2 (q^2 - 1) / 3, has spectrum
 * supported on E. h = 1 runs every coefficient pair and every c; larger h
 * run `trials` seeded random cases. Also checks the monomial expansion of
 * x^(q^2 - 1 - qe) (x + 1)^(w + (q - 1)e - q^2 + 1) and that its exponents
 * reduce into E modulo q + 1.
 */
Report verify_spectrum_lemma(unsigned h, std::size_t trials, std::uint64_t seed);

/// Only the exponent-expansion part of verify_spectrum_lemma.
Report verify_exponent_lemmas(unsigned h);

}  // namespace quatcode

#endif  // QUATCODE_PROJECTIVE_HPP
