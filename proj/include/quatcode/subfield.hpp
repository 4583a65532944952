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
 * @file subfield.hpp
 * @brief Subfield subcodes C|GF(4), trace codes C^(4) = Tr_{q/4}(C), and the
 *        duality (C^(4))^perp = (C^perp)|GF(4).
 *
 * Every construction here has at least two independent routes so they can
 * be played against each other:
 *
 *  - subfield subcode of a cyclic code: 4-cyclotomic closure of the parent
 *    defining set, or brute-force filtering of parent codewords;
 *  - subfield subcode of a linear code: expansion of each parity check into
 *    h GF(4)-equations through coordinates in a GF(4)-basis of GF(q);
 *  - trace code: GF(4)-span of Tr(gamma * g) over parent rows g and a
 *    GF(4)-basis {gamma};
 *  - trace representation: words (sum_i Tr_{q^2/4}(a_i beta^(i j)))_j.
 *
 * Throughout q = 4^h, n = q + 1 and the quaternary codes live in the Tower
 * for m = 2h, whose GF(4), GF(q) and GF(q^2) embeddings are compatible.
 */

#ifndef QUATCODE_SUBFIELD_HPP
#define QUATCODE_SUBFIELD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quatcode/codes.hpp"
#include "quatcode/report.hpp"

namespace quatcode {

enum class DerivationKind { SubfieldSubcode, SubfieldCode };
enum class Route { DefiningSet, ComponentFilter, CoordinateExpansion, TraceSpanning, TraceRepresentation };

std::string to_string(DerivationKind kind);
std::string to_string(Route route);

/// A GF(4) code together with where it came from.
struct SubfieldDerivation {
  nlohmann::ordered_json parent;  // parent descriptor
  DerivationKind kind = DerivationKind::SubfieldSubcode;
  Route route = Route::DefiningSet;
  LinearCode result;

  /// Descriptor of the result plus a `derivation` annotation.
  nlohmann::ordered_json to_json() const;
};

/// Tower for q = 4^h, i.e. m = 2h; throws InvalidTower for h outside 1..4.
TowerPtr quaternary_tower(unsigned h);

/// {1, alpha, ..., alpha^(h-1)}: a GF(4)-basis of GF(q), alpha primitive.
std::vector<Elem> default_gf4_basis(const Tower& tower);
/// Uniformly random GF(4)-basis of GF(q).
std::vector<Elem> random_gf4_basis(const Tower& tower, std::mt19937_64& rng);
/// True iff the elements form a GF(4)-basis of GF(q).
bool is_gf4_basis(const Tower& tower, const std::vector<Elem>& basis);

/// Codeword-wise image of a GF(4) code in GF(q)^n.
LinearCode embed(const LinearCode& code, const Embedding& emb);

/**
 * (parent)|GF(4) by the defining-set route: zeros are the 4-cyclotomic
 * closure of the parent zeros. The parent must be built over tower.ctx_q.
 */
CyclicCode subfield_subcode(const CyclicCode& parent, const Tower& tower);

/// (parent)|GF(4) by filtering all parent codewords; throws ResourceLimit if
/// the parent has more than `budget` codewords.
LinearCode subfield_subcode_filter(const LinearCode& parent, const Tower& tower, std::uint64_t budget);

/// (parent)|GF(4) as the GF(4) null space of the coordinate-expanded parity
/// checks of the parent.
LinearCode subfield_subcode_expand(const LinearCode& parent, const Tower& tower);

/// Tr_{q/4}(parent): GF(4)-span of Tr(gamma * row) for gamma in `basis`.
LinearCode subfield_code(const LinearCode& parent, const Tower& tower, const std::vector<Elem>& basis);
inline LinearCode subfield_code(const LinearCode& parent, const Tower& tower) {
  return subfield_code(parent, tower, default_gf4_basis(tower));
}

/**
 * Compares (C^(4))^perp with (C^perp)|GF(4) as reduced generator matrices,
 * the latter by coordinate expansion. A mismatch reports a generator row
 * of one side missing from the other. For a cyclic parent the defining-set
 * route is compared as well.
 */
Report verify_delsarte(const LinearCode& parent, const Tower& tower);
Report verify_delsarte(const CyclicCode& parent, const Tower& tower);

/// One coefficient a_i of a trace representation, i an exponent in Z_n.
using TraceTerm = std::pair<std::uint32_t, Elem>;

/// sum_i Tr_{q^2/4}(a_i beta^(i j)) as an element of GF(4); a_i in GF(q^2).
Elem trace_representation_eval(const Tower& tower, const std::vector<TraceTerm>& terms, std::uint32_t j);
/// The word obtained by evaluating every coordinate j = 0..n-1.
std::vector<Elem> trace_representation_word(const Tower& tower, const std::vector<TraceTerm>& terms);
/// GF(4)-span of all trace words with exponents in `exponents`.
LinearCode trace_representation_code(const Tower& tower, const IndexSet& exponents);

/// C_u with u = (q + 4) / 4 over GF(q), q = 4^h.
CyclicCode quaternary_parent(unsigned h);
/// (C_u^perp)|GF(4): the [4^h + 1, 2^h] code, defining set T.
CyclicCode quaternary_code(unsigned h);
/// C_u^(4) = Tr_{q/4}(C_u): the [4^h + 1, 4^h + 1 - 2^h] code, defining set T^c.
LinearCode quaternary_trace_code(unsigned h);

}  // namespace quatcode

#endif  // QUATCODE_SUBFIELD_HPP
