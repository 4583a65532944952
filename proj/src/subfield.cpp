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

#include "quatcode/subfield.hpp"

#include <sstream>

#include "quatcode/error.hpp"
#include "quatcode/weights.hpp"

namespace quatcode {

namespace {

unsigned half_degree(const Tower& tower) {
  if (!tower.has_gf4()) throw InvalidTower("GF(4) is not a subfield of GF(2^" + std::to_string(tower.m) + ")");
  return tower.m / 2;
}

void require_over_q(const LinearCode& code, const Tower& tower) {
  if (code.field()->degree() != tower.gf_q->degree() || code.field()->modulus() != tower.gf_q->modulus()) {
    throw InvalidArgument("parent code is not over GF(2^" + std::to_string(tower.m) + ")");
  }
}

// coords[z * h + t] is the t-th GF(4) coordinate of z in the default basis.
std::vector<Elem> coordinate_table(const Tower& tower) {
  const unsigned h = half_degree(tower);
  const Field& Fq = *tower.gf_q;
  const auto basis = default_gf4_basis(tower);
  std::vector<Elem> coords(Fq.size() * h, 0);
  std::vector<Elem> c(h, 0);
  for (std::uint64_t idx = 0; idx < Fq.size(); ++idx) {
    std::uint64_t x = idx;
    Elem z = 0;
    for (unsigned t = 0; t < h; ++t) {
      c[t] = static_cast<Elem>(x & 3u);
      x >>= 2;
      z ^= Fq.mul(tower.emb_4_q->apply(c[t]), basis[t]);
    }
    std::copy(c.begin(), c.end(), coords.begin() + static_cast<std::ptrdiff_t>(z) * h);
  }
  return coords;
}

std::string format_word(std::span<const Elem> w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < w.size(); ++j) os << (j ? "," : "") << w[j];
  os << ')';
  return os.str();
}

// A generator row of `a` that `b` lacks, or of `b` that `a` lacks.
std::string difference_witness(const LinearCode& a, const LinearCode& b) {
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    if (!b.contains(a.generator().row(r))) return "word of the first side only: " + format_word(a.generator().row(r));
  }
  for (std::size_t r = 0; r < b.dimension(); ++r) {
    if (!a.contains(b.generator().row(r))) return "word of the second side only: " + format_word(b.generator().row(r));
  }
  return "same row space";
}

std::string dims(const LinearCode& a, const LinearCode& b) {
  return "dimensions " + std::to_string(a.dimension()) + " and " + std::to_string(b.dimension());
}

nlohmann::ordered_json linear_to_json(const LinearCode& code) {
  nlohmann::ordered_json j;
  j["field_degree"] = code.field()->degree();
  j["field_modulus"] = code.field()->modulus();
  j["n"] = code.length();
  j["dimension"] = code.dimension();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    auto row = code.generator().row(r);
    rows.push_back(std::vector<Elem>(row.begin(), row.end()));
  }
  j["generator_rref"] = std::move(rows);
  return j;
}

}  // namespace

std::string to_string(DerivationKind kind) {
  return kind == DerivationKind::SubfieldSubcode ? "subfield_subcode" : "subfield_code";
}

std::string to_string(Route route) {
  switch (route) {
    case Route::DefiningSet: return "defining_set";
    case Route::ComponentFilter: return "component_filter";
    case Route::CoordinateExpansion: return "coordinate_expansion";
    case Route::TraceSpanning: return "trace_spanning";
    case Route::TraceRepresentation: return "trace_representation";
  }
  return "unknown";
}

nlohmann::ordered_json SubfieldDerivation::to_json() const {
  nlohmann::ordered_json j = linear_to_json(result);
  j["derivation"] = {{"kind", to_string(kind)}, {"route", to_string(route)}, {"parent", parent}};
  return j;
}

TowerPtr quaternary_tower(unsigned h) {
  if (h < 1 || h > 4) throw InvalidTower("quaternary codes are supported for 1 <= h <= 4, got " + std::to_string(h));
  return Tower::get(2 * h);
}

std::vector<Elem> default_gf4_basis(const Tower& tower) {
  const unsigned h = half_degree(tower);
  std::vector<Elem> basis(h);
  for (unsigned t = 0; t < h; ++t) basis[t] = tower.gf_q->exp(t);
  return basis;
}

bool is_gf4_basis(const Tower& tower, const std::vector<Elem>& basis) {
  const unsigned h = half_degree(tower);
  if (basis.size() != h) return false;
  const Field& Fq = *tower.gf_q;
  std::vector<bool> seen(Fq.size(), false);
  for (std::uint64_t idx = 0; idx < Fq.size(); ++idx) {
    std::uint64_t x = idx;
    Elem z = 0;
    for (unsigned t = 0; t < h; ++t, x >>= 2) z ^= Fq.mul(tower.emb_4_q->apply(static_cast<Elem>(x & 3u)), basis[t]);
    if (seen[z]) return false;
    seen[z] = true;
  }
  return true;
}

std::vector<Elem> random_gf4_basis(const Tower& tower, std::mt19937_64& rng) {
  const unsigned h = half_degree(tower);
  const std::uint64_t q = tower.gf_q->size();
  std::vector<Elem> basis(h);
  do {
    for (auto& b : basis) b = static_cast<Elem>(1 + rng() % (q - 1));
  } while (!is_gf4_basis(tower, basis));
  return basis;
}

LinearCode embed(const LinearCode& code, const Embedding& emb) {
  Matrix m(emb.big(), code.length());
  std::vector<Elem> w(code.length());
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    auto row = code.generator().row(r);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = emb.apply(row[j]);
    m.append_row(w);
  }
  return LinearCode(std::move(m));
}

CyclicCode subfield_subcode(const CyclicCode& parent, const Tower& tower) {
  half_degree(tower);
  if (parent.context() != tower.ctx_q) {
    throw InvalidArgument("defining-set route needs a parent over the tower's GF(q) of length q + 1");
  }
  return CyclicCode::from_defining_set(tower.ctx_4, coset_closure(parent.defining_set(), 4));
}

LinearCode subfield_subcode_filter(const LinearCode& parent, const Tower& tower, std::uint64_t budget) {
  half_degree(tower);
  require_over_q(parent, tower);
  const std::uint64_t total = codebook_size(parent);
  if (total > budget) {
    throw ResourceLimit("component filter over " + std::to_string(total) + " codewords exceeds the budget of " +
                        std::to_string(budget));
  }
  const Embedding& emb = *tower.emb_4_q;
  const PackedGenerators gens(parent);
  LinearCode found = LinearCode::zero(tower.gf4, parent.length());
  std::vector<Elem> small(parent.length());
  for_each_codeword(gens, 0, total, [&](std::uint64_t, const std::uint64_t* cw) {
    const auto word = gens.unpack(cw);
    for (std::size_t j = 0; j < word.size(); ++j) {
      const auto pre = emb.preimage(word[j]);
      if (!pre) return;
      small[j] = *pre;
    }
    if (found.contains(small)) return;
    Matrix g = found.generator();
    g.append_row(small);
    found = LinearCode(std::move(g));
  });
  return found;
}

LinearCode subfield_subcode_expand(const LinearCode& parent, const Tower& tower) {
  const unsigned h = half_degree(tower);
  require_over_q(parent, tower);
  const auto coords = coordinate_table(tower);
  const LinearCode checks = dual(parent);
  Matrix expanded(tower.gf4, parent.length());
  std::vector<Elem> w(parent.length());
  for (std::size_t r = 0; r < checks.dimension(); ++r) {
    auto row = checks.generator().row(r);
    for (unsigned t = 0; t < h; ++t) {
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = coords[static_cast<std::size_t>(row[j]) * h + t];
      expanded.append_row(w);
    }
  }
  return dual(LinearCode(std::move(expanded)));
}

LinearCode subfield_code(const LinearCode& parent, const Tower& tower, const std::vector<Elem>& basis) {
  half_degree(tower);
  require_over_q(parent, tower);
  if (!is_gf4_basis(tower, basis)) throw InvalidArgument("elements do not form a GF(4)-basis of GF(q)");
  const Field& Fq = *tower.gf_q;
  const Embedding& emb = *tower.emb_4_q;
  Matrix span(tower.gf4, parent.length());
  std::vector<Elem> w(parent.length());
  for (std::size_t r = 0; r < parent.dimension(); ++r) {
    auto row = parent.generator().row(r);
    for (Elem gamma : basis) {
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = emb.trace(Fq.mul(gamma, row[j]));
      span.append_row(w);
    }
  }
  return LinearCode(std::move(span));
}

Report verify_delsarte(const LinearCode& parent, const Tower& tower) {
  Report report;
  report.title = "delsarte";
  const LinearCode trace_code = subfield_code(parent, tower);
  const LinearCode lhs = dual(trace_code);
  const LinearCode rhs = subfield_subcode_expand(dual(parent), tower);
  report.add("dual of trace code equals subfield subcode of dual", lhs == rhs,
             lhs == rhs ? dims(lhs, rhs) : dims(lhs, rhs) + "; " + difference_witness(lhs, rhs));

  std::mt19937_64 rng(0x5eedULL + tower.m);
  const LinearCode other = subfield_code(parent, tower, random_gf4_basis(tower, rng));
  report.add("trace code independent of the GF(4)-basis", other == trace_code, dims(trace_code, other));

  const LinearCode sub = subfield_subcode_expand(parent, tower);
  report.add("subfield subcode contained in trace code", trace_code.contains(sub), dims(sub, trace_code));
  return report;
}

Report verify_delsarte(const CyclicCode& parent, const Tower& tower) {
  Report report = verify_delsarte(parent.linear(), tower);
  const LinearCode by_zeros = subfield_subcode(dual(parent), tower).linear();
  const LinearCode by_expansion = subfield_subcode_expand(dual(parent).linear(), tower);
  report.add("defining-set and coordinate-expansion routes agree", by_zeros == by_expansion,
             dims(by_zeros, by_expansion));
  return report;
}

Elem trace_representation_eval(const Tower& tower, const std::vector<TraceTerm>& terms, std::uint32_t j) {
  half_degree(tower);
  const SplittingField& ctx = *tower.ctx_4;
  const Field& big = *ctx.big;
  Elem s = 0;
  for (const auto& [i, a] : terms) {
    if (!big.contains(a)) throw InvalidArgument("trace coefficient outside GF(q^2)");
    s ^= big.mul(a, ctx.root(static_cast<std::int64_t>(i) * j));
  }
  return ctx.embedding->trace(s);
}

std::vector<Elem> trace_representation_word(const Tower& tower, const std::vector<TraceTerm>& terms) {
  std::vector<Elem> w(tower.n());
  for (std::uint32_t j = 0; j < w.size(); ++j) w[j] = trace_representation_eval(tower, terms, j);
  return w;
}

LinearCode trace_representation_code(const Tower& tower, const IndexSet& exponents) {
  const unsigned h = half_degree(tower);
  if (exponents.modulus() != tower.n()) throw InvalidArgument("exponent set modulus differs from q + 1");
  const Field& big = *tower.ctx_4->big;
  Matrix span(tower.gf4, tower.n());
  for (std::uint32_t i : exponents.elements()) {
    for (unsigned t = 0; t < 2 * h; ++t) span.append_row(trace_representation_word(tower, {{i, big.exp(t)}}));
  }
  return LinearCode(std::move(span));
}

CyclicCode quaternary_parent(unsigned h) {
  const auto tower = quaternary_tower(h);
  return mds_family_code(tower->m, static_cast<unsigned>((tower->q() + 4) / 4));
}

CyclicCode quaternary_code(unsigned h) { return subfield_subcode(dual(quaternary_parent(h)), *quaternary_tower(h)); }

LinearCode quaternary_trace_code(unsigned h) {
  return subfield_code(quaternary_parent(h).linear(), *quaternary_tower(h));
}

}  // namespace quatcode
