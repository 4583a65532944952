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

#include "quatcode/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "quatcode/error.hpp"

namespace quatcode {

IndexSet::IndexSet(std::uint32_t n, std::vector<std::uint32_t> elements) : n_(n), member_(n, false) {
  for (std::uint32_t e : elements) {
    if (e >= n) throw InvalidArgument("index " + std::to_string(e) + " outside Z_" + std::to_string(n));
    member_[e] = true;
  }
  elements_.reserve(elements.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    if (member_[i]) elements_.push_back(i);
  }
}

bool IndexSet::contains(std::int64_t i) const {
  if (n_ == 0) return false;
  const std::int64_t nn = n_;
  return member_[static_cast<std::size_t>(((i % nn) + nn) % nn)];
}

IndexSet IndexSet::complement() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (!member_[i]) out.push_back(i);
  }
  return IndexSet(n_, std::move(out));
}

IndexSet IndexSet::negated() const {
  std::vector<std::uint32_t> out;
  out.reserve(elements_.size());
  for (std::uint32_t e : elements_) out.push_back((n_ - e) % n_);
  return IndexSet(n_, std::move(out));
}

IndexSet IndexSet::scaled(std::uint64_t b) const {
  std::vector<std::uint32_t> out;
  out.reserve(elements_.size());
  for (std::uint32_t e : elements_) out.push_back(static_cast<std::uint32_t>((e * (b % n_)) % n_));
  return IndexSet(n_, std::move(out));
}

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t s, std::uint32_t n, std::uint64_t b) {
  if (n == 0) throw InvalidArgument("modulus must be positive");
  std::vector<std::uint32_t> out;
  const std::uint64_t bm = b % n;
  std::uint64_t x = s % n;
  do {
    out.push_back(static_cast<std::uint32_t>(x));
    x = (x * bm) % n;
  } while (x != s % n && out.size() <= n);
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet coset_closure(const IndexSet& set, std::uint64_t b) {
  const std::uint32_t n = set.modulus();
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : set.elements()) {
    if (seen[s]) continue;
    for (std::uint32_t x : cyclotomic_coset(s, n, b)) {
      if (!seen[x]) {
        seen[x] = true;
        out.push_back(x);
      }
    }
  }
  return IndexSet(n, std::move(out));
}

CosetSystem::CosetSystem(std::uint32_t n, std::uint64_t b) : n_(n), b_(b) {
  if (n == 0 || std::gcd(static_cast<std::uint64_t>(n), b) != 1) {
    throw InvalidArgument("coset system needs gcd(n, b) = 1 (n=" + std::to_string(n) + ", b=" + std::to_string(b) +
                          ")");
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  index_.assign(n, kUnset);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (index_[s] != kUnset) continue;
    auto coset = cyclotomic_coset(s, n, b);
    for (std::uint32_t x : coset) index_[x] = cosets_.size();
    leaders_.push_back(coset.front());
    cosets_.push_back(std::move(coset));
  }
}

std::uint32_t quaternary_length(unsigned h) {
  if (h < 1 || h > 15) throw InvalidArgument("tower exponent h must be in [1, 15], got " + std::to_string(h));
  return (std::uint32_t{1} << (2 * h)) + 1;
}

IndexSet build_T(unsigned h) {
  const std::uint32_t n = quaternary_length(h);
  const std::uint32_t top = std::uint32_t{1} << (2 * (h - 1));  // q/4
  std::vector<std::uint32_t> seeds(top + 1);
  std::iota(seeds.begin(), seeds.end(), 0u);
  return coset_closure(IndexSet(n, std::move(seeds)), 4);
}

IndexSet build_Tc(unsigned h) {
  const std::uint32_t n = quaternary_length(h);
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
    std::uint32_t value = 2 + (mask & 1);  // a_0 in {2, 3}
    std::uint32_t place = 4;
    for (unsigned i = 1; i < h; ++i, place *= 4) value += (1 + ((mask >> i) & 1)) * place;  // a_i in {1, 2}
    out.push_back(value);
  }
  return IndexSet(n, std::move(out));
}

IndexSet build_E(unsigned h) {
  const std::uint32_t n = quaternary_length(h);
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
    std::uint32_t value = 1;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < h; ++i, place *= 4) value += (1 + ((mask >> i) & 1)) * place;
    out.push_back(value);
  }
  return IndexSet(n, std::move(out));
}

Report verify_partition(unsigned h) {
  Report r;
  r.title = "defining-set lemmas h=" + std::to_string(h);
  const std::uint32_t n = quaternary_length(h);
  const std::uint64_t q = n - 1;

  // Coset route for T, independent of the digit route for T^c.
  CosetSystem cosets(n, 4);
  std::vector<bool> in_t(n, false);
  for (std::uint32_t i = 0; i <= q / 4; ++i) {
    for (std::uint32_t x : cosets.coset_of(i)) in_t[x] = true;
  }
  const IndexSet tc = build_Tc(h);

  auto first = [&](auto&& pred) -> std::int64_t {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (pred(i)) return i;
    }
    return -1;
  };
  auto add = [&](const std::string& name, std::int64_t bad) {
    r.add(name, bad < 0, bad < 0 ? std::string{} : "counterexample " + std::to_string(bad));
  };

  add("T and T^c disjoint", first([&](std::uint32_t i) { return in_t[i] && tc.contains(i); }));
  add("T and T^c cover Z_n", first([&](std::uint32_t i) { return !in_t[i] && !tc.contains(i); }));
  r.add("|T^c| = 2^h", tc.size() == (std::size_t{1} << h), "|T^c| = " + std::to_string(tc.size()));
  add("T^c closed under x4", first([&](std::uint32_t i) { return tc.contains(i) && !tc.contains(4ull * i % n); }));
  add("T closed under x4", first([&](std::uint32_t i) { return in_t[i] && !in_t[4ull * i % n]; }));

  const std::uint64_t want_min = (q + 2) / 3;
  const std::uint64_t want_max = (2 * q + 1) / 3;
  r.add("min T^c = (2^(2h)+2)/3", tc.min() == want_min,
        "min=" + std::to_string(tc.min()) + " formula=" + std::to_string(want_min));
  r.add("max T^c = (2^(2h+1)+1)/3", tc.max() == want_max,
        "max=" + std::to_string(tc.max()) + " formula=" + std::to_string(want_max));

  const std::uint64_t delta = (q - 1) / 3;
  add("{0..delta} in T", first([&](std::uint32_t i) { return i <= delta && !in_t[i]; }));
  add("{n-delta..n-1} in T", first([&](std::uint32_t i) { return i >= n - delta && !in_t[i]; }));
  add("4^(h-1)+1 <= i <= delta implies i in T",
      first([&](std::uint32_t i) { return i >= q / 4 + 1 && i <= delta && !in_t[i]; }));
  add("i in T iff n-i in T", first([&](std::uint32_t i) { return in_t[i] != in_t[(n - i) % n]; }));

  const IndexSet e = build_E(h);
  r.add("E = {n-i : i in T^c}", e == tc.negated());
  r.add("E = T^c", e == tc);
  return r;
}

}  // namespace quatcode
