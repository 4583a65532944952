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

#include "quatcode/weights.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "quatcode/error.hpp"

namespace quatcode {

namespace {

using Histogram = std::vector<std::uint64_t>;

// Fixed-size kernel: the packed codeword lives in registers or L1.
template <std::size_t W, std::size_t P>
void count_range_fixed(const PackedGenerators& g, std::uint64_t begin, std::uint64_t end, Histogram& hist) {
  std::array<std::uint64_t, W * P> cw{};
  g.codeword_at(begin, cw.data());
  auto weight = [&cw]() {
    unsigned w = 0;
    for (std::size_t j = 0; j < W; ++j) {
      std::uint64_t o = 0;
      for (std::size_t p = 0; p < P; ++p) o |= cw[p * W + j];
      w += static_cast<unsigned>(std::popcount(o));
    }
    return w;
  };
  ++hist[weight()];
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const std::uint64_t* v = g.vector(static_cast<std::size_t>(std::countr_zero(i)));
    for (std::size_t t = 0; t < W * P; ++t) cw[t] ^= v[t];
    ++hist[weight()];
  }
}

void count_range_generic(const PackedGenerators& g, std::uint64_t begin, std::uint64_t end, Histogram& hist) {
  for_each_codeword(g, begin, end, [&](std::uint64_t, const std::uint64_t* cw) { ++hist[g.weight_of(cw)]; });
}

template <std::size_t P>
void count_range_planes(const PackedGenerators& g, std::uint64_t b, std::uint64_t e, Histogram& h) {
  switch (g.words()) {
    case 1: return count_range_fixed<1, P>(g, b, e, h);
    case 2: return count_range_fixed<2, P>(g, b, e, h);
    case 3: return count_range_fixed<3, P>(g, b, e, h);
    case 4: return count_range_fixed<4, P>(g, b, e, h);
    case 5: return count_range_fixed<5, P>(g, b, e, h);
    default: return count_range_generic(g, b, e, h);
  }
}

void count_range(const PackedGenerators& g, std::uint64_t b, std::uint64_t e, Histogram& h) {
  switch (g.planes()) {
    case 1: return count_range_planes<1>(g, b, e, h);
    case 2: return count_range_planes<2>(g, b, e, h);
    case 3: return count_range_planes<3>(g, b, e, h);
    case 4: return count_range_planes<4>(g, b, e, h);
    default: return count_range_generic(g, b, e, h);
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string big_to_string(const BigInt& x) { return x.str(); }

}  // namespace

std::uint64_t default_budget() {
  constexpr std::uint64_t kDefault = std::uint64_t{1} << 24;
  const char* env = std::getenv("QUATCODE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return static_cast<std::uint64_t>(v);
}

std::string to_string(Provenance p) { return p == Provenance::Exhaustive ? "exhaustive" : "macwilliams"; }

// ---------------------------------------------------------------------------
// WeightDistribution

std::optional<std::size_t> WeightDistribution::min_distance() const {
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] != 0) return i;
  }
  return std::nullopt;
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

std::vector<std::size_t> WeightDistribution::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) out.push_back(i);
  }
  return out;
}

std::string WeightDistribution::enumerator() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i : support()) {
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << counts[i];
    } else {
      if (counts[i] != 1) os << counts[i];
      os << "z^" << i;
    }
  }
  return first ? "0" : os.str();
}

nlohmann::ordered_json WeightDistribution::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["n"] = length;
  j["field_size"] = field_size;
  j["dimension"] = dimension;
  j["provenance"] = to_string(provenance);
  nlohmann::ordered_json counts_json = nlohmann::ordered_json::object();
  for (std::size_t i : support()) counts_json[std::to_string(i)] = big_to_string(counts[i]);
  j["counts"] = std::move(counts_json);
  const auto d = min_distance();
  j["min_distance"] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
  j["enumerator"] = enumerator();
  if (with_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  return j;
}

std::string WeightDistribution::to_csv() const {
  std::ostringstream os;
  os << "weight,count\n";
  for (std::size_t i : support()) os << i << ',' << counts[i] << '\n';
  return os.str();
}

WeightDistribution make_distribution(std::size_t n, std::uint64_t field_size, std::size_t k,
                                     const std::vector<std::uint64_t>& counts) {
  WeightDistribution d;
  d.length = n;
  d.field_size = field_size;
  d.dimension = k;
  d.counts.assign(n + 1, 0);
  for (std::size_t i = 0; i < counts.size() && i <= n; ++i) d.counts[i] = counts[i];
  return d;
}

// ---------------------------------------------------------------------------
// PackedGenerators

PackedGenerators::PackedGenerators(const LinearCode& code)
    : length_(code.length()),
      words_((code.length() + 63) / 64),
      planes_(code.field()->degree()),
      count_(code.dimension() * code.field()->degree()) {
  if (count_ > 63) throw ResourceLimit("code has 2^" + std::to_string(count_) + " codewords");
  const Field& F = *code.field();
  data_.assign(count_ * stride(), 0);
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    auto row = code.generator().row(r);
    for (std::size_t t = 0; t < planes_; ++t) {
      std::uint64_t* v = data_.data() + (r * planes_ + t) * stride();
      const Elem scale = F.exp(t);
      for (std::size_t j = 0; j < length_; ++j) {
        const Elem s = F.mul(scale, row[j]);
        for (std::size_t p = 0; p < planes_; ++p) {
          if ((s >> p) & 1u) v[p * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        }
      }
    }
  }
}

void PackedGenerators::codeword_at(std::uint64_t index, std::uint64_t* out) const {
  std::fill(out, out + stride(), 0);
  std::uint64_t gray = index ^ (index >> 1);
  while (gray != 0) {
    const std::uint64_t* v = vector(static_cast<std::size_t>(std::countr_zero(gray)));
    for (std::size_t t = 0; t < stride(); ++t) out[t] ^= v[t];
    gray &= gray - 1;
  }
}

void PackedGenerators::support_of(const std::uint64_t* packed, std::uint64_t* out) const {
  for (std::size_t j = 0; j < words_; ++j) {
    std::uint64_t o = 0;
    for (std::size_t p = 0; p < planes_; ++p) o |= packed[p * words_ + j];
    out[j] = o;
  }
}

unsigned PackedGenerators::weight_of(const std::uint64_t* packed) const {
  unsigned w = 0;
  for (std::size_t j = 0; j < words_; ++j) {
    std::uint64_t o = 0;
    for (std::size_t p = 0; p < planes_; ++p) o |= packed[p * words_ + j];
    w += static_cast<unsigned>(std::popcount(o));
  }
  return w;
}

std::vector<Elem> PackedGenerators::unpack(const std::uint64_t* packed) const {
  std::vector<Elem> out(length_, 0);
  for (std::size_t j = 0; j < length_; ++j) {
    for (std::size_t p = 0; p < planes_; ++p) {
      if ((packed[p * words_ + j / 64] >> (j % 64)) & 1u) out[j] |= Elem{1} << p;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t codebook_size(const LinearCode& code) {
  const std::size_t bits = code.dimension() * code.field()->degree();
  if (bits > 62) throw ResourceLimit("code has 2^" + std::to_string(bits) + " codewords");
  return std::uint64_t{1} << bits;
}

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = codebook_size(code);
  if (total > options.budget) {
    throw ResourceLimit("enumeration of " + std::to_string(total) + " codewords exceeds the budget of " +
                        std::to_string(options.budget));
  }
  const PackedGenerators gens(code);
  const std::size_t n = code.length();

  // Fixed chunking keeps the merged result independent of scheduling.
  const unsigned threads = resolve_threads(options.threads);
  const std::uint64_t min_chunk = std::uint64_t{1} << 16;
  std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total / min_chunk, 64u * threads));
  const std::uint64_t chunk_size = (total + chunks - 1) / chunks;
  chunks = (total + chunk_size - 1) / chunk_size;

  std::vector<Histogram> partial(threads, Histogram(n + 1, 0));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&](unsigned id) {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t b = c * chunk_size;
      count_range(gens, b, std::min(total, b + chunk_size), partial[id]);
    }
  };
  if (threads == 1 || chunks == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  Histogram merged(n + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t i = 0; i <= n; ++i) merged[i] += h[i];
  }
  WeightDistribution d = make_distribution(n, code.field()->size(), code.dimension(), merged);
  d.elapsed = std::chrono::steady_clock::now() - start;
  return d;
}

WeightDistribution weight_distribution_naive(const LinearCode& code) {
  const Field& F = *code.field();
  const std::size_t k = code.dimension();
  const std::uint64_t total = codebook_size(code);
  const std::uint64_t q = F.size();
  Histogram hist(code.length() + 1, 0);
  std::vector<Elem> message(k, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t r = 0; r < k; ++r) {
      message[r] = static_cast<Elem>(x % q);
      x /= q;
    }
    const auto word = code.encode(message);
    ++hist[static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem e) { return e != 0; }))];
  }
  return make_distribution(code.length(), q, k, hist);
}

// ---------------------------------------------------------------------------
// MacWilliams

namespace {

std::vector<std::vector<BigInt>> binomial_table(std::size_t n) {
  std::vector<std::vector<BigInt>> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

BigInt choose(const std::vector<std::vector<BigInt>>& c, std::size_t a, std::size_t b) {
  return b > a ? BigInt(0) : c[a][b];
}

BigInt krawtchouk_with(const std::vector<std::vector<BigInt>>& c, const std::vector<BigInt>& powers,
                       std::size_t n, std::size_t j, std::size_t i) {
  BigInt sum = 0;
  for (std::size_t s = 0; s <= j; ++s) {
    if (s > i || j - s > n - i) continue;
    BigInt term = powers[j - s] * choose(c, i, s) * choose(c, n - i, j - s);
    if (s % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

BigInt krawtchouk(std::size_t n, std::uint64_t q, std::size_t j, std::size_t i) {
  if (i > n || j > n) throw InvalidArgument("Krawtchouk indices exceed the length");
  const auto c = binomial_table(n);
  std::vector<BigInt> powers(n + 1, 1);
  for (std::size_t e = 1; e <= n; ++e) powers[e] = powers[e - 1] * (q - 1);
  return krawtchouk_with(c, powers, n, j, i);
}

WeightDistribution macwilliams(const WeightDistribution& dist) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = dist.length;
  const std::uint64_t q = dist.field_size;
  if (dist.counts.size() != n + 1) throw InvalidArgument("distribution has the wrong number of counts");
  const BigInt size = dist.total();
  if (size == 0) throw InvalidArgument("empty distribution");

  const auto c = binomial_table(n);
  std::vector<BigInt> powers(n + 1, 1);
  for (std::size_t e = 1; e <= n; ++e) powers[e] = powers[e - 1] * (q - 1);

  WeightDistribution out;
  out.length = n;
  out.field_size = q;
  out.dimension = n - dist.dimension;
  out.provenance = Provenance::MacWilliams;
  out.counts.assign(n + 1, 0);
  const auto nonzero = dist.support();
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt sum = 0;
    for (std::size_t i : nonzero) sum += dist.counts[i] * krawtchouk_with(c, powers, n, j, i);
    if (sum % size != 0) throw InvalidArgument("MacWilliams transform is not integral; input is not a linear code");
    out.counts[j] = sum / size;
    if (out.counts[j] < 0) throw InvalidArgument("MacWilliams transform produced a negative count");
  }
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

// ---------------------------------------------------------------------------
// Minimum distance

DistanceResult min_distance(const LinearCode& code, const EnumerationOptions& options, std::size_t lower) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (k == 0) return {n + 1, n + 1, "exhaustive"};
  const std::size_t m = code.field()->degree();
  auto fits = [&](std::size_t dim) { return dim * m <= 62 && (std::uint64_t{1} << (dim * m)) <= options.budget; };
  if (fits(k)) {
    const std::size_t d = *weight_distribution(code, options).min_distance();
    return {d, d, "exhaustive"};
  }
  if (fits(n - k)) {
    const std::size_t d = *macwilliams(weight_distribution(dual(code), options)).min_distance();
    return {d, d, "macwilliams"};
  }
  return {std::max<std::size_t>(1, lower), singleton_bound(n, k), "bounds"};
}

DistanceResult min_distance(const CyclicCode& code, const EnumerationOptions& options) {
  return min_distance(code.linear(), options, bch_bound(code));
}

}  // namespace quatcode
