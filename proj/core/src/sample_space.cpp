#include "ramsey/sample_space.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/gf2.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

namespace {

int ceil_log2(std::uint64_t v) {
  int e = 0;
  while ((std::uint64_t{1} << e) < v) ++e;
  return e;
}

}  // namespace

double SampleSpaceSpec::epsilon_bias() const {
  if (kind == SpaceKind::uniform) return 0.0;
  if (m <= 1) return 0.0;
  return static_cast<double>(m - 1) * std::exp2(static_cast<double>(-r));
}

SampleSpaceSpec derive_spec(int k) {
  if (k < 4) throw std::invalid_argument("sample space requires k >= 4");
  int big_l = ceil_log2(static_cast<std::uint64_t>(k));
  SampleSpaceSpec s;
  s.kind = SpaceKind::powering;
  s.k = k;
  s.m = edge_slot_count(static_cast<std::uint64_t>(k));
  s.t = static_cast<std::uint64_t>(5) * big_l * big_l;
  s.delta_log2 = -5 * big_l * big_l;
  s.r = static_cast<int>((s.t + 1) / 2) + ceil_log2(s.m > 2 ? s.m - 1 : 2) - s.delta_log2;
  s.seed_bits = 2 * s.r;
  return s;
}

SampleSpaceSpec relaxed_spec_for_length(std::uint64_t m, int r) {
  if (m < 1) throw std::invalid_argument("string length must be >= 1");
  if (r < 2 || r > gf2::kMaxFieldDegree)
    throw std::invalid_argument("relaxed field degree out of range");
  SampleSpaceSpec s;
  s.kind = SpaceKind::powering;
  s.k = 0;
  s.m = m;
  int lg_m = ceil_log2(s.m > 2 ? s.m - 1 : 2);
  s.t = static_cast<std::uint64_t>(std::max(1, r - lg_m));
  s.delta_log2 = static_cast<int>((s.t + 1) / 2) + lg_m - r;
  if (s.delta_log2 > -1) s.delta_log2 = -1;  // never claim worse than 1/2
  s.r = r;
  s.seed_bits = 2 * r;
  return s;
}

SampleSpaceSpec relaxed_spec(int k, int r) {
  if (k < 4) throw std::invalid_argument("sample space requires k >= 4");
  SampleSpaceSpec s = relaxed_spec_for_length(edge_slot_count(static_cast<std::uint64_t>(k)), r);
  s.k = k;
  return s;
}

SampleSpaceSpec uniform_spec(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("uniform space needs m >= 1");
  SampleSpaceSpec s;
  s.kind = SpaceKind::uniform;
  s.k = 0;
  s.m = m;
  s.t = m;  // exactly m-wise independent
  s.delta_log2 = 0;
  s.r = 0;
  s.seed_bits = static_cast<int>(m);
  return s;
}

double seed_space_union_bound_log2(int k) {
  int big_l = ceil_log2(static_cast<std::uint64_t>(k));
  double ll = static_cast<double>(big_l);
  std::uint64_t subset = static_cast<std::uint64_t>(3) * big_l;
  if (subset > static_cast<std::uint64_t>(k)) return -std::numeric_limits<double>::infinity();
  // log2 C(k, 3L)
  double log2_choose = (std::lgamma(static_cast<double>(k) + 1) -
                        std::lgamma(static_cast<double>(subset) + 1) -
                        std::lgamma(static_cast<double>(k - subset) + 1)) /
                       std::log(2.0);
  // log2( 2*2^(-4.5 L^2) + 2^(-5 L^2) )
  double a = -4.5 * ll * ll + 1.0;
  double b = -5.0 * ll * ll;
  double log2_prob = a + std::log2(1.0 + std::exp2(b - a));
  return log2_prob + log2_choose + 1.0;
}

// ---- Seed ----

Seed Seed::zeros(int bit_length) {
  if (bit_length < 1) throw std::invalid_argument("seed length must be >= 1");
  Seed s;
  s.bit_length_ = bit_length;
  s.words_.assign((static_cast<std::size_t>(bit_length) + 63) / 64, 0);
  return s;
}

Seed Seed::from_value(int bit_length, std::uint64_t value) {
  Seed s = zeros(bit_length);
  if (bit_length < 64 && value >> bit_length)
    throw std::invalid_argument("seed value does not fit bit length");
  s.words_[0] = value;
  return s;
}

Seed Seed::from_hex(std::string_view hex, int bit_length) {
  Seed s = zeros(bit_length);
  std::size_t want = (static_cast<std::size_t>(bit_length) + 3) / 4;
  if (hex.size() != want)
    throw std::invalid_argument("seed hex must be exactly " + std::to_string(want) + " digits");
  for (std::size_t i = 0; i < hex.size(); ++i) {
    char c = hex[hex.size() - 1 - i];  // least significant digit last
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = 10 + c - 'a';
    else
      throw std::invalid_argument("seed hex must be lowercase hexadecimal");
    s.words_[i / 16] |= static_cast<std::uint64_t>(v) << (4 * (i % 16));
  }
  // bits at or above bit_length must be zero
  for (int i = bit_length; i < static_cast<int>(4 * want); ++i)
    if ((s.words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u)
      throw std::invalid_argument("seed hex value exceeds bit length");
  return s;
}

std::string Seed::to_hex() const {
  std::size_t want = (static_cast<std::size_t>(bit_length_) + 3) / 4;
  std::string out(want, '0');
  for (std::size_t i = 0; i < want; ++i) {
    int v = static_cast<int>((words_[i / 16] >> (4 * (i % 16))) & 0xF);
    out[want - 1 - i] = v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
  }
  return out;
}

bool Seed::bit(int i) const {
  int j = bit_length_ - 1 - i;  // string position -> integer bit
  return (words_[static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1u;
}

bool Seed::increment() {
  for (auto& w : words_) {
    if (++w != 0) break;
  }
  // wrapped iff the value is back to zero modulo 2^bit_length
  int top = (bit_length_ - 1) % 64;
  auto& last = words_.back();
  if (bit_length_ % 64) {
    if (last >> (top + 1)) {  // carried past the top bit
      last &= (~std::uint64_t{0}) >> (64 - bit_length_ % 64);
      for (auto w : words_)
        if (w) return true;
      return false;
    }
    return true;
  }
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::strong_ordering Seed::operator<=>(const Seed& o) const {
  if (bit_length_ != o.bit_length_) return bit_length_ <=> o.bit_length_;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != o.words_[i]) return words_[i] <=> o.words_[i];
  }
  return std::strong_ordering::equal;
}

// ---- expansion ----

namespace {

gf2::Elem extract_elem(const Seed& seed, int offset, int count) {
  gf2::Elem e{};
  for (int j = 0; j < count; ++j) {
    int bit = offset + j;
    if ((seed.words()[static_cast<std::size_t>(bit) / 64] >> (bit % 64)) & 1u)
      e[static_cast<std::size_t>(j) / 64] |= std::uint64_t{1} << (j % 64);
  }
  return e;
}

}  // namespace

Bits sample_string(const SampleSpaceSpec& spec, const Seed& seed) {
  if (seed.bit_length() != spec.seed_bits)
    throw std::invalid_argument("seed length does not match the sample space spec");
  Bits out(spec.m);
  if (spec.kind == SpaceKind::uniform) {
    for (std::uint64_t i = 0; i < spec.m; ++i)
      if (seed.bit(static_cast<int>(i))) out.set(i);
    return out;
  }
  gf2::Field field(spec.r);  // throws CapacityError beyond the table
  gf2::Elem y = extract_elem(seed, 0, spec.r);
  gf2::Elem x = extract_elem(seed, spec.r, spec.r);
  gf2::Elem p = field.one();
  for (std::uint64_t i = 0; i < spec.m; ++i) {
    if (gf2::Field::inner_product(p, y)) out.set(i);
    p = field.mul(p, x);
  }
  return out;
}

SeedEnumerator::SeedEnumerator(const SampleSpaceSpec& spec, std::optional<std::uint64_t> cap)
    : cur_(Seed::zeros(spec.seed_bits)), cap_(cap) {}

std::optional<Seed> SeedEnumerator::next() {
  if (done_ || (cap_ && yielded_ >= *cap_)) return std::nullopt;
  Seed out = cur_;
  ++yielded_;
  if (!cur_.increment()) done_ = true;
  return out;
}

// ---- bias instruments ----

double measure_bias(const SampleSpaceSpec& spec, const std::vector<std::uint64_t>& positions) {
  if (positions.empty()) throw std::invalid_argument("bias subset must be nonempty");
  for (auto p : positions)
    if (p >= spec.m) throw std::invalid_argument("bias subset position out of range");
  if (spec.seed_bits > kBiasEnumerationLimit)
    throw CapacityError("seed space too large to enumerate for bias measurement (limit " +
                        std::to_string(kBiasEnumerationLimit) + " seed bits)");
  std::uint64_t total = std::uint64_t{1} << spec.seed_bits;
  std::uint64_t ones = 0;
  SeedEnumerator en(spec);
  while (auto seed = en.next()) {
    Bits s = sample_string(spec, *seed);
    int parity = 0;
    for (auto p : positions) parity ^= s.test(p) ? 1 : 0;
    ones += static_cast<std::uint64_t>(parity);
  }
  double pr = static_cast<double>(ones) / static_cast<double>(total);
  return std::abs(pr - 0.5);
}

BiasSweep measure_bias_all(const SampleSpaceSpec& spec) {
  if (spec.m > 20) throw CapacityError("subset sweep limited to m <= 20");
  if (spec.seed_bits > kBiasEnumerationLimit)
    throw CapacityError("seed space too large to enumerate for bias measurement (limit " +
                        std::to_string(kBiasEnumerationLimit) + " seed bits)");
  std::uint64_t total = std::uint64_t{1} << spec.seed_bits;
  std::vector<std::uint32_t> outputs;
  outputs.reserve(total);
  SeedEnumerator en(spec);
  while (auto seed = en.next()) {
    Bits s = sample_string(spec, *seed);
    std::uint32_t mask = 0;
    for (std::uint64_t i = 0; i < spec.m; ++i)
      if (s.test(i)) mask |= std::uint32_t{1} << i;
    outputs.push_back(mask);
  }
  BiasSweep sweep;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << spec.m); ++subset) {
    std::uint64_t ones = 0;
    for (auto out : outputs) ones += static_cast<std::uint64_t>(std::popcount(out & subset) & 1);
    double bias = std::abs(static_cast<double>(ones) / static_cast<double>(total) - 0.5);
    if (bias > sweep.max_bias) {
      sweep.max_bias = bias;
      sweep.worst_subset = subset;
    }
  }
  return sweep;
}

}  // namespace ramsey
