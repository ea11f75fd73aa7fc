#ifndef RAMSEY_SAMPLE_SPACE_HPP
#define RAMSEY_SAMPLE_SPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/bits.hpp"

namespace ramsey {

/// powering: the shift-register small-bias construction over GF(2^r). The seed
/// is a pair (x, y) of field elements and output bit i is <x^i, y>; every
/// nonempty subset parity then has bias at most (m-1)/2^r, so any t coordinates
/// are within statistical distance 2^(t/2) * (m-1)/2^r of uniform.
///
/// uniform: seed_bits = m and the output is the seed verbatim, the exactly
/// uniform baseline used by the bias tests.
enum class SpaceKind { powering, uniform };

/// Parameters of the derandomized edge-string distribution.
struct SampleSpaceSpec {
  SpaceKind kind = SpaceKind::powering;
  int k = 0;                 ///< base-graph order this spec serves (0 = free-standing)
  std::uint64_t m = 0;       ///< output length, C(k,2) when k is set
  std::uint64_t t = 0;       ///< independence order the space is close to
  int delta_log2 = 0;        ///< closeness: delta = 2^delta_log2 (uniform kind: exact, field unused)
  int r = 0;                 ///< field degree (powering kind)
  int seed_bits = 0;         ///< 2r for powering, m for uniform

  /// Subset-parity bias guarantee (m-1)/2^r; exactly 0 for the uniform kind.
  double epsilon_bias() const;
};

/// Faithful parameters for base-graph order k >= 4, with L = ceil(log2 k):
///   m = C(k,2),  t = 5*L^2,  delta = 2^(-5*L^2),
///   r = ceil(t/2) + ceil(log2(m-1)) + 5*L^2   so that 2^(t/2)*(m-1)/2^r <= delta.
/// The resulting space has cardinality 2^(2r) = k^(O(log k)). Note the field
/// degree exceeds the frozen modulus table for k > 256; such specs can be
/// inspected but not expanded.
SampleSpaceSpec derive_spec(int k);

inline constexpr int kDefaultRelaxedDegree = 12;

/// Desk-scale spec over GF(2^r) for a small r: same generator, weaker
/// guarantee (t = max(1, r - ceil(log2 m)), delta = 2^(t/2)*(m-1)/2^r). This is
/// what end-to-end searches enumerate; the faithful spec above is generatable
/// but its seed space is far too large to sweep.
SampleSpaceSpec relaxed_spec(int k, int r = kDefaultRelaxedDegree);

/// Same construction for a free-standing string length (no base graph).
SampleSpaceSpec relaxed_spec_for_length(std::uint64_t m, int r);

SampleSpaceSpec uniform_spec(std::uint64_t m);

/// log2 of (2*2^(-4.5 L^2) + 2^(-5 L^2)) * 2 * C(k, 3L), the union bound
/// certifying that a string from the faithful space yields a passing graph
/// with positive probability. Negative for every k >= 4 (checked in tests), so
/// the documented minimum k for derive_spec is 4.
double seed_space_union_bound_log2(int k);

/// Index into the sample space: a bit string of fixed length, ordered and
/// enumerated lexicographically (the string is the big-endian binary of an
/// integer; lexicographic order on strings = numeric order on integers).
/// For the powering kind the high r bits are x and the low r bits are y.
class Seed {
public:
  Seed() = default;
  static Seed zeros(int bit_length);
  static Seed from_value(int bit_length, std::uint64_t value);

  /// Lowercase hex, fixed width ceil(bit_length/4).
  static Seed from_hex(std::string_view hex, int bit_length);
  std::string to_hex() const;

  int bit_length() const { return bit_length_; }
  /// Bit at string position i (position 0 is the lexicographically most
  /// significant end).
  bool bit(int i) const;

  /// Numeric +1; false on wrap from the all-ones seed.
  bool increment();

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const Seed&) const = default;
  std::strong_ordering operator<=>(const Seed& o) const;

private:
  int bit_length_ = 0;
  std::vector<std::uint64_t> words_;  // little-endian integer
};

/// Expands a seed to the full m-bit edge string. Pure function of its inputs.
/// Throws std::invalid_argument on seed-length mismatch and CapacityError when
/// the spec's field degree has no frozen modulus.
Bits sample_string(const SampleSpaceSpec& spec, const Seed& seed);

/// Yields every seed of the space in strictly increasing lexicographic order,
/// truncated to `cap` elements when given.
class SeedEnumerator {
public:
  explicit SeedEnumerator(const SampleSpaceSpec& spec,
                          std::optional<std::uint64_t> cap = std::nullopt);
  std::optional<Seed> next();
  std::uint64_t yielded() const { return yielded_; }

private:
  Seed cur_;
  std::optional<std::uint64_t> cap_;
  std::uint64_t yielded_ = 0;
  bool done_ = false;
};

/// Exhaustive-enumeration limit for the bias instruments below.
inline constexpr int kBiasEnumerationLimit = 24;

/// |Pr_seed[parity of `positions` = 1] - 1/2|, averaged over the whole space.
/// Requires spec.seed_bits <= kBiasEnumerationLimit (CapacityError) and a
/// nonempty subset (std::invalid_argument).
double measure_bias(const SampleSpaceSpec& spec, const std::vector<std::uint64_t>& positions);

struct BiasSweep {
  double max_bias = 0.0;
  std::uint64_t worst_subset = 0;  // bitmask over positions
};

/// measure_bias over every nonempty subset of positions. Requires m <= 20 on
/// top of the seed_bits limit.
BiasSweep measure_bias_all(const SampleSpaceSpec& spec);

}  // namespace ramsey

#endif
