#ifndef RAMSEY_GF2_HPP
#define RAMSEY_GF2_HPP

#include <array>
#include <cstdint>
#include <string>

namespace ramsey::gf2 {

/// Largest field degree with a frozen modulus in the table below.
inline constexpr int kMaxFieldDegree = 512;
inline constexpr int kElemWords = kMaxFieldDegree / 64;

/// Field element: bit i of the packed words is the coefficient of x^i.
using Elem = std::array<std::uint64_t, kElemWords>;

/// x^r + x^a (+ x^b + x^c) + 1 with r > a > b > c >= 1; b = c = 0 encodes a
/// trinomial. The table freezes one modulus per degree so that seeds expand
/// identically everywhere.
struct Modulus {
  std::uint16_t r = 0;
  std::uint16_t a = 0;
  std::uint16_t b = 0;
  std::uint16_t c = 0;

  std::string to_string() const;
};

/// Frozen modulus for GF(2^r), 2 <= r <= kMaxFieldDegree; throws CapacityError
/// outside that range.
const Modulus& irreducible_modulus(int r);

/// Audit check used by the tests: Rabin's irreducibility criterion over GF(2).
bool is_irreducible(const Modulus& m);

/// GF(2^r) with the table modulus. Multiplication is bit-serial shift-and-add;
/// fine for the string lengths this project meets.
class Field {
public:
  explicit Field(int r);

  int degree() const { return r_; }
  const Modulus& modulus() const { return mod_; }

  Elem zero() const { return Elem{}; }
  Elem one() const;
  Elem x() const;

  Elem mul(const Elem& a, const Elem& b) const;
  Elem mul_by_x(Elem a) const;

  /// <a, b>: parity of the AND of the two coefficient vectors.
  static bool inner_product(const Elem& a, const Elem& b);

private:
  int r_;
  int words_;  // words actually carrying coefficients: ceil(r/64)
  Modulus mod_;
  Elem tail_{};  // f - x^r, so x^r reduces to tail_
};

}  // namespace ramsey::gf2

#endif
