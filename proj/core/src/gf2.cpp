#include "ramsey/gf2.hpp"

#include <bit>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey::gf2 {

std::string Modulus::to_string() const {
  auto term = [](int e) {
    if (e == 0) return std::string("1");
    if (e == 1) return std::string("x");
    return "x^" + std::to_string(e);
  };
  std::string s = term(r) + "+" + term(a);
  if (b != 0) s += "+" + term(b) + "+" + term(c);
  return s + "+1";
}

namespace {

// ---- polynomial helpers for the irreducibility audit ----
// Fixed-width scratch polynomials: squares of degree-512 polynomials need
// 1023 bits, so 17 words cover everything the audit touches.

constexpr int kAuditWords = 2 * kElemWords + 1;
using Poly = std::array<std::uint64_t, kAuditWords>;

bool poly_test_bit(const Poly& p, int i) { return (p[i >> 6] >> (i & 63)) & 1u; }
void poly_flip_bit(Poly& p, int i) { p[i >> 6] ^= std::uint64_t{1} << (i & 63); }

int poly_degree(const Poly& p) {
  for (int w = kAuditWords - 1; w >= 0; --w)
    if (p[static_cast<std::size_t>(w)])
      return w * 64 + 63 - std::countl_zero(p[static_cast<std::size_t>(w)]);
  return -1;
}

void poly_xor_shifted(Poly& acc, const Poly& p, int shift) {
  int ws = shift >> 6, bs = shift & 63;
  for (int w = kAuditWords - 1 - ws; w >= 0; --w) {
    acc[static_cast<std::size_t>(w + ws)] ^= p[static_cast<std::size_t>(w)] << bs;
    if (bs && w + ws + 1 < kAuditWords)
      acc[static_cast<std::size_t>(w + ws + 1)] ^= p[static_cast<std::size_t>(w)] >> (64 - bs);
  }
}

std::uint32_t spread16(std::uint16_t v) {
  std::uint32_t x = v;
  x = (x | (x << 8)) & 0x00FF00FFu;
  x = (x | (x << 4)) & 0x0F0F0F0Fu;
  x = (x | (x << 2)) & 0x33333333u;
  x = (x | (x << 1)) & 0x55555555u;
  return x;
}

// carry-less square: bit i -> bit 2i
Poly poly_square(const Poly& p, int r) {
  Poly out{};
  int words = (r + 63) / 64;
  for (int w = 0; w < words; ++w) {
    std::uint64_t v = p[static_cast<std::size_t>(w)];
    out[static_cast<std::size_t>(2 * w)] =
        static_cast<std::uint64_t>(spread16(static_cast<std::uint16_t>(v))) |
        (static_cast<std::uint64_t>(spread16(static_cast<std::uint16_t>(v >> 16))) << 32);
    out[static_cast<std::size_t>(2 * w + 1)] =
        static_cast<std::uint64_t>(spread16(static_cast<std::uint16_t>(v >> 32))) |
        (static_cast<std::uint64_t>(spread16(static_cast<std::uint16_t>(v >> 48))) << 32);
  }
  return out;
}

// reduce modulo the sparse f = x^r + x^a (+ x^b + x^c) + 1, high bits first
void poly_reduce(Poly& p, const Modulus& m) {
  for (int i = poly_degree(p); i >= m.r; --i)
    if (poly_test_bit(p, i)) {
      poly_flip_bit(p, i);
      poly_flip_bit(p, i - m.r + m.a);
      if (m.b) {
        poly_flip_bit(p, i - m.r + m.b);
        poly_flip_bit(p, i - m.r + m.c);
      }
      poly_flip_bit(p, i - m.r);
    }
}

Poly poly_gcd(Poly x, Poly y) {
  int dx = poly_degree(x), dy = poly_degree(y);
  while (dy >= 0) {
    while (dx >= dy) {
      poly_xor_shifted(x, y, dx - dy);
      dx = poly_degree(x);
    }
    std::swap(x, y);
    std::swap(dx, dy);
  }
  return x;
}

Poly modulus_to_poly(const Modulus& m) {
  Poly f{};
  poly_flip_bit(f, m.r);
  poly_flip_bit(f, m.a);
  if (m.b) {
    poly_flip_bit(f, m.b);
    poly_flip_bit(f, m.c);
  }
  poly_flip_bit(f, 0);
  return f;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

// Rabin: f of degree r is irreducible over GF(2) iff x^(2^r) = x (mod f) and
// gcd(f, x^(2^(r/p)) - x) = 1 for every prime p dividing r.
bool is_irreducible(const Modulus& m) {
  int r = m.r;
  if (r < 1 || r > kMaxFieldDegree) return false;
  if (m.a >= m.r || (m.b && !(m.a > m.b && m.b > m.c && m.c >= 1))) return false;
  Poly f = modulus_to_poly(m);
  Poly xp{};  // x^(2^j) mod f, starting at j = 0
  poly_flip_bit(xp, 1);
  std::vector<int> checkpoints;
  for (int p : prime_divisors(r)) checkpoints.push_back(r / p);
  for (int j = 1; j <= r; ++j) {
    xp = poly_square(xp, r);
    poly_reduce(xp, m);
    for (int cp : checkpoints)
      if (cp == j) {
        Poly diff = xp;
        poly_flip_bit(diff, 1);  // subtract x
        if (poly_degree(poly_gcd(f, diff)) != 0) return false;
      }
  }
  poly_flip_bit(xp, 1);
  return poly_degree(xp) < 0;
}

// ---- fast fixed-width field ----

Field::Field(int r) : r_(r), words_((r + 63) / 64), mod_(irreducible_modulus(r)) {
  tail_ = Elem{};
  auto set = [&](int i) { tail_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); };
  set(mod_.a);
  if (mod_.b) {
    set(mod_.b);
    set(mod_.c);
  }
  set(0);
}

Elem Field::one() const {
  Elem e{};
  e[0] = 1;
  return e;
}

Elem Field::x() const {
  Elem e{};
  e[0] = 2;
  return e;
}

Elem Field::mul_by_x(Elem a) const {
  std::size_t nw = static_cast<std::size_t>(words_);
  bool top = (a[static_cast<std::size_t>(r_ - 1) / 64] >> ((r_ - 1) % 64)) & 1u;
  std::uint64_t carry = 0;
  for (std::size_t w = 0; w < nw; ++w) {
    std::uint64_t next = a[w] >> 63;
    a[w] = (a[w] << 1) | carry;
    carry = next;
  }
  if (top) {
    // reduce: x^r folds onto the tail. When r is a multiple of 64 the shifted
    // out bit already fell off the word array; otherwise clear it explicitly.
    if (r_ % 64) a[static_cast<std::size_t>(r_) / 64] &= ~(std::uint64_t{1} << (r_ % 64));
    for (std::size_t w = 0; w < nw; ++w) a[w] ^= tail_[w];
  }
  return a;
}

Elem Field::mul(const Elem& a, const Elem& b) const {
  std::size_t nw = static_cast<std::size_t>(words_);
  Elem acc{};
  for (int i = r_ - 1; i >= 0; --i) {
    acc = mul_by_x(acc);
    if ((b[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u)
      for (std::size_t w = 0; w < nw; ++w) acc[w] ^= a[w];
  }
  return acc;
}

bool Field::inner_product(const Elem& a, const Elem& b) {
  int par = 0;
  for (std::size_t w = 0; w < a.size(); ++w) par ^= std::popcount(a[w] & b[w]) & 1;
  return par;
}

}  // namespace ramsey::gf2
