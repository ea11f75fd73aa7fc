#include <doctest.h>

#include <random>

#include "ramsey/errors.hpp"
#include "ramsey/gf2.hpp"

using namespace ramsey::gf2;

namespace {

Elem random_elem(int r, std::mt19937_64& rng) {
  Elem e{};
  for (int w = 0; w <= (r - 1) / 64; ++w) e[static_cast<std::size_t>(w)] = rng();
  int top = r % 64;
  if (top) e[static_cast<std::size_t>((r - 1) / 64)] &= (~std::uint64_t{0}) >> (64 - top);
  return e;
}

}  // namespace

TEST_CASE("every frozen modulus is irreducible") {
  for (int r = 2; r <= kMaxFieldDegree; ++r) {
    const Modulus& m = irreducible_modulus(r);
    REQUIRE(m.r == r);
    CAPTURE(r);
    CHECK(is_irreducible(m));
  }
}

TEST_CASE("tampered moduli fail the audit") {
  CHECK(!is_irreducible(Modulus{4, 2, 0, 0}));   // x^4+x^2+1 = (x^2+x+1)^2
  CHECK(!is_irreducible(Modulus{8, 2, 0, 0}));   // even weight, divisible by x+1
  CHECK(is_irreducible(Modulus{8, 4, 3, 1}));    // the table entry
}

TEST_CASE("modulus pretty printing") {
  CHECK(irreducible_modulus(2).to_string() == "x^2+x+1");
  CHECK(irreducible_modulus(8).to_string() == "x^8+x^4+x^3+x+1");
  CHECK_THROWS_AS(irreducible_modulus(1), ramsey::CapacityError);
  CHECK_THROWS_AS(irreducible_modulus(kMaxFieldDegree + 1), ramsey::CapacityError);
}

TEST_CASE("field axioms at a spread of degrees") {
  std::mt19937_64 rng(99);
  for (int r : {2, 3, 8, 13, 64, 127, 197, 512}) {
    Field f(r);
    CAPTURE(r);
    for (int trial = 0; trial < 20; ++trial) {
      Elem a = random_elem(r, rng), b = random_elem(r, rng), c = random_elem(r, rng);
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      Elem bc{};
      for (std::size_t w = 0; w < bc.size(); ++w) bc[w] = b[w] ^ c[w];
      Elem left = f.mul(a, bc);
      Elem ab = f.mul(a, b), ac = f.mul(a, c);
      Elem right{};
      for (std::size_t w = 0; w < right.size(); ++w) right[w] = ab[w] ^ ac[w];
      CHECK(left == right);
      CHECK(f.mul(a, f.one()) == a);
      CHECK(f.mul(a, f.zero()) == f.zero());
      CHECK(f.mul_by_x(a) == f.mul(a, f.x()));
    }
  }
}

TEST_CASE("multiplication in GF(2^3) by hand") {
  // modulus x^3 + x + 1: x * x^2 = x^3 = x + 1
  Field f(3);
  Elem x2{};
  x2[0] = 4;
  Elem expected{};
  expected[0] = 3;
  CHECK(f.mul(f.x(), x2) == expected);
}

TEST_CASE("inner product is the AND-parity") {
  Elem a{}, b{};
  a[0] = 0b1011;
  b[0] = 0b1110;
  CHECK(Field::inner_product(a, b) == false);  // overlap 1010 has two bits -> even
  b[0] = 0b0010;
  CHECK(Field::inner_product(a, b) == true);
  b[0] = 0b0100;
  CHECK(Field::inner_product(a, b) == false);
}
