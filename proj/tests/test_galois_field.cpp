#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "mobius/galois_field.hpp"

using mobius::GaloisField;

namespace {

// every field the plane constructions rely on, plus the spec'd examples
const int kCheckedOrders[] = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81};

}  // namespace

TEST_CASE("prime and prime power recognition") {
  CHECK(GaloisField::is_prime(2));
  CHECK(GaloisField::is_prime(8191));
  CHECK_FALSE(GaloisField::is_prime(1));
  CHECK_FALSE(GaloisField::is_prime(6));

  auto pk = GaloisField::prime_power(81);
  REQUIRE(pk.has_value());
  CHECK(pk->first == 3);
  CHECK(pk->second == 4);
  CHECK_FALSE(GaloisField::prime_power(6).has_value());
  CHECK_FALSE(GaloisField::prime_power(12).has_value());
  CHECK(GaloisField::prime_power(8192)->second == 13);
}

TEST_CASE("construction basics") {
  GaloisField f2(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.mul(1, 1) == 1);

  GaloisField f9(3, 2);
  CHECK(f9.q() == 9);
  // 8-element cyclic multiplicative group
  std::set<int> powers;
  int x = 1;
  for (int i = 0; i < 8; ++i) {
    powers.insert(x);
    x = f9.mul(x, f9.generator());
  }
  CHECK(powers.size() == 8);
  CHECK(x == 1);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(GaloisField(4, 1), std::invalid_argument);   // p not prime
  CHECK_THROWS_AS(GaloisField(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField(2, 14), std::invalid_argument);  // above 8192
  CHECK_THROWS_AS(GaloisField(3, 0), std::invalid_argument);
}

TEST_CASE("GF(4) with reduction x^2+x+1: x*x = x+1") {
  GaloisField f(2, 2);
  REQUIRE(f.reduction_polynomial() == std::vector<int>{1, 1, 1});
  CHECK(f.mul(2, 2) == 3);
}

TEST_CASE("GF(16): every nonzero element has a working inverse") {
  GaloisField f(2, 4);
  for (int a = 1; a < 16; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("identity and inverse laws in GF(9)") {
  GaloisField f(3, 2);
  for (int a = 0; a < 9; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("field axioms hold exhaustively for all supported small orders") {
  for (int q : kCheckedOrders) {
    CAPTURE(q);
    auto pk = GaloisField::prime_power(q);
    REQUIRE(pk.has_value());
    GaloisField f(pk->first, pk->second);

    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        if (b != 0) CHECK(f.mul(f.div(a, b), b) == a);
      }
    // associativity and distributivity over all triples
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) {
            FAIL("additive associativity broke at q=", q);
          }
          if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) {
            FAIL("multiplicative associativity broke at q=", q);
          }
          if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) {
            FAIL("distributivity broke at q=", q);
          }
        }
  }
}

TEST_CASE("multiplicative group is cyclic: generator hits every nonzero element") {
  for (int q : kCheckedOrders) {
    CAPTURE(q);
    auto pk = GaloisField::prime_power(q);
    GaloisField f(pk->first, pk->second);
    std::set<int> seen;
    int x = 1;
    for (int i = 0; i < q - 1; ++i) {
      seen.insert(x);
      x = f.mul(x, f.generator());
    }
    CHECK(static_cast<int>(seen.size()) == q - 1);
    CHECK(x == 1);
  }
}

TEST_CASE("frobenius a -> a^p is a field automorphism") {
  for (int q : kCheckedOrders) {
    CAPTURE(q);
    auto pk = GaloisField::prime_power(q);
    GaloisField f(pk->first, pk->second);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      }
    // bijective: p-fold iteration returns to the identity map
    for (int a = 0; a < q; ++a) {
      int x = a;
      for (int i = 0; i < pk->second; ++i) x = f.frobenius(x);
      CHECK(x == a);
    }
  }
}

TEST_CASE("subfield fixed by a -> a^q has exactly q elements in GF(q^2)") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    auto pk = GaloisField::prime_power(q);
    GaloisField f(pk->first, 2 * pk->second);
    int fixed = 0;
    for (int a = 0; a < f.q(); ++a)
      if (f.pow(a, q) == a) ++fixed;
    CHECK(fixed == q);
  }
}

TEST_CASE("operation errors") {
  GaloisField f(3, 2);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(f.div(4, 0), std::domain_error);
  CHECK_THROWS_AS(f.add(9, 0), std::out_of_range);
  CHECK_THROWS_AS(f.mul(-1, 2), std::out_of_range);
}

TEST_CASE("large fields still construct with exp/log arithmetic") {
  GaloisField f(2, 13);  // GF(8192), beyond the full-table limit
  CHECK(f.q() == 8192);
  CHECK(f.mul(7, f.inv(7)) == 1);
  CHECK(f.mul(4321, 1) == 4321);
  int lhs = f.mul(123, f.add(456, 789));
  int rhs = f.add(f.mul(123, 456), f.mul(123, 789));
  CHECK(lhs == rhs);
}
