#include <doctest.h>

#include <vector>

#include "linkinv/arith.hpp"
#include "linkinv/error.hpp"
#include "oracles.hpp"

using namespace linkinv;

TEST_CASE("gcd_many") {
  CHECK(gcd_many(std::vector<Int>{6, 4}) == 2);
  CHECK(gcd_many(std::vector<Int>{5}) == 5);
  CHECK(gcd_many(std::vector<Int>{6, 10, 15}) == 1);
  CHECK_THROWS_AS(gcd_many(std::vector<Int>{}), UsageError);
  CHECK_THROWS_AS(gcd_many(std::vector<Int>{4, 0}), UsageError);
}

TEST_CASE("lcm_many") {
  CHECK(lcm_many(std::vector<Int>{4, 6}) == 12);
  CHECK(lcm_many(std::vector<Int>{6, 3, 2}) == 6);
  CHECK(lcm_many(std::vector<Int>{}) == 1);
  // exceeds 64 bits
  const std::vector<Int> primes{1000000007, 998244353, 1000000009, 754974721};
  CHECK(lcm_many(primes) == BigInt("754974721") * BigInt("1000000009") * BigInt("998244353") *
                                BigInt("1000000007"));
}

TEST_CASE("gcd times lcm is the product for pairs") {
  for (int trial = 0; trial < 500; ++trial) {
    const Int a = oracle::uniform(1, 100000);
    const Int b = oracle::uniform(1, 100000);
    CHECK(gcd_many(std::vector<Int>{a, b}) * lcm_many(std::vector<Int>{a, b}) ==
          BigInt(static_cast<long>(a)) * BigInt(static_cast<long>(b)));
    CHECK(gcd_many(std::vector<Int>{a, b}) == gcd_many(std::vector<Int>{b, a}));
  }
}

TEST_CASE("reduced_fraction") {
  CHECK(reduced_fraction(6, 2) == ReducedRatio{3, 1});
  CHECK(reduced_fraction(5, 2) == ReducedRatio{5, 2});
  CHECK(reduced_fraction(6, 3) == ReducedRatio{2, 1});
  for (int trial = 0; trial < 500; ++trial) {
    const Int d = oracle::uniform(1, 5000);
    const Int w = oracle::uniform(1, 5000);
    const ReducedRatio r = reduced_fraction(d, w);
    CHECK(std::gcd(r.numerator, r.denominator) == 1);
    CHECK(r.numerator * w == r.denominator * d);
  }
  CHECK_THROWS_AS(reduced_fraction(0, 3), UsageError);
}

TEST_CASE("binomial") {
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("count_monomials examples") {
  CHECK(count_monomials(std::vector<Int>{1, 2, 3}, 6) == 7);
  CHECK(count_monomials(std::vector<Int>{1, 1, 1}, 3) == 10);
  CHECK(count_monomials(std::vector<Int>{1, 1, 2}, 4) == 9);
  CHECK(count_monomials(std::vector<Int>{5}, 7) == 0);
  CHECK_THROWS_AS(count_monomials(std::vector<Int>{}, 3), UsageError);
  CHECK_THROWS_AS(count_monomials(std::vector<Int>{1, 0}, 3), UsageError);
}

TEST_CASE("count_monomials matches brute-force enumeration") {
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = static_cast<std::size_t>(oracle::uniform(1, 4));
    std::vector<Int> w(m);
    for (Int& x : w) {
      x = oracle::uniform(1, 9);
    }
    const Int target = oracle::uniform(0, 40);
    const BigInt expected(static_cast<unsigned long>(oracle::enumerate_monomials(w, target)));
    CHECK(count_monomials(w, target) == expected);
    CHECK(is_representable(w, target) == (expected > 0));
  }
}

TEST_CASE("count_monomials properties") {
  for (std::size_t m = 1; m <= 6; ++m) {
    const std::vector<Int> w(m, 1);
    CHECK(count_monomials(w, 0) == 1);
    for (Int t = 0; t <= 30; ++t) {
      CHECK(count_monomials(w, t) == binomial(t + static_cast<Int>(m) - 1, static_cast<Int>(m) - 1));
    }
  }
  CHECK(count_monomials(std::vector<Int>{7, 11, 13}, 0) == 1);
}

TEST_CASE("is_representable with no weights") {
  CHECK(is_representable(std::vector<Int>{}, 0));
  CHECK_FALSE(is_representable(std::vector<Int>{}, 4));
}

TEST_CASE("Rational stays in lowest terms") {
  const Rational a(BigInt(6), BigInt(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.str() == "-3/2");
  CHECK((a + Rational(BigInt(3), BigInt(2))).str() == "0");
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), UsageError);
  for (int trial = 0; trial < 200; ++trial) {
    Rational sum;
    for (int i = 0; i < 5; ++i) {
      sum += Rational(BigInt(static_cast<long>(oracle::uniform(-50, 50))),
                      BigInt(static_cast<long>(oracle::uniform(1, 50))));
    }
    CHECK(gcd(sum.num(), sum.den()) == 1);
    CHECK(sum.den() >= 1);
  }
}

TEST_CASE("FactoredPower expands on demand") {
  const FactoredPower p{13, 21};
  BigInt expected = 1;
  for (int i = 0; i < 21; ++i) {
    expected *= 13;
  }
  CHECK(p.expand() == expected);
  CHECK(FactoredPower{7, 0}.expand() == 1);
  CHECK(FactoredPower{10, 204}.decimal().size() == 205);
}

TEST_CASE("checked arithmetic") {
  CHECK(checked_mul(1 << 20, 1 << 20) == (Int{1} << 40));
  CHECK_THROWS_AS(checked_mul(Int{1} << 40, Int{1} << 40), UsageError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), UsageError);
}
