#include <doctest.h>

#include <algorithm>
#include <string>

#include "linkinv/error.hpp"
#include "linkinv/links.hpp"
#include "oracles.hpp"

using namespace linkinv;

TEST_CASE("WeightSystem validation and canonical form") {
  CHECK_THROWS_AS(WeightSystem({3}, 3), UsageError);
  CHECK_THROWS_AS(WeightSystem({0, 1, 2}, 3), UsageError);
  CHECK_THROWS_AS(WeightSystem({1, 2}, 0), UsageError);
  const WeightSystem ws({3, 1, 2}, 6);
  CHECK(ws.norm() == 6);
  CHECK(ws.canonical() == WeightSystem({1, 2, 3}, 6));
  CHECK(ws.str() == "(3,1,2; 6)");
}

TEST_CASE("classify_case") {
  CHECK(classify_case(WeightSystem({1, 2, 3}, 6)) == CaseClass::Euclidean);
  CHECK(classify_case(WeightSystem({1, 1, 1}, 2)) == CaseClass::Spherical);
  CHECK(classify_case(WeightSystem({1, 1, 1}, 4)) == CaseClass::Hyperbolic);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> w(static_cast<std::size_t>(oracle::uniform(2, 5)));
    for (Int& x : w) {
      x = oracle::uniform(1, 20);
    }
    const Int d = oracle::uniform(1, 60);
    const CaseClass before = classify_case(WeightSystem(w, d));
    std::shuffle(w.begin(), w.end(), oracle::rng());
    CHECK(classify_case(WeightSystem(w, d)) == before);
  }
}

TEST_CASE("branched_cover examples") {
  const CoverData a = branched_cover(4, WeightSystem({1, 1, 1}, 3));
  CHECK(a.cover == WeightSystem({3, 4, 4, 4}, 12));
  REQUIRE(a.bp_exponents);
  CHECK(*a.bp_exponents == std::vector<Int>{4, 3, 3, 3});
  CHECK_FALSE(a.needs_normalization);

  const CoverData b = branched_cover(5, WeightSystem({1, 2, 3}, 6));
  CHECK(b.cover == WeightSystem({6, 5, 10, 15}, 30));
  CHECK(*b.bp_exponents == std::vector<Int>{5, 6, 3, 2});

  for (Int m = 3; m <= 7; ++m) {
    for (Int k = 2; k <= 30; ++k) {
      if (std::gcd(k, m) != 1) {
        continue;
      }
      std::vector<Int> expected(static_cast<std::size_t>(m) + 1, k);
      expected[0] = m;
      CHECK(branched_cover(k, WeightSystem(std::vector<Int>(m, 1), m)).cover ==
            WeightSystem(expected, m * k));
    }
  }
  CHECK_THROWS_AS(branched_cover(1, WeightSystem({1, 1, 1}, 3)), UsageError);
}

TEST_CASE("branched_cover invariants") {
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Int> w(static_cast<std::size_t>(oracle::uniform(2, 4)));
    for (Int& x : w) {
      x = oracle::uniform(1, 12);
    }
    const WeightSystem base(w, oracle::uniform(1, 40));
    const Int k = oracle::uniform(2, 30);
    const CoverData c = branched_cover(k, base);
    const Int g = std::gcd(k, base.degree());
    CHECK(c.cover.degree() == std::lcm(k, base.degree()));
    CHECK(c.cover.degree() % k == 0);
    CHECK(c.cover.degree() % (base.degree() / g) == 0);
    CHECK(c.needs_normalization == (g > 1));
    const bool all_divide =
        std::ranges::all_of(w, [&](Int x) { return base.degree() % x == 0; });
    CHECK(c.bp_exponents.has_value() == all_divide);
    if (c.bp_exponents) {
      for (std::size_t i = 0; i < c.bp_exponents->size(); ++i) {
        CHECK((*c.bp_exponents)[i] * c.cover.weight(i) == c.cover.degree());
      }
    }
  }
}

TEST_CASE("quasi_smooth_generic") {
  CHECK(quasi_smooth_generic(WeightSystem({1, 2, 3}, 6)));
  CHECK_FALSE(quasi_smooth_generic(WeightSystem({1, 2, 2}, 5)));
  CHECK(quasi_smooth_generic(WeightSystem({1, 1, 1}, 3)));
  CHECK(quasi_smooth_generic(WeightSystem({3, 4, 6}, 12)));
  CHECK_FALSE(quasi_smooth_generic(WeightSystem({2, 3, 3}, 7)));
  // z1^2 z2 + z2^5: no pure power of z1, but z1^2 * z2 has degree 5
  CHECK(quasi_smooth_generic(WeightSystem({2, 1}, 5)));
  CHECK_FALSE(quasi_smooth_generic(WeightSystem({5, 5, 5}, 14)));
}

TEST_CASE("quasi-smooth systems carry a degree-d monomial") {
  for (Int a = 1; a <= 8; ++a) {
    for (Int b = a; b <= 8; ++b) {
      for (Int c = b; c <= 8; ++c) {
        for (Int d = 1; d <= 30; ++d) {
          const WeightSystem ws({a, b, c}, d);
          if (quasi_smooth_generic(ws)) {
            CHECK(count_monomials(ws.weights(), d) >= 1);
            CHECK(quasi_smooth_generic(WeightSystem({c, a, b}, d)));
          }
        }
      }
    }
  }
}

TEST_CASE("torsion_hypothesis") {
  CHECK(torsion_hypothesis(5, WeightSystem({1, 2, 3}, 6)));
  CHECK_FALSE(torsion_hypothesis(3, WeightSystem({1, 2, 3}, 6)));
  CHECK(torsion_hypothesis(2, WeightSystem({1, 1, 1}, 3)));
  CHECK_THROWS_AS(torsion_hypothesis(1, WeightSystem({1, 1, 1}, 3)), UsageError);
}

TEST_CASE("normalize_cover") {
  CHECK(normalize_cover(5, WeightSystem({1, 2, 3}, 6)) ==
        NormalizedCover{5, WeightSystem({1, 2, 3}, 6)});
  CHECK(normalize_cover(4, WeightSystem({1, 1, 1}, 3)) ==
        NormalizedCover{4, WeightSystem({1, 1, 1}, 3)});
  // scaled copies of a coprime presentation normalize back to it
  CHECK(normalize_cover(4, WeightSystem({2, 2, 2}, 6)) ==
        NormalizedCover{4, WeightSystem({1, 1, 1}, 3)});
  CHECK(normalize_cover(8, WeightSystem({4, 4, 4}, 12)) ==
        NormalizedCover{8, WeightSystem({1, 1, 1}, 3)});
  CHECK(normalize_cover(6, WeightSystem({2, 2, 2, 2}, 10)) ==
        NormalizedCover{6, WeightSystem({1, 1, 1, 1}, 5)});
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Int> w(static_cast<std::size_t>(oracle::uniform(2, 4)));
    for (Int& x : w) {
      x = oracle::uniform(1, 6);
    }
    const WeightSystem base(w, oracle::uniform(1, 30));
    const Int k = oracle::uniform(2, 20);
    if (std::gcd(k, base.degree()) != 1 || !torsion_hypothesis(k, base)) {
      continue;
    }
    const Int g = oracle::uniform(2, 5);
    if (std::gcd(g, k) == 1) {
      continue; // scaling by g must share a factor with k
    }
    std::vector<Int> scaled = w;
    for (Int& x : scaled) {
      x *= g;
    }
    const WeightSystem big(scaled, base.degree() * g);
    if (!torsion_hypothesis(k, big)) {
      continue;
    }
    const NormalizedCover n = normalize_cover(k, big);
    CHECK(std::gcd(n.k, n.base.degree()) == 1);
    CHECK(n.base == base);
  }
}

TEST_CASE("normalize_cover names the offending u_i") {
  try {
    (void)normalize_cover(3, WeightSystem({1, 2, 3}, 6));
    FAIL("expected refusal");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("u_1=6") != std::string::npos);
  }
}
