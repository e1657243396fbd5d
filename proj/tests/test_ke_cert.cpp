#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "linkinv/error.hpp"
#include "linkinv/ke_cert.hpp"
#include "oracles.hpp"

using namespace linkinv;

namespace {

Rational frac(long n, long d) { return {BigInt(n), BigInt(d)}; }

std::vector<Int> fermat_exponents(Int k, Int l, Int m) {
  std::vector<Int> a(static_cast<std::size_t>(m) + 1, l);
  a[0] = k;
  return a;
}

WeightSystem random_spherical() {
  while (true) {
    std::vector<Int> w(static_cast<std::size_t>(oracle::uniform(2, 5)));
    for (Int& x : w) {
      x = oracle::uniform(1, 9);
    }
    Int norm = 0;
    for (Int x : w) {
      norm += x;
    }
    if (norm < 2) {
      continue;
    }
    return {w, oracle::uniform(1, norm - 1)};
  }
}

} // namespace

TEST_CASE("is_fano") {
  for (Int k = 1; k <= 50; ++k) {
    CHECK(is_fano(k, WeightSystem({1, 1, 1}, 3)));
  }
  CHECK(is_fano(3, WeightSystem({1, 1, 1}, 4)));
  CHECK_FALSE(is_fano(4, WeightSystem({1, 1, 1}, 4)));
  CHECK(is_fano(4, WeightSystem({1, 1, 1, 1}, 5)));
  CHECK_FALSE(is_fano(5, WeightSystem({1, 1, 1, 1}, 5)));
}

TEST_CASE("necessary_klt") {
  CHECK(necessary_klt(13, WeightSystem({1, 1, 1, 1}, 4)));
  const KltCheck sph = evaluate_klt(2, WeightSystem({1, 1, 1}, 2));
  CHECK_FALSE(sph.holds);
  CHECK(sph.left == 4);
  CHECK(sph.right == 3);
  const KltCheck e = evaluate_klt(1, WeightSystem({1, 2, 3}, 6));
  CHECK_FALSE(e.holds);
  CHECK(e.left == 6);
  CHECK(e.right == frac(3, 2));
  CHECK(e.witness == "k*w_1");
}

TEST_CASE("spherical_never_klt") {
  CHECK(spherical_never_klt(WeightSystem({1, 1, 1}, 2)));
  CHECK(spherical_never_klt(WeightSystem({1, 1, 2}, 3)));
  CHECK(spherical_never_klt(WeightSystem({2, 3, 5}, 9)));
  CHECK_THROWS_AS(spherical_never_klt(WeightSystem({1, 2, 3}, 6)), UsageError);
  // quasi-smooth spherical system where the necessary inequality holds for k = 4, 5
  const WeightSystem counter({3, 4, 6}, 12);
  CHECK(quasi_smooth_generic(counter));
  CHECK_FALSE(spherical_never_klt(counter));
  CHECK(necessary_klt(4, counter));
  CHECK(necessary_klt(5, counter));
}

TEST_CASE("spherical_never_klt agrees with a k sweep on random spherical systems") {
  for (int trial = 0; trial < 100; ++trial) {
    const WeightSystem ws = random_spherical();
    bool any = false;
    for (Int k = 1; k <= 1000 && !any; ++k) {
      any = necessary_klt(k, ws);
    }
    CHECK_MESSAGE(spherical_never_klt(ws) == !any, ws.str());
  }
}

TEST_CASE("spherical systems containing weight 1 never satisfy the klt inequality") {
  for (int trial = 0; trial < 200; ++trial) {
    WeightSystem ws = random_spherical();
    std::vector<Int> w(ws.weights().begin(), ws.weights().end());
    w[0] = 1;
    Int norm = 0;
    for (Int x : w) {
      norm += x;
    }
    if (norm < 2) {
      continue;
    }
    const WeightSystem with_one(w, std::min(ws.degree(), norm - 1));
    CHECK(spherical_never_klt(with_one));
  }
}

TEST_CASE("euclidean_k_threshold") {
  CHECK(euclidean_k_threshold(WeightSystem({1, 1, 1}, 3)) == 3);
  CHECK(euclidean_k_threshold(WeightSystem({1, 2, 3}, 6)) == 5);
  CHECK(euclidean_k_threshold(WeightSystem({1, 1, 2}, 4)) == 3);
  CHECK_THROWS_AS(euclidean_k_threshold(WeightSystem({1, 1, 1}, 4)), UsageError);
  // least k: the necessary inequality fails below and holds from the threshold on
  for (const WeightSystem& ws : {WeightSystem({1, 1, 1}, 3), WeightSystem({1, 2, 3}, 6),
                                 WeightSystem({1, 1, 2}, 4), WeightSystem({1, 1, 1, 1}, 4),
                                 WeightSystem({2, 3, 5, 10}, 20)}) {
    const Int t = euclidean_k_threshold(ws);
    for (Int k = 1; k < t; ++k) {
      CHECK_FALSE(necessary_klt(k, ws));
    }
    for (Int k = t; k < t + 20; ++k) {
      CHECK(necessary_klt(k, ws));
    }
  }
}

TEST_CASE("bp_sufficient_ke examples") {
  const BpVerdict a = bp_sufficient_ke(std::vector<Int>{3, 4, 4, 4});
  CHECK(a.sufficient);
  CHECK(a.data.reciprocal_sum == frac(13, 12));
  CHECK(a.bound == frac(35, 32));
  CHECK(a.data.gcds == std::vector<BigInt>{1, 4, 4, 4});
  CHECK(a.data.cofactor_lcms == std::vector<BigInt>{4, 12, 12, 12});
  CHECK(a.witness == "1/(b_1*b_2)");

  CHECK(bp_sufficient_ke(std::vector<Int>{13, 4, 4, 4, 4}).sufficient);
  CHECK(bp_sufficient_ke(std::vector<Int>{5, 6, 6, 2}).sufficient);

  const BpVerdict d = bp_sufficient_ke(std::vector<Int>{2, 4, 4, 4});
  CHECK_FALSE(d.sufficient);
  CHECK(d.data.reciprocal_sum == frac(5, 4));
  CHECK(d.bound == frac(35, 32));

  CHECK_THROWS_AS(bp_sufficient_ke(std::vector<Int>{2, 3}), UsageError);
  CHECK_THROWS_AS(bp_sufficient_ke(std::vector<Int>{1, 3, 3}), UsageError);
}

TEST_CASE("bp_sufficient_ke matches the 128-bit oracle") {
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Int> a(static_cast<std::size_t>(oracle::uniform(3, 6)));
    for (Int& x : a) {
      x = oracle::uniform(2, 24);
    }
    const BpVerdict v = bp_sufficient_ke(a);
    CHECK(v.sufficient == oracle::bp_verdict(a));
    CHECK((!v.sufficient || v.fano));
    std::vector<Int> shuffled = a;
    std::shuffle(shuffled.begin(), shuffled.end(), oracle::rng());
    CHECK(bp_sufficient_ke(shuffled).sufficient == v.sufficient);
  }
}

TEST_CASE("Fermat Calabi-Yau threshold k > m(m-1)") {
  for (Int m = 3; m <= 6; ++m) {
    for (Int k = 2; k <= 60; ++k) {
      if (std::gcd(k, m) == 1) {
        CHECK(bp_sufficient_ke(fermat_exponents(k, m, m)).sufficient == (k > m * (m - 1)));
      }
    }
  }
}

TEST_CASE("hyperbolic_k_window examples") {
  const HyperbolicWindow w34 = hyperbolic_k_window(3, 4);
  CHECK(w34.lower == frac(32, 11));
  CHECK(w34.upper == 4);
  CHECK(w34.solutions == std::vector<Int>{3});
  CHECK(hyperbolic_k_window(4, 5).solutions == std::vector<Int>{4});
  const HyperbolicWindow w35 = hyperbolic_k_window(3, 5);
  CHECK(w35.lower == frac(50, 23));
  CHECK(w35.upper == frac(5, 2));
  CHECK(w35.solutions.empty());
  CHECK_THROWS_AS(hyperbolic_k_window(3, 6), UsageError);
  CHECK_THROWS_AS(hyperbolic_k_window(3, 3), UsageError);
}

TEST_CASE("window and sufficiency test agree on the hyperbolic Fermat family") {
  for (Int m = 3; m <= 6; ++m) {
    for (Int l = m + 1; l <= 2 * m - 1; ++l) {
      const auto solutions = hyperbolic_k_window(m, l).solutions;
      std::vector<Int> verdict_true;
      for (Int k = 2; k <= 60; ++k) {
        const bool v = bp_sufficient_ke(fermat_exponents(k, l, m)).sufficient;
        if (std::gcd(k, l) == 1) {
          CHECK(v == std::ranges::binary_search(solutions, k));
        }
        if (v) {
          verdict_true.push_back(k);
        }
      }
      // single window: the true k form one contiguous run
      if (!verdict_true.empty()) {
        CHECK(verdict_true.back() - verdict_true.front() + 1 ==
              static_cast<Int>(verdict_true.size()));
      }
    }
  }
}

TEST_CASE("certify reports both tests") {
  const KeCertificate c = certify(3, WeightSystem({1, 1, 1}, 4));
  CHECK(c.fano);
  CHECK(c.bp_applicable);
  CHECK(c.bp_sufficient);
  CHECK(c.gc_assumed);
  CHECK(c.left_value == frac(13, 12));
  CHECK(c.right_bound == frac(35, 32));

  // necessary test passes while the sufficient one fails
  const KeCertificate e = certify(4, WeightSystem({1, 1, 1}, 3));
  CHECK(e.necessary_klt);
  CHECK_FALSE(e.bp_sufficient);

  // not Brieskorn-Pham: (1,2,2;5) has 2 not dividing 5
  const KeCertificate n = certify(3, WeightSystem({1, 2, 2}, 5));
  CHECK_FALSE(n.bp_applicable);
  CHECK_FALSE(n.bp_sufficient);
  CHECK(n.left_value == n.klt_left);
}
