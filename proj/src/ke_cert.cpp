#include "linkinv/ke_cert.hpp"

#include <numeric>

#include "linkinv/error.hpp"

namespace linkinv {

namespace {

BigInt big(Int x) { return BigInt(static_cast<long>(x)); }

void require_k(Int k) {
  if (k < 1) {
    throw UsageError("k must be a positive integer, got " + std::to_string(k));
  }
}

} // namespace

bool is_fano(Int k, const WeightSystem& base) {
  require_k(k);
  const BigInt value = big(k) * (big(base.norm()) - big(base.degree())) + big(base.degree());
  return value > 0;
}

KltCheck evaluate_klt(Int k, const WeightSystem& base) {
  require_k(k);
  const auto m = static_cast<Int>(base.size());
  KltCheck out;
  out.left = Rational(big(k) * (big(base.norm()) - big(base.degree())) + big(base.degree()), 1);

  BigInt smallest = big(base.degree());
  out.witness = "d";
  for (std::size_t i = 0; i < base.size(); ++i) {
    const BigInt candidate = big(k) * big(base.weight(i));
    if (candidate < smallest) {
      smallest = candidate;
      out.witness = "k*w_" + std::to_string(i + 1);
    }
  }
  out.right = Rational(big(m) * smallest, big(m - 1));
  out.holds = out.left < out.right;
  return out;
}

bool necessary_klt(Int k, const WeightSystem& base) { return evaluate_klt(k, base).holds; }

bool spherical_never_klt(const WeightSystem& base) {
  if (classify_case(base) != CaseClass::Spherical) {
    throw UsageError("spherical_never_klt needs |w| > d, got " + base.str());
  }
  const BigInt m = big(static_cast<Int>(base.size()));
  const BigInt excess = big(base.norm() - base.degree());
  const BigInt d = big(base.degree());
  // Past this k the left side exceeds m/(m-1) * d >= the right side.
  for (Int k = 1; (m - 1) * (big(k) * excess + d) < m * d; ++k) {
    if (necessary_klt(k, base)) {
      return false;
    }
  }
  return true;
}

Int euclidean_k_threshold(const WeightSystem& base) {
  if (classify_case(base) != CaseClass::Euclidean) {
    throw UsageError("euclidean_k_threshold needs |w| = d, got " + base.str());
  }
  const auto m = static_cast<Int>(base.size());
  Int min_weight = base.weight(0);
  for (Int w : base.weights()) {
    min_weight = std::min(min_weight, w);
  }
  // least k with m * k * min_weight > (m - 1) * d
  return checked_mul(m - 1, base.degree()) / checked_mul(m, min_weight) + 1;
}

BpVerdict bp_sufficient_ke(std::span<const Int> exponents) {
  const std::size_t n = exponents.size();
  if (n < 3) {
    throw UsageError("the sufficiency test needs at least 3 exponents, got " + std::to_string(n));
  }
  for (Int a : exponents) {
    if (a < 2) {
      throw UsageError("Brieskorn-Pham exponents must be >= 2, got " + std::to_string(a));
    }
  }
  BpVerdict out;
  BpData& data = out.data;
  data.exponents.assign(exponents.begin(), exponents.end());
  for (std::size_t j = 0; j < n; ++j) {
    BigInt c = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) {
        c = lcm(c, big(exponents[i]));
      }
    }
    data.gcds.push_back(gcd(big(exponents[j]), c));
    data.cofactor_lcms.push_back(std::move(c));
    data.reciprocal_sum += Rational(1, big(exponents[j]));
  }

  // min over 1/a_i and 1/(b_i b_j) is 1 / max over a_i and b_i b_j
  BigInt largest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (big(exponents[i]) > largest) {
      largest = big(exponents[i]);
      out.witness = "1/a_" + std::to_string(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const BigInt product = data.gcds[i] * data.gcds[j];
      if (product > largest) {
        largest = product;
        out.witness = "1/(b_" + std::to_string(i) + "*b_" + std::to_string(j) + ")";
      }
    }
  }
  const auto m = static_cast<Int>(n - 1);
  out.bound = Rational(1) + Rational(big(m), big(m - 1) * largest);
  out.fano = Rational(1) < data.reciprocal_sum;
  out.sufficient = out.fano && data.reciprocal_sum < out.bound;
  return out;
}

HyperbolicWindow hyperbolic_k_window(Int m, Int l) {
  if (m < 3) {
    throw UsageError("hyperbolic window needs m >= 3, got " + std::to_string(m));
  }
  if (l < m + 1 || l > 2 * m - 1) {
    throw UsageError("l must satisfy m+1 <= l <= 2m-1 (here " + std::to_string(m + 1) +
                     ".." + std::to_string(2 * m - 1) + "), got " + std::to_string(l));
  }
  HyperbolicWindow out;
  out.lower = Rational(big(m - 1) * big(l) * big(l), big(m - 1) * big(l) * big(l - m) + big(m));
  out.upper = Rational(big(l), big(l - m));
  // floor(lower) + 1 is the first integer strictly above lower
  BigInt first = out.lower.num();
  mpz_fdiv_q(first.get_mpz_t(), first.get_mpz_t(), out.lower.den().get_mpz_t());
  first += 1;
  for (Int k = std::max<Int>(2, first.get_si()); Rational(k) < out.upper; ++k) {
    if (std::gcd(k, l) == 1) {
      out.solutions.push_back(k);
    }
  }
  return out;
}

KeCertificate certify(Int k, const WeightSystem& base) {
  const CoverData cover = branched_cover(k, base);
  const KltCheck klt = evaluate_klt(k, base);
  KeCertificate cert;
  cert.fano = is_fano(k, base);
  cert.necessary_klt = klt.holds;
  cert.klt_left = klt.left;
  cert.klt_right = klt.right;
  if (cover.bp_exponents) {
    const BpVerdict bp = bp_sufficient_ke(*cover.bp_exponents);
    cert.bp_applicable = true;
    cert.bp_sufficient = bp.sufficient;
    cert.left_value = bp.data.reciprocal_sum;
    cert.right_bound = bp.bound;
    cert.limiting_witness = bp.witness;
  } else {
    cert.left_value = klt.left;
    cert.right_bound = klt.right;
    cert.limiting_witness = klt.witness;
  }
  return cert;
}

} // namespace linkinv
