#include "linkinv/topology.hpp"

#include <bit>
#include <numeric>

#include "linkinv/error.hpp"

namespace linkinv {

namespace {

BigInt require_natural(const Rational& value, const char* what) {
  if (!value.is_integer() || value.sign() < 0) {
    throw IntegrityError(std::string(what) + " evaluated to " + value.str() +
                         ", not a non-negative integer (is the system quasi-smooth?)");
  }
  return value.num();
}

BigInt big(Int x) { return BigInt(static_cast<long>(x)); }

} // namespace

BigInt milnor_orlik_betti(const WeightSystem& ws) {
  const std::size_t m = ws.size();
  if (m > kMaxSubsetVariables) {
    throw UsageError("too many variables for subset enumeration");
  }
  const ReducedRatioVector ratios = reduced_ratios(ws);
  Rational total;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    BigInt prod_u = 1;
    BigInt prod_v = 1;
    BigInt lcm_u = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        const BigInt u = big(ratios[i].numerator);
        prod_u *= u;
        prod_v *= big(ratios[i].denominator);
        lcm_u = lcm(lcm_u, u);
      }
    }
    Rational term(prod_u, BigInt(prod_v * lcm_u));
    const auto s = static_cast<std::size_t>(std::popcount(mask));
    total += ((m - s) % 2 == 0) ? term : -term;
  }
  return require_natural(total, "Betti sum");
}

BigInt betti_bp_oracle(std::span<const Int> exponents, std::uint64_t budget) {
  if (exponents.empty()) {
    throw UsageError("oracle needs at least one exponent");
  }
  std::uint64_t tuples = 1;
  for (Int a : exponents) {
    if (a < 2) {
      throw UsageError("Brieskorn-Pham exponents must be >= 2");
    }
    if (__builtin_mul_overflow(tuples, static_cast<std::uint64_t>(a - 1), &tuples) ||
        tuples > budget) {
      throw ResourceError("oracle enumeration exceeds budget of " + std::to_string(budget) +
                          " tuples");
    }
  }
  Int modulus = 1;
  for (Int a : exponents) {
    modulus = checked_mul(modulus / std::gcd(modulus, a), a);
  }
  // j_i / a_i = j_i * step_i / modulus; work with numerators mod modulus.
  const std::size_t m = exponents.size();
  std::vector<Int> step(m);
  for (std::size_t i = 0; i < m; ++i) {
    step[i] = modulus / exponents[i];
  }
  std::vector<Int> j(m, 1);
  Int residue = 0;
  for (std::size_t i = 0; i < m; ++i) {
    residue = (residue + step[i]) % modulus;
  }
  std::uint64_t count = 0;
  while (true) {
    if (residue == 0) {
      ++count;
    }
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (j[i] + 1 < exponents[i]) {
        ++j[i];
        residue = (residue + step[i]) % modulus;
        break;
      }
      // wrap j_i from a_i - 1 back to 1
      residue = ((residue - (exponents[i] - 2) * step[i]) % modulus + modulus) % modulus;
      j[i] = 1;
    }
    if (i == m) {
      break;
    }
  }
  return BigInt(static_cast<unsigned long>(count));
}

BigInt fermat_betti(Int m, Int l) {
  if (m < 3 || l < 2) {
    throw UsageError("fermat_betti needs m >= 3 and l >= 2");
  }
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), big(1 - l).get_mpz_t(), static_cast<unsigned long>(m));
  const BigInt numerator = power - 1;
  if (numerator % big(l) != 0) {
    throw IntegrityError("closed-form Betti numerator not divisible by l");
  }
  BigInt value = 1 + numerator / big(l);
  if (m % 2 != 0) {
    value = -value;
  }
  return value;
}

BigInt fermat_cy_betti(Int m) {
  if (m < 3) {
    throw UsageError("fermat_cy_betti needs m >= 3");
  }
  return fermat_betti(m, m);
}

BigInt genus(const WeightSystem& ws) {
  if (ws.size() != 3) {
    throw UsageError("genus formula needs exactly three weights, got " +
                     std::to_string(ws.size()));
  }
  const Int c = gcd_many(ws.weights());
  if (ws.degree() % c != 0) {
    throw IntegrityError("gcd of weights " + std::to_string(c) + " does not divide degree " +
                         std::to_string(ws.degree()) + ": no curve of this degree");
  }
  const Int d = ws.degree() / c;
  const Int w[3] = {ws.weight(0) / c, ws.weight(1) / c, ws.weight(2) / c};

  Rational value(big(d) * big(d), big(w[0]) * big(w[1]) * big(w[2]));
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      value = value - Rational(big(d) * big(std::gcd(w[i], w[j])), big(w[i]) * big(w[j]));
    }
    value = value + Rational(big(std::gcd(d, w[i])), big(w[i]));
  }
  value = (value - Rational(1)) / Rational(2);
  return require_natural(value, "genus formula");
}

bool genus_one_criterion(const WeightSystem& ws) {
  if (ws.size() != 3) {
    throw UsageError("genus criterion needs exactly three weights");
  }
  if (ws.norm() != ws.degree()) {
    return false;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (ws.degree() % ws.weight(i) != 0) {
      return false;
    }
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (std::gcd(ws.weight(i), ws.weight(j)) != 1) {
        return false;
      }
    }
  }
  return true;
}

TorsionOrder torsion_order(Int k, const WeightSystem& base) {
  // normalize_cover produces the diagnostic naming the offending u_i
  (void)normalize_cover(k, base);
  const BigInt b = milnor_orlik_betti(base);
  if (!b.fits_ulong_p()) {
    throw IntegrityError("Betti number too large for a torsion exponent");
  }
  return {k, static_cast<std::uint64_t>(b.get_ui())};
}

} // namespace linkinv
