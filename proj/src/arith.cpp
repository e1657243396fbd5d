#include "linkinv/arith.hpp"

#include <numeric>
#include <ostream>
#include <vector>

#include "linkinv/error.hpp"

namespace linkinv {

Rational::Rational(Int value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) {
    throw UsageError("rational with zero denominator");
  }
  value_.canonicalize();
}

std::string Rational::str() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ + b.value_));
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ - b.value_));
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ * b.value_));
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) {
    throw UsageError("division by zero");
  }
  return Rational(mpq_class(a.value_ / b.value_));
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt FactoredPower::expand() const {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return out;
}

std::string FactoredPower::decimal() const { return expand().get_str(); }

Int gcd_many(std::span<const Int> xs) {
  if (xs.empty()) {
    throw UsageError("gcd of an empty list");
  }
  Int g = 0;
  for (Int x : xs) {
    if (x < 1) {
      throw UsageError("gcd inputs must be positive, got " + std::to_string(x));
    }
    g = std::gcd(g, x);
  }
  return g;
}

BigInt lcm_many(std::span<const Int> xs) {
  BigInt out = 1;
  for (Int x : xs) {
    if (x < 1) {
      throw UsageError("lcm inputs must be positive, got " + std::to_string(x));
    }
    out = lcm(out, BigInt(static_cast<long>(x)));
  }
  return out;
}

ReducedRatio reduced_fraction(Int d, Int w) {
  if (d < 1 || w < 1) {
    throw UsageError("reduced_fraction needs positive arguments");
  }
  const Int g = std::gcd(d, w);
  return {d / g, w / g};
}

BigInt binomial(Int n, Int r) {
  if (n < 0 || r < 0) {
    throw UsageError("binomial arguments must be non-negative");
  }
  if (r > n) {
    return 0;
  }
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

namespace {

void check_weights(std::span<const Int> weights, Int target) {
  for (Int w : weights) {
    if (w < 1) {
      throw UsageError("weights must be positive, got " + std::to_string(w));
    }
  }
  if (target < 0) {
    throw UsageError("monomial target degree must be non-negative");
  }
}

} // namespace

BigInt count_monomials(std::span<const Int> weights, Int target) {
  if (weights.empty()) {
    throw UsageError("count_monomials needs at least one weight");
  }
  check_weights(weights, target);
  std::vector<BigInt> table(static_cast<std::size_t>(target) + 1, BigInt(0));
  table[0] = 1;
  for (Int w : weights) {
    for (Int t = w; t <= target; ++t) {
      table[t] += table[t - w];
    }
  }
  return table[target];
}

bool is_representable(std::span<const Int> weights, Int target) {
  check_weights(weights, target);
  if (target == 0) {
    return true;
  }
  switch (weights.size()) {
  case 0:
    return false;
  case 1:
    return target % weights[0] == 0;
  case 2: {
    const Int big = std::max(weights[0], weights[1]);
    const Int small = std::min(weights[0], weights[1]);
    for (Int rest = target; rest >= 0; rest -= big) {
      if (rest % small == 0) {
        return true;
      }
    }
    return false;
  }
  default:
    break;
  }
  std::vector<char> reachable(static_cast<std::size_t>(target) + 1, 0);
  reachable[0] = 1;
  for (Int w : weights) {
    for (Int t = w; t <= target; ++t) {
      reachable[t] = static_cast<char>(reachable[t] | reachable[t - w]);
    }
  }
  return reachable[target] != 0;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw UsageError("integer overflow: input values are too large");
  }
  return out;
}

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw UsageError("integer overflow: input values are too large");
  }
  return out;
}

} // namespace linkinv
