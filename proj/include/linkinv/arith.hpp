#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include <gmpxx.h>

namespace linkinv {

/// Machine integer used for weights, degrees and cover indices.
using Int = std::int64_t;
/// Arbitrary-precision integer for every derived quantity that can grow.
using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(Int value); // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  [[nodiscard]] BigInt num() const { return value_.get_num(); }
  [[nodiscard]] BigInt den() const { return value_.get_den(); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  /// "n" for integers, "n/d" otherwise.
  [[nodiscard]] std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& other);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// base^exponent kept in factored form; the decimal expansion is produced
/// only on request.
struct FactoredPower {
  Int base = 1;
  std::uint64_t exponent = 0;

  [[nodiscard]] BigInt expand() const;
  /// Decimal digits of expand().
  [[nodiscard]] std::string decimal() const;

  friend bool operator==(const FactoredPower&, const FactoredPower&) = default;
};

/// Coprime pair u/v.
struct ReducedRatio {
  Int numerator = 0;
  Int denominator = 1;

  friend bool operator==(const ReducedRatio&, const ReducedRatio&) = default;
};

Int gcd_many(std::span<const Int> xs);
/// lcm of the inputs; the empty list yields 1.
BigInt lcm_many(std::span<const Int> xs);
ReducedRatio reduced_fraction(Int d, Int w);
/// Binomial coefficient, 0 when r > n.
BigInt binomial(Int n, Int r);

/// Number of exponent vectors a >= 0 with sum a_i * weights[i] == target.
BigInt count_monomials(std::span<const Int> weights, Int target);
/// True iff count_monomials(weights, target) > 0. An empty weight list
/// represents only 0.
bool is_representable(std::span<const Int> weights, Int target);

/// Overflow-checked products for machine integers; overflow is a usage error
/// since it can only come from out-of-range input.
Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);

} // namespace linkinv
