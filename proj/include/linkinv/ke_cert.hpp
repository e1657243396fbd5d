#pragma once

#include <span>
#include <string>
#include <vector>

#include "linkinv/arith.hpp"
#include "linkinv/links.hpp"

namespace linkinv {

/// Derived data of a Brieskorn-Pham exponent vector a_0..a_m.
struct BpData {
  std::vector<Int> exponents;
  /// C^j = lcm(a_i : i != j)
  std::vector<BigInt> cofactor_lcms;
  /// b_j = gcd(a_j, C^j)
  std::vector<BigInt> gcds;
  Rational reciprocal_sum;

  friend bool operator==(const BpData&, const BpData&) = default;
};

/// Outcome of the Brieskorn-Pham sufficiency test
///   1 < sum 1/a_i < 1 + m/(m-1) * min{1/a_i, 1/(b_i b_j)}.
struct BpVerdict {
  bool sufficient = false;
  /// Left inequality (equivalently, the Fano condition for the quotient).
  bool fano = false;
  BpData data;
  Rational bound;
  /// Term attaining the minimum, "1/a_2" or "1/(b_0*b_1)".
  std::string witness;
};

/// The necessary klt inequality k(|w|-d)+d < m/(m-1) * min{d, k w_i},
/// with both sides kept exactly.
struct KltCheck {
  bool holds = false;
  Rational left;
  Rational right;
  /// "d" or "k*w_i" (1-based i) for the term attaining the minimum.
  std::string witness;
};

/// Side-by-side verdicts for the k-fold cover of a base system. The
/// necessary and the sufficient test are reported independently.
struct KeCertificate {
  bool fano = false;
  bool necessary_klt = false;
  bool bp_applicable = false;
  bool bp_sufficient = false;
  /// The genericity condition on perturbations is assumed, never verified.
  bool gc_assumed = true;
  /// Two sides of the decisive inequality: the BP test when applicable,
  /// the necessary klt test otherwise.
  Rational left_value;
  Rational right_bound;
  std::string limiting_witness;
  Rational klt_left;
  Rational klt_right;

  friend bool operator==(const KeCertificate&, const KeCertificate&) = default;
};

struct HyperbolicWindow {
  Rational lower;
  Rational upper;
  std::vector<Int> solutions;
};

/// k(|w| - d) + d > 0.
bool is_fano(Int k, const WeightSystem& base);

KltCheck evaluate_klt(Int k, const WeightSystem& base);
bool necessary_klt(Int k, const WeightSystem& base);

/// For a spherical base, decides exactly whether the necessary klt
/// inequality fails for every k >= 1. Only k < d / ((m-1)(|w|-d)) can
/// satisfy it, so the search is finite. Throws UsageError on non-spherical
/// input.
bool spherical_never_klt(const WeightSystem& base);

/// Least k with (m-1) d < m k min(w) for a Euclidean base.
Int euclidean_k_threshold(const WeightSystem& base);

BpVerdict bp_sufficient_ke(std::span<const Int> exponents);

/// Open interval of k for the family z_0^k + z_1^l + ... + z_m^l and the
/// admissible integers in it (k >= 2, gcd(k, l) = 1). Requires
/// m + 1 <= l <= 2m - 1.
HyperbolicWindow hyperbolic_k_window(Int m, Int l);

KeCertificate certify(Int k, const WeightSystem& base);

} // namespace linkinv
