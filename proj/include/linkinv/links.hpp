#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkinv/arith.hpp"

namespace linkinv {

/// Weights w_1..w_m (m >= 2) and degree d of a weighted homogeneous
/// hypersurface. Weight order is preserved as given; canonical() sorts it.
class WeightSystem {
public:
  WeightSystem(std::vector<Int> weights, Int degree);

  [[nodiscard]] std::span<const Int> weights() const { return weights_; }
  [[nodiscard]] Int weight(std::size_t i) const { return weights_.at(i); }
  [[nodiscard]] Int degree() const { return degree_; }
  [[nodiscard]] std::size_t size() const { return weights_.size(); }
  /// |w| = sum of the weights.
  [[nodiscard]] Int norm() const;
  /// Same system with weights sorted ascending (stable).
  [[nodiscard]] WeightSystem canonical() const;
  /// "(w1,...,wm; d)"
  [[nodiscard]] std::string str() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;

private:
  std::vector<Int> weights_;
  Int degree_;
};

enum class CaseClass { Spherical, Euclidean, Hyperbolic };

std::string_view to_string(CaseClass c);

/// Link of z_0^k + f(z_1..z_m) over the link of f. The cover system lists
/// the branch variable z_0 first.
struct CoverData {
  Int k = 2;
  WeightSystem base;
  WeightSystem cover;
  /// (k, d/w_1, ..., d/w_m); present iff every base weight divides d.
  std::optional<std::vector<Int>> bp_exponents;
  /// gcd(k, d) > 1: the presentation is valid but not the reduced one.
  bool needs_normalization = false;

  friend bool operator==(const CoverData&, const CoverData&) = default;
};

CaseClass classify_case(const WeightSystem& ws);

CoverData branched_cover(Int k, const WeightSystem& base);

/// Combinatorial quasi-smoothness for a generic polynomial: for every
/// nonempty index set I either some degree-d monomial lives in the I
/// variables, or there are |I| monomials (I-monomial) * z_j of degree d with
/// pairwise distinct j outside I.
bool quasi_smooth_generic(const WeightSystem& ws);

/// d / w_i in lowest terms, one entry per weight.
std::vector<ReducedRatio> reduced_ratios(const WeightSystem& ws);

/// gcd(k, u_i) == 1 for every i, where u_i / v_i = d / w_i reduced.
bool torsion_hypothesis(Int k, const WeightSystem& ws);

struct NormalizedCover {
  Int k = 2;
  WeightSystem base;

  friend bool operator==(const NormalizedCover&, const NormalizedCover&) = default;
};

/// Divides common factors of k and d out of the base system until
/// gcd(k, d) == 1. Requires the torsion hypothesis; otherwise throws a
/// UsageError naming the offending u_i.
NormalizedCover normalize_cover(Int k, const WeightSystem& base);

/// Largest m accepted by operations that enumerate all 2^m index subsets.
inline constexpr std::size_t kMaxSubsetVariables = 24;

} // namespace linkinv
