#include "linkinv/links.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "linkinv/error.hpp"

namespace linkinv {

WeightSystem::WeightSystem(std::vector<Int> weights, Int degree)
    : weights_(std::move(weights)), degree_(degree) {
  if (weights_.size() < 2) {
    throw UsageError("a weight system needs at least 2 weights");
  }
  for (Int w : weights_) {
    if (w < 1) {
      throw UsageError("weights must be positive, got " + std::to_string(w));
    }
  }
  if (degree_ < 1) {
    throw UsageError("degree must be positive, got " + std::to_string(degree_));
  }
  (void)norm(); // rejects overflowing inputs up front
}

Int WeightSystem::norm() const {
  Int total = 0;
  for (Int w : weights_) {
    total = checked_add(total, w);
  }
  return total;
}

WeightSystem WeightSystem::canonical() const {
  std::vector<Int> sorted = weights_;
  std::stable_sort(sorted.begin(), sorted.end());
  return {std::move(sorted), degree_};
}

std::string WeightSystem::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(weights_[i]);
  }
  out += "; " + std::to_string(degree_) + ")";
  return out;
}

std::string_view to_string(CaseClass c) {
  switch (c) {
  case CaseClass::Spherical:
    return "spherical";
  case CaseClass::Euclidean:
    return "euclidean";
  case CaseClass::Hyperbolic:
    return "hyperbolic";
  }
  return "?";
}

CaseClass classify_case(const WeightSystem& ws) {
  const Int excess = ws.norm() - ws.degree();
  if (excess > 0) {
    return CaseClass::Spherical;
  }
  return excess == 0 ? CaseClass::Euclidean : CaseClass::Hyperbolic;
}

CoverData branched_cover(Int k, const WeightSystem& base) {
  if (k < 2) {
    throw UsageError("branched cover index k must be >= 2, got " + std::to_string(k));
  }
  const Int d = base.degree();
  const Int g = std::gcd(k, d);
  std::vector<Int> cover_weights;
  cover_weights.reserve(base.size() + 1);
  cover_weights.push_back(d / g);
  for (Int w : base.weights()) {
    cover_weights.push_back(checked_mul(k / g, w));
  }
  CoverData out{k, base, WeightSystem(std::move(cover_weights), checked_mul(k / g, d)),
                std::nullopt, g > 1};

  const auto divides_degree = [d](Int w) { return d % w == 0; };
  if (std::ranges::all_of(base.weights(), divides_degree)) {
    std::vector<Int> exponents{k};
    for (Int w : base.weights()) {
      exponents.push_back(d / w);
    }
    out.bp_exponents = std::move(exponents);
  }
  return out;
}

namespace {

// Nonempty subsets of {0..m-1} as bitmasks, smallest subsets first so that
// failing singletons are found early.
std::vector<std::uint32_t> subsets_by_size(std::size_t m) {
  std::vector<std::uint32_t> masks;
  masks.reserve((std::size_t{1} << m) - 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    masks.push_back(mask);
  }
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  return masks;
}

} // namespace

bool quasi_smooth_generic(const WeightSystem& ws) {
  const std::size_t m = ws.size();
  if (m > kMaxSubsetVariables) {
    throw UsageError("too many variables for subset enumeration");
  }
  const Int d = ws.degree();
  std::vector<Int> inside;
  for (std::uint32_t mask : subsets_by_size(m)) {
    inside.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        inside.push_back(ws.weight(i));
      }
    }
    if (is_representable(inside, d)) {
      continue;
    }
    std::size_t partners = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (std::uint32_t{1} << j)) {
        continue;
      }
      const Int rest = d - ws.weight(j);
      if (rest >= 0 && is_representable(inside, rest)) {
        ++partners;
      }
    }
    if (partners < inside.size()) {
      return false;
    }
  }
  return true;
}

std::vector<ReducedRatio> reduced_ratios(const WeightSystem& ws) {
  std::vector<ReducedRatio> out;
  out.reserve(ws.size());
  for (Int w : ws.weights()) {
    out.push_back(reduced_fraction(ws.degree(), w));
  }
  return out;
}

bool torsion_hypothesis(Int k, const WeightSystem& ws) {
  if (k < 2) {
    throw UsageError("branched cover index k must be >= 2, got " + std::to_string(k));
  }
  return std::ranges::all_of(reduced_ratios(ws),
                             [k](const ReducedRatio& r) { return std::gcd(k, r.numerator) == 1; });
}

NormalizedCover normalize_cover(Int k, const WeightSystem& base) {
  if (k < 2) {
    throw UsageError("branched cover index k must be >= 2, got " + std::to_string(k));
  }
  const auto ratios = reduced_ratios(base);
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    const Int u = ratios[i].numerator;
    if (std::gcd(k, u) != 1) {
      throw UsageError("torsion hypothesis fails: gcd(k=" + std::to_string(k) + ", u_" +
                       std::to_string(i + 1) + "=" + std::to_string(u) + ") = " +
                       std::to_string(std::gcd(k, u)));
    }
  }
  std::vector<Int> weights(base.weights().begin(), base.weights().end());
  Int d = base.degree();
  for (Int g = std::gcd(k, d); g > 1; g = std::gcd(k, d)) {
    // Every prime of g divides each w_i at least as often as it divides d.
    for (Int& w : weights) {
      w /= g;
    }
    d /= g;
  }
  return {k, WeightSystem(std::move(weights), d)};
}

} // namespace linkinv
