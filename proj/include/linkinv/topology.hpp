#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linkinv/arith.hpp"
#include "linkinv/links.hpp"

namespace linkinv {

/// Entries u_i / v_i = d / w_i in lowest terms.
using ReducedRatioVector = std::vector<ReducedRatio>;

/// Order k^b of the middle homology of a branched-cover link.
using TorsionOrder = FactoredPower;

/// Middle Betti number b_{m-2} of the link of a quasi-smooth system via the
/// Milnor-Orlik subset sum. Throws IntegrityError when the sum is not a
/// non-negative integer.
BigInt milnor_orlik_betti(const WeightSystem& ws);

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Brute-force Betti number of the Brieskorn-Pham link sum z_i^{a_i}:
/// counts tuples 1 <= j_i <= a_i - 1 with sum j_i / a_i integral.
/// Independent of the subset formula; throws ResourceError when the tuple
/// count exceeds the budget.
BigInt betti_bp_oracle(std::span<const Int> exponents,
                       std::uint64_t budget = kDefaultOracleBudget);

/// Closed form for the Fermat Calabi-Yau link z_1^m + ... + z_m^m.
BigInt fermat_cy_betti(Int m);
/// Closed form for the Fermat link z_1^l + ... + z_m^l.
BigInt fermat_betti(Int m, Int l);

/// Genus of the curve of a three-variable system (Orlik-Wagreich formula).
/// The system is first divided by gcd(w); the formula is not scale invariant.
BigInt genus(const WeightSystem& ws);

/// |w| = d, w_i | d and pairwise coprime weights; sufficient for genus 1.
bool genus_one_criterion(const WeightSystem& ws);

/// k^{b_{m-2}} for the k-fold cover of the base link. Requires the torsion
/// hypothesis; otherwise throws UsageError.
TorsionOrder torsion_order(Int k, const WeightSystem& base);

} // namespace linkinv
