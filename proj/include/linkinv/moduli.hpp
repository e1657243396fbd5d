#pragma once

#include "linkinv/arith.hpp"
#include "linkinv/links.hpp"

namespace linkinv {

/// Effective parameter count mu = h^0(O(d)) - sum_i h^0(O(w_i)).
struct ModuliCount {
  /// Raw formula value; negative values are kept as computed.
  BigInt complex_dim;
  /// 2 * max(complex_dim, 0)
  BigInt real_dim;
  BigInt h0_degree;
  BigInt h0_weights_sum;

  friend bool operator==(const ModuliCount&, const ModuliCount&) = default;
};

/// Applied to the cover system, branch variable included.
ModuliCount moduli_count(const WeightSystem& ws);

/// binomial(2m-1, m) - m^2
BigInt fermat_cy_moduli(Int m);

/// binomial(m+l-1, l) - m^2, for m+1 <= l <= 2m-1.
BigInt hyperbolic_moduli(Int m, Int l);

} // namespace linkinv
