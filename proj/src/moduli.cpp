#include "linkinv/moduli.hpp"

#include "linkinv/error.hpp"

namespace linkinv {

ModuliCount moduli_count(const WeightSystem& ws) {
  ModuliCount out;
  out.h0_degree = count_monomials(ws.weights(), ws.degree());
  out.h0_weights_sum = 0;
  for (Int w : ws.weights()) {
    out.h0_weights_sum += count_monomials(ws.weights(), w);
  }
  out.complex_dim = out.h0_degree - out.h0_weights_sum;
  out.real_dim = out.complex_dim > 0 ? BigInt(2 * out.complex_dim) : BigInt(0);
  return out;
}

BigInt fermat_cy_moduli(Int m) {
  if (m < 3) {
    throw UsageError("fermat_cy_moduli needs m >= 3, got " + std::to_string(m));
  }
  return binomial(2 * m - 1, m) - BigInt(static_cast<long>(m * m));
}

BigInt hyperbolic_moduli(Int m, Int l) {
  if (m < 3) {
    throw UsageError("hyperbolic_moduli needs m >= 3, got " + std::to_string(m));
  }
  if (l < m + 1 || l > 2 * m - 1) {
    throw UsageError("l must satisfy m+1 <= l <= 2m-1, got m=" + std::to_string(m) +
                     " l=" + std::to_string(l));
  }
  return binomial(m + l - 1, l) - BigInt(static_cast<long>(m * m));
}

} // namespace linkinv
