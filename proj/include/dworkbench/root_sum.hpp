#pragma once

#include <cstdint>
#include <vector>

#include "dworkbench/cyclo.hpp"

namespace dwb {

/// Dense integer combination sum_j c[j] zeta_M^j in Z[x]/(x^M - 1).
///
/// Not canonical (the relation Phi_M = 0 is not applied); it is the
/// accumulator type for hot loops and is reduced once with to_cyclo().
struct RootSum {
  int modulus = 1;
  std::vector<int64_t> c;

  RootSum() : c(1, 0) {}
  explicit RootSum(int m) : modulus(m), c(m, 0) {}

  void add(int64_t k, int64_t count = 1) {
    int64_t r = k % modulus;
    if (r < 0) r += modulus;
    c[r] += count;
  }
  RootSum& operator+=(const RootSum& rhs);
  RootSum& operator-=(const RootSum& rhs);
  RootSum operator-() const;
  /// Multiply by zeta_M^k.
  RootSum rotated(int64_t k) const;
  RootSum scaled(int64_t factor) const;
  bool is_zero() const;

  CycloElem to_cyclo() const { return CycloElem::from_root_counts(modulus, c); }
};

/// Product in Z[x]/(x^M - 1); O(M^2).
RootSum multiply(const RootSum& a, const RootSum& b);

}  // namespace dwb
