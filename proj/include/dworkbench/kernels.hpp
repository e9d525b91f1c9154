#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dworkbench/chars.hpp"
#include "dworkbench/ff.hpp"
#include "dworkbench/root_sum.hpp"

// Hot loops. Each *_parallel kernel has a *_serial twin that follows the
// definition literally; tests pin them against each other.
namespace dwb::kernels {

/// Histogram H[r * N + w] over u in (F_q^x)^{N-1}, u_N = 1, s = sum u_i != 0, of
///   r = N log s - sum log u_i - N log N  (mod q - 1),  w = sum v_i log u_i  (mod N).
/// The torus part of the eigentrace at t is -sum_w H[N log t][w] zeta_N^w.
std::vector<int64_t> torus_histogram_serial(const FqField& field, int N, std::span<const int> v);
/// Same histogram by dynamic programming over (partial sum, log sum, weight).
std::vector<int64_t> torus_histogram_parallel(const FqField& field, int N, std::span<const int> v);

/// #{x in P^{N-1}(F) : sum x_i^N = N t prod x_i}, plain chart enumeration.
int64_t count_points_serial(const FqField& field, int N, FqElem t);
/// Same count; the last coordinate is resolved by a lookup table.
int64_t count_points_parallel(const FqField& field, int N, FqElem t);

/// Traditional trace (-1)^{2k-1} sum psi(sum x - sum y) prod chi(x_i) prod rhobar(y_i)
/// over prod x = t prod y in (F^x)^{2k}, as a root sum modulo N p.
RootSum trad_trace_naive_serial(const FqField& field, std::span<const MultChar> chi, std::span<const MultChar> rho,
                                AddChar psi, FqElem t);
RootSum trad_trace_naive_parallel(const FqField& field, std::span<const MultChar> chi,
                                  std::span<const MultChar> rho, AddChar psi, FqElem t);

/// C[k] = sign * sum_i A[i] B[k - i] over Z/n (tables indexed by discrete log).
std::vector<RootSum> convolve_serial(const std::vector<RootSum>& a, const std::vector<RootSum>& b, int sign);
std::vector<RootSum> convolve_parallel(const std::vector<RootSum>& a, const std::vector<RootSum>& b, int sign);
/// One entry of the convolution.
RootSum convolve_at(const std::vector<RootSum>& a, const std::vector<RootSum>& b, int sign, int64_t k);

}  // namespace dwb::kernels
