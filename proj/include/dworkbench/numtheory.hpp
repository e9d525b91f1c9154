#pragma once

#include <cstdint>
#include <vector>

// Small integer helpers shared by every module.
namespace dwb::nt {

inline int64_t mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t gcd(int64_t a, int64_t b);
int64_t lcm(int64_t a, int64_t b);
bool is_prime(int64_t n);
/// Distinct prime factors in increasing order.
std::vector<int64_t> prime_factors(int64_t n);
std::vector<int64_t> divisors(int64_t n);
int64_t euler_phi(int64_t n);
int64_t powmod(int64_t base, int64_t exp, int64_t m);
int64_t ipow(int64_t base, int exp);
/// Multiplicative order of a modulo m (gcd(a, m) must be 1).
int64_t mult_order(int64_t a, int64_t m);
/// Smallest primitive root modulo a prime p.
int64_t primitive_root(int64_t p);

}  // namespace dwb::nt
