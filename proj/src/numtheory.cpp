#include "dworkbench/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dworkbench/error.hpp"

namespace dwb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotAMultiple: return "NotAMultiple";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BadSubfield: return "BadSubfield";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::TrivialAdditive: return "TrivialAdditive";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadT: return "BadT";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::NotSignDefinite: return "NotSignDefinite";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::MissingLambda: return "MissingLambda";
    case ErrorKind::AllRatiosUndefined: return "AllRatiosUndefined";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

namespace nt {

int64_t gcd(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm(int64_t a, int64_t b) { return std::lcm(a, b); }

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t euler_phi(int64_t n) {
  int64_t result = n;
  for (int64_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

int64_t powmod(int64_t base, int64_t exp, int64_t m) {
  if (m == 1) return 0;
  __int128 result = 1;
  __int128 b = mod(base, m);
  if (exp < 0) throw std::invalid_argument("powmod: negative exponent");
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<int64_t>(result);
}

int64_t ipow(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int64_t mult_order(int64_t a, int64_t m) {
  if (m == 1) return 1;
  const int64_t group = euler_phi(m);
  for (int64_t d : divisors(group))
    if (powmod(a, d, m) == 1) return d;
  throw Error(ErrorKind::BadParams, "mult_order: element is not a unit");
}

int64_t primitive_root(int64_t p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (int64_t l : factors) {
      if (powmod(g, (p - 1) / l, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorKind::NotPrime, "no primitive root modulo " + std::to_string(p));
}

}  // namespace nt
}  // namespace dwb
