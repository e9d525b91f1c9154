#include "dworkbench/ff.hpp"

#include <map>
#include <mutex>
#include <random>
#include <tuple>

#include "dworkbench/error.hpp"
#include "dworkbench/numtheory.hpp"

namespace dwb {

namespace {

using Poly = std::vector<int64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, int64_t p) {
  trim(a);
  const int df = static_cast<int>(f.size()) - 1;
  const int64_t lead_inv = nt::powmod(f.back(), p - 2, p);
  while (static_cast<int>(a.size()) - 1 >= df) {
    const int shift = static_cast<int>(a.size()) - 1 - df;
    const int64_t c = a.back() * lead_inv % p;
    for (int i = 0; i <= df; ++i) a[shift + i] = nt::mod(a[shift + i] - c * f[i], p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), f, p);
}

Poly poly_gcd(Poly a, Poly b, int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, int64_t e, const Poly& f, int64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_irreducible(std::span<const int64_t> poly_in, int64_t p) {
  Poly f(poly_in.begin(), poly_in.end());
  trim(f);
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  Poly xp{0, 1};
  for (int i = 1; i <= m / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Poly d = xp;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = nt::mod(d[1] - 1, p);
    if (poly_gcd(f, d, p).size() > 1) return false;
  }
  return true;
}

std::shared_ptr<const FqField> FqField::get(int64_t p, int m, uint64_t seed) {
  static std::mutex mutex;
  static std::map<std::tuple<int64_t, int, uint64_t>, std::shared_ptr<const FqField>> cache;
  if (m == 1) seed = 0;  // the prime field does not depend on the seed
  const auto key = std::make_tuple(p, m, seed);
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto field = std::make_shared<const FqField>(p, m, seed);
  cache.emplace(key, field);
  return field;
}

FqField::FqField(int64_t p, int m, uint64_t seed) : p_(p), m_(m), seed_(seed) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorKind::BadParams, "extension degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ > kTableBound) throw Error(ErrorKind::TooLarge, "field size exceeds 2^24 table bound");
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, -1);
  if (m == 1) {
    modulus_ = {0, 1};
    const int64_t g = nt::primitive_root(p);
    int64_t x = 1;
    for (int64_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = static_cast<FqElem>(x);
      x = x * g % p;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> coef(0, p - 1);
    Poly f;
    do {
      f.assign(m + 1, 0);
      f[m] = 1;
      for (int i = 0; i < m; ++i) f[i] = coef(rng);
    } while (f[0] == 0 || !is_irreducible(f, p));
    modulus_ = f;

    auto to_poly = [&](int64_t code) {
      Poly a(m, 0);
      for (int i = 0; i < m; ++i, code /= p) a[i] = code % p;
      return a;
    };
    auto to_code = [&](Poly a) {
      a.resize(m, 0);
      int64_t code = 0;
      for (int i = m - 1; i >= 0; --i) code = code * p + a[i];
      return code;
    };
    const auto factors = nt::prime_factors(q_ - 1);
    int64_t g = 2;
    for (;; ++g) {
      bool ok = true;
      for (int64_t l : factors) {
        Poly r = poly_powmod(to_poly(g), (q_ - 1) / l, f, p);
        if (r.size() == 1 && r[0] == 1) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    const Poly gp = to_poly(g);
    Poly x{1};
    for (int64_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = static_cast<FqElem>(to_code(x));
      x = poly_mulmod(x, gp, f, p);
    }
  }
  for (int64_t k = 0; k < q_ - 1; ++k) {
    if (log_[exp_[k]] != -1) throw Error(ErrorKind::BadParams, "generator search produced a non-generator");
    log_[exp_[k]] = static_cast<int32_t>(k);
  }

  trace_.assign(q_, 0);
  for (int64_t a = 1; a < q_; ++a) {
    FqElem s = 0;
    int64_t e = log_[a];
    for (int i = 0; i < m; ++i) {
      s = add(s, exp_[e]);
      e = static_cast<int64_t>((static_cast<__int128>(e) * p) % (q_ - 1));
    }
    if (s >= p) throw Error(ErrorKind::BadParams, "trace left the prime field");
    trace_[a] = static_cast<int32_t>(s);
  }

  if (m > 1) {
    const int64_t n = exp_[(q_ - 1) / (p - 1)];  // N(g), lies in F_p
    const int64_t gp = nt::primitive_root(p);
    int64_t x = 1;
    norm_log_factor_ = -1;
    for (int64_t k = 0; k < p - 1; ++k, x = x * gp % p) {
      if (x == n) {
        norm_log_factor_ = k;
        break;
      }
    }
    if (norm_log_factor_ < 0) throw Error(ErrorKind::BadParams, "norm of generator not in prime field");
  }
}

FqElem FqField::from_int(int64_t a) const { return static_cast<FqElem>(nt::mod(a, p_)); }

FqElem FqField::add(FqElem a, FqElem b) const {
  if (m_ == 1) {
    int64_t s = static_cast<int64_t>(a) + b;
    return static_cast<FqElem>(s >= p_ ? s - p_ : s);
  }
  int64_t out = 0, place = 1;
  int64_t x = a, y = b;
  for (int i = 0; i < m_; ++i) {
    int64_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return static_cast<FqElem>(out);
}

FqElem FqField::neg(FqElem a) const {
  if (m_ == 1) return a == 0 ? 0 : static_cast<FqElem>(p_ - a);
  int64_t out = 0, place = 1;
  int64_t x = a;
  for (int i = 0; i < m_; ++i) {
    const int64_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    x /= p_;
  }
  return static_cast<FqElem>(out);
}

FqElem FqField::inv(FqElem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FqElem FqField::pow(FqElem a, int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of 0");
    return e == 0 ? 1 : 0;
  }
  const int64_t k = static_cast<int64_t>((static_cast<__int128>(log_[a]) * nt::mod(e, q_ - 1)) % (q_ - 1));
  return exp_[k];
}

int64_t FqField::dlog(FqElem a) const {
  if (a == 0 || static_cast<int64_t>(a) >= q_) throw Error(ErrorKind::ZeroInput, "discrete log of 0");
  return log_[a];
}

FqElem FqField::exp(int64_t k) const { return exp_[nt::mod(k, q_ - 1)]; }

FqElem FqField::norm_to_subfield(FqElem a, int d) const {
  if (d < 1 || m_ % d != 0) throw Error(ErrorKind::BadSubfield, std::to_string(d) + " does not divide " + std::to_string(m_));
  if (a == 0) return 0;
  const int64_t qd = nt::ipow(p_, d);
  return pow(a, (q_ - 1) / (qd - 1));
}

std::vector<int64_t> FqField::digits(FqElem a) const {
  std::vector<int64_t> d(m_);
  int64_t x = a;
  for (int i = 0; i < m_; ++i, x /= p_) d[i] = x % p_;
  return d;
}

FqElem FqField::from_digits(std::span<const int64_t> d) const {
  if (static_cast<int>(d.size()) != m_) throw Error(ErrorKind::SizeMismatch, "digit vector must have length m");
  int64_t code = 0;
  for (int i = m_ - 1; i >= 0; --i) code = code * p_ + nt::mod(d[i], p_);
  return static_cast<FqElem>(code);
}

}  // namespace dwb
