#include "dworkbench/cyclo.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "dworkbench/error.hpp"
#include "dworkbench/numtheory.hpp"

namespace dwb {

namespace {

using Poly = std::vector<int64_t>;

Poly exact_divide(Poly num, const Poly& den) {
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  Poly quot(nn - dn + 1, 0);
  for (int i = nn - dn; i >= 0; --i) {
    const int64_t c = num[i + dn];  // den is monic
    quot[i] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[i + j] -= c * den[j];
  }
  for (int i = 0; i < dn; ++i)
    if (num[i] != 0) throw Error(ErrorKind::BadParams, "cyclotomic division is not exact");
  return quot;
}

void set_int128(mpz_class& out, __int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  const uint64_t hi = static_cast<uint64_t>(u >> 64);
  const uint64_t lo = static_cast<uint64_t>(u);
  out = static_cast<unsigned long>(hi);
  out <<= 64;
  out += static_cast<unsigned long>(lo);
  if (neg) out = -out;
}

void addmul_si(mpz_class& acc, const mpz_class& x, int64_t c) {
  if (c > 0)
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(c));
  else if (c < 0)
    mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-c));
}

long double to_long_double(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

}  // namespace

std::vector<int64_t> cyclotomic_polynomial(int modulus) {
  if (modulus < 1) throw Error(ErrorKind::BadParams, "cyclotomic modulus must be >= 1");
  return CycloBasis::get(modulus)->phi_poly;
}

std::shared_ptr<const CycloBasis> CycloBasis::get(int modulus) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CycloBasis>> cache;
  if (modulus < 1) throw Error(ErrorKind::BadParams, "cyclotomic modulus must be >= 1");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(modulus); it != cache.end()) return it->second;
  }

  // Recursion happens outside the lock.
  Poly poly(modulus + 1, 0);
  poly[0] = -1;
  poly[modulus] = 1;
  for (int64_t d : nt::divisors(modulus)) {
    if (d == modulus) continue;
    poly = exact_divide(std::move(poly), get(static_cast<int>(d))->phi_poly);
  }

  auto basis = std::make_shared<CycloBasis>();
  basis->modulus = modulus;
  basis->degree = static_cast<int>(poly.size()) - 1;
  basis->phi_poly = poly;
  const int deg = basis->degree;
  basis->power_table.assign(modulus, std::vector<int64_t>(deg, 0));
  std::vector<int64_t> cur(deg + 1, 0);
  cur[0] = 1;
  for (int j = 0; j < modulus; ++j) {
    if (j > 0) {
      for (int i = deg; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      const int64_t top = cur[deg];
      if (top != 0) {
        for (int i = 0; i <= deg; ++i) cur[i] -= top * poly[i];
      }
    }
    std::copy(cur.begin(), cur.begin() + deg, basis->power_table[j].begin());
  }

  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(modulus, std::move(basis));
  return it->second;
}

CycloElem::CycloElem() : CycloElem(1) {}

CycloElem::CycloElem(int modulus) : basis_(CycloBasis::get(modulus)), num_(basis_->degree), den_(1) {}

CycloElem::CycloElem(std::shared_ptr<const CycloBasis> basis, std::vector<mpz_class> num, mpz_class den)
    : basis_(std::move(basis)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycloElem CycloElem::integer(int modulus, const mpz_class& value) {
  CycloElem out(modulus);
  out.num_[0] = value;
  return out;
}

CycloElem CycloElem::rational(int modulus, const mpq_class& value) {
  CycloElem out(modulus);
  mpq_class v = value;
  v.canonicalize();
  out.num_[0] = v.get_num();
  out.den_ = v.get_den();
  return out;
}

CycloElem CycloElem::root_of_unity(int modulus, int64_t k) {
  auto basis = CycloBasis::get(modulus);
  const auto& row = basis->power_table[nt::mod(k, modulus)];
  std::vector<mpz_class> num(basis->degree);
  for (int i = 0; i < basis->degree; ++i) num[i] = static_cast<long>(row[i]);
  return CycloElem(basis, std::move(num), 1);
}

CycloElem CycloElem::from_root_counts(int modulus, std::span<const int64_t> counts) {
  if (static_cast<int>(counts.size()) != modulus)
    throw Error(ErrorKind::SizeMismatch, "root count vector must have length M");
  auto basis = CycloBasis::get(modulus);
  const int deg = basis->degree;
  std::vector<__int128> acc(deg, 0);
  for (int j = 0; j < modulus; ++j) {
    if (counts[j] == 0) continue;
    const auto& row = basis->power_table[j];
    for (int i = 0; i < deg; ++i)
      if (row[i] != 0) acc[i] += static_cast<__int128>(counts[j]) * row[i];
  }
  std::vector<mpz_class> num(deg);
  for (int i = 0; i < deg; ++i) set_int128(num[i], acc[i]);
  return CycloElem(basis, std::move(num), 1);
}

CycloElem CycloElem::from_coeffs(int modulus, std::span<const mpq_class> coeffs) {
  auto basis = CycloBasis::get(modulus);
  if (static_cast<int>(coeffs.size()) != basis->degree)
    throw Error(ErrorKind::SizeMismatch, "coefficient vector must have length phi(M)");
  mpz_class den = 1;
  for (const auto& c : coeffs) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> num(basis->degree);
  for (int i = 0; i < basis->degree; ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  return CycloElem(basis, std::move(num), den);
}

void CycloElem::normalize() {
  bool all_zero = true;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (c != 0) {
      all_zero = false;
      if (g != 1) g = gcd(g, c);
    }
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (den_ < 0) g = -g;
  if (g != 1) {
    for (auto& c : num_)
      if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycloElem::require_same_field(const CycloElem& rhs) const {
  if (modulus() != rhs.modulus())
    throw Error(ErrorKind::ModulusMismatch, "operands live in Q(zeta_" + std::to_string(modulus()) +
                                                ") and Q(zeta_" + std::to_string(rhs.modulus()) + ")");
}

mpq_class CycloElem::coeff(int i) const {
  mpq_class out(num_.at(i), den_);
  out.canonicalize();
  return out;
}

std::vector<mpq_class> CycloElem::coeffs() const {
  std::vector<mpq_class> out;
  out.reserve(num_.size());
  for (int i = 0; i < degree(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycloElem::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

std::optional<mpq_class> CycloElem::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeff(0);
}

CycloElem CycloElem::operator-() const {
  std::vector<mpz_class> num(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) num[i] = -num_[i];
  return CycloElem(basis_, std::move(num), den_);
}

CycloElem CycloElem::operator+(const CycloElem& rhs) const {
  require_same_field(rhs);
  std::vector<mpz_class> num(num_.size());
  if (den_ == rhs.den_) {
    for (size_t i = 0; i < num_.size(); ++i) num[i] = num_[i] + rhs.num_[i];
    return CycloElem(basis_, std::move(num), den_);
  }
  const mpz_class den = lcm(den_, rhs.den_);
  const mpz_class fa = den / den_;
  const mpz_class fb = den / rhs.den_;
  for (size_t i = 0; i < num_.size(); ++i) num[i] = num_[i] * fa + rhs.num_[i] * fb;
  return CycloElem(basis_, std::move(num), den);
}

CycloElem CycloElem::operator-(const CycloElem& rhs) const { return *this + (-rhs); }

CycloElem CycloElem::operator*(const CycloElem& rhs) const {
  require_same_field(rhs);
  if (is_rational()) return rhs.scaled(coeff(0));
  if (rhs.is_rational()) return scaled(rhs.coeff(0));
  const int deg = degree();
  const int M = modulus();
  std::vector<mpz_class> prod(2 * deg - 1);
  for (int i = 0; i < deg; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (rhs.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
    }
  }
  std::vector<mpz_class> num(deg);
  for (int i = 0; i < deg; ++i) num[i] = std::move(prod[i]);
  for (int j = deg; j < 2 * deg - 1; ++j) {
    if (prod[j] == 0) continue;
    const auto& row = basis_->power_table[j % M];
    for (int i = 0; i < deg; ++i) addmul_si(num[i], prod[j], row[i]);
  }
  return CycloElem(basis_, std::move(num), den_ * rhs.den_);
}

CycloElem CycloElem::scaled(const mpq_class& factor) const {
  mpq_class f = factor;
  f.canonicalize();
  std::vector<mpz_class> num(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) num[i] = num_[i] * f.get_num();
  mpz_class den = den_ * f.get_den();
  if (den < 0) {
    den = -den;
    for (auto& c : num) c = -c;
  }
  return CycloElem(basis_, std::move(num), den);
}

CycloElem CycloElem::pow(int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycloElem result = integer(modulus(), 1);
  CycloElem base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

CycloElem CycloElem::galois(int64_t e) const {
  const int M = modulus();
  const int64_t ee = nt::mod(e, M);
  if (nt::gcd(ee, M) != 1 && M > 1)
    throw Error(ErrorKind::BadParams, "galois exponent must be coprime to M");
  const int deg = degree();
  std::vector<mpz_class> num(deg);
  for (int i = 0; i < deg; ++i) {
    if (num_[i] == 0) continue;
    const auto& row = basis_->power_table[(static_cast<int64_t>(i) * ee) % M];
    for (int k = 0; k < deg; ++k) addmul_si(num[k], num_[i], row[k]);
  }
  return CycloElem(basis_, std::move(num), den_);
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(modulus()) + ")");
  if (is_rational()) return rational(modulus(), 1 / coeff(0));

  // Relative norms along cyclic steps of prime order: after each step x is fixed
  // by one more automorphism; when x is rational, cofactor * this == x.
  const int M = modulus();
  CycloElem x = *this;
  CycloElem cofactor = integer(M, 1);
  while (!x.is_rational()) {
    int64_t e = 2;
    for (; e < M; ++e) {
      if (nt::gcd(e, M) != 1) continue;
      if (x.galois(e) != x) break;
    }
    const int64_t order = nt::mult_order(e, M);
    int64_t orbit = order;
    for (int64_t d : nt::divisors(order)) {
      if (d == order) break;
      if (x.galois(nt::powmod(e, d, M)) == x) {
        orbit = d;
        break;
      }
    }
    const int64_t ell = nt::prime_factors(orbit).front();
    const int64_t step = nt::powmod(e, orbit / ell, M);
    CycloElem y = integer(M, 1);
    int64_t s = step;
    for (int64_t j = 1; j < ell; ++j) {
      y = y * x.galois(s);
      s = s * step % M;
    }
    x = x * y;
    cofactor = cofactor * y;
  }
  return cofactor.scaled(1 / x.coeff(0));
}

CycloElem CycloElem::coerce(int new_modulus) const {
  const int M = modulus();
  if (new_modulus < 1 || new_modulus % M != 0)
    throw Error(ErrorKind::NotAMultiple, std::to_string(new_modulus) + " is not a multiple of " + std::to_string(M));
  if (new_modulus == M) return *this;
  auto basis = CycloBasis::get(new_modulus);
  const int step = new_modulus / M;
  std::vector<mpz_class> num(basis->degree);
  for (int i = 0; i < degree(); ++i) {
    if (num_[i] == 0) continue;
    const auto& row = basis->power_table[(static_cast<int64_t>(i) * step) % new_modulus];
    for (int k = 0; k < basis->degree; ++k) addmul_si(num[k], num_[i], row[k]);
  }
  return CycloElem(basis, std::move(num), den_);
}

std::complex<double> CycloElem::embed_complex(int64_t e, int precision_bits) const {
  if (precision_bits > LDBL_MANT_DIG)
    throw Error(ErrorKind::BadParams, "requested precision exceeds long double mantissa");
  const int M = modulus();
  if (M > 1 && nt::gcd(nt::mod(e, M), M) != 1) throw Error(ErrorKind::BadParams, "embedding exponent must be coprime to M");
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double re = 0, im = 0;
  for (int i = 0; i < degree(); ++i) {
    if (num_[i] == 0) continue;
    const long double c = to_long_double(num_[i]);
    const long double angle = two_pi * static_cast<long double>(nt::mod(static_cast<int64_t>(i) * e, M)) / M;
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  const long double d = to_long_double(den_);
  return {static_cast<double>(re / d), static_cast<double>(im / d)};
}

double CycloElem::max_abs2() const {
  const int M = modulus();
  double best = 0;
  for (int64_t e = 1; e <= std::max(1, M); ++e) {
    if (M > 1 && nt::gcd(e, M) != 1) continue;
    best = std::max(best, std::norm(embed_complex(e)));
    if (M == 1) break;
  }
  return best;
}

bool CycloElem::operator==(const CycloElem& rhs) const {
  return modulus() == rhs.modulus() && den_ == rhs.den_ && num_ == rhs.num_;
}

std::string CycloElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < degree(); ++i) {
    if (num_[i] == 0) continue;
    const mpq_class c = coeff(i);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const mpq_class a = abs(c);
    if (i == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << modulus();
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

int common_modulus(const CycloElem& a, const CycloElem& b) {
  return static_cast<int>(nt::lcm(a.modulus(), b.modulus()));
}

}  // namespace dwb
