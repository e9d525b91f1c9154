#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dwb {

/// Precomputed data for Q(zeta_M): Phi_M and the reductions of x^j, 0 <= j < M.
struct CycloBasis {
  int modulus = 1;
  int degree = 1;                                 // phi(M)
  std::vector<int64_t> phi_poly;                  // Phi_M, low degree first, monic
  std::vector<std::vector<int64_t>> power_table;  // x^j mod Phi_M for j in [0, M)

  /// Shared, cached basis for Q(zeta_M). Thread safe.
  static std::shared_ptr<const CycloBasis> get(int modulus);
};

/// Cyclotomic polynomial Phi_M by recursive exact division of x^M - 1.
std::vector<int64_t> cyclotomic_polynomial(int modulus);

/// Exact element of Q(zeta_M) in the power basis 1, z, ..., z^{phi(M)-1}.
///
/// Stored as integer numerators over one positive common denominator with
/// gcd(den, numerators) == 1, so equality is coefficientwise. Values are
/// immutable in practice: every operation returns a fresh element.
class CycloElem {
 public:
  CycloElem();  // zero of Q(zeta_1)
  explicit CycloElem(int modulus);

  static CycloElem integer(int modulus, const mpz_class& value);
  static CycloElem rational(int modulus, const mpq_class& value);
  static CycloElem root_of_unity(int modulus, int64_t k);
  /// sum_j counts[j] * zeta_M^j with counts.size() == M.
  static CycloElem from_root_counts(int modulus, std::span<const int64_t> counts);
  /// Build from power-basis coefficients (length phi(M)).
  static CycloElem from_coeffs(int modulus, std::span<const mpq_class> coeffs);

  int modulus() const { return basis_->modulus; }
  int degree() const { return basis_->degree; }
  mpq_class coeff(int i) const;
  std::vector<mpq_class> coeffs() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Coefficients integral, i.e. the element lies in Z[zeta_M].
  bool is_integral() const { return den_ == 1; }
  std::optional<mpq_class> as_rational() const;

  CycloElem operator-() const;
  CycloElem operator+(const CycloElem& rhs) const;
  CycloElem operator-(const CycloElem& rhs) const;
  CycloElem operator*(const CycloElem& rhs) const;
  CycloElem operator/(const CycloElem& rhs) const { return *this * rhs.inverse(); }
  CycloElem& operator+=(const CycloElem& rhs) { return *this = *this + rhs; }
  CycloElem& operator-=(const CycloElem& rhs) { return *this = *this - rhs; }
  CycloElem& operator*=(const CycloElem& rhs) { return *this = *this * rhs; }

  CycloElem scaled(const mpq_class& factor) const;
  CycloElem pow(int64_t exponent) const;

  /// Throws Error(DivisionByZero) on zero.
  CycloElem inverse() const;
  /// The automorphism zeta_M -> zeta_M^{-1}.
  CycloElem conjugate() const { return galois(-1); }
  /// The automorphism zeta_M -> zeta_M^e, gcd(e, M) == 1.
  CycloElem galois(int64_t e) const;
  /// Value-preserving inclusion into Q(zeta_{M'}); M must divide M'.
  CycloElem coerce(int new_modulus) const;

  /// Evaluate at zeta_M -> exp(2 pi i e / M). Computed in long double;
  /// precision_bits above the long double mantissa is rejected.
  std::complex<double> embed_complex(int64_t e = 1, int precision_bits = 53) const;
  /// max over all complex embeddings of |value|^2.
  double max_abs2() const;

  bool operator==(const CycloElem& rhs) const;
  bool operator!=(const CycloElem& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  CycloElem(std::shared_ptr<const CycloBasis> basis, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  void require_same_field(const CycloElem& rhs) const;

  std::shared_ptr<const CycloBasis> basis_;
  std::vector<mpz_class> num_;
  mpz_class den_{1};
};

/// Lift both operands to Q(zeta_lcm) so they can be combined.
int common_modulus(const CycloElem& a, const CycloElem& b);

}  // namespace dwb
