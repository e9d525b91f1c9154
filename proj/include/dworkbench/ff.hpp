#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace dwb {

/// Element of F_q as an integer code: base-p digits of the polynomial
/// representative, constant term lowest. Codes below p are the prime field.
using FqElem = uint32_t;

/// F_q with q = p^m, generator, full exp/log tables and a trace table.
///
/// Immutable once built; get() hands out shared cached instances.
class FqField {
 public:
  static constexpr int64_t kTableBound = int64_t{1} << 24;

  /// Build (or fetch) F_{p^m}. The seed drives the random modulus search for m > 1.
  static std::shared_ptr<const FqField> get(int64_t p, int m = 1, uint64_t seed = 0);

  int64_t p() const { return p_; }
  int m() const { return m_; }
  int64_t q() const { return q_; }
  uint64_t seed() const { return seed_; }
  /// Monic irreducible modulus, low degree first (x for m = 1 is not stored: {0, 1}).
  const std::vector<int64_t>& modulus() const { return modulus_; }
  FqElem generator() const { return exp_[1 % (q_ - 1)]; }

  FqElem from_int(int64_t a) const;
  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const {
    if (a == 0 || b == 0) return 0;
    int64_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, int64_t e) const;
  FqElem frobenius(FqElem a) const { return pow(a, p_); }

  /// Discrete log base generator(); throws ZeroInput on 0.
  int64_t dlog(FqElem a) const;
  FqElem exp(int64_t k) const;
  /// Tr_{F_q/F_p}(a) as a residue in [0, p).
  int64_t trace_to_prime(FqElem a) const { return trace_[a]; }
  /// N_{F_q/F_{p^d}}(a) for d | m, returned as an element of this field.
  FqElem norm_to_subfield(FqElem a, int d) const;
  /// Log, in the prime field (base its smallest primitive root), of N_{F_q/F_p}(generator()).
  /// Characters of F_p^x composed with the norm use it: chi(N(g^k)) = chi_p(g_p^{c k}).
  int64_t norm_log_factor() const { return norm_log_factor_; }

  std::vector<int64_t> digits(FqElem a) const;
  FqElem from_digits(std::span<const int64_t> d) const;

  const std::vector<FqElem>& exp_table() const { return exp_; }
  const std::vector<int32_t>& log_table() const { return log_; }  // -1 at 0
  const std::vector<int32_t>& trace_table() const { return trace_; }

  FqField(int64_t p, int m, uint64_t seed);  // use get()

 private:
  int64_t p_;
  int m_;
  int64_t q_;
  uint64_t seed_;
  std::vector<int64_t> modulus_;
  std::vector<FqElem> exp_;
  std::vector<int32_t> log_;
  std::vector<int32_t> trace_;
  int64_t norm_log_factor_ = 1;
};

using FieldPtr = std::shared_ptr<const FqField>;

/// Ben-Or irreducibility test for a monic polynomial over F_p (low degree first).
bool is_irreducible(std::span<const int64_t> poly, int64_t p);

}  // namespace dwb
