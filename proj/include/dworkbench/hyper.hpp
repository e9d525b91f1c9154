#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dworkbench/chars.hpp"
#include "dworkbench/cyclo.hpp"
#include "dworkbench/ff.hpp"
#include "dworkbench/root_sum.hpp"
#include "dworkbench/weights.hpp"

namespace dwb {

/// Data of H(psi; S_chi, S_rho) over a prime field q = 1 mod N.
struct HyperSpec {
  FieldPtr field;
  int N = 1;
  AddChar psi{1};
  std::vector<MultChar> chi;
  std::vector<MultChar> rho;

  int k() const { return static_cast<int>(chi.size()); }
  void validate() const;
  /// Spec from additive-notation multisets (residues mod N).
  static HyperSpec from_multisets(FieldPtr field, const CharMultiset& s_chi, const CharMultiset& s_rho,
                                  AddChar psi = {1});
};

/// Exact trace values indexed by field code; absent at 0, 1 and wherever undefined.
struct TraceTable {
  FieldPtr field;
  int modulus = 1;
  std::vector<std::optional<CycloElem>> values;

  bool has(FqElem t) const { return t < values.size() && values[t].has_value(); }
  const CycloElem& at(FqElem t) const;
};

struct FloatTable {
  FieldPtr field;
  std::vector<std::complex<double>> values;
  std::vector<char> defined;
};

/// F_{q^m} used for traces over extensions (seed 0 modulus).
FieldPtr extension_field(const HyperSpec& spec, int m);

CycloElem trad_trace_naive(const HyperSpec& spec, FqElem t, int m = 1, bool parallel = true);

/// Rank-1 traditional trace f(u) = -sum_y psi(y(u - 1)) chi(uy) rhobar(y) over E^x,
/// indexed by discrete log of u. The value at u = 1 is the actual sum, not zero.
std::vector<RootSum> rank1_table(const FqField& E, MultChar chi, MultChar rho, AddChar psi);
std::vector<std::vector<RootSum>> rank1_tables(const HyperSpec& spec, int m = 1);

/// Iterated pairwise convolution (per-step sign) of the rank-1 tables, in the
/// given factor order (identity when empty).
TraceTable trad_trace_conv(const HyperSpec& spec, int m = 1, int sign = -1, std::span<const size_t> order = {},
                           bool parallel = true);
/// Single value of the convolution at t over E = F_{q^m}.
CycloElem trad_trace_conv_at(const HyperSpec& spec, FqElem t, int m, int sign = -1);
/// Sign sigma for which the convolution reproduces the naive trace at t (0 if neither).
int adjudicate_conv_sign(const HyperSpec& spec, FqElem t);

/// Float table via FFT over the cyclic group F_q^x, using closed-form rank-1 factors.
FloatTable mellin_fast(const HyperSpec& spec, int sign = -1);

enum class CanonicalPath { ConvOfCanonical, TradOverPhi };
/// Path ConvOfCanonical lives in Q(zeta_N); TradOverPhi in Q(zeta_{Np}).
TraceTable canonical_trace(const HyperSpec& spec, CanonicalPath path, int sign = -1);
/// Rank-1 canonical numerator chi(t) (rho/chi)(1 - t), extended by zero, as root sums mod N.
std::vector<RootSum> canonical_rank1_numerators(const HyperSpec& spec, size_t i);

struct PathComparison {
  bool agree = false;
  int global_sign = 0;  // s with path2 = s * path1
  int points = 0;
};
PathComparison compare_canonical_paths(const HyperSpec& spec);

CycloElem det_trad(const HyperSpec& spec, FqElem t);
/// Determinant of Frobenius at t from traces over F_{q^m}, m <= k, by Newton's identities.
CycloElem det_via_newton(const HyperSpec& spec, FqElem t);

/// lambda^can({chi}, {1}) at Frobenius for an n-fold product.
CycloElem lambda_can(const FqField& field, MultChar chi, AddChar psi, int n);

struct DetHcanRecord {
  int n = 0, N = 0;
  int64_t q = 0;
  FqElem t0 = 0;
  CycloElem lhs;
  std::vector<int64_t> exponents;  // n(n-1)/2, n(n-1)
  std::vector<bool> matches;
  std::string verdict;  // "half" | "full" | "both" | "none"
};
DetHcanRecord verify_det_hcan(int n, int N, int64_t q);

}  // namespace dwb
