#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dworkbench/cyclo.hpp"
#include "dworkbench/ff.hpp"
#include "dworkbench/weights.hpp"

namespace dwb {

/// Y_t : sum X_i^N = N t prod X_i in P^{N-1} over a prime field q = 1 mod N.
struct DworkFiber {
  int N = 3;
  FieldPtr field;
  FqElem t = 0;

  bool smooth() const;      // t^N != 1
  bool admissible() const;  // smooth and t != 0
};

/// (zeta_1, ..., zeta_N) in mu_N^N with product 1, as exponents with e_0 = 0.
struct GroupElement {
  int N = 3;
  std::vector<int> e;

  static GroupElement canonical(int N, std::vector<int> exps);
  /// v(g) exponent: sum v_i e_i mod N.
  int pair(const WeightVector& v) const;
};

struct EigenTrace {
  WeightVector v;
  FqElem t = 0;
  CycloElem value;
  CycloElem torus;
  CycloElem hyperplane;  // sum_{j<N-1} q^j when [v] = [0], else 0
  std::map<std::string, CycloElem> strata;
};

/// #Y_t(F_{q^m}).
int64_t count_points(const DworkFiber& fiber, int m = 1, bool parallel = true);

/// #{x in Y_t(F_{q^3}) : g . Frob_q(x) = x}; N = 3 only.
int64_t fix_count_bruteforce(const DworkFiber& fiber, const GroupElement& g);

/// Boundary stratum term for Z (sorted indices) with normalisation index i0 in Z.
/// Returns nullopt when v is not constant on the complement of Z.
std::optional<CycloElem> stratum_term(const FqField& field, const WeightVector& v, const std::vector<int>& Z, int i0);

/// Torus histogram and strata for one v, reused across all t.
class EigentraceEngine {
 public:
  /// bruteforce_torus selects the literal enumeration instead of the DP kernel.
  EigentraceEngine(FieldPtr field, WeightVector v, bool bruteforce_torus = false);
  EigenTrace at(FqElem t) const;
  const WeightVector& weights() const { return v_; }

 private:
  FieldPtr field_;
  WeightVector v_;
  std::vector<int64_t> hist_;
  std::map<std::string, CycloElem> strata_;
  CycloElem strata_sum_;
  CycloElem hyperplane_;
};

EigenTrace eigentrace_charsum(const WeightVector& v, const DworkFiber& fiber);

/// |T| <= rank(v) q^{(N-2)/2} at every embedding, tolerance 1e-6.
bool weil_check(const EigenTrace& trace, int64_t q);
/// T_[-v] = conj(T_[v]); additionally T_[-v] = T_[v] when v is self-dual.
bool duality_check(const WeightVector& v, const DworkFiber& fiber);

/// -(1/3) sum_g vbar(g) Fix(g Frob) + [v = 0](1 + q), the N = 3 Lefschetz oracle.
CycloElem n3_lefschetz_trace(const DworkFiber& fiber, const WeightVector& v);

}  // namespace dwb
