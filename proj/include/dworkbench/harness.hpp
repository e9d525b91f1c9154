#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dworkbench/config.hpp"
#include "dworkbench/cyclo.hpp"
#include "dworkbench/ff.hpp"
#include "dworkbench/hyper.hpp"
#include "dworkbench/report.hpp"
#include "dworkbench/weights.hpp"

namespace dwb {

/// Conventions shared by every check. Frobenius is geometric: eps_l(Frob) = 1/q.
struct FrobContext {
  int64_t q = 0;
  mpq_class epsilon() const { return mpq_class(1, q); }
};

/// T_v(t) against T_can(t^N) over all admissible t, both orientations.
struct KatzOutcome {
  std::vector<FqElem> ts;
  std::vector<CycloElem> tv;
  std::vector<CycloElem> tcan;
  bool constant_direct = false;
  bool constant_conjugate = false;
  int defined_direct = 0;
  std::optional<CycloElem> lambda_direct;
  std::optional<CycloElem> lambda_conjugate;
  std::vector<std::string> skipped;
};
KatzOutcome katz_compare(const FieldPtr& field, const WeightVector& v, const TraceTable& can);

struct KatzReport {
  int n = 0, N = 0;
  int64_t q = 0;
  KatzOutcome main;
  KatzOutcome control;  // perturbed v
  // false when t -> t^N has a single value on admissible t: every ratio family is then constant
  bool control_informative = true;
  std::string orientation;  // "direct" | "conjugate" | "none"
  std::optional<CycloElem> lambda;
  bool weight_ok = false;
  bool lambda_integral = false;
  double weight_rel_err = 0;
  bool pass = false;
  Report to_report() const;
};
/// Throws AllRatiosUndefined when T_can vanishes everywhere.
KatzReport katz_check(int n, int N, int64_t q, double tolerance = 1e-6);
/// First v - e_i + e_j (sum stays 0) of the same rank, outside the permutation/translation
/// orbits of v and -v.
WeightVector perturbed(const WeightVector& v);

/// N = 3 oracle over all smooth t != 0 and all three labels; corrupt adds 1 to
/// every charsum value (negative control).
Report validate_n3(int64_t q, bool corrupt = false);
/// |psi_2|^2 = q^{n(N-2)} from an extracted Lambda_v. Throws MissingLambda.
Report psi2_weight_note(int n, int N, int64_t q, const std::optional<CycloElem>& lambda, double tolerance = 1e-6);

// One function per acceptance criterion.
Report check_combinatorics();
Report check_gauss();
Report check_hyper_cross(int n, int N, int64_t q, double tolerance = 1e-6);
Report check_canonical_paths(int n, int N, const std::vector<int64_t>& qs);
Report check_det_trad(int64_t q, uint64_t seed, int count = 6);
Report check_det_hcan();
Report check_n3(const std::vector<int64_t>& qs);
Report check_katz(int n, int N, const std::vector<int64_t>& qs, double tolerance = 1e-6);
Report check_weil(int n, int N, int64_t q, double tolerance = 1e-6);
Report check_signs(const std::vector<int64_t>& ls, uint64_t seed, int count = 100, int dim = 0);
Report check_determinism(const CampaignConfig& cfg);
Report check_stretch(double tolerance = 1e-6);

/// Runs one named check with the campaign parameters.
Report run_check(const std::string& name, const CampaignConfig& cfg);
/// Runs the selected checks, writes <out>/<check>.json (and .csv); 0 pass, 1 failure.
int run_campaign(const CampaignConfig& cfg, std::ostream& log);

}  // namespace dwb
