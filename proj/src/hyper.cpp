#include "dworkbench/hyper.hpp"

#include <numeric>

#include "dworkbench/error.hpp"
#include "dworkbench/kernels.hpp"
#include "dworkbench/numtheory.hpp"

namespace dwb {

void HyperSpec::validate() const {
  if (!field) throw Error(ErrorKind::BadParams, "hyper spec has no field");
  if (field->m() != 1) throw Error(ErrorKind::BadParams, "hyper spec base field must be prime");
  if (chi.empty() || chi.size() != rho.size()) throw Error(ErrorKind::SizeMismatch, "need |S_chi| = |S_rho| >= 1");
  if ((field->q() - 1) % N != 0) throw Error(ErrorKind::BadN, "q must be 1 mod N");
  if (psi.is_trivial()) throw Error(ErrorKind::TrivialAdditive, "psi must be nontrivial");
  for (const auto& c : chi)
    if (c.order != N) throw Error(ErrorKind::ModulusMismatch, "characters must have order N");
  for (const auto& c : rho)
    if (c.order != N) throw Error(ErrorKind::ModulusMismatch, "characters must have order N");
}

HyperSpec HyperSpec::from_multisets(FieldPtr field, const CharMultiset& s_chi, const CharMultiset& s_rho, AddChar psi) {
  HyperSpec spec;
  spec.field = std::move(field);
  spec.N = s_chi.N;
  spec.psi = psi;
  for (int a : s_chi.elems) spec.chi.push_back({s_chi.N, a});
  for (int b : s_rho.elems) spec.rho.push_back({s_rho.N, b});
  spec.validate();
  return spec;
}

const CycloElem& TraceTable::at(FqElem t) const {
  if (!has(t)) throw Error(ErrorKind::BadT, "no trace value stored at t=" + std::to_string(t));
  return *values[t];
}

FieldPtr extension_field(const HyperSpec& spec, int m) {
  if (m == 1) return spec.field;
  return FqField::get(spec.field->p(), m, 0);
}

CycloElem trad_trace_naive(const HyperSpec& spec, FqElem t, int m, bool parallel) {
  spec.validate();
  const auto E = extension_field(spec, m);
  const RootSum r = parallel ? kernels::trad_trace_naive_parallel(*E, spec.chi, spec.rho, spec.psi, t)
                             : kernels::trad_trace_naive_serial(*E, spec.chi, spec.rho, spec.psi, t);
  return r.to_cyclo();
}

std::vector<RootSum> rank1_table(const FqField& E, MultChar chi, MultChar rho, AddChar psi) {
  const int N = chi.order;
  const int64_t p = E.p(), L = E.q() - 1;
  const int M = static_cast<int>(N * p);
  const int64_t cF = E.norm_log_factor() % N;
  const int64_t a = nt::mod(chi.exp, N) * cF % N;
  const int64_t b = nt::mod(-rho.exp, N) * cF % N;
  std::vector<int32_t> trc(L);
  for (int64_t e = 0; e < L; ++e) trc[e] = static_cast<int32_t>(addchar_index(E, psi, E.exp(e)));
  std::vector<RootSum> table(L);
#pragma omp parallel for schedule(static)
  for (int64_t e = 0; e < L; ++e) {
    const FqElem um1 = E.sub(E.exp(e), 1);
    const int64_t lu = um1 == 0 ? -1 : E.dlog(um1);
    RootSum acc(M);
    for (int64_t ly = 0; ly < L; ++ly) {
      const int64_t ps = lu < 0 ? 0 : trc[(lu + ly) % L];
      const int64_t cs = (a * ((e + ly) % N) + b * (ly % N)) % N;
      acc.c[(ps * N + cs * p) % M] -= 1;
    }
    table[e] = std::move(acc);
  }
  return table;
}

std::vector<std::vector<RootSum>> rank1_tables(const HyperSpec& spec, int m) {
  spec.validate();
  const auto E = extension_field(spec, m);
  std::vector<std::vector<RootSum>> out;
  for (int i = 0; i < spec.k(); ++i) out.push_back(rank1_table(*E, spec.chi[i], spec.rho[i], spec.psi));
  return out;
}

namespace {

std::vector<RootSum> iterate_conv(std::vector<std::vector<RootSum>> tables, std::span<const size_t> order, int sign,
                                  bool parallel) {
  std::vector<size_t> ord(tables.size());
  std::iota(ord.begin(), ord.end(), 0);
  if (!order.empty()) {
    if (order.size() != tables.size()) throw Error(ErrorKind::SizeMismatch, "factor order has wrong length");
    ord.assign(order.begin(), order.end());
  }
  std::vector<RootSum> cur = tables[ord[0]];
  for (size_t i = 1; i < ord.size(); ++i)
    cur = parallel ? kernels::convolve_parallel(cur, tables[ord[i]], sign)
                   : kernels::convolve_serial(cur, tables[ord[i]], sign);
  return cur;
}

TraceTable table_from_logs(FieldPtr E, int modulus, const std::vector<CycloElem>& by_log) {
  TraceTable out{E, modulus, std::vector<std::optional<CycloElem>>(E->q())};
  for (int64_t e = 0; e < E->q() - 1; ++e) {
    const FqElem u = E->exp(e);
    if (u == 1) continue;
    out.values[u] = by_log[e];
  }
  return out;
}

}  // namespace

TraceTable trad_trace_conv(const HyperSpec& spec, int m, int sign, std::span<const size_t> order, bool parallel) {
  const auto E = extension_field(spec, m);
  const auto conv = iterate_conv(rank1_tables(spec, m), order, sign, parallel);
  std::vector<CycloElem> by_log;
  by_log.reserve(conv.size());
  for (const auto& r : conv) by_log.push_back(r.to_cyclo());
  return table_from_logs(E, static_cast<int>(spec.N * spec.field->p()), by_log);
}

CycloElem trad_trace_conv_at(const HyperSpec& spec, FqElem t, int m, int sign) {
  const auto E = extension_field(spec, m);
  if (t == 0 || t == 1) throw Error(ErrorKind::BadT, "t must avoid 0 and 1");
  const long double L = static_cast<long double>(E->q() - 1);
  const long double M = static_cast<long double>(spec.N * spec.field->p());
  if (spec.k() > 2 && L * L * M * M * (spec.k() - 2) > 2e11L)
    throw Error(ErrorKind::Infeasible, "extension-field convolution exceeds the cost budget");
  auto tables = rank1_tables(spec, m);
  if (spec.k() == 1) return tables[0][E->dlog(t)].to_cyclo();
  std::vector<RootSum> cur = tables[0];
  for (int i = 1; i + 1 < spec.k(); ++i) cur = kernels::convolve_parallel(cur, tables[i], sign);
  return kernels::convolve_at(cur, tables.back(), sign, E->dlog(t)).to_cyclo();
}

int adjudicate_conv_sign(const HyperSpec& spec, FqElem t) {
  const CycloElem naive = trad_trace_naive(spec, t);
  if (trad_trace_conv_at(spec, t, 1, -1) == naive) return -1;
  if (trad_trace_conv_at(spec, t, 1, +1) == naive) return +1;
  return 0;
}

std::vector<RootSum> canonical_rank1_numerators(const HyperSpec& spec, size_t i) {
  const auto& F = *spec.field;
  const int N = spec.N;
  const MultChar chi = spec.chi.at(i);
  const MultChar ratio = spec.rho.at(i) / chi;
  std::vector<RootSum> table(F.q() - 1, RootSum(N));
  for (int64_t e = 0; e < F.q() - 1; ++e) {
    const FqElem u = F.exp(e);
    const FqElem one_minus = F.sub(1, u);
    if (one_minus == 0) continue;  // extension by zero at 1
    table[e].add(char_index(F, chi, u) + char_index(F, ratio, one_minus));
  }
  return table;
}

TraceTable canonical_trace(const HyperSpec& spec, CanonicalPath path, int sign) {
  spec.validate();
  const auto& F = *spec.field;
  if (path == CanonicalPath::ConvOfCanonical) {
    std::vector<std::vector<RootSum>> nums;
    CycloElem denom = CycloElem::integer(spec.N, 1);
    for (int i = 0; i < spec.k(); ++i) {
      nums.push_back(canonical_rank1_numerators(spec, i));
      denom *= grossen_value(F, spec.chi[i], spec.rho[i]).coerce(spec.N);
    }
    const CycloElem inv = denom.inverse();
    const auto conv = iterate_conv(std::move(nums), {}, sign, true);
    std::vector<CycloElem> by_log;
    for (const auto& r : conv) by_log.push_back(r.to_cyclo() * inv);
    return table_from_logs(spec.field, spec.N, by_log);
  }
  TraceTable trad = trad_trace_conv(spec, 1, sign);
  const int M = static_cast<int>(spec.N * F.p());
  const CycloElem inv = phi_value(F, spec.chi, spec.rho, spec.psi).coerce(M).inverse();
  for (auto& v : trad.values)
    if (v) *v = *v * inv;
  return trad;
}

PathComparison compare_canonical_paths(const HyperSpec& spec) {
  const TraceTable a = canonical_trace(spec, CanonicalPath::ConvOfCanonical);
  const TraceTable b = canonical_trace(spec, CanonicalPath::TradOverPhi);
  PathComparison out;
  out.agree = true;
  for (FqElem t = 2; t < spec.field->q(); ++t) {
    const CycloElem x = a.at(t).coerce(b.modulus);
    const CycloElem& y = b.at(t);
    ++out.points;
    if (x.is_zero() || y.is_zero()) {
      if (!(x.is_zero() && y.is_zero())) out.agree = false;
      continue;
    }
    int s = 0;
    if (y == x) s = 1;
    else if (y == -x) s = -1;
    if (s == 0 || (out.global_sign != 0 && s != out.global_sign)) out.agree = false;
    if (out.global_sign == 0) out.global_sign = s;
  }
  if (out.global_sign == 0) out.agree = false;
  return out;
}

CycloElem det_trad(const HyperSpec& spec, FqElem t) {
  spec.validate();
  const auto& F = *spec.field;
  if (t == 0 || t == 1) throw Error(ErrorKind::BadT, "t must avoid 0 and 1");
  const int k = spec.k();
  const int M = static_cast<int>(spec.N * F.p());
  const AddChar psibar = conjugate(F, spec.psi);
  const FqElem sgn = (k - 1) % 2 == 0 ? 1 : F.neg(1);
  CycloElem A = CycloElem::integer(M, 1);
  MultChar chi_prod{spec.N, 0}, rho_prod{spec.N, 0};
  for (const auto& c : spec.chi) {
    A *= char_value(F, c, sgn).coerce(M);
    chi_prod = chi_prod * c;
  }
  for (const auto& r : spec.rho) rho_prod = rho_prod * r;
  mpz_class qpow = 1;
  for (int i = 0; i < k * (k - 1) / 2; ++i) qpow *= static_cast<long>(F.q());
  A = A.scaled(mpq_class(qpow));
  for (const auto& c : spec.chi)
    for (const auto& r : spec.rho) A *= (-gauss_sum(F, psibar, c / r)).coerce(M);
  CycloElem out = A * char_value(F, chi_prod, t).coerce(M);
  if (!(chi_prod == rho_prod)) out *= kummer_trace(F, rho_prod / chi_prod, t, KummerFlavor::OneMinusX).coerce(M);
  return out;
}

CycloElem det_via_newton(const HyperSpec& spec, FqElem t) {
  spec.validate();
  const int k = spec.k();
  if (k > 3) throw Error(ErrorKind::Infeasible, "det_via_newton supports k <= 3");
  const int M = static_cast<int>(spec.N * spec.field->p());
  std::vector<CycloElem> power_sums(k + 1);
  for (int m = 1; m <= k; ++m) power_sums[m] = trad_trace_conv_at(spec, t, m).coerce(M);
  std::vector<CycloElem> e(k + 1);
  e[0] = CycloElem::integer(M, 1);
  for (int j = 1; j <= k; ++j) {
    CycloElem acc(M);
    for (int i = 1; i <= j; ++i) {
      const CycloElem term = e[j - i] * power_sums[i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    e[j] = acc.scaled(mpq_class(1, j));
  }
  return e[k];
}

CycloElem lambda_can(const FqField& F, MultChar chi, AddChar psi, int n) {
  const int M = static_cast<int>(chi.order * F.p());
  const AddChar psibar = conjugate(F, psi);
  const FqElem sgn = (n - 1) % 2 == 0 ? 1 : F.neg(1);
  const MultChar trivial{chi.order, 0};
  const CycloElem num = char_value(F, chi, sgn).coerce(M) * (-gauss_sum(F, psibar, chi));
  const CycloElem den = (-gauss_sum(F, psi, chi)) * (-gauss_sum(F, psibar, trivial));
  return num / den;
}

DetHcanRecord verify_det_hcan(int n, int N, int64_t q) {
  const auto v = build_v(n, N);
  const auto [s_chi, s_rho] = hyper_data(v);
  const auto field = FqField::get(q, 1);
  const HyperSpec spec = HyperSpec::from_multisets(field, s_chi, s_rho);
  const int M = static_cast<int>(N * q);

  DetHcanRecord rec;
  rec.n = n;
  rec.N = N;
  rec.q = q;
  // distinguished point: an N-th power avoiding 1
  for (int64_t base = 2; base < q; ++base) {
    const FqElem t0 = field->pow(field->from_int(base), N);
    if (t0 != 0 && t0 != 1) {
      rec.t0 = t0;
      break;
    }
  }
  if (rec.t0 == 0) throw Error(ErrorKind::BadParams, "no admissible distinguished point");

  rec.lhs = det_trad(spec, rec.t0) / phi_value(*field, spec.chi, spec.rho, spec.psi).coerce(M).pow(n);
  CycloElem lam = CycloElem::integer(M, 1);
  for (const auto& c : spec.chi) lam *= lambda_can(*field, c, spec.psi, n).coerce(M).pow(n);
  rec.exponents = {int64_t{n} * (n - 1) / 2, int64_t{n} * (n - 1)};
  for (int64_t e : rec.exponents) {
    mpz_class qe = 1;
    for (int64_t i = 0; i < e; ++i) qe *= static_cast<long>(q);
    rec.matches.push_back(lam.scaled(mpq_class(qe)) == rec.lhs);
  }
  if (rec.matches[0] && rec.matches[1]) rec.verdict = "both";
  else if (rec.matches[0]) rec.verdict = "half";
  else if (rec.matches[1]) rec.verdict = "full";
  else rec.verdict = "none";
  return rec;
}

}  // namespace dwb
