#include "dworkbench/dwork.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "dworkbench/error.hpp"
#include "dworkbench/kernels.hpp"
#include "dworkbench/numtheory.hpp"
#include "dworkbench/root_sum.hpp"

namespace dwb {

bool DworkFiber::smooth() const { return field->pow(t, N) != 1; }

bool DworkFiber::admissible() const { return t != 0 && smooth(); }

GroupElement GroupElement::canonical(int N, std::vector<int> exps) {
  if (static_cast<int>(exps.size()) != N) throw Error(ErrorKind::SizeMismatch, "group element needs N exponents");
  int64_t sum = 0;
  for (int x : exps) sum += x;
  if (nt::mod(sum, N) != 0) throw Error(ErrorKind::BadParams, "exponents must sum to 0 mod N");
  const int shift = exps.front();
  for (int& x : exps) x = static_cast<int>(nt::mod(x - shift, N));
  return {N, std::move(exps)};
}

int GroupElement::pair(const WeightVector& v) const {
  int64_t s = 0;
  for (int i = 0; i < N; ++i) s += static_cast<int64_t>(v.v[i]) * e[i];
  return static_cast<int>(nt::mod(s, N));
}

int64_t count_points(const DworkFiber& fiber, int m, bool parallel) {
  const auto E = m == 1 ? fiber.field : FqField::get(fiber.field->p(), m * fiber.field->m(), 0);
  return parallel ? kernels::count_points_parallel(*E, fiber.N, fiber.t)
                  : kernels::count_points_serial(*E, fiber.N, fiber.t);
}

int64_t fix_count_bruteforce(const DworkFiber& fiber, const GroupElement& g) {
  if (fiber.N != 3 || g.N != 3) throw Error(ErrorKind::UnsupportedN, "twisted fixed points are enumerated for N = 3 only");
  const auto& F = *fiber.field;
  const int64_t q = F.q();
  const auto E = FqField::get(F.p(), 3 * F.m(), 0);
  const int64_t Q = E->q(), L = Q - 1;

  // zeta_i = g_q^{(q-1)/3 e_i} in F_q, seen inside E
  std::array<int64_t, 3> lz{};
  for (int i = 0; i < 3; ++i) lz[i] = E->dlog(F.exp((q - 1) / 3 * g.e[i]));
  // x_i != 0 contributes the log of zeta_i x_i^q / x_i
  auto twist = [&](int i, int64_t lx) { return (lz[i] + (q - 1) % L * lx) % L; };

  const FqElem three_t = E->mul(E->from_int(3), fiber.t);
  auto on_curve = [&](FqElem a, FqElem b, FqElem c) {
    const FqElem s = E->add(E->add(E->pow(a, 3), E->pow(b, 3)), E->pow(c, 3));
    return s == E->mul(three_t, E->mul(a, E->mul(b, c)));
  };

  int64_t count = 0;
  // chart x_0 = 1
  for (int64_t b = 0; b < Q; ++b) {
    const int64_t tb = b == 0 ? -1 : twist(1, E->dlog(static_cast<FqElem>(b)));
    const int64_t t0 = twist(0, 0);
    if (tb >= 0 && tb != t0) continue;
    for (int64_t c = 0; c < Q; ++c) {
      if (c != 0 && twist(2, E->dlog(static_cast<FqElem>(c))) != t0) continue;
      if (on_curve(1, static_cast<FqElem>(b), static_cast<FqElem>(c))) ++count;
    }
  }
  // chart x_0 = 0, x_1 = 1
  for (int64_t c = 0; c < Q; ++c) {
    if (c != 0 && twist(2, E->dlog(static_cast<FqElem>(c))) != twist(1, 0)) continue;
    if (on_curve(0, 1, static_cast<FqElem>(c))) ++count;
  }
  // (0 : 0 : 1)
  if (on_curve(0, 0, 1)) ++count;
  return count;
}

std::optional<CycloElem> stratum_term(const FqField& F, const WeightVector& v, const std::vector<int>& Z, int i0) {
  const int N = v.N;
  if (Z.size() < 2 || static_cast<int>(Z.size()) > N - 1) throw Error(ErrorKind::BadParams, "stratum size out of range");
  if (std::find(Z.begin(), Z.end(), i0) == Z.end()) throw Error(ErrorKind::BadParams, "i0 must lie in Z");
  std::vector<char> inZ(N, 0);
  for (int i : Z) inZ[i] = 1;
  int a = -1;
  for (int i = 0; i < N; ++i) {
    if (inZ[i]) continue;
    const int vi = static_cast<int>(nt::mod(v.v[i], N));
    if (a < 0) a = vi;
    else if (vi != a) return std::nullopt;
  }
  std::vector<int> rest;
  for (int i : Z)
    if (i != i0) rest.push_back(i);

  const int64_t q = F.q(), L = q - 1;
  // DP over (partial sum, weight); u_{i0} = 1 contributes weight 0
  std::vector<int64_t> cur(q * N, 0), next(q * N);
  cur[1 * N + 0] = 1;
  for (size_t j = 0; j + 1 < rest.size(); ++j) {
    const int64_t wi = nt::mod(v.v[rest[j]] - a, N);
    std::fill(next.begin(), next.end(), 0);
    for (int64_t s = 0; s < q; ++s)
      for (int64_t w = 0; w < N; ++w) {
        const int64_t c = cur[s * N + w];
        if (c == 0) continue;
        for (int64_t e = 0; e < L; ++e) {
          const FqElem s2 = F.add(static_cast<FqElem>(s), F.exp(e));
          next[s2 * N + (w + wi * e) % N] += c;
        }
      }
    cur.swap(next);
  }
  const int64_t wl = nt::mod(v.v[rest.back()] - a, N);
  RootSum acc(N);
  for (int64_t s = 0; s < q; ++s) {
    const FqElem last = F.neg(static_cast<FqElem>(s));
    if (last == 0) continue;
    const int64_t el = F.dlog(last);
    for (int64_t w = 0; w < N; ++w)
      if (cur[s * N + w] != 0) acc.add(w + wl * el, -cur[s * N + w]);
  }
  return acc.to_cyclo();
}

EigentraceEngine::EigentraceEngine(FieldPtr field, WeightVector v, bool bruteforce_torus)
    : field_(std::move(field)), v_(std::move(v)) {
  const int N = v_.N;
  if (static_cast<int>(v_.v.size()) != N) throw Error(ErrorKind::SizeMismatch, "weight vector must have length N");
  if (field_->m() != 1) throw Error(ErrorKind::BadParams, "eigentraces are computed over prime fields");
  if ((field_->q() - 1) % N != 0) throw Error(ErrorKind::BadN, "q must be 1 mod N");
  const long double q = static_cast<long double>(field_->q());
  if (q * q * q * N * N > 1e10L) throw Error(ErrorKind::Infeasible, "eigentrace DP exceeds the cost budget");

  hist_ = bruteforce_torus ? kernels::torus_histogram_serial(*field_, N, v_.v)
                           : kernels::torus_histogram_parallel(*field_, N, v_.v);

  strata_sum_ = CycloElem(N);
  for (uint32_t mask = 1; mask < (1u << N); ++mask) {
    const int size = std::popcount(mask);
    if (size < 2 || size > N - 1) continue;
    std::vector<int> Z;
    for (int i = 0; i < N; ++i)
      if (mask >> i & 1) Z.push_back(i);
    auto term = stratum_term(*field_, v_, Z, Z.front());
    if (!term) continue;
    std::string key = "Z";
    for (int i : Z) key += ":" + std::to_string(i);
    strata_sum_ += *term;
    strata_.emplace(std::move(key), std::move(*term));
  }
  hyperplane_ = CycloElem(N);
  if (v_.is_constant()) {
    mpz_class s = 0, qj = 1;
    for (int j = 0; j <= N - 2; ++j, qj *= static_cast<long>(field_->q())) s += qj;
    hyperplane_ = CycloElem::integer(N, s);
  }
}

EigenTrace EigentraceEngine::at(FqElem t) const {
  const int N = v_.N;
  const DworkFiber fiber{N, field_, t};
  if (!fiber.admissible()) throw Error(ErrorKind::BadT, "t must satisfy t != 0 and t^N != 1");
  const int64_t key = nt::mod(N * field_->dlog(t), field_->q() - 1);
  RootSum tor(N);
  for (int w = 0; w < N; ++w) tor.c[w] = -hist_[key * N + w];
  EigenTrace out;
  out.v = v_;
  out.t = t;
  out.torus = tor.to_cyclo();
  out.hyperplane = hyperplane_;
  out.strata = strata_;
  out.value = out.torus + strata_sum_ + hyperplane_;
  return out;
}

EigenTrace eigentrace_charsum(const WeightVector& v, const DworkFiber& fiber) {
  if (fiber.N != v.N) throw Error(ErrorKind::BadN, "fiber and weight vector disagree on N");
  return EigentraceEngine(fiber.field, v).at(fiber.t);
}

bool weil_check(const EigenTrace& trace, int64_t q) {
  const int N = trace.v.N;
  const double bound = rank_of(trace.v) * std::pow(static_cast<double>(q), (N - 2) / 2.0);
  return trace.value.max_abs2() <= bound * bound * (1 + 1e-6) + 1e-6;
}

bool duality_check(const WeightVector& v, const DworkFiber& fiber) {
  const auto tv = eigentrace_charsum(v, fiber).value;
  const auto tn = eigentrace_charsum(v.negated(), fiber).value;
  if (tn != tv.conjugate()) return false;
  if (is_self_dual(v) && tn != tv) return false;
  return true;
}

CycloElem n3_lefschetz_trace(const DworkFiber& fiber, const WeightVector& v) {
  if (fiber.N != 3 || v.N != 3) throw Error(ErrorKind::UnsupportedN, "N = 3 oracle only");
  RootSum acc(3);
  for (int a = 0; a < 3; ++a) {
    const auto g = GroupElement::canonical(3, {0, a, (3 - a) % 3});
    acc.add(-g.pair(v), fix_count_bruteforce(fiber, g));
  }
  CycloElem out = acc.to_cyclo().scaled(mpq_class(-1, 3));
  if (v.is_constant()) out += CycloElem::integer(3, 1 + fiber.field->q());
  return out;
}

}  // namespace dwb
