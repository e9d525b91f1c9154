#include "dworkbench/kernels.hpp"

#include <omp.h>

#include <functional>

#include "dworkbench/error.hpp"
#include "dworkbench/numtheory.hpp"

namespace dwb::kernels {

namespace {

int64_t torus_key(const FqField& f, int N, FqElem s, int64_t log_sum) {
  const int64_t L = f.q() - 1;
  return nt::mod(N * f.dlog(s) - log_sum - N * f.dlog(f.from_int(N)), L);
}

void check_torus_args(const FqField& f, int N, std::span<const int> v) {
  if (static_cast<int>(v.size()) != N) throw Error(ErrorKind::SizeMismatch, "weight vector must have length N");
  if ((f.q() - 1) % N != 0) throw Error(ErrorKind::BadN, "N must divide q - 1");
}

}  // namespace

std::vector<int64_t> torus_histogram_serial(const FqField& f, int N, std::span<const int> v) {
  check_torus_args(f, N, v);
  const int64_t L = f.q() - 1;
  std::vector<int64_t> hist(L * N, 0);
  std::vector<int64_t> e(N - 1, 0);
  while (true) {
    FqElem s = 1;
    int64_t log_sum = 0, w = 0;
    for (int i = 0; i < N - 1; ++i) {
      s = f.add(s, f.exp(e[i]));
      log_sum += e[i];
      w += static_cast<int64_t>(v[i]) * e[i];
    }
    if (s != 0) ++hist[torus_key(f, N, s, log_sum) * N + nt::mod(w, N)];
    int i = 0;
    while (i < N - 1 && ++e[i] == L) e[i++] = 0;
    if (i == N - 1) break;
  }
  return hist;
}

std::vector<int64_t> torus_histogram_parallel(const FqField& f, int N, std::span<const int> v) {
  check_torus_args(f, N, v);
  const int64_t q = f.q(), L = q - 1;
  const auto& ex = f.exp_table();
  auto idx = [&](int64_t s, int64_t E, int64_t w) { return (s * L + E) * N + w; };
  std::vector<int64_t> cur(q * L * N, 0), next(q * L * N);
  cur[idx(1, 0, 0)] = 1;  // u_N = 1
  for (int i = 0; i < N - 1; ++i) {
    const int64_t vi = nt::mod(v[i], N);
    std::fill(next.begin(), next.end(), 0);
#pragma omp parallel for schedule(static)
    for (int64_t sd = 0; sd < q; ++sd) {
      for (int64_t e = 0; e < L; ++e) {
        const int64_t ss = f.sub(static_cast<FqElem>(sd), ex[e]);
        const int64_t dw = vi * e % N;
        for (int64_t E = 0; E < L; ++E) {
          const int64_t* src = &cur[idx(ss, E, 0)];
          int64_t* dst = &next[idx(sd, (E + e) % L, 0)];
          for (int64_t w = 0; w < N; ++w) {
            if (src[w] == 0) continue;
            int64_t w2 = w + dw;
            if (w2 >= N) w2 -= N;
            dst[w2] += src[w];
          }
        }
      }
    }
    cur.swap(next);
  }
  std::vector<int64_t> hist(L * N, 0);
  for (int64_t s = 1; s < q; ++s)
    for (int64_t E = 0; E < L; ++E)
      for (int64_t w = 0; w < N; ++w) {
        const int64_t c = cur[idx(s, E, w)];
        if (c != 0) hist[torus_key(f, N, static_cast<FqElem>(s), E) * N + w] += c;
      }
  return hist;
}

namespace {

void check_count_budget(const FqField& f, int N) {
  if (N < 2) throw Error(ErrorKind::BadParams, "N must be >= 2");
  long double work = 1;
  for (int i = 0; i < N - 1; ++i) work *= static_cast<long double>(f.q());
  if (work > 1e10L) throw Error(ErrorKind::Infeasible, "point count exceeds the 1e10 enumeration budget");
}

std::vector<FqElem> power_table(const FqField& f, int N) {
  std::vector<FqElem> out(f.q());
  for (int64_t x = 0; x < f.q(); ++x) out[x] = f.pow(static_cast<FqElem>(x), N);
  return out;
}

}  // namespace

int64_t count_points_serial(const FqField& f, int N, FqElem t) {
  check_count_budget(f, N);
  const int64_t q = f.q();
  const auto xN = power_table(f, N);
  const FqElem Nt = f.mul(f.from_int(N), t);
  int64_t total = 0;
  std::vector<FqElem> S(N + 1), P(N + 1);
  for (int j = 0; j < N; ++j) {
    const int free = N - 1 - j;
    // point is (0, ..., 0, 1, x_{j+1}, ..., x_{N-1})
    S[0] = 1;
    P[0] = j == 0 ? 1 : 0;
    std::function<void(int)> rec = [&](int d) {
      if (d == free) {
        if (S[d] == f.mul(Nt, P[d])) ++total;
        return;
      }
      for (int64_t x = 0; x < q; ++x) {
        S[d + 1] = f.add(S[d], xN[x]);
        P[d + 1] = f.mul(P[d], static_cast<FqElem>(x));
        rec(d + 1);
      }
    };
    rec(0);
  }
  return total;
}

int64_t count_points_parallel(const FqField& f, int N, FqElem t) {
  check_count_budget(f, N);
  const int64_t q = f.q();
  const auto xN = power_table(f, N);
  const FqElem Nt = f.mul(f.from_int(N), t);

  // roots[S * q + c] = #{x : x^N + S - c x = 0}
  std::vector<int32_t> roots(q * q, 0);
#pragma omp parallel for schedule(static)
  for (int64_t s = 0; s < q; ++s) {
    for (int64_t x = 0; x < q; ++x) {
      const FqElem a = f.add(static_cast<FqElem>(s), xN[x]);
      if (x == 0) {
        if (a == 0)
          for (int64_t c = 0; c < q; ++c) ++roots[s * q + c];
        continue;
      }
      // a = c x  <=>  c = a / x
      ++roots[s * q + f.div(a, static_cast<FqElem>(x))];
    }
  }

  int64_t total = 0;
  for (int j = 0; j < N; ++j) {
    const int free = N - 1 - j;
    const FqElem P0 = j == 0 ? 1 : 0;
    if (free == 0) {
      if (f.mul(Nt, P0) == 1) ++total;
      continue;
    }
    const int prefix = free - 1;
    if (prefix == 0) {
      total += roots[1 * q + f.mul(Nt, P0)];
      continue;
    }
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (int64_t x0 = 0; x0 < q; ++x0) {
      std::vector<FqElem> S(prefix + 1), P(prefix + 1);
      S[1] = f.add(1, xN[x0]);
      P[1] = f.mul(P0, static_cast<FqElem>(x0));
      int64_t local = 0;
      std::function<void(int)> rec = [&](int d) {
        if (d == prefix) {
          local += roots[S[d] * q + f.mul(Nt, P[d])];
          return;
        }
        for (int64_t x = 0; x < q; ++x) {
          S[d + 1] = f.add(S[d], xN[x]);
          P[d + 1] = f.mul(P[d], static_cast<FqElem>(x));
          rec(d + 1);
        }
      };
      rec(1);
      total += local;
    }
  }
  return total;
}

namespace {

struct NaiveSetup {
  int k = 0;
  int N = 1;
  int64_t p = 0, L = 0, M = 0;
  int64_t log_t = 0;
  std::vector<int32_t> trc;              // Tr(c g^e)
  std::vector<std::vector<int64_t>> ch;  // per variable, weight per log (mod N), sign folded in
  std::vector<int> sgn;                  // +1 for x_i, -1 for y_i
};

NaiveSetup naive_setup(const FqField& f, std::span<const MultChar> chi, std::span<const MultChar> rho, AddChar psi,
                       FqElem t) {
  if (chi.size() != rho.size() || chi.empty()) throw Error(ErrorKind::SizeMismatch, "need |S_chi| = |S_rho| >= 1");
  if (t == 0 || t == 1) throw Error(ErrorKind::BadT, "t must avoid 0 and 1");
  if (psi.is_trivial()) throw Error(ErrorKind::TrivialAdditive, "psi must be nontrivial");
  NaiveSetup s;
  s.k = static_cast<int>(chi.size());
  s.N = chi[0].order;
  for (const auto& c : chi) if (c.order != s.N) throw Error(ErrorKind::ModulusMismatch, "mixed character orders");
  for (const auto& c : rho) if (c.order != s.N) throw Error(ErrorKind::ModulusMismatch, "mixed character orders");
  require_order_divides(f, s.N);
  s.p = f.p();
  s.L = f.q() - 1;
  s.M = s.N * s.p;
  s.log_t = f.dlog(t);
  long double cost = 1;
  for (int i = 0; i < 2 * s.k - 1; ++i) cost *= static_cast<long double>(f.q());
  if (cost > 1e9L) throw Error(ErrorKind::Infeasible, "naive trace cost |E|^(2k-1) exceeds 1e9");
  s.trc.resize(s.L);
  for (int64_t e = 0; e < s.L; ++e) s.trc[e] = static_cast<int32_t>(addchar_index(f, psi, f.exp(e)));
  const int64_t cF = f.norm_log_factor() % s.N;
  auto weights = [&](const MultChar& c, int sign) {
    std::vector<int64_t> w(s.L);
    const int64_t a = nt::mod(sign * c.exp, s.N) * cF % s.N;
    for (int64_t e = 0; e < s.L; ++e) w[e] = a * (e % s.N) % s.N;
    return w;
  };
  for (const auto& c : chi) {
    s.ch.push_back(weights(c, +1));
    s.sgn.push_back(+1);
  }
  for (const auto& r : rho) {
    s.ch.push_back(weights(r, -1));
    s.sgn.push_back(-1);
  }
  return s;
}

// Variables 0..k-1 are x_i, k..2k-2 are y_1..y_{k-1}; y_k is solved at the leaf.
void naive_walk(const NaiveSetup& s, int d, int64_t psi_acc, int64_t chi_acc, int64_t log_acc,
                std::vector<int64_t>& hist) {
  const int free = 2 * s.k - 1;
  if (d == free) {
    const int64_t ly = nt::mod(log_acc - s.log_t, s.L);
    const int64_t ps = nt::mod(psi_acc - s.trc[ly], s.p);
    const int64_t cs = (chi_acc + s.ch[free][ly]) % s.N;
    ++hist[(ps * s.N + cs * s.p) % s.M];
    return;
  }
  const auto& w = s.ch[d];
  const int sg = s.sgn[d];
  for (int64_t e = 0; e < s.L; ++e) {
    naive_walk(s, d + 1, psi_acc + sg * s.trc[e], (chi_acc + w[e]) % s.N, log_acc + sg * e, hist);
  }
}

RootSum finish_naive(const NaiveSetup& s, const std::vector<int64_t>& hist) {
  RootSum out(static_cast<int>(s.M));
  for (int64_t j = 0; j < s.M; ++j) out.c[j] = -hist[j];  // (-1)^{2k-1}
  return out;
}

}  // namespace

RootSum trad_trace_naive_serial(const FqField& f, std::span<const MultChar> chi, std::span<const MultChar> rho,
                                AddChar psi, FqElem t) {
  const NaiveSetup s = naive_setup(f, chi, rho, psi, t);
  std::vector<int64_t> hist(s.M, 0);
  naive_walk(s, 0, 0, 0, 0, hist);
  return finish_naive(s, hist);
}

RootSum trad_trace_naive_parallel(const FqField& f, std::span<const MultChar> chi, std::span<const MultChar> rho,
                                  AddChar psi, FqElem t) {
  const NaiveSetup s = naive_setup(f, chi, rho, psi, t);
  std::vector<int64_t> hist(s.M, 0);
#pragma omp parallel
  {
    std::vector<int64_t> local(s.M, 0);
#pragma omp for schedule(dynamic)
    for (int64_t e = 0; e < s.L; ++e) naive_walk(s, 1, s.trc[e], s.ch[0][e], e, local);
#pragma omp critical
    for (int64_t j = 0; j < s.M; ++j) hist[j] += local[j];
  }
  return finish_naive(s, hist);
}

RootSum convolve_at(const std::vector<RootSum>& a, const std::vector<RootSum>& b, int sign, int64_t k) {
  const int64_t n = static_cast<int64_t>(a.size());
  RootSum acc(a.front().modulus);
  for (int64_t i = 0; i < n; ++i) {
    const RootSum& bi = b[nt::mod(k - i, n)];
    if (a[i].is_zero() || bi.is_zero()) continue;
    acc += multiply(a[i], bi);
  }
  return sign < 0 ? -acc : acc;
}

std::vector<RootSum> convolve_serial(const std::vector<RootSum>& a, const std::vector<RootSum>& b, int sign) {
  if (a.size() != b.size() || a.empty()) throw Error(ErrorKind::SizeMismatch, "convolution tables differ in size");
  std::vector<RootSum> out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = convolve_at(a, b, sign, static_cast<int64_t>(k));
  return out;
}

std::vector<RootSum> convolve_parallel(const std::vector<RootSum>& a, const std::vector<RootSum>& b, int sign) {
  if (a.size() != b.size() || a.empty()) throw Error(ErrorKind::SizeMismatch, "convolution tables differ in size");
  const int64_t n = static_cast<int64_t>(a.size());
  std::vector<RootSum> out(n);
#pragma omp parallel for schedule(dynamic)
  for (int64_t k = 0; k < n; ++k) out[k] = convolve_at(a, b, sign, k);
  return out;
}

}  // namespace dwb::kernels
