// Transform path: multiplicative convolution over F_q^x is cyclic convolution
// in the discrete-log index, so one FFT per factor suffices.
#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "dworkbench/error.hpp"
#include "dworkbench/hyper.hpp"

namespace dwb {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::complex<double> root(int64_t modulus, int64_t k) {
  const double a = 2.0 * std::numbers::pi * static_cast<double>(k % modulus) / static_cast<double>(modulus);
  return {std::cos(a), std::sin(a)};
}

std::vector<std::complex<double>> rank1_closed_form(const FqField& F, MultChar chi, MultChar rho, AddChar psi) {
  const int64_t L = F.q() - 1;
  const int N = chi.order;
  const MultChar mix = chi / rho;
  std::complex<double> g = 0;
  for (FqElem x = 1; x < F.q(); ++x)
    g += root(F.p(), addchar_index(F, psi, x)) * root(N, char_index(F, mix, x));
  std::vector<std::complex<double>> f(L);
  for (int64_t e = 0; e < L; ++e) {
    const FqElem u = F.exp(e);
    if (u == 1) {
      f[e] = chi == rho ? -static_cast<double>(L) : 0.0;
      continue;
    }
    const int64_t k = char_index(F, chi, u) - char_index(F, mix, F.sub(u, 1));
    f[e] = -root(N, ((k % N) + N) % N) * g;
  }
  return f;
}

}  // namespace

FloatTable mellin_fast(const HyperSpec& spec, int sign) {
  spec.validate();
  const auto& F = *spec.field;
  const int n = static_cast<int>(F.q() - 1);

  fftw_complex* buf = fftw_alloc_complex(n);
  fftw_complex* acc = fftw_alloc_complex(n);
  fftw_plan fwd, bwd;
  {
    std::lock_guard lock(planner_mutex());
    fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(n, acc, acc, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (int i = 0; i < n; ++i) {
    acc[i][0] = 1.0;
    acc[i][1] = 0.0;
  }
  for (int j = 0; j < spec.k(); ++j) {
    const auto f = rank1_closed_form(F, spec.chi[j], spec.rho[j], spec.psi);
    for (int i = 0; i < n; ++i) {
      buf[i][0] = f[i].real();
      buf[i][1] = f[i].imag();
    }
    fftw_execute(fwd);
    for (int i = 0; i < n; ++i) {
      const std::complex<double> a(acc[i][0], acc[i][1]), b(buf[i][0], buf[i][1]);
      const auto c = a * b;
      acc[i][0] = c.real();
      acc[i][1] = c.imag();
    }
  }
  fftw_execute(bwd);
  // sign^(k-1) for the k-1 convolution steps; the inverse transform is unnormalized
  const double scale = ((spec.k() - 1) % 2 == 0 || sign > 0 ? 1.0 : -1.0) / n;

  FloatTable out{spec.field, std::vector<std::complex<double>>(F.q()), std::vector<char>(F.q(), 0)};
  for (int e = 0; e < n; ++e) {
    const FqElem u = F.exp(e);
    if (u == 1) continue;
    out.values[u] = std::complex<double>(acc[e][0], acc[e][1]) * scale;
    out.defined[u] = 1;
  }
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  fftw_free(buf);
  fftw_free(acc);
  return out;
}

}  // namespace dwb
