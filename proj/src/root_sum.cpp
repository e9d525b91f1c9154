#include "dworkbench/root_sum.hpp"

#include "dworkbench/error.hpp"

namespace dwb {

RootSum& RootSum::operator+=(const RootSum& rhs) {
  if (rhs.modulus != modulus) throw Error(ErrorKind::ModulusMismatch, "root sums of different modulus");
  for (int j = 0; j < modulus; ++j) c[j] += rhs.c[j];
  return *this;
}

RootSum& RootSum::operator-=(const RootSum& rhs) {
  if (rhs.modulus != modulus) throw Error(ErrorKind::ModulusMismatch, "root sums of different modulus");
  for (int j = 0; j < modulus; ++j) c[j] -= rhs.c[j];
  return *this;
}

RootSum RootSum::operator-() const {
  RootSum out(modulus);
  for (int j = 0; j < modulus; ++j) out.c[j] = -c[j];
  return out;
}

RootSum RootSum::rotated(int64_t k) const {
  RootSum out(modulus);
  int64_t s = k % modulus;
  if (s < 0) s += modulus;
  for (int j = 0; j < modulus; ++j) out.c[(j + s) % modulus] = c[j];
  return out;
}

RootSum RootSum::scaled(int64_t factor) const {
  RootSum out(modulus);
  for (int j = 0; j < modulus; ++j) out.c[j] = c[j] * factor;
  return out;
}

bool RootSum::is_zero() const {
  for (int64_t x : c)
    if (x != 0) return false;
  return true;
}

RootSum multiply(const RootSum& a, const RootSum& b) {
  if (a.modulus != b.modulus) throw Error(ErrorKind::ModulusMismatch, "root sums of different modulus");
  const int M = a.modulus;
  RootSum out(M);
  for (int i = 0; i < M; ++i) {
    const int64_t ai = a.c[i];
    if (ai == 0) continue;
    int64_t* dst = out.c.data();
    const int64_t* src = b.c.data();
    for (int j = 0; j < M - i; ++j) dst[i + j] += ai * src[j];
    for (int j = M - i; j < M; ++j) dst[i + j - M] += ai * src[j];
  }
  return out;
}

}  // namespace dwb
