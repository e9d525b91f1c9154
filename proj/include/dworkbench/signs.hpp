#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace dwb::signs {

/// Dense n x n matrix over F_l, row major, entries in [0, l).
struct Matrix {
  int n = 0;
  int64_t l = 2;
  std::vector<int64_t> a;

  static Matrix zero(int n, int64_t l);
  static Matrix identity(int n, int64_t l);
  static Matrix diagonal(const std::vector<int64_t>& d, int64_t l);
  int64_t& at(int i, int j) { return a[i * n + j]; }
  int64_t at(int i, int j) const { return a[i * n + j]; }
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(int64_t s) const;
  Matrix transposed() const;
  int64_t det() const;
  /// Throws DivisionByZero when singular.
  Matrix inverse() const;
  bool operator==(const Matrix& rhs) const = default;
};

/// Representation with an SD pairing P: r(s)^T P r(s) = chi(s) P for every listed element.
struct PairedRep {
  int64_t l = 5;
  int n = 2;
  std::vector<Matrix> group;  // closed under products
  std::vector<int64_t> chi;   // similitude factor per element
  Matrix pairing;
  size_t c_index = 0;         // element c with j_c = conjugation by c
};

/// chi with r^T P r = chi P, if any.
std::optional<int64_t> similitude(const Matrix& r, const Matrix& P);
bool sd_equivariant(const PairedRep& rep);
/// +1 symmetric, -1 antisymmetric; throws NotSignDefinite otherwise.
int sign_of(const Matrix& P);
int sd_sign(const PairedRep& rep);

/// <v, w> = <|v, r(c) w|>, i.e. Q = P r(c).
Matrix convert_pairing(const PairedRep& rep);
/// Inverse conversion P = Q r(c)^{-1}.
Matrix unconvert_pairing(const PairedRep& rep, const Matrix& Q);
/// r(s)^T Q r(c s c^{-1}) = chi(s) Q for all s.
bool cj_equivariant(const PairedRep& rep, const Matrix& Q);
int cj_sign(const PairedRep& rep);

struct DetClass {
  int64_t det = 0;
  bool square = false;
  std::optional<int64_t> witness;  // w with w^2 = det
};
DetClass pairing_det_class(const Matrix& P);

/// Random admissible example: block pairing, diagonal similitudes and an
/// involution c, all conjugated by a random change of basis. Size cap on the group.
PairedRep random_admissible(int64_t l, int n, std::mt19937_64& rng, size_t group_cap = 4096);

/// Dimension 2 with the determinant pairing and random GL_2 generators plus c.
PairedRep determinant_pairing_example(int64_t l, std::mt19937_64& rng, bool c_has_det_minus_one);

}  // namespace dwb::signs
