#include <doctest.h>

#include <random>

#include "dworkbench/error.hpp"
#include "dworkbench/signs.hpp"

using namespace dwb;
using signs::Matrix;

namespace {
Matrix det_pairing(int64_t l) {
  Matrix J = Matrix::zero(2, l);
  J.at(0, 1) = 1;
  J.at(1, 0) = l - 1;
  return J;
}
}  // namespace

TEST_CASE("sign of a pairing") {
  CHECK(signs::sign_of(Matrix::identity(3, 5)) == 1);
  CHECK(signs::sign_of(det_pairing(5)) == -1);
  Matrix M = Matrix::identity(2, 5);
  M.at(0, 1) = 1;
  CHECK_THROWS_AS(signs::sign_of(M), Error);
}

TEST_CASE("determinant classes") {
  CHECK(signs::pairing_det_class(Matrix::identity(3, 13)).square);
  CHECK(signs::pairing_det_class(det_pairing(13)).square);
  CHECK_FALSE(signs::pairing_det_class(Matrix::diagonal({1, 2}, 5)).square);  // 2 is not a square mod 5
  const auto c = signs::pairing_det_class(Matrix::diagonal({1, 4}, 5));
  REQUIRE(c.witness);
  CHECK(*c.witness * *c.witness % 5 == 4);
}

TEST_CASE("matrix algebra mod l") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int64_t> d(0, 12);
  for (int i = 0; i < 20; ++i) {
    Matrix A = Matrix::zero(3, 13);
    for (auto& x : A.a) x = d(rng);
    if (A.det() == 0) continue;
    CHECK(A * A.inverse() == Matrix::identity(3, 13));
    CHECK((A * A).det() == A.det() * A.det() % 13);
  }
}

TEST_CASE("randomized admissible examples") {
  std::mt19937_64 rng(5);
  for (int64_t l : {5, 13}) {
    for (int i = 0; i < 30; ++i) {
      const int n = 2 + i % 3;
      const auto rep = signs::random_admissible(l, n, rng);
      CHECK(signs::sd_equivariant(rep));
      const Matrix Q = signs::convert_pairing(rep);
      CHECK(signs::cj_equivariant(rep, Q));
      CHECK(signs::unconvert_pairing(rep, Q) == rep.pairing);
      const int64_t chi_c = rep.chi[rep.c_index];
      CHECK(signs::sign_of(Q) == signs::sd_sign(rep) * (chi_c == 1 ? 1 : -1));
    }
  }
}

TEST_CASE("the determinant pairing") {
  std::mt19937_64 rng(9);
  for (int64_t l : {5, 13}) {
    for (bool minus : {true, false}) {
      const auto rep = signs::determinant_pairing_example(l, rng, minus);
      CHECK(signs::sd_sign(rep) == -1);
      CHECK(signs::cj_sign(rep) == (minus ? 1 : -1));
    }
  }
}
