#include <doctest.h>

#include <random>

#include "dworkbench/chars.hpp"
#include "dworkbench/cyclo.hpp"
#include "dworkbench/error.hpp"
#include "dworkbench/root_sum.hpp"

using namespace dwb;

namespace {

CycloElem z(int M, int64_t k) { return CycloElem::root_of_unity(M, k); }
CycloElem n(int M, long v) { return CycloElem::integer(M, v); }

CycloElem random_elem(int M, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<int64_t> counts(M);
  for (auto& c : counts) c = d(rng);
  return CycloElem::from_root_counts(M, counts).scaled(mpq_class(1, 1 + std::abs(d(rng))));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient -2
  const auto p = cyclotomic_polynomial(105);
  CHECK(p.size() == 49);
  CHECK(std::find(p.begin(), p.end(), -2) != p.end());
}

TEST_CASE("roots of unity") {
  CHECK(z(4, 2) == n(4, -1));
  CHECK(z(3, 1).coeffs() == std::vector<mpq_class>{0, 1});
  CHECK(z(6, 1).coeffs() == std::vector<mpq_class>{0, 1});
  CHECK(z(3, 1) * z(3, 2) == n(3, 1));
  CHECK(z(3, 1) + z(3, 2) == n(3, -1));
  CHECK(z(7, -1) == z(7, 6));
}

TEST_CASE("inverse, conjugate and embeddings") {
  CHECK(n(1, 2).inverse() == CycloElem::rational(1, mpq_class(1, 2)));
  CHECK_THROWS_AS(CycloElem(5).inverse(), Error);
  CHECK(z(5, 1).conjugate() == z(5, 4));
  const CycloElem r = CycloElem::rational(5, mpq_class(3, 7));
  CHECK(r.conjugate() == r);
  const auto m1 = n(1, -1).embed_complex();
  CHECK(m1.real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(m1.imag() == doctest::Approx(0.0));
  const auto i = z(4, 1).embed_complex();
  CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-12);
  const auto F = FqField::get(7);
  const CycloElem g = gauss_sum(*F, AddChar{1}, MultChar{6, 1});
  CHECK(std::norm(g.embed_complex()) == doctest::Approx(7.0).epsilon(1e-9));
}

TEST_CASE("coercion") {
  CHECK(n(2, -1).coerce(6) == n(6, -1));
  CHECK(z(3, 1).coerce(6) == z(6, 2));
  CHECK(z(2, 1).coerce(6) * z(3, 1).coerce(6) == z(6, 5));
  CHECK_THROWS_AS(z(4, 1).coerce(6), Error);
  CHECK_THROWS_AS(z(3, 1) + z(5, 1), Error);
}

TEST_CASE("random ring axioms") {
  std::mt19937_64 rng(7);
  for (int M : {1, 2, 5, 12, 15, 21, 35}) {
    for (int trial = 0; trial < 8; ++trial) {
      const CycloElem a = random_elem(M, rng), b = random_elem(M, rng), c = random_elem(M, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == CycloElem(M));
      CHECK(a.conjugate().conjugate() == a);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      if (!a.is_zero()) CHECK(a * a.inverse() == n(M, 1));
      CHECK(a.pow(3) == a * a * a);
      // embeddings are ring homomorphisms
      const auto lhs = (a * b + c).embed_complex(1);
      const auto rhs = a.embed_complex(1) * b.embed_complex(1) + c.embed_complex(1);
      CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs)));
    }
  }
}

TEST_CASE("root sums reduce to the same element") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  const int M = 21;
  RootSum a(M), b(M);
  for (int j = 0; j < M; ++j) {
    a.add(j, d(rng));
    b.add(j, d(rng));
  }
  CHECK(multiply(a, b).to_cyclo() == a.to_cyclo() * b.to_cyclo());
  CHECK(a.rotated(5).to_cyclo() == a.to_cyclo() * z(M, 5));
  RootSum all(M);
  for (int j = 0; j < M; ++j) all.add(j);
  CHECK(all.to_cyclo().is_zero());
}
