#include <doctest.h>

#include "dworkbench/chars.hpp"
#include "dworkbench/error.hpp"
#include "dworkbench/numtheory.hpp"

using namespace dwb;

namespace {
CycloElem one(int M) { return CycloElem::integer(M, 1); }
}  // namespace

TEST_CASE("teichmuller") {
  const auto F = FqField::get(29);
  CHECK(teich(*F, 1, 7) == one(7));
  CHECK(teich(*F, F->generator(), 7) == CycloElem::root_of_unity(7, 1));
  CHECK(teich(*F, F->pow(F->generator(), 7), 7) == one(7));
  CHECK_THROWS_AS(teich(*F, 0, 7), Error);
  CHECK_THROWS_AS(teich(*F, 2, 5), Error);
}

TEST_CASE("Gauss sums") {
  const auto F5 = FqField::get(5);
  const CycloElem g2 = gauss_sum(*F5, AddChar{1}, MultChar{2, 1});
  CHECK(g2 * g2 == CycloElem::integer(g2.modulus(), 5));
  for (int64_t q : {7, 13}) {
    const auto F = FqField::get(q);
    const int ord = static_cast<int>(q - 1);
    CHECK(gauss_sum(*F, AddChar{1}, MultChar{ord, 0}) == CycloElem::integer(ord * static_cast<int>(q), -1));
    for (int a = 1; a < ord; ++a) {
      const CycloElem g = gauss_sum(*F, AddChar{1}, MultChar{ord, a});
      CHECK(g * g.conjugate() == CycloElem::integer(g.modulus(), q));
      // g(psibar, chi) = chi(-1) g(psi, chi)
      const CycloElem gbar = gauss_sum(*F, conjugate(*F, AddChar{1}), MultChar{ord, a});
      CHECK(gbar == char_value(*F, MultChar{ord, a}, F->from_int(-1)).coerce(g.modulus()) * g);
    }
  }
  CHECK_THROWS_AS(gauss_sum(*F5, AddChar{0}, MultChar{2, 1}), Error);
}

TEST_CASE("Jacobi sums and grossencharacter values") {
  const auto F7 = FqField::get(7);
  CHECK(jacobi_sum(*F7, MultChar{3, 0}, MultChar{3, 0}) == CycloElem::integer(3, 5));
  CHECK(grossen_value(*F7, MultChar{3, 1}, MultChar{3, 1}) == one(3));
  // chi, rho/chi, rho all nontrivial
  const CycloElem j = grossen_value(*F7, MultChar{3, 1}, MultChar{3, 2});
  CHECK(j * j.conjugate() == CycloElem::integer(j.modulus(), 7));
  // J(a, b) g(ab) = g(a) g(b)
  const AddChar psi{1};
  const MultChar a{6, 1}, b{6, 3};
  const CycloElem lhs = jacobi_sum(*F7, a, b).coerce(42) * gauss_sum(*F7, psi, a * b);
  CHECK(lhs == gauss_sum(*F7, psi, a) * gauss_sum(*F7, psi, b));
}

TEST_CASE("Kummer traces") {
  const auto F = FqField::get(7);
  const MultChar chi{3, 1};
  CHECK(kummer_trace(*F, chi, 1, KummerFlavor::X) == one(3));
  CHECK(kummer_trace(*F, chi, 1, KummerFlavor::OneMinusX).is_zero());
  CHECK(kummer_trace(*F, chi, F->generator(), KummerFlavor::X) == CycloElem::root_of_unity(3, 1));
}

TEST_CASE("phi values") {
  const auto F = FqField::get(29);
  const std::vector<MultChar> triv{{7, 0}};
  CHECK(phi_value(*F, triv, triv, AddChar{1}) == one(7 * 29));
  const std::vector<MultChar> sc{{7, 1}, {7, 6}}, sr{{7, 0}, {7, 0}};
  const CycloElem phi = phi_value(*F, sc, sr, AddChar{1});
  CHECK(phi * phi.conjugate() == CycloElem::integer(phi.modulus(), 841));
  const std::vector<MultChar> all{{7, 1}, {7, 2}}, all2{{7, 3}, {7, 4}};
  const CycloElem full = phi_value(*F, all, all2, AddChar{1});
  CHECK(full * full.conjugate() == CycloElem::integer(full.modulus(), 29 * 29 * 29 * 29));
}

TEST_CASE("characters over an extension factor through the norm") {
  const auto F = FqField::get(7);
  const auto E = FqField::get(7, 2);
  const MultChar chi{6, 1};
  for (FqElem x = 1; x < E->q(); ++x)
    CHECK(char_value(*E, chi, x) == char_value(*F, chi, E->norm_to_subfield(x, 1)));
}
