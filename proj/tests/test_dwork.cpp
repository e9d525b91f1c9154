#include <doctest.h>

#include "dworkbench/dwork.hpp"
#include "dworkbench/error.hpp"
#include "dworkbench/numtheory.hpp"

using namespace dwb;

namespace {
const WeightVector k000{3, {0, 0, 0}}, k012{3, {0, 1, 2}}, k021{3, {0, 2, 1}};
}

TEST_CASE("N = 3 fibers") {
  const auto F = FqField::get(7);
  const DworkFiber fermat{3, F, 0};
  CHECK(fermat.smooth());
  CHECK_FALSE(fermat.admissible());
  CHECK(count_points(fermat) == 9);  // x^3 + y^3 + z^3 = 0 over F_7
  CHECK_THROWS_AS(eigentrace_charsum(k000, fermat), Error);
  const DworkFiber sing{3, F, 1};
  CHECK_FALSE(sing.smooth());
  CHECK(count_points(sing) > 0);
  const DworkFiber y2{3, F, 2};
  CHECK(fix_count_bruteforce(y2, GroupElement::canonical(3, {0, 0, 0})) == count_points(y2));
}

TEST_CASE("N = 3 Lefschetz oracle") {
  for (int64_t q : {7, 13}) {
    const auto F = FqField::get(q);
    for (FqElem t = 1; t < F->q(); ++t) {
      const DworkFiber y{3, F, t};
      if (!y.admissible()) continue;
      CHECK(CycloElem::integer(3, 1 + q - count_points(y)) == eigentrace_charsum(k000, y).value);
      for (const auto& v : {k000, k012, k021}) CHECK(eigentrace_charsum(v, y).value == n3_lefschetz_trace(y, v));
      CHECK(eigentrace_charsum(k012, y).value.is_zero());
      CHECK(eigentrace_charsum(k000, y).value.max_abs2() <= 4.0 * q);
    }
  }
}

TEST_CASE("engine: DP torus against enumeration") {
  const auto F = FqField::get(11);
  for (const WeightVector& v : {WeightVector{5, {0, 0, 1, 2, 2}}, WeightVector{5, {0, 0, 0, 0, 0}}}) {
    const EigentraceEngine dp(F, v), bf(F, v, true);
    for (FqElem t = 1; t < 11; ++t)
      if (F->pow(t, 5) != 1) CHECK(dp.at(t).value == bf.at(t).value);
  }
}

TEST_CASE("eigentraces over all labels add up to the point count") {
  const int N = 5;
  const int64_t q = 31;
  const auto F = FqField::get(q);
  // one representative per label: v_0 = 0, last entry fixes the sum
  std::vector<EigentraceEngine> engines;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        engines.emplace_back(F, WeightVector{N, {0, a, b, c, static_cast<int>(nt::mod(-(a + b + c), N))}});
  int64_t hyperplane = 0;
  for (int j = 0; j <= N - 2; ++j) hyperplane += nt::ipow(q, j);
  for (FqElem t : {3u, 7u, 11u}) {
    CycloElem total(N);
    for (const auto& e : engines) total += e.at(t).value;
    CHECK(total == CycloElem::integer(N, hyperplane - count_points(DworkFiber{N, F, t})));
  }
}

TEST_CASE("symmetries at N = 7, q = 29") {
  const auto F = FqField::get(29);
  const auto v = build_v(2, 7);
  const EigentraceEngine base(F, v), neg(F, v.negated());
  std::vector<EigentraceEngine> shifted;
  for (int c = 1; c < 7; ++c) shifted.emplace_back(F, v.translated(c));
  const double bound = 2 * std::pow(29.0, 2.5);
  for (FqElem t = 1; t < 29; ++t) {
    if (F->pow(t, 7) == 1) continue;
    const EigenTrace tr = base.at(t);
    for (const auto& e : shifted) CHECK(e.at(t).value == tr.value);
    CHECK(neg.at(t).value == tr.value.conjugate());
    CHECK(neg.at(t).value == tr.value);
    CHECK(std::sqrt(tr.value.max_abs2()) <= bound * (1 + 1e-6));
    CHECK(tr.value.is_integral());
    CHECK(weil_check(tr, 29));
  }
  CHECK(duality_check(v, DworkFiber{7, F, 2}));
}

TEST_CASE("stratum terms do not depend on the normalising index") {
  const auto F = FqField::get(11);
  for (const WeightVector& v : {WeightVector{5, {0, 0, 1, 2, 2}}, WeightVector{5, {0, 0, 0, 0, 0}}}) {
    for (unsigned mask = 1; mask < 31; ++mask) {
      std::vector<int> Z;
      for (int i = 0; i < 5; ++i)
        if (mask >> i & 1) Z.push_back(i);
      if (Z.size() < 2 || Z.size() > 4) continue;
      const auto ref = stratum_term(*F, v, Z, Z.front());
      for (int i0 : Z) {
        const auto other = stratum_term(*F, v, Z, i0);
        CHECK(other.has_value() == ref.has_value());
        if (ref && other) CHECK(*other == *ref);
      }
    }
  }
}

TEST_CASE("point count guard") {
  const auto F = FqField::get(29);
  CHECK_THROWS_AS(count_points(DworkFiber{7, F, 2}, 3), Error);
}
