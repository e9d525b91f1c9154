#include <doctest.h>

#include "dworkbench/kernels.hpp"
#include "dworkbench/weights.hpp"

using namespace dwb;

TEST_CASE("torus histogram: DP against enumeration") {
  for (auto [q, N, v] : std::vector<std::tuple<int64_t, int, std::vector<int>>>{
           {7, 3, {0, 1, 2}}, {13, 3, {0, 0, 0}}, {11, 5, {0, 0, 1, 2, 2}}, {31, 5, {0, 1, 1, 4, 4}}}) {
    const auto F = FqField::get(q);
    CHECK(kernels::torus_histogram_parallel(*F, N, v) == kernels::torus_histogram_serial(*F, N, v));
  }
}

TEST_CASE("point counts: lookup table against enumeration") {
  for (auto [q, N] : std::vector<std::pair<int64_t, int>>{{7, 3}, {13, 3}, {11, 5}}) {
    const auto F = FqField::get(q);
    for (FqElem t = 0; t < F->q(); ++t)
      CHECK(kernels::count_points_parallel(*F, N, t) == kernels::count_points_serial(*F, N, t));
  }
}

TEST_CASE("naive traditional trace: serial against parallel") {
  const auto F = FqField::get(29);
  const std::vector<MultChar> chi{{7, 1}, {7, 6}}, rho{{7, 0}, {7, 2}};
  for (FqElem t : {2u, 5u, 28u}) {
    const RootSum a = kernels::trad_trace_naive_serial(*F, chi, rho, AddChar{3}, t);
    const RootSum b = kernels::trad_trace_naive_parallel(*F, chi, rho, AddChar{3}, t);
    CHECK(a.to_cyclo() == b.to_cyclo());
  }
}

TEST_CASE("convolution kernels agree") {
  std::vector<RootSum> a(12, RootSum(6)), b(12, RootSum(6));
  for (int i = 0; i < 12; ++i) {
    a[i].add(i % 6, i + 1);
    b[i].add((5 * i) % 6, 2 - i);
  }
  const auto s = kernels::convolve_serial(a, b, -1);
  const auto p = kernels::convolve_parallel(a, b, -1);
  REQUIRE(s.size() == p.size());
  for (size_t k = 0; k < s.size(); ++k) {
    CHECK(s[k].c == p[k].c);
    CHECK(kernels::convolve_at(a, b, -1, static_cast<int64_t>(k)).c == s[k].c);
  }
}
