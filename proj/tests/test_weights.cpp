#include <doctest.h>

#include "dworkbench/error.hpp"
#include "dworkbench/weights.hpp"

using namespace dwb;

namespace {
CharMultiset ms(int N, std::vector<int> r) { return CharMultiset::from(N, std::move(r)); }
}  // namespace

TEST_CASE("build_v") {
  CHECK(build_v(4, 9).v == std::vector<int>{0, 0, 0, 0, 0, 2, 3, 5, 8});
  CHECK(build_v(2, 7).v == std::vector<int>{0, 0, 0, 2, 3, 4, 5});
  CHECK(build_v(6, 11).v == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 2, 4, 6, 10});
  for (auto [n, N] : std::vector<std::pair<int, int>>{{2, 7}, {2, 9}, {4, 9}, {4, 11}, {6, 11}, {6, 13}}) {
    const auto v = build_v(n, N);
    int sum = 0;
    for (int x : v.v) sum += x;
    CHECK(sum % N == 0);
    CHECK(rank_of(v) == n);
  }
  CHECK_THROWS_AS(build_v(3, 9), Error);
  CHECK_THROWS_AS(build_v(2, 8), Error);
}

TEST_CASE("cancel") {
  CHECK(cancel(ms(5, {1, 2, 2, 3}), ms(5, {2, 3, 3})) == std::pair{ms(5, {1, 2}), ms(5, {3})});
  const auto a = ms(5, {0, 4, 4});
  CHECK(cancel(a, a) == std::pair{ms(5, {}), ms(5, {})});
}

TEST_CASE("hyper_data") {
  CHECK(hyper_data(build_v(2, 7)) == std::pair{ms(7, {1, 6}), ms(7, {0, 0})});
  CHECK(hyper_data(build_v(4, 9)) == std::pair{ms(9, {2, 3, 5, 8}), ms(9, {0, 0, 0, 0})});
  const auto [sc, sr] = hyper_data(build_v(6, 11));
  CHECK(sr == ms(11, {0, 0, 0, 0, 0, 0}));
  // S'_chi is exactly the set of classes -v omits
  const auto v = build_v(6, 11);
  std::vector<int> omitted;
  for (int r = 0; r < 11; ++r) {
    bool hit = false;
    for (int x : v.negated().v) hit = hit || x == r;
    if (!hit) omitted.push_back(r);
  }
  CHECK(sc == ms(11, omitted));
}

TEST_CASE("rank and self duality") {
  CHECK(rank_of(build_v(4, 9)) == 4);
  CHECK(rank_of(build_v(2, 7)) == 2);
  const WeightVector w{3, {0, 1, 2}};
  CHECK(rank_of(w) == 0);
  CHECK(is_self_dual(build_v(2, 7)));
  CHECK_FALSE(is_self_dual(build_v(4, 9)));
  CHECK(is_self_dual(w));
}

TEST_CASE("labels") {
  const auto v = build_v(2, 7);
  CHECK(v.same_label(v.translated(3)));
  CHECK_FALSE(v.same_label(v.negated()));
  CHECK(WeightVector{5, {2, 2, 2, 2, 2}}.is_constant());
}
