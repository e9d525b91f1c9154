#include <doctest.h>

#include <random>
#include <set>

#include "dworkbench/error.hpp"
#include "dworkbench/ff.hpp"
#include "dworkbench/numtheory.hpp"

using namespace dwb;

TEST_CASE("prime fields") {
  const auto F7 = FqField::get(7);
  CHECK(F7->q() == 7);
  CHECK(nt::mult_order(F7->generator(), 7) == 6);
  const auto F29 = FqField::get(29);
  CHECK(F29->pow(F29->generator(), 14) == F29->from_int(-1));
  CHECK_THROWS_AS(FqField::get(15), Error);
}

TEST_CASE("extension fields") {
  const auto E = FqField::get(7, 3);
  CHECK(E->q() == 343);
  CHECK(E->exp_table().size() >= 342);
  CHECK(is_irreducible(E->modulus(), 7));
  CHECK(E->trace_to_prime(1) == 3);
  int units = 0;
  for (FqElem x = 1; x < E->q(); ++x) units += E->inv(x) != 0;
  CHECK(units == 342);
  // generator has full order
  std::set<FqElem> seen;
  for (int64_t k = 0; k < 342; ++k) seen.insert(E->exp(k));
  CHECK(seen.size() == 342);
}

TEST_CASE("field axioms and Frobenius") {
  const auto E = FqField::get(5, 2);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<FqElem> d(0, static_cast<FqElem>(E->q() - 1));
  for (int i = 0; i < 200; ++i) {
    const FqElem a = d(rng), b = d(rng), c = d(rng);
    CHECK(E->mul(a, E->add(b, c)) == E->add(E->mul(a, b), E->mul(a, c)));
    CHECK(E->frobenius(E->add(a, b)) == E->add(E->frobenius(a), E->frobenius(b)));
    CHECK(E->add(a, E->neg(a)) == 0);
    if (a != 0) CHECK(E->mul(a, E->inv(a)) == 1);
    // trace is F_p linear
    const int64_t s = static_cast<int64_t>(d(rng) % 5);
    CHECK(E->trace_to_prime(E->add(E->mul(E->from_int(s), a), b)) ==
          nt::mod(s * E->trace_to_prime(a) + E->trace_to_prime(b), 5));
    // N_{F_25/F_5}(x) = x^{q+1}
    CHECK(E->norm_to_subfield(a, 1) == E->pow(a, 6));
  }
  FqElem total = 0;
  for (FqElem x = 0; x < E->q(); ++x) total = E->add(total, x);
  CHECK(total == 0);
  CHECK_THROWS_AS(E->dlog(0), Error);
}

TEST_CASE("norm log factor links extension and prime field logs") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{7, 2}, {7, 3}, {29, 2}}) {
    const auto E = FqField::get(p, m);
    const auto F = FqField::get(p);
    const FqElem nrm = E->norm_to_subfield(E->generator(), 1);
    CHECK(nrm < static_cast<FqElem>(p));
    CHECK(F->dlog(nrm) == nt::mod(E->norm_log_factor(), p - 1));
  }
}

TEST_CASE("field size guard") { CHECK_THROWS_AS(FqField::get(2, 30), Error); }
