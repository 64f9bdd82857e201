#include <doctest.h>

#include <random>

#include "ehv/exponents.hpp"

using namespace ehv;

namespace {

ExponentVector e(int p) { return ExponentVector::unit(p); }

ExponentVector random_vec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pos(1, 4);
  std::uniform_int_distribution<int> count(0, 3);
  ExponentVector v;
  for (int n = count(rng); n > 0; --n) v.add(pos(rng), 1);
  return v;
}

ExpTriple random_triple(std::mt19937_64& rng) {
  return {random_vec(rng), random_vec(rng), random_vec(rng)};
}

}  // namespace

TEST_CASE("weight and size") {
  ExponentVector v;
  v.add(1, 2);
  v.add(2, 1);
  CHECK(v.weight() == 4);
  CHECK(v.size() == 3);

  CHECK(ExponentVector{}.weight() == 0);
  CHECK(ExponentVector{}.size() == 0);

  CHECK(e(5).weight() == 5);
  CHECK(e(5).size() == 1);
}

TEST_CASE("lex and revlex") {
  CHECK(compare_lex(e(2), e(1)) == Ordering::Greater);
  CHECK(compare_revlex(e(1), e(2)) == Ordering::Greater);
  CHECK(compare_lex(e(3), e(3)) == Ordering::Equal);
  CHECK(compare_revlex(e(3), e(3)) == Ordering::Equal);
}

TEST_CASE("principal order (o)") {
  ExpTriple zero{};
  CHECK(compare_principal_o({{}, {}, e(1)}, zero) == Ordering::Greater);
  // equal total weight: w(first) decides
  CHECK(compare_principal_o({e(1), {}, {}}, {{}, e(1), {}}) == Ordering::Greater);
  CHECK(compare_principal_o(zero, zero) == Ordering::Equal);
}

TEST_CASE("principal order (o')") {
  ExpTriple a{e(1), e(1), e(2)}, b{e(1), e(1), e(1)};
  CHECK(compare_principal_o_prime(a, b) == Ordering::Greater);
  // clause (ii): third equal, second by revlex
  CHECK(compare_principal_o_prime({{}, e(1), e(2)}, {{}, {}, e(2)}) ==
        Ordering::Greater);
  CHECK(compare_principal_o_prime(a, a) == Ordering::Equal);
}

TEST_CASE("order axioms on random triples") {
  std::mt19937_64 rng(99);
  auto check_order = [](auto cmp, const ExpTriple& x, const ExpTriple& y,
                        const ExpTriple& z) {
    // antisymmetry / totality
    Ordering xy = cmp(x, y);
    CHECK(cmp(y, x) == static_cast<Ordering>(-static_cast<int>(xy)));
    CHECK((xy == Ordering::Equal) == (x == y));
    // transitivity
    if (cmp(x, y) != Ordering::Less && cmp(y, z) != Ordering::Less) {
      CHECK(cmp(x, z) != Ordering::Less);
    }
  };
  for (int i = 0; i < 400; ++i) {
    ExpTriple x = random_triple(rng), y = random_triple(rng), z = random_triple(rng);
    check_order(compare_principal_o, x, y, z);
    check_order(compare_principal_o_prime, x, y, z);
  }
}

TEST_CASE("adding a unit strictly increases the primary weight key") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    ExpTriple x = random_triple(rng);
    ExpTriple y = x;
    y.third = y.third.plus(ExponentVector::unit(1 + i % 4));
    CHECK(compare_principal_o(y, x) == Ordering::Greater);
    CHECK(y.total_weight() > x.total_weight());
  }
}

TEST_CASE("textual form") {
  ExponentVector v;
  v.add(1, 2);
  v.add(3, 1);
  CHECK(v.str() == "[2,0,1]");
}
