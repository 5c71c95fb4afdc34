#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contmat/contfrac.hpp"

using namespace contmat;

TEST_CASE("ceil division") {
  CHECK(ceil_div(17, 7) == 3);
  CHECK(ceil_div(-4, 9) == 0);
  CHECK(ceil_div(-60, 23) == -2);
  CHECK(ceil_div(6, 3) == 2);
  CHECK(ceil_div(-6, 3) == -2);
}

TEST_CASE("negative euclidean algorithm") {
  CHECK(negative_euclid(17, 7) == NegCF{3, 2, 4});
  CHECK(negative_euclid(-60, 23) == NegCF{-2, 2, 3, 5});
  CHECK(negative_euclid(5, 1) == NegCF{5});
  CHECK(negative_euclid(-4, 9) == NegCF{0, 3, 2, 2, 2});
  CHECK_THROWS_AS(negative_euclid(5, 0), DomainError);
  CHECK_THROWS_AS(negative_euclid(5, -3), DomainError);
  CHECK_THROWS_AS(negative_euclid(6, 4), GcdError);
}

TEST_CASE("negative continued fraction evaluation") {
  CHECK(ncf_eval({3, 2, 4}) == Rational{17, 7});
  CHECK(ncf_eval({5}) == Rational{5, 1});
  CHECK(ncf_eval({0, 3, 2, 2, 2}) == Rational{-4, 9});
  CHECK(ncf_eval({-2, 2, 3, 5}) == Rational{-60, 23});
  CHECK_THROWS_AS(ncf_eval({}), DomainError);
  CHECK_THROWS_AS(ncf_eval({3, 1, 1}), DivisionByZero);  // tail 1 - 1/1 = 0
}

TEST_CASE("regular continued fraction evaluation") {
  CHECK(regcf_eval({2, 3}) == Rational{7, 3});
  CHECK(regcf_eval({0, 1}) == Rational{1, 1});
  CHECK(regcf_eval({-3, 2}) == Rational{-5, 2});
  CHECK_THROWS_AS(regcf_eval({}), DomainError);
}

TEST_CASE("regular to negative conversion") {
  CHECK(regcf_to_ncf({2, 3}) == NegCF{3, 2, 2});
  CHECK(regcf_to_ncf({0, 1}) == NegCF{1});
  CHECK(regcf_to_ncf({1, 1, 1, 1}) == NegCF{2, 3});
  CHECK_THROWS_AS(regcf_to_ncf({2, 3, 4}), DomainError);
  CHECK_THROWS_AS(regcf_to_ncf({}), DomainError);
  CHECK_THROWS_AS(regcf_to_ncf({2, 0}), DomainError);
}

TEST_CASE("round trip on a sample of rationals") {
  for (int c = 1; c <= 40; ++c) {
    for (int a = -80; a <= 80; ++a) {
      if (gcd(Int(a), Int(c)) != 1) continue;
      NegCF q = negative_euclid(a, c);
      for (std::size_t i = 1; i < q.size(); ++i) CHECK(q[i] >= 2);
      CHECK(ncf_eval(q) == make_rational(a, c));
    }
  }
}

TEST_CASE("conversion agrees with direct evaluation") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> first(-20, 20), rest(1, 9), half(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    RegCF a{first(rng)};
    int n = 2 * half(rng);
    while (static_cast<int>(a.size()) < n) a.push_back(rest(rng));
    CHECK(ncf_eval(regcf_to_ncf(a)) == regcf_eval(a));
  }
}

TEST_CASE("negative expansion is unique within small bounds") {
  // brute force: no other coefficient list with q_i >= 2 (i >= 2) hits 17/7
  for (int q1 = -6; q1 <= 6; ++q1)
    for (int q2 = 2; q2 <= 6; ++q2)
      for (int q3 = 2; q3 <= 6; ++q3) {
        NegCF q{q1, q2, q3};
        if (ncf_eval(q) == Rational{17, 7}) CHECK(q == NegCF{3, 2, 4});
      }
}
