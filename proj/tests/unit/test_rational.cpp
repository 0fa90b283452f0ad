#include "doctest.h"

#include "gaplab/exact_const.hpp"
#include "gaplab/rational.hpp"
#include "oracles.hpp"

using namespace gaplab;

TEST_SUITE("rational") {
  TEST_CASE("parse accepts fractions, integers and exact decimals") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("0.82") == make_rational(41, 50));
    CHECK(parse_rational("0.35") == make_rational(7, 20));
    CHECK(parse_rational("1.1") == make_rational(11, 10));
    CHECK(parse_rational("-2/4") == make_rational(-1, 2));
  }

  TEST_CASE("parse rejects junk") {
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "0.8.2", "1e3", "2/3x", "1 /2"})
      CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }

  TEST_CASE("to_string always writes p/q") {
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(make_rational(-4, 6)) == "-2/3");
    oracle::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      Rational q = make_rational(rng.integer(-1000, 1000), rng.integer(1, 1000));
      CHECK(parse_rational(to_string(q)) == q);
    }
  }

  TEST_CASE("floor and factorisation") {
    CHECK(floor_rational(make_rational(40, 7)) == 5);
    CHECK(floor_rational(make_rational(-1, 2)) == -1);
    CHECK(floor_rational(Rational(5)) == 5);
    auto f = factor_rational(make_rational(12, 35));
    CHECK(f.size() == 4);
    CHECK(f[2] == 2);
    CHECK(f[3] == 1);
    CHECK(f[5] == -1);
    CHECK(f[7] == -1);
    CHECK(factor_rational(Rational(1)).empty());
    CHECK_THROWS(factor_rational(Rational(0)));
  }

  TEST_CASE("RationalScale normalises and refuses non-positive values") {
    RationalScale t(6, 4);
    CHECK(t.num() == 3);
    CHECK(t.den() == 2);
    CHECK(t.str() == "3/2");
    CHECK(RationalScale::parse("0.82") == RationalScale(41, 50));
    CHECK_THROWS(RationalScale(0, 1));
    CHECK_THROWS(RationalScale(-1, 2));
    CHECK_THROWS(RationalScale(1, 0));
    CHECK_THROWS(RationalScale::parse("-3"));
  }

  TEST_CASE("RationalScale compares exactly") {
    RationalScale t(2, 3);
    CHECK(t.compare(make_rational(2, 3)) == 0);
    CHECK(t.compare(make_rational(666666667, 1000000000)) < 0);
    CHECK(t.compare(make_rational(666666666, 1000000000)) > 0);
  }

  TEST_CASE("ExactConst logs are additive over products") {
    oracle::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
      Rational a = make_rational(rng.integer(1, 500), rng.integer(1, 500));
      Rational b = make_rational(rng.integer(1, 500), rng.integer(1, 500));
      CHECK(ExactConst::log_of(a * b) == ExactConst::log_of(a) + ExactConst::log_of(b));
      CHECK(ExactConst::log_of(a).to_double() == doctest::Approx(std::log(a.get_d())).epsilon(1e-13));
    }
  }

  TEST_CASE("ExactConst arithmetic") {
    const ExactConst l2 = ExactConst::log_prime(2), l3 = ExactConst::log_prime(3);
    ExactConst x = ExactConst(make_rational(1, 2)) - l2;
    CHECK(x.rational_part() == make_rational(1, 2));
    CHECK(x.log_coefficient(2) == -1);
    CHECK(x.degree() == 1);
    CHECK((x - x).is_zero());
    CHECK((l2 * l3).degree() == 2);
    CHECK((l2 * l3 - l3 * l2).is_zero());
    CHECK(ExactConst::log_of(Rational(8)) == ExactConst(Rational(3)) * l2);
    CHECK(ExactConst::log_of(Rational(1)).is_zero());
    CHECK((-x).rational_part() == make_rational(-1, 2));
    CHECK(x.to_double() == doctest::Approx(0.5 - std::log(2.0)).epsilon(1e-15));
  }
}
