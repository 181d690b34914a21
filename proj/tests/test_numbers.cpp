#include <doctest.h>

#include "oracle.hpp"
#include "repvar/laurent.hpp"
#include "repvar/numbers.hpp"

using namespace repvar;

TEST_CASE("cyclotomic polynomials and euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(24) == 8);
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity") {
  CHECK(cyc_make(1, 0).is_one());
  Cyc w = cyc_make(3, 1);
  CHECK((w + cyc_make(3, 2) + Cyc(1)).is_zero());
  Cyc eta = cyc_make(6, 1);
  CHECK((eta * eta - eta + Cyc(1)).is_zero());
  CHECK(Cyc::zeta(12).inverse() == Cyc::zeta(12, 11));
  CHECK(Cyc::zeta(12).pow(2) == cyc_make(6, 1));
  CHECK(Cyc::zeta(4).conj() == -Cyc::zeta(4));
  CHECK(Cyc::zeta(24).pow(24).is_one());
}

TEST_CASE("arithmetic agrees with the complex embedding") {
  Cyc a = Cyc(Rational(3, 7)) + Cyc(2) * Cyc::zeta(24, 5) - Cyc::zeta(24, 11);
  Cyc b = Cyc(1) - Cyc::zeta(8) * Cyc(Rational(-5, 2));
  CHECK(oracle::close(oracle::value(a * b), oracle::value(a) * oracle::value(b)));
  CHECK(oracle::close(oracle::value(a / b), oracle::value(a) / oracle::value(b)));
  CHECK(oracle::close(oracle::value(a.inverse()), 1.0 / oracle::value(a)));
  CHECK(oracle::close(oracle::value(a.conj()), std::conj(oracle::value(a))));
  CHECK((a * a.inverse()).is_one());
}

TEST_CASE("mixed orders") {
  Cyc x = Cyc::zeta(3) + Cyc::zeta(12);
  CHECK(x.order() == 12);
  CHECK(oracle::close(oracle::value(x), oracle::root(3, 1) + oracle::root(12, 1)));
  CHECK_THROWS_AS(Cyc::zeta(3) + Cyc::zeta(4), FieldMismatch);
  CHECK((Cyc(2) * Cyc::zeta(5)).order() == 5);
  CHECK_THROWS_AS(Cyc(1) / Cyc(0), DivisionByZero);
  CHECK_THROWS_AS(Cyc(0).inverse(), DivisionByZero);
}

TEST_CASE("parsing field elements") {
  CHECK(parse_cyc("zeta(6)^2 - zeta(6) + 1", 12).is_zero());
  CHECK(parse_cyc("3/4", 24) == Cyc(Rational(3, 4)));
  CHECK(parse_cyc("i", 24) == Cyc::zeta(4));
  CHECK(parse_cyc("(1 + i)^2 / 2", 24) == Cyc::zeta(4));
  CHECK(parse_cyc("sqrt(-3)", 12) * parse_cyc("sqrt(-3)", 12) == Cyc(-3));
  CHECK(parse_cyc("zeta(12)", 24).order() == 24);
  CHECK_THROWS_AS(parse_cyc("zeta(5)", 24), FieldMismatch);
  CHECK_THROWS_AS(parse_cyc("sqrt((3 + sqrt(5)) / 2)", 24), UnrepresentableInput);
  CHECK_THROWS_AS(parse_cyc("1 +", 24), SyntaxError);
  CHECK_THROWS_AS(parse_cyc("1/0", 24), DivisionByZero);
}

TEST_CASE("printing round trips through the parser") {
  Cyc a = Cyc(Rational(-3, 2)) + Cyc::zeta(24, 7) * Cyc(5);
  CHECK(parse_cyc(a.str(), 24) == a);
  CHECK(Cyc(0).str() == "0");
}

TEST_CASE("laurent gcd") {
  LaurentPoly a = parse_laurent("t^2 - 1", 1), b = parse_laurent("t^3 - 1", 1);
  CHECK(laurent_gcd(a, b) == parse_laurent("t - 1", 1));
  LaurentPoly p = parse_laurent("2*t^3 - 4*t", 1);
  CHECK(laurent_gcd(std::vector<LaurentPoly>{p}) == p.normalized());
  CHECK(laurent_gcd(parse_laurent("t^2 - t + 1", 1), parse_laurent("2*t^2 - 2*t + 2", 1)) ==
        parse_laurent("t^2 - t + 1", 1));
  CHECK(associated(parse_laurent("t^-1 - 1 + t", 1), parse_laurent("3*t^2 - 3*t + 3", 1)));
  CHECK(laurent_gcd(LaurentPoly(), LaurentPoly()).is_zero());
}

TEST_CASE("laurent evaluation") {
  LaurentPoly d = parse_laurent("t^2 - t + 1", 1);
  CHECK(laurent_eval(d, cyc_make(6, 1)).is_zero());
  LaurentPoly q = parse_laurent("2*t^2 - 5*t + t^-1", 1);
  CHECK(laurent_eval(q, Cyc(1)) == Cyc(-2));
  LaurentPoly f = parse_laurent("t^2 - 3*t + 1", 1);
  Cyc v = laurent_eval(f, cyc_make(6, 1));
  CHECK(!v.is_zero());
  CHECK(oracle::close(oracle::value(v), oracle::eval(f, oracle::root(6, 1))));
  CHECK_THROWS_AS(laurent_eval(q, Cyc(0)), EvalAtZero);
}

TEST_CASE("laurent division and derivative") {
  LaurentPoly a = parse_laurent("t^3 - 1", 1), b = parse_laurent("t - 1", 1);
  CHECK(a / b == parse_laurent("t^2 + t + 1", 1));
  CHECK(parse_laurent("t^2 - t + 1", 1).derivative() == parse_laurent("2*t - 1", 1));
  CHECK(parse_laurent("t^2 - 3*t", 1).invert_variable() == parse_laurent("t^-2 - 3*t^-1", 1));
  CHECK(parse_laurent("t^-1", 1).derivative() == parse_laurent("-t^-2", 1));
}
