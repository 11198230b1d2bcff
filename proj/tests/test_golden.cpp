#include <doctest.h>

#include "rrcf/errors.hpp"
#include "rrcf/golden.hpp"
#include "support.hpp"

using namespace rrcf;
using rrcf::test::random_golden;
using rrcf::test::random_nonzero_golden;

TEST_CASE("rational parsing and arithmetic") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse("1.5e-2") == Rational(3, 200));
    CHECK(Rational::parse("7").to_string() == "7");
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("alpha and beta") {
    const GoldenNumber a = alpha();
    const GoldenNumber b = beta();
    CHECK(a + b == GoldenNumber(1));
    CHECK(a * b == GoldenNumber(-1));
    CHECK(b * b == GoldenNumber(Rational(3, 2), Rational(1, 2)));
    // both roots of t^2 - t - 1
    for (const auto& t : {a, b}) CHECK(t * t - t - GoldenNumber(1) == GoldenNumber(0));
    CHECK(GoldenNumber(Rational(1, 2), Rational(1, 2)) + GoldenNumber(Rational(1, 2), Rational(-1, 2)) ==
          GoldenNumber(1));
}

TEST_CASE("beta^5 by repeated multiplication matches numeric power") {
    GoldenNumber p(1);
    for (int i = 0; i < 5; ++i) p = p * beta();
    CHECK(p == GoldenNumber(Rational(11, 2), Rational(5, 2)));
    CHECK(pow(beta(), 5) == p);

    // independent: ((1 + sqrt 5)/2)^5 at 60 digits straight from MPFR
    const Precision prec = Precision::from_digits(60);
    const BigReal golden = (BigReal(1, prec) + sqrt(BigReal(5, prec))) / 2;
    const BigReal direct = golden * golden * golden * golden * golden;
    CHECK(test::close(to_real(p, prec), direct, 50));
}

TEST_CASE("inverse") {
    CHECK(beta().inverse() == -alpha());
    CHECK(GoldenNumber(1).inverse() == GoldenNumber(1));
    CHECK(GoldenNumber(2, 1).inverse() == GoldenNumber(-2, 1));
    CHECK_THROWS_AS((void)GoldenNumber(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(GoldenNumber(1) / GoldenNumber(0), DivisionByZero);
}

TEST_CASE("conjugate") {
    CHECK(alpha().conjugate() == beta());
    CHECK(GoldenNumber(7).conjugate() == GoldenNumber(7));
    for (int i = 0; i < 50; ++i) {
        const GoldenNumber x = random_golden();
        const GoldenNumber y = random_golden();
        CHECK(x.conjugate().conjugate() == x);
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    }
}

TEST_CASE("field axioms on random elements") {
    for (int i = 0; i < 200; ++i) {
        const GoldenNumber x = random_golden();
        const GoldenNumber y = random_golden();
        const GoldenNumber z = random_golden();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x + GoldenNumber(0) == x);
        CHECK(x - x == GoldenNumber(0));
        const GoldenNumber w = random_nonzero_golden();
        CHECK(w * w.inverse() == GoldenNumber(1));
        CHECK(x / w * w == x);
    }
}

TEST_CASE("exact sign and ordering agree with a high-precision evaluation") {
    const Precision prec(256);
    for (int i = 0; i < 200; ++i) {
        const GoldenNumber x = random_golden(50);
        const BigReal v = to_real(x, prec);
        CHECK(x.sign() == v.sign());
    }
    // convergents of sqrt 5 sit alternately above and below it
    CHECK(GoldenNumber(Rational(161, 72), Rational(-1)).sign() == 1);
    CHECK(GoldenNumber(Rational(2889, 1292), Rational(-1)).sign() == 1);
    CHECK(GoldenNumber(Rational(682, 305), Rational(-1)).sign() == -1);
    CHECK(compare(alpha(), beta()) < 0);
    CHECK(compare(beta(), GoldenNumber(Rational(8, 5))) > 0);
}

TEST_CASE("to_real") {
    const Precision p64(64);
    CHECK(to_real(GoldenNumber(0), p64).is_zero());
    CHECK(to_real(alpha() * beta(), p64) == BigReal(-1, p64));
    // sqrt 5 by Newton iteration on doubles then refined in MPFR, independent of mpfr_sqrt
    const Precision hi(200);
    BigReal r(2, hi);
    for (int i = 0; i < 10; ++i) r = (r + BigReal(5, hi) / r) / 2;
    const BigReal expect = (BigReal(1, hi) + r) / 2;
    const BigReal got = to_real(beta(), p64);
    CHECK(abs(BigReal(got).rounded(hi) - expect) <= pow10_neg(19, hi));
    CHECK_THROWS_AS(to_real(beta(), Precision(4)), std::invalid_argument);
    // relative contract for a tiny conjugate-pair value
    const GoldenNumber tiny = pow(alpha(), 40);
    const BigReal t = to_real(tiny, Precision(128));
    const BigReal ref = pow(to_real(alpha(), Precision(400)), 40);
    CHECK(abs(t.rounded(Precision(400)) - ref) <= abs(ref) * pow10_neg(36, Precision(400)));
}

TEST_CASE("parse and render round-trip") {
    CHECK(GoldenNumber::parse("1/2 - 1/2*sqrt5") == alpha());
    CHECK(GoldenNumber::parse("1/2 + 1/2*sqrt5") == beta());
    CHECK(GoldenNumber::parse("-sqrt5") == GoldenNumber(0, -1));
    CHECK(GoldenNumber::parse("0.3") == GoldenNumber(Rational(3, 10)));
    CHECK(beta().to_string() == "1/2 + 1/2*sqrt5");
    CHECK(alpha().to_string() == "1/2 - 1/2*sqrt5");
    CHECK(GoldenNumber(0, 1).to_string() == "sqrt5");
    CHECK(GoldenNumber(0).to_string() == "0");
    for (int i = 0; i < 100; ++i) {
        const GoldenNumber x = random_golden();
        CHECK(GoldenNumber::parse(x.to_string()) == x);
    }
    CHECK_THROWS_AS(GoldenNumber::parse("sqrt7"), ParseError);
    CHECK_THROWS_AS(GoldenNumber::parse("1 +"), ParseError);
}
