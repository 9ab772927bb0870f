#include "sylvsum/lambda_spec.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sylvsum;

TEST_CASE("rational weights") {
    const LambdaSpec s = parse_lambda_spec(" -1 / 2 ");
    REQUIRE(std::holds_alternative<RationalWeight>(s.kind));
    CHECK(std::get<RationalWeight>(s.kind).value == BigRational(-1, 2));
    CHECK(s.text == "-1/2");
    CHECK(lambda_value(s) == NumberRing::rationals().constant(BigRational(-1, 2)));
}

TEST_CASE("root and zeta weights") {
    const LambdaSpec r = parse_lambda_spec("root(3, 2)");
    REQUIRE(std::holds_alternative<RootWeight>(r.kind));
    CHECK(lambda_value(r).ring().minpoly() == std::vector<BigRational>{-2, 0, 0, 1});
    CHECK(lambda_value(r) == lambda_value(r).ring().generator());
    const auto real = numeric_eval(lambda_value(r), default_embedding(r));
    CHECK(real.real() == doctest::Approx(std::cbrt(2.0)));

    const LambdaSpec z = parse_lambda_spec("zeta(5)");
    REQUIRE(std::holds_alternative<ZetaWeight>(z.kind));
    CHECK(is_power_unity(lambda_value(z), 5));
    const auto e = numeric_eval(lambda_value(z), default_embedding(z));
    CHECK(e.imag() == doctest::Approx(std::sin(2 * std::numbers::pi / 5)));
}

TEST_CASE("custom elements") {
    const LambdaSpec s = parse_lambda_spec("elem(minpoly=[1,0,1]; coeffs=[4,3])");
    REQUIRE(std::holds_alternative<CustomWeight>(s.kind));
    const RingElement w = lambda_value(s);
    CHECK(w * w == w.ring().element({7, 24}));
    const auto v = numeric_eval(w, default_embedding(s));
    CHECK(v.real() == doctest::Approx(4));
    CHECK(v.imag() == doctest::Approx(3));
}

TEST_CASE("malformed weights") {
    for (const char* bad : {"", "abc", "root(0,2)", "root(3)", "zeta(0)", "zeta(x)", "1/0",
                            "elem(minpoly=[1,2];coeffs=[1])", "elem(minpoly=[1,0,1];coeffs=[])"}) {
        CHECK_THROWS_AS_MESSAGE(lambda_value(parse_lambda_spec(bad)), std::invalid_argument, bad);
    }
}

TEST_CASE("weights must avoid 0 and 1") {
    CHECK_THROWS_AS(make_weight(parse_lambda_spec("0")), std::invalid_argument);
    CHECK_THROWS_AS(make_weight(parse_lambda_spec("1")), std::invalid_argument);
    CHECK_THROWS_AS(make_weight(parse_lambda_spec("zeta(1)")), std::invalid_argument);
    CHECK(make_weight(parse_lambda_spec("-1")).label == "-1");
}
