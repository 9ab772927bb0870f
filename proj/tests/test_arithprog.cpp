#include "sylvsum/arithprog.hpp"
#include "sylvsum/errors.hpp"
#include "sylvsum/lambda_spec.hpp"
#include "sylvsum/oracle.hpp"
#include "sylvsum/sylvester.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace sylvsum;

namespace {

RingElement weight(const std::string& text) { return lambda_value(parse_lambda_spec(text)); }
RingElement rational(const BigRational& x) { return NumberRing::rationals().constant(x); }

ArithProgression random_ap(std::mt19937_64& rng) {
    for (;;) {
        const std::int64_t a = std::uniform_int_distribution<std::int64_t>(2, 40)(rng);
        const std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, 15)(rng);
        if (std::gcd(a, d) != 1) continue;
        const std::int64_t k = std::uniform_int_distribution<std::int64_t>(2, std::min<std::int64_t>(a, 8))(rng);
        return ArithProgression(a, d, k);
    }
}

} // namespace

TEST_CASE("Roberts and genus closed forms") {
    CHECK(frobenius_ap(ArithProgression(25, 4, 9)) == 146);
    CHECK(frobenius_ap(ArithProgression(13, 3, 5)) == 62);
    CHECK(frobenius_ap(ArithProgression(2, 1, 2)) == 1);
    CHECK(genus_ap(ArithProgression(13, 3, 5)) == 36);
    CHECK(genus_ap(ArithProgression(14, 3, 6)) == 37);
    CHECK(genus_ap(ArithProgression(2, 1, 2)) == 1);
}

TEST_CASE("power sum closed form") {
    CHECK(power_sum_ap(ArithProgression(13, 3, 5), 4) == 71099730);
    CHECK(power_sum_ap(ArithProgression(25, 4, 10), 6) == BigInt("57956823758511"));
    CHECK(power_sum_ap(ArithProgression(25, 4, 12), 6) == BigInt("36249074667429"));
    for (std::int64_t a = 2; a <= 30; ++a) {
        for (std::int64_t b = a + 1; b <= 30; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const BigInt A(static_cast<long>(a)), B(static_cast<long>(b));
            CHECK(power_sum_ap(ArithProgression(a, b - a, 2), 1) == (A - 1) * (B - 1) * (2 * A * B - A - B - 1) / 12);
        }
    }
}

TEST_CASE("residue polynomial matches the table") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const ArithProgression ap = random_ap(rng);
        CHECK(residue_polynomial(ap) == apery_polynomial(apery_arith(ap)));
    }
}

TEST_CASE("bracket moment") {
    const ArithProgression ap(14, 3, 6);
    const AperyTable t = apery_arith(ap);
    CHECK(residue_polynomial(ap).evaluate(BigInt(1)) == 14);
    CHECK(bracket_moment(ap, 1, rational(7)) == weighted_moment_direct(t, 1, rational(7)));
    const RingElement z3 = pow(weight("zeta(5)"), 3);
    const ArithProgression ap12(12, 5, 7);
    CHECK(bracket_moment(ap12, 2, z3) == weighted_moment(apery_arith(ap12), 2, z3));
}

TEST_CASE("d-unity moment and progression terms") {
    CHECK(progression_term(0, 0, 3, rational(2)).is_one());
    CHECK(progression_term(2, 1, 3, rational(-1)) == rational(2));
    const ArithProgression ap(12, 5, 7);
    const RingElement z = weight("zeta(5)");
    const AperyTable t = apery_arith(ap);
    for (unsigned nu = 0; nu <= 4; ++nu) CHECK(d_unity_moment(ap, nu, z) == weighted_moment_direct(t, nu, z));
    CHECK_THROWS_AS(d_unity_moment(ap, 1, rational(2)), wrong_branch);
    for (std::int64_t j = 0; j < 6; ++j) {
        for (unsigned l = 0; l <= 4; ++l) CHECK(progression_term(j, l, 5, z) == progression_term_stirling(j, l, 5, z));
    }
}

TEST_CASE("a-unity moment skips m_0") {
    const ArithProgression ap(14, 3, 6);
    const AperyTable t = apery_arith(ap);
    for (unsigned nu = 1; nu <= 4; ++nu) {
        CHECK(a_unity_moment(ap, nu, rational(-1)) == weighted_moment_direct(t, nu, rational(-1)));
    }
    CHECK_THROWS_AS(a_unity_moment(ap, 1, rational(2)), wrong_branch);
}

TEST_CASE("dispatch") {
    const ArithProgression ap(14, 3, 6);
    CHECK(classify(ap, rational(7)) == ApBranch::generic);
    CHECK(classify(ap, rational(-1)) == ApBranch::a_unity);
    CHECK(classify(ArithProgression(13, 4, 5), rational(-1)) == ApBranch::d_unity);
    CHECK(classify(ArithProgression(12, 5, 7), weight("zeta(5)")) == ApBranch::d_unity);
    CHECK_THROWS_AS(classify(ap, rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(weighted_sum_ap(ap, 1, rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(weighted_sum_ap(ap, 0, rational(2)), std::invalid_argument);

    const NumberRing gauss({1, 0, 1});
    const Tagged<RingElement> r = weighted_sum_ap(ap, 5, gauss.element({4, 3}));
    CHECK(r.method == Method::ap_generic);
    CHECK(r.value == gauss.element({BigRational(BigInt("58604955584641578954030966530484875253297329000101560480")),
                                    BigRational(BigInt("-69984733631939902694215153740002368436325991046609895240"))}));
    const Tagged<RingElement> alt = weighted_sum_ap(ap, 2, rational(-1));
    CHECK(alt.method == Method::ap_a_unity);
    CHECK(alt.value == rational(-6380));
}

TEST_CASE("random progressions against Apery and the oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const ArithProgression ap = random_ap(rng);
        const GapSet gs = gap_set(ap.generators());
        const AperyTable t = apery_general(ap.generators());
        CHECK(frobenius_ap(ap) == oracle_frobenius(gs));
        CHECK(genus_ap(ap) == oracle_genus(gs));
        for (unsigned mu = 0; mu <= 5; ++mu) {
            const BigInt want = oracle_power_sum(gs, mu);
            CHECK(power_sum_ap(ap, mu) == want);
            CHECK(power_sum(t, mu) == want);
        }
    }
    const std::vector<std::string> weights{"2", "-1/2", "-1", "root(3,2)", "zeta(5)", "zeta(3)"};
    for (int trial = 0; trial < 30; ++trial) {
        const ArithProgression ap = random_ap(rng);
        const GapSet gs = gap_set(ap.generators());
        for (const std::string& w : weights) {
            const RingElement lam = weight(w);
            for (unsigned mu = 1; mu <= 3; ++mu) {
                CHECK_MESSAGE(weighted_sum_ap(ap, mu, lam).value == oracle_weighted_sum(gs, mu, lam),
                              ap.generators().format() << " lambda=" << w << " mu=" << mu);
            }
        }
    }
}
