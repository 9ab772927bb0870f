#include "sylvsum/errors.hpp"
#include "sylvsum/numberfield.hpp"
#include "sylvsum/qpoly.hpp"
#include "sylvsum/serialize.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace sylvsum;

namespace {

RingElement random_element(const NumberRing& ring, std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    for (;;) {
        std::vector<BigRational> c(ring.degree());
        for (auto& x : c) x = BigRational(num(rng), den(rng)), x.canonicalize();
        RingElement e = ring.element(c);
        if (!nonzero || !e.is_zero()) return e;
    }
}

std::vector<NumberRing> test_rings() {
    return {NumberRing::rationals(), NumberRing::pure_root(3, 2), NumberRing::cyclotomic(5),
            NumberRing({1, 0, 1}), NumberRing::cyclotomic(12)};
}

} // namespace

TEST_CASE("ring construction") {
    CHECK(NumberRing::rationals().degree() == 1);
    CHECK(NumberRing::pure_root(3, 2).minpoly() == std::vector<BigRational>{-2, 0, 0, 1});
    CHECK(NumberRing::cyclotomic(5).minpoly() == std::vector<BigRational>{1, 1, 1, 1, 1});
    CHECK(NumberRing::cyclotomic(12).minpoly() == std::vector<BigRational>{1, 0, -1, 0, 1});
    CHECK(NumberRing::cyclotomic(1).minpoly() == std::vector<BigRational>{-1, 1});
    CHECK_THROWS_AS(NumberRing({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(NumberRing({1}), std::invalid_argument);
    CHECK(NumberRing::cyclotomic(5).describe() == "Q[t]/(t^4 + t^3 + t^2 + t + 1)");
}

TEST_CASE("cyclotomic degrees are Euler phi") {
    const std::vector<int> phi{0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8, 16, 6, 18, 8};
    for (unsigned n = 1; n <= 20; ++n) CHECK(qpoly::degree(qpoly::cyclotomic(n)) == phi[n]);
}

TEST_CASE("element arithmetic") {
    const NumberRing cbrt2 = NumberRing::pure_root(3, 2);
    const RingElement t = cbrt2.generator();
    CHECK(t * pow(t, 2) == cbrt2.constant(2));
    CHECK(pow(t, 6) == cbrt2.constant(4));

    const NumberRing z5 = NumberRing::cyclotomic(5);
    const RingElement z = z5.generator();
    CHECK((pow(z, 4) * z).is_one());
    CHECK(pow(z, 12) == pow(z, 2));

    const NumberRing gauss({1, 0, 1});
    const RingElement w = gauss.element({4, 3});
    CHECK(w * w == gauss.element({7, 24}));

    CHECK(pow(NumberRing::rationals().constant(-1), 14).is_one());
    CHECK_THROWS_AS(t + z, ring_mismatch);
}

TEST_CASE("inverses") {
    CHECK(inverse(NumberRing::rationals().constant(2)) == NumberRing::rationals().constant(BigRational(1, 2)));
    const NumberRing cbrt2 = NumberRing::pure_root(3, 2);
    CHECK(inverse(cbrt2.generator()) == cbrt2.element({0, 0, BigRational(1, 2)}));
    const NumberRing z5 = NumberRing::cyclotomic(5);
    CHECK(inverse(z5.generator()) == z5.element({-1, -1, -1, -1}));
    CHECK_THROWS_AS(inverse(z5.zero()), division_by_zero);
}

TEST_CASE("reducible modulus reports its factor") {
    const NumberRing split({-1, 0, 1}); // t^2 - 1 = (t-1)(t+1)
    try {
        (void)inverse(split.generator() - BigRational(1));
        FAIL("expected reducible_modulus");
    } catch (const reducible_modulus& e) {
        CHECK(e.factor() == "t - 1");
    }
}

TEST_CASE("power of unity") {
    const RingElement z = NumberRing::cyclotomic(5).generator();
    CHECK(is_power_unity(z, 5));
    CHECK_FALSE(is_power_unity(z, 12));
    CHECK_FALSE(is_power_unity(NumberRing::rationals().constant(-1), 3));
    for (unsigned n : {3u, 4u, 5u, 7u, 8u, 12u}) {
        const RingElement g = NumberRing::cyclotomic(n).generator();
        for (unsigned m = 1; m <= 4 * n; ++m) CHECK(is_power_unity(g, m) == (m % n == 0));
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(7);
    for (const NumberRing& ring : test_rings()) {
        for (int i = 0; i < 200; ++i) {
            const RingElement x = random_element(ring, rng), y = random_element(ring, rng),
                              z = random_element(ring, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * ring.one() == x);
            CHECK(x + (-x) == ring.zero());
        }
        for (int i = 0; i < 100; ++i) {
            const RingElement x = random_element(ring, rng, true);
            CHECK((x * inverse(x)).is_one());
        }
        std::uniform_int_distribution<unsigned long> e(0, 64);
        for (int i = 0; i < 20; ++i) {
            const RingElement x = random_element(ring, rng);
            const unsigned long a = e(rng), b = e(rng);
            CHECK(pow(x, a + b) == pow(x, a) * pow(x, b));
        }
    }
}

TEST_CASE("numeric embeddings") {
    const NumberRing cbrt2 = NumberRing::pure_root(3, 2);
    const auto real_root = numeric_eval(cbrt2.generator(), Embedding::nearest({1.26, 0}));
    CHECK(real_root.real() == doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
    CHECK(std::abs(real_root.imag()) < 1e-14);

    const auto z = numeric_eval(NumberRing::cyclotomic(5).generator(), Embedding::index(0));
    CHECK(z.real() == doctest::Approx(std::cos(2 * std::numbers::pi / 5)).epsilon(1e-14));
    CHECK(z.imag() == doctest::Approx(std::sin(2 * std::numbers::pi / 5)).epsilon(1e-14));

    const NumberRing gauss({1, 0, 1});
    const auto w = numeric_eval(gauss.element({4, 3}), Embedding::index(0));
    CHECK(w.real() == doctest::Approx(4).epsilon(1e-14));
    CHECK(w.imag() == doctest::Approx(3).epsilon(1e-14));
    CHECK_THROWS_AS(numeric_eval(gauss.one(), Embedding::index(2)), std::out_of_range);

    const auto roots = complex_roots(NumberRing::cyclotomic(7));
    REQUIRE(roots.size() == 6);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        CHECK(std::arg(roots[i]) == doctest::Approx(std::remainder(2 * std::numbers::pi * (i + 1) / 7, 2 * std::numbers::pi)));
    }
}

TEST_CASE("json round trip") {
    const NumberRing z5 = NumberRing::cyclotomic(5);
    const RingElement x = z5.element({BigRational(-3, 7), 0, 5, BigRational(1, 2)});
    const nlohmann::json j = to_json(x);
    CHECK(j["coeffs"][0] == "-3/7");
    CHECK(ring_element_from_json(nlohmann::json::parse(j.dump())) == x);
    CHECK_THROWS(ring_element_from_json(nlohmann::json{{"coeffs", {"1"}}}));
}
