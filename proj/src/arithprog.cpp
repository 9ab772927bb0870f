#include "sylvsum/arithprog.hpp"

#include "sylvsum/errors.hpp"
#include "sylvsum/sylvester.hpp"

#include <stdexcept>
#include <vector>

namespace sylvsum {

namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

BigRational rational_power(std::int64_t base, long e) {
    if (e >= 0) return BigRational(pow(big(base), static_cast<unsigned long>(e)));
    return BigRational(1) / BigRational(pow(big(base), static_cast<unsigned long>(-e)));
}

void require_admissible(const RingElement& lambda, unsigned mu) {
    if (lambda.is_zero()) throw std::invalid_argument("weight must be nonzero");
    if (lambda.is_one()) {
        throw std::invalid_argument("weight 1 is the unweighted power sum; use power_sum_ap");
    }
    if (mu == 0) throw std::invalid_argument("weighted sums need mu >= 1");
}

} // namespace

std::int64_t frobenius_ap(const ArithProgression& ap) {
    return (ap.a() - 2) / (ap.k() - 1) * ap.a() + (ap.a() - 1) * ap.d();
}

BigInt genus_ap(const ArithProgression& ap) {
    const BigInt twice = big(ap.a() - 1) * big(ap.q() + ap.d()) + big(ap.r()) * big(ap.q() + 1);
    if (!mpz_even_p(twice.get_mpz_t())) {
        throw consistency_error("genus of (" + std::to_string(ap.a()) + "," + std::to_string(ap.d()) +
                                "," + std::to_string(ap.k()) + ") is not an integer");
    }
    return twice / 2;
}

BigInt power_sum_ap(const ArithProgression& ap, unsigned mu) {
    const std::int64_t a = ap.a(), d = ap.d(), k = ap.k(), q = ap.q();
    BigRational acc = 0;
    for (unsigned kappa = 0; kappa <= mu; ++kappa) {
        const BigRational b_kappa = bernoulli(kappa);
        if (b_kappa == 0) continue;
        for (unsigned l = 0; l <= mu + 1 - kappa; ++l) {
            const unsigned e = mu + 1 - kappa - l;
            const BigRational outer = BigRational(binomial(mu + 1, kappa) * binomial(mu + 1 - kappa, l)) *
                                      b_kappa * rational_power(a, static_cast<long>(mu) - static_cast<long>(l)) *
                                      BigRational(pow(big(d), l)) / BigRational(l + 1);
            for (unsigned j = 0; j <= l; ++j) {
                const BigRational b_j = bernoulli(j);
                if (b_j == 0) continue;
                const unsigned f = l + 1 - j;
                BigInt bracket = pow(big(q + 1), e) * pow(big(a), f) - 1;
                for (std::int64_t i = 1; i <= q; ++i) {
                    bracket -= (pow(big(i + 1), e) - pow(big(i), e)) * pow(big(i * (k - 1) + 1), f);
                }
                acc += outer * BigRational(binomial(l + 1, j)) * b_j * BigRational(bracket);
            }
        }
    }
    acc /= BigRational(mu + 1);
    acc += bernoulli(mu + 1) / BigRational(mu + 1) * BigRational(pow(big(a), mu + 1) - 1);
    return require_integer(acc, "arithmetic power sum");
}

SparsePoly residue_polynomial(const ArithProgression& ap) {
    using E = SparsePoly::Exponent;
    const auto a = static_cast<E>(ap.a()), d = static_cast<E>(ap.d());
    const auto k = static_cast<E>(ap.k()), q = static_cast<E>(ap.q()), r = static_cast<E>(ap.r());
    const auto ak = static_cast<E>(ap.last());
    SparsePoly p = SparsePoly::monomial(0);
    p += SparsePoly::monomial(a + d) * SparsePoly::geometric(d, k - 1) * SparsePoly::geometric(ak, q);
    p += SparsePoly::monomial(q * ak + a + d) * SparsePoly::geometric(d, r);
    return p;
}

RingElement bracket_moment(const ArithProgression& ap, unsigned nu, const RingElement& lambda) {
    const SparsePoly p = residue_polynomial(ap);
    RingElement acc = lambda.ring().zero();
    for (unsigned h = 0; h <= nu; ++h) {
        const BigInt s = stirling2(nu, h);
        if (s == 0) continue;
        acc += pow(lambda, h) * p.derivative(h).evaluate(lambda) * BigRational(s);
    }
    return acc;
}

RingElement d_unity_moment(const ArithProgression& ap, unsigned nu, const RingElement& lambda) {
    const std::int64_t a = ap.a(), d = ap.d(), k = ap.k(), q = ap.q(), r = ap.r();
    if (!is_power_unity(lambda, static_cast<unsigned long>(d))) {
        throw wrong_branch("d_unity_moment needs lambda^d = 1");
    }
    // row_weight[s] = lambda^(s a), s = 0..q+1
    std::vector<RingElement> row_weight{lambda.ring().one()};
    const RingElement lam_a = pow(lambda, static_cast<unsigned long>(a));
    for (std::int64_t s = 1; s <= q + 1; ++s) row_weight.push_back(row_weight.back() * lam_a);

    RingElement acc = lambda.ring().zero();
    for (unsigned l = 0; l <= nu; ++l) {
        const unsigned e = nu - l;
        // lambda^(s a) (s a)^(nu - l) for s = 1..q+1
        auto scaled = [&](std::int64_t s) { return row_weight[s] * BigRational(pow(big(s * a), e)); };
        const BigRational outer = BigRational(binomial(nu, l) * pow(big(d), l)) / BigRational(l + 1);
        for (unsigned j = 0; j <= l; ++j) {
            const BigRational b_j = bernoulli(j);
            if (b_j == 0) continue;
            const unsigned f = l + 1 - j;
            RingElement bracket = -scaled(1);
            for (std::int64_t s = 1; s <= q; ++s) {
                bracket -= (scaled(s + 1) - scaled(s)) * BigRational(pow(big(s * (k - 1) + 1), f));
            }
            bracket += scaled(q + 1) * BigRational(pow(big(q * (k - 1) + r + 1), f));
            acc += bracket * (outer * BigRational(binomial(l + 1, j)) * b_j);
        }
    }
    // The row sums cover m_1..m_{a-1}; m_0 = 0 adds 0^0 = 1 at nu = 0.
    if (nu == 0) acc = acc + BigRational(1);
    return acc;
}

RingElement progression_term(std::int64_t j, unsigned l, std::int64_t d, const RingElement& lambda) {
    return pow(lambda, static_cast<unsigned long>(j * d)) * BigRational(pow(big(j), l));
}

RingElement progression_term_stirling(std::int64_t j, unsigned l, std::int64_t d,
                                      const RingElement& lambda) {
    const RingElement x = pow(lambda, static_cast<unsigned long>(d));
    const SparsePoly xj = SparsePoly::monomial(static_cast<SparsePoly::Exponent>(j));
    RingElement acc = lambda.ring().zero();
    for (unsigned h = 0; h <= l; ++h) {
        const BigInt s = stirling2(l, h);
        if (s == 0) continue;
        acc += pow(x, h) * xj.derivative(h).evaluate(x) * BigRational(s);
    }
    return acc;
}

RingElement a_unity_moment(const ArithProgression& ap, unsigned nu, const RingElement& lambda) {
    const std::int64_t a = ap.a(), d = ap.d(), k = ap.k(), q = ap.q(), r = ap.r();
    if (!is_power_unity(lambda, static_cast<unsigned long>(a))) {
        throw wrong_branch("a_unity_moment needs lambda^a = 1");
    }
    // lambda^(j d) for j = 0..a-1
    std::vector<RingElement> step_weight{lambda.ring().one()};
    const RingElement lam_d = pow(lambda, static_cast<unsigned long>(d));
    for (std::int64_t j = 1; j < a; ++j) step_weight.push_back(step_weight.back() * lam_d);

    auto block = [&](std::int64_t from, std::int64_t to, unsigned l) {
        RingElement sum = lambda.ring().zero();
        for (std::int64_t j = from; j <= to; ++j) sum += step_weight[j] * BigRational(pow(big(j), l));
        return sum;
    };

    RingElement acc = lambda.ring().zero();
    for (unsigned l = 0; l <= nu; ++l) {
        const unsigned e = nu - l;
        RingElement rows = lambda.ring().zero();
        for (std::int64_t s = 1; s <= q; ++s) {
            rows += block((s - 1) * (k - 1) + 1, s * (k - 1), l) * BigRational(pow(big(s * a), e));
        }
        rows += block(q * (k - 1) + 1, q * (k - 1) + r, l) * BigRational(pow(big((q + 1) * a), e));
        acc += rows * BigRational(binomial(nu, l) * pow(big(d), l));
    }
    return acc;
}

ApBranch classify(const ArithProgression& ap, const RingElement& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("weight must be nonzero");
    if (lambda.is_one()) throw std::invalid_argument("weight must differ from 1");
    const bool a_unity = is_power_unity(lambda, static_cast<unsigned long>(ap.a()));
    const bool d_unity = is_power_unity(lambda, static_cast<unsigned long>(ap.d()));
    if (a_unity && d_unity) {
        throw std::logic_error("lambda^a = lambda^d = 1 with gcd(a,d) = 1 and lambda != 1");
    }
    if (a_unity) return ApBranch::a_unity;
    if (d_unity) return ApBranch::d_unity;
    return ApBranch::generic;
}

Tagged<RingElement> weighted_sum_ap(const ArithProgression& ap, unsigned mu, const RingElement& lambda) {
    require_admissible(lambda, mu);
    switch (classify(ap, lambda)) {
    case ApBranch::generic: {
        std::vector<RingElement> moments;
        for (unsigned nu = 0; nu <= mu; ++nu) moments.push_back(bracket_moment(ap, nu, lambda));
        return {weighted_sum_from_moments(ap.a(), mu, lambda, moments), Method::ap_generic};
    }
    case ApBranch::d_unity: {
        std::vector<RingElement> moments;
        for (unsigned nu = 0; nu <= mu; ++nu) moments.push_back(d_unity_moment(ap, nu, lambda));
        return {weighted_sum_from_moments(ap.a(), mu, lambda, moments), Method::ap_d_unity};
    }
    case ApBranch::a_unity: {
        std::vector<RingElement> moments{lambda.ring().zero()};
        for (unsigned p = 1; p <= mu + 1; ++p) moments.push_back(a_unity_moment(ap, p, lambda));
        return {unity_sum_from_moments(ap.a(), mu, lambda, moments), Method::ap_a_unity};
    }
    }
    throw std::logic_error("unreachable weight branch");
}

} // namespace sylvsum
