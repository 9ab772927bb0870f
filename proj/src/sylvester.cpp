#include "sylvsum/sylvester.hpp"

#include "sylvsum/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sylvsum {

namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

// sum_{i>=1} m_i^p for p = 0..max_p; index 0 counts the a1 - 1 nonzero entries.
std::vector<BigInt> residue_power_sums(const AperyTable& t, unsigned max_p) {
    std::vector<BigInt> sums(max_p + 1, 0);
    for (std::size_t i = 1; i < t.m.size(); ++i) {
        BigInt x = big(t.m[i]);
        BigInt p = 1;
        for (unsigned e = 0; e <= max_p; ++e) {
            sums[e] += p;
            p *= x;
        }
    }
    return sums;
}

// lambda^(m_i) for every residue, walking the m_i in increasing order.
std::vector<RingElement> residue_weights(const AperyTable& t, const RingElement& lambda) {
    std::vector<std::size_t> order(t.m.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return t.m[x] < t.m[y]; });
    std::vector<RingElement> out(t.m.size(), lambda.ring().one());
    RingElement power = lambda.ring().one();
    std::int64_t at = 0;
    for (std::size_t i : order) {
        power *= pow(lambda, static_cast<unsigned long>(t.m[i] - at));
        at = t.m[i];
        out[i] = power;
    }
    return out;
}

RingElement moment_from_weights(const AperyTable& t, unsigned nu,
                                const std::vector<RingElement>& weights, std::size_t first) {
    RingElement acc = weights.front().ring().zero();
    for (std::size_t i = first; i < t.m.size(); ++i) {
        acc += weights[i] * BigRational(pow(big(t.m[i]), nu));
    }
    return acc;
}

// (-a)^n C(mu,n) style coefficients want a^(n-1) for n = 0 as a rational.
BigRational rational_power(std::int64_t base, long e) {
    if (e >= 0) return BigRational(pow(big(base), static_cast<unsigned long>(e)));
    return BigRational(1) / BigRational(pow(big(base), static_cast<unsigned long>(-e)));
}

void require_weight(const RingElement& lambda, unsigned mu) {
    if (lambda.is_zero()) throw std::invalid_argument("weight must be nonzero");
    if (lambda.is_one()) {
        throw std::invalid_argument("weight 1 is the unweighted power sum; use power_sum");
    }
    if (mu == 0) throw std::invalid_argument("weighted sums need mu >= 1");
}

// (-1)^(mu+1) / (lambda - 1)^(mu+1) * sum_j coeff_j lambda^j for the given
// Eulerian coefficient list.
RingElement negative_tail(const RingElement& lambda, unsigned mu,
                          const std::vector<std::pair<unsigned, BigInt>>& terms) {
    RingElement sum = lambda.ring().zero();
    for (const auto& [j, c] : terms) sum += pow(lambda, j) * BigRational(c);
    RingElement scale = pow(inverse(lambda - BigRational(1)), mu + 1);
    if ((mu + 1) % 2 == 1) scale = -scale;
    return scale * sum;
}

} // namespace

std::int64_t frobenius(const AperyTable& t) {
    return *std::max_element(t.m.begin(), t.m.end()) - t.modulus;
}

BigInt genus(const AperyTable& t) {
    const std::vector<BigInt> sums = residue_power_sums(t, 1);
    BigRational n = BigRational(sums[1]) / BigRational(big(t.modulus)) -
                    make_rational(big(t.modulus - 1), 2);
    return require_integer(n, "genus");
}

BigInt power_sum(const AperyTable& t, unsigned mu) {
    const std::int64_t a = t.modulus;
    const std::vector<BigInt> sums = residue_power_sums(t, mu + 1);
    BigRational acc = 0;
    for (unsigned kappa = 0; kappa <= mu; ++kappa) {
        const BigRational b = bernoulli(kappa);
        if (b == 0) continue;
        acc += BigRational(binomial(mu + 1, kappa)) * b * rational_power(a, static_cast<long>(kappa) - 1) *
               BigRational(sums[mu + 1 - kappa]);
    }
    acc /= BigRational(mu + 1);
    acc += bernoulli(mu + 1) / BigRational(mu + 1) * BigRational(pow(big(a), mu + 1) - 1);
    return require_integer(acc, "power sum");
}

RingElement weighted_moment_direct(const AperyTable& t, unsigned nu, const RingElement& lambda) {
    return moment_from_weights(t, nu, residue_weights(t, lambda), 0);
}

RingElement weighted_moment_stirling(const AperyTable& t, unsigned nu, const RingElement& lambda) {
    const SparsePoly p = apery_polynomial(t);
    RingElement acc = lambda.ring().zero();
    for (unsigned h = 0; h <= nu; ++h) {
        const BigInt s = stirling2(nu, h);
        if (s == 0) continue;
        acc += pow(lambda, h) * p.derivative(h).evaluate(lambda) * BigRational(s);
    }
    return acc;
}

RingElement weighted_moment(const AperyTable& t, unsigned nu, const RingElement& lambda) {
    RingElement direct = weighted_moment_direct(t, nu, lambda);
    RingElement via_derivatives = weighted_moment_stirling(t, nu, lambda);
    if (!(direct == via_derivatives)) {
        throw consistency_error("weighted moment routes disagree: " + direct.format() + " vs " +
                                via_derivatives.format());
    }
    return direct;
}

RingElement weighted_sum_from_moments(std::int64_t modulus, unsigned mu, const RingElement& lambda,
                                      std::span<const RingElement> moments) {
    if (moments.size() < mu + 1) throw std::invalid_argument("need moments 0..mu");
    const RingElement lam_a = pow(lambda, static_cast<unsigned long>(modulus));
    if (lam_a.is_one()) throw wrong_branch("lambda^a1 = 1; use the unity formula");
    const RingElement inv = inverse(lam_a - BigRational(1));

    RingElement total = lambda.ring().zero();
    RingElement inv_power = inv;
    for (unsigned n = 0; n <= mu; ++n) {
        RingElement eul = lambda.ring().zero();
        RingElement lam_ja = lambda.ring().one();
        for (unsigned j = 0; j <= n; ++j) {
            eul += lam_ja * BigRational(eulerian(n, static_cast<long>(n - j)));
            lam_ja *= lam_a;
        }
        BigInt coeff = binomial(mu, n) * pow(big(-modulus), n);
        total += inv_power * eul * moments[mu - n] * BigRational(coeff);
        inv_power *= inv;
    }
    std::vector<std::pair<unsigned, BigInt>> tail;
    for (unsigned j = 0; j <= mu; ++j) tail.emplace_back(j, eulerian(mu, static_cast<long>(mu - j)));
    return total + negative_tail(lambda, mu, tail);
}

RingElement weighted_sum_general(const AperyTable& t, unsigned mu, const RingElement& lambda) {
    require_weight(lambda, mu);
    if (is_power_unity(lambda, static_cast<unsigned long>(t.modulus))) {
        throw wrong_branch("lambda^a1 = 1; use weighted_sum_unity_a");
    }
    std::vector<RingElement> moments;
    for (unsigned nu = 0; nu <= mu; ++nu) moments.push_back(weighted_moment(t, nu, lambda));
    return weighted_sum_from_moments(t.modulus, mu, lambda, moments);
}

RingElement unity_sum_from_moments(std::int64_t modulus, unsigned mu, const RingElement& lambda,
                                   std::span<const RingElement> moments) {
    if (moments.size() < mu + 2) throw std::invalid_argument("need moments 1..mu+1");
    RingElement total = lambda.ring().zero();
    for (unsigned n = 0; n <= mu; ++n) {
        const BigRational b = bernoulli(n);
        if (b == 0) continue;
        total += moments[mu + 1 - n] *
                 (BigRational(binomial(mu + 1, n)) * b * rational_power(modulus, static_cast<long>(n) - 1));
    }
    total *= BigRational(1) / BigRational(mu + 1);
    std::vector<std::pair<unsigned, BigInt>> tail;
    for (unsigned j = 0; j < mu; ++j) tail.emplace_back(j + 1, eulerian(mu, static_cast<long>(j)));
    return total + negative_tail(lambda, mu, tail);
}

namespace {

void require_unity(const AperyTable& t, unsigned mu, const RingElement& lambda) {
    require_weight(lambda, mu);
    if (!is_power_unity(lambda, static_cast<unsigned long>(t.modulus))) {
        throw wrong_branch("lambda^a1 != 1; use weighted_sum_general");
    }
}

} // namespace

RingElement weighted_sum_unity_a_residue_form(const AperyTable& t, unsigned mu,
                                              const RingElement& lambda) {
    require_unity(t, mu, lambda);
    const std::vector<RingElement> weights = residue_weights(t, lambda);
    RingElement total = lambda.ring().zero();
    for (unsigned n = 0; n <= mu; ++n) {
        const BigRational b = bernoulli(n);
        if (b == 0) continue;
        const unsigned p = mu + 1 - n;
        RingElement inner = lambda.ring().zero();
        for (std::size_t i = 1; i < t.m.size(); ++i) {
            // i is the residue of m_i modulo a1 by construction of the table.
            BigInt diff = pow(big(t.m[i]), p) - pow(big(static_cast<std::int64_t>(i)), p);
            inner += weights[i] * BigRational(diff);
        }
        total += inner * (BigRational(binomial(mu + 1, n)) * b *
                          rational_power(t.modulus, static_cast<long>(n) - 1));
    }
    return total * (BigRational(1) / BigRational(mu + 1));
}

RingElement weighted_sum_unity_a_tail_form(const AperyTable& t, unsigned mu,
                                           const RingElement& lambda) {
    require_unity(t, mu, lambda);
    const std::vector<RingElement> weights = residue_weights(t, lambda);
    std::vector<RingElement> moments{lambda.ring().zero()};
    for (unsigned p = 1; p <= mu + 1; ++p) moments.push_back(moment_from_weights(t, p, weights, 1));
    return unity_sum_from_moments(t.modulus, mu, lambda, moments);
}

RingElement weighted_sum_unity_a(const AperyTable& t, unsigned mu, const RingElement& lambda) {
    RingElement residue_form = weighted_sum_unity_a_residue_form(t, mu, lambda);
    RingElement tail_form = weighted_sum_unity_a_tail_form(t, mu, lambda);
    if (!(residue_form == tail_form)) {
        throw consistency_error("lambda^a1 = 1 forms disagree: " + residue_form.format() + " vs " +
                                tail_form.format());
    }
    return tail_form;
}

Tagged<RingElement> weighted_sum(const AperyTable& t, unsigned mu, const RingElement& lambda) {
    require_weight(lambda, mu);
    if (is_power_unity(lambda, static_cast<unsigned long>(t.modulus))) {
        return {weighted_sum_unity_a(t, mu, lambda), Method::unity_a};
    }
    return {weighted_sum_general(t, mu, lambda), Method::general_apery};
}

Tagged<RingElement> weighted_sum(const Generators& g, unsigned mu, const RingElement& lambda) {
    return weighted_sum(apery_general(g), mu, lambda);
}

GapSummary summarize(const AperyTable& t, std::span<const unsigned> mus,
                     std::span<const LabeledWeight> weights) {
    GapSummary s{frobenius(t), genus(t), {}, {}};
    for (unsigned mu : mus) {
        s.power_sums.emplace(mu, Tagged<BigInt>{power_sum(t, mu), Method::general_apery});
        if (mu == 0) continue;
        for (const LabeledWeight& w : weights) {
            s.weighted_sums.emplace(std::make_pair(mu, w.label), weighted_sum(t, mu, w.value));
        }
    }
    return s;
}

} // namespace sylvsum
