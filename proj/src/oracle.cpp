#include "sylvsum/oracle.hpp"

#include <stdexcept>

namespace sylvsum {

std::vector<bool> representable_up_to(const Generators& g, std::int64_t bound) {
    std::vector<bool> reach(static_cast<std::size_t>(bound) + 1, false);
    reach[0] = true;
    for (std::int64_t n = 1; n <= bound; ++n) {
        for (std::int64_t v : g.values()) {
            if (v > n) break;
            if (reach[static_cast<std::size_t>(n - v)]) {
                reach[static_cast<std::size_t>(n)] = true;
                break;
            }
        }
    }
    return reach;
}

GapSet gap_set(const Generators& g) {
    const std::int64_t a1 = g.smallest();
    const std::int64_t cap = a1 * g.largest();
    std::vector<bool> reach{true};
    GapSet out{{}, 0};
    std::int64_t run = 1; // 0 is representable
    std::int64_t n = 0;
    while (run < a1 && n < cap) {
        ++n;
        bool hit = false;
        for (std::int64_t v : g.values()) {
            if (v > n) break;
            if (reach[static_cast<std::size_t>(n - v)]) {
                hit = true;
                break;
            }
        }
        reach.push_back(hit);
        if (hit) {
            ++run;
        } else {
            run = 0;
            out.gaps.push_back(n);
        }
    }
    out.bound = n;
    return out;
}

std::int64_t oracle_frobenius(const GapSet& gs) {
    return gs.gaps.empty() ? -1 : gs.gaps.back();
}

BigInt oracle_genus(const GapSet& gs) { return BigInt(static_cast<unsigned long>(gs.gaps.size())); }

BigInt oracle_power_sum(const GapSet& gs, unsigned mu) {
    BigInt acc = 0;
    for (std::int64_t n : gs.gaps) acc += pow(BigInt(static_cast<long>(n)), mu);
    return acc;
}

RingElement oracle_weighted_sum(const GapSet& gs, unsigned mu, const RingElement& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("weight must be nonzero");
    RingElement acc = lambda.ring().zero();
    RingElement power = lambda.ring().one();
    std::int64_t at = 0;
    for (std::int64_t n : gs.gaps) {
        power *= pow(lambda, static_cast<unsigned long>(n - at));
        at = n;
        acc += power * BigRational(pow(BigInt(static_cast<long>(n)), mu));
    }
    return acc;
}

} // namespace sylvsum
