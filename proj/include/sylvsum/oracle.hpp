#pragma once

// Brute-force ground truth: sieve the representable integers and sum over the
// gaps directly. Shares nothing with the Apery-based formulas.

#include "sylvsum/apery.hpp"
#include "sylvsum/exact.hpp"
#include "sylvsum/numberfield.hpp"

#include <cstdint>
#include <vector>

namespace sylvsum {

struct GapSet {
    std::vector<std::int64_t> gaps; // ascending
    std::int64_t bound;             // sieve horizon actually used
};

/// Sieve reachable[n] = OR_j reachable[n - aj]. Stops after a1 consecutive
/// representable integers, capped at a1 * ak.
GapSet gap_set(const Generators& g);

/// Representability of every integer in [0, bound].
std::vector<bool> representable_up_to(const Generators& g, std::int64_t bound);

std::int64_t oracle_frobenius(const GapSet& gs); // 0 gaps -> -1
BigInt oracle_genus(const GapSet& gs);
BigInt oracle_power_sum(const GapSet& gs, unsigned mu);
/// sum over gaps of lambda^n n^mu.
RingElement oracle_weighted_sum(const GapSet& gs, unsigned mu, const RingElement& lambda);

} // namespace sylvsum
