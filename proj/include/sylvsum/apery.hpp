#pragma once

// Generator sets of numerical semigroups and their minimal residue systems
// (Apery sets with respect to the smallest generator).

#include "sylvsum/sparse_poly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sylvsum {

/// Sorted, duplicate-free, coprime generators a1 < a2 < ... < ak with k >= 2.
class Generators {
public:
    /// Largest accepted generator; keeps every Apery element inside int64.
    static constexpr std::int64_t max_value = std::int64_t{1} << 31;
    /// Largest accepted smallest generator; bounds table sizes.
    static constexpr std::int64_t max_modulus = 10'000'000;

    /// Sorts and deduplicates. Throws std::invalid_argument on nonpositive or
    /// oversized values, fewer than two distinct values, or gcd != 1.
    explicit Generators(std::vector<std::int64_t> values);

    std::span<const std::int64_t> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::int64_t smallest() const { return values_.front(); }
    std::int64_t largest() const { return values_.back(); }

    std::string format() const;

    friend bool operator==(const Generators&, const Generators&) = default;

private:
    std::vector<std::int64_t> values_;
};

/// a, a+d, ..., a+(k-1)d with gcd(a,d) = 1 and 2 <= k <= a.
/// Derived: a-1 = q(k-1) + r with 0 <= r < k-1, and q >= 1.
class ArithProgression {
public:
    ArithProgression(std::int64_t a, std::int64_t d, std::int64_t k);

    std::int64_t a() const { return a_; }
    std::int64_t d() const { return d_; }
    std::int64_t k() const { return k_; }
    std::int64_t q() const { return q_; }
    std::int64_t r() const { return r_; }
    /// The largest generator a + (k-1)d.
    std::int64_t last() const { return a_ + (k_ - 1) * d_; }

    Generators generators() const;

    /// Recognizes a generator set that is an arithmetic progression and meets
    /// the constraints above.
    static std::optional<ArithProgression> detect(const Generators& g);

private:
    std::int64_t a_, d_, k_, q_, r_;
};

/// m[i] is the least representable integer congruent to i mod modulus; m[0] = 0.
struct AperyTable {
    std::int64_t modulus;
    std::vector<std::int64_t> m;

    friend bool operator==(const AperyTable&, const AperyTable&) = default;
};

/// Dijkstra over the residues mod a1, arcs i -> i + aj with weight aj.
AperyTable apery_general(const Generators& g);

/// Row-by-row fill for arithmetic progressions: row s (1 <= s <= q) holds
/// s a + j d for (s-1)(k-1) < j <= s(k-1), the last row (q+1) a + j d for
/// q(k-1) < j <= q(k-1) + r.
AperyTable apery_arith(const ArithProgression& ap);

/// sum_i x^(m_i), a1 terms, constant term from m_0.
SparsePoly apery_polynomial(const AperyTable& t);

} // namespace sylvsum
