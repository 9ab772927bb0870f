#pragma once

// Sparse polynomials with integer coefficients and nonnegative exponents.
// Apery-set polynomials have a handful of terms spread over large degrees, so
// terms are kept as a sorted exponent -> coefficient list.

#include "sylvsum/exact.hpp"
#include "sylvsum/numberfield.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace sylvsum {

class SparsePoly {
public:
    using Exponent = std::uint64_t;

    SparsePoly() = default;
    static SparsePoly monomial(Exponent e, BigInt c = 1);
    /// 1 + x^step + x^(2 step) + ... + x^((count-1) step); zero when count == 0.
    static SparsePoly geometric(Exponent step, std::uint64_t count);

    const std::map<Exponent, BigInt>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Zero polynomial reports degree 0.
    Exponent degree() const;
    BigInt coefficient(Exponent e) const;

    void add_term(Exponent e, const BigInt& c);

    SparsePoly& operator+=(const SparsePoly& other);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

    /// h-th formal derivative.
    SparsePoly derivative(unsigned h) const;

    BigInt evaluate(const BigInt& x) const;
    RingElement evaluate(const RingElement& x) const;

    std::string format(const std::string& var = "x") const;

private:
    std::map<Exponent, BigInt> terms_;
};

} // namespace sylvsum
