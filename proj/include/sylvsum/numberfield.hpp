#pragma once

// Exact arithmetic in Q[t]/(f) for a monic f. Elements are stored in the power
// basis 1, t, ..., t^(n-1). A degree-1 ring (f = x + c0) is the field of
// rationals and every element is a single constant.
//
// Irreducibility of f is not checked when the ring is built. If f is
// reducible this only surfaces when an inversion hits a zero divisor, and that
// raises reducible_modulus with the factor it found.

#include "sylvsum/exact.hpp"

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sylvsum {

class RingElement;

class NumberRing {
public:
    /// Full coefficient list c0..cn of f, lowest degree first. Requires cn == 1
    /// and n >= 1; throws std::invalid_argument otherwise.
    explicit NumberRing(std::vector<BigRational> monic_coeffs);

    static NumberRing rationals();
    /// Q[t]/(Phi_n): t is a primitive n-th root of unity.
    static NumberRing cyclotomic(unsigned n);
    /// Q[t]/(t^n - r).
    static NumberRing pure_root(unsigned n, const BigRational& r);

    std::size_t degree() const { return minpoly_->size() - 1; }
    /// c0..cn with cn == 1.
    const std::vector<BigRational>& minpoly() const { return *minpoly_; }

    RingElement zero() const;
    RingElement one() const;
    /// The class of t (reduced, so in a degree-1 ring it is the constant -c0).
    RingElement generator() const;
    RingElement constant(const BigRational& c) const;
    /// Any coefficient vector; longer inputs are reduced modulo f.
    RingElement element(std::vector<BigRational> coeffs) const;

    bool operator==(const NumberRing& other) const;

    std::string describe() const;

private:
    friend class RingElement;
    std::shared_ptr<const std::vector<BigRational>> minpoly_;
};

class RingElement {
public:
    const NumberRing& ring() const { return ring_; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// All coefficients above the constant term vanish.
    bool is_rational() const;
    const BigRational& constant_term() const { return coeffs_.front(); }

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const RingElement& other);
    RingElement& operator*=(const BigRational& c);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend RingElement operator*(RingElement a, const BigRational& c) { return a *= c; }
    friend RingElement operator*(const BigRational& c, RingElement a) { return a *= c; }
    friend RingElement operator+(RingElement a, const BigRational& c);
    friend RingElement operator-(RingElement a, const BigRational& c);

    /// Ring equality plus coefficient equality.
    friend bool operator==(const RingElement& a, const RingElement& b);

    /// Power-basis text, e.g. "7 + 24*t"; the variable name is configurable.
    std::string format(const std::string& var = "t") const;

private:
    friend class NumberRing;
    RingElement(NumberRing ring, std::vector<BigRational> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}
    void check_same_ring(const RingElement& other, const char* op) const;

    NumberRing ring_;
    std::vector<BigRational> coeffs_;
};

/// x^e by repeated squaring; x^0 = 1.
RingElement pow(const RingElement& x, unsigned long e);

/// Inverse via extended gcd against the modulus. Throws division_by_zero for
/// x == 0 and reducible_modulus when gcd(x, f) is a proper factor of f.
RingElement inverse(const RingElement& x);

/// x^e == 1 exactly.
bool is_power_unity(const RingElement& x, unsigned long e);

/// Picks one complex root of the modulus. A target selects the nearest root;
/// otherwise root_index indexes the roots sorted by argument in [0, 2pi) and
/// then by modulus.
struct Embedding {
    std::optional<std::complex<double>> target;
    std::size_t root_index = 0;

    static Embedding nearest(std::complex<double> z) { return {z, 0}; }
    static Embedding index(std::size_t i) { return {std::nullopt, i}; }
};

/// Approximate roots of the modulus, ordered as described for Embedding.
std::vector<std::complex<double>> complex_roots(const NumberRing& ring);

/// Approximate value of x under the chosen embedding. Display only; nothing
/// here flows back into exact arithmetic. Throws numeric_error if root
/// refinement does not converge.
std::complex<double> numeric_eval(const RingElement& x, const Embedding& embedding);

} // namespace sylvsum
