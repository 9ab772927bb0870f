#include "sylvsum/sparse_poly.hpp"

namespace sylvsum {

SparsePoly SparsePoly::monomial(Exponent e, BigInt c) {
    SparsePoly p;
    p.add_term(e, c);
    return p;
}

SparsePoly SparsePoly::geometric(Exponent step, std::uint64_t count) {
    SparsePoly p;
    for (std::uint64_t i = 0; i < count; ++i) p.add_term(i * step, 1);
    return p;
}

SparsePoly::Exponent SparsePoly::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

BigInt SparsePoly::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SparsePoly::add_term(Exponent e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

SparsePoly SparsePoly::derivative(unsigned h) const {
    SparsePoly out;
    for (const auto& [e, c] : terms_) {
        if (e < h) continue;
        BigInt falling = 1;
        for (unsigned i = 0; i < h; ++i) falling *= BigInt(static_cast<unsigned long>(e - i));
        out.add_term(e - h, c * falling);
    }
    return out;
}

BigInt SparsePoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (const auto& [e, c] : terms_) acc += c * pow(x, e);
    return acc;
}

RingElement SparsePoly::evaluate(const RingElement& x) const {
    // Ascending exponents; the running power advances by the gap to the next term.
    RingElement acc = x.ring().zero();
    RingElement power = x.ring().one();
    Exponent at = 0;
    for (const auto& [e, c] : terms_) {
        if (e > at) {
            power *= pow(x, e - at);
            at = e;
        }
        acc += power * BigRational(c);
    }
    return acc;
}

std::string SparsePoly::format(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (e == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += var;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace sylvsum
