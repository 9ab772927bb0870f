#include "sylvsum/qpoly.hpp"

#include "sylvsum/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace sylvsum::qpoly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

Poly scale(const Poly& a, const BigRational& c) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    trim(out);
    return out;
}

DivMod divmod(const Poly& num, const Poly& den) {
    if (den.empty()) throw division_by_zero("polynomial division by zero");
    Poly rem = num;
    trim(rem);
    const int dd = degree(den);
    if (degree(rem) < dd) return {{}, rem};
    Poly quot(rem.size() - den.size() + 1);
    const BigRational lead = den.back();
    for (int i = degree(rem); i >= dd; --i) {
        BigRational c = rem[i] / lead;
        if (c == 0) continue;
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
    trim(rem);
    trim(quot);
    return {quot, rem};
}

Bezout xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    trim(r0);
    trim(r1);
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        DivMod qr = divmod(r0, r1);
        Poly s2 = sub(s0, mul(qr.quotient, s1));
        Poly t2 = sub(t0, mul(qr.quotient, t1));
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {{}, {}, {}};
    BigRational inv = 1 / r0.back();
    return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

Poly cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic polynomial index must be positive");
    static std::mutex mutex;
    static std::map<unsigned, Poly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    Poly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        DivMod qr = divmod(p, cyclotomic(d));
        if (!qr.remainder.empty()) {
            throw consistency_error("cyclotomic division left a remainder");
        }
        p = std::move(qr.quotient);
    }
    std::lock_guard lock(mutex);
    cache.emplace(n, p);
    return p;
}

std::string format(const Poly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    for (int i = degree(p); i >= 0; --i) {
        const BigRational& c = p[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        BigRational mag = negative ? BigRational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = mag == 1 && i > 0;
        if (!unit) out += to_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace sylvsum::qpoly
