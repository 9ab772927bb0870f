#include "sylvsum/apery.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sylvsum {

Generators::Generators(std::vector<std::int64_t> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.size() < 2) {
        throw std::invalid_argument("need at least two distinct generators");
    }
    if (values_.front() <= 0) {
        throw std::invalid_argument("generators must be positive");
    }
    if (values_.back() > max_value) {
        throw std::invalid_argument("generator exceeds " + std::to_string(max_value));
    }
    if (values_.front() > max_modulus) {
        throw std::invalid_argument("smallest generator exceeds " + std::to_string(max_modulus));
    }
    std::int64_t g = 0;
    for (std::int64_t v : values_) g = std::gcd(g, v);
    if (g != 1) {
        throw std::invalid_argument("generators " + format() + " have gcd " + std::to_string(g) +
                                    ", expected 1");
    }
}

std::string Generators::format() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values_[i]);
    }
    return out;
}

ArithProgression::ArithProgression(std::int64_t a, std::int64_t d, std::int64_t k)
    : a_(a), d_(d), k_(k) {
    if (a < 2 || d < 1) {
        throw std::invalid_argument("arithmetic progression needs a >= 2 and d >= 1");
    }
    if (k < 2 || k > a) {
        throw std::invalid_argument("arithmetic progression needs 2 <= k <= a (a=" +
                                    std::to_string(a) + ", k=" + std::to_string(k) + ")");
    }
    if (std::gcd(a, d) != 1) {
        throw std::invalid_argument("arithmetic progression needs gcd(a, d) = 1");
    }
    if (a > Generators::max_modulus || a + (k - 1) * d > Generators::max_value) {
        throw std::invalid_argument("arithmetic progression too large");
    }
    q_ = (a - 1) / (k - 1);
    r_ = (a - 1) % (k - 1);
}

Generators ArithProgression::generators() const {
    std::vector<std::int64_t> v;
    v.reserve(static_cast<std::size_t>(k_));
    for (std::int64_t j = 0; j < k_; ++j) v.push_back(a_ + j * d_);
    return Generators(std::move(v));
}

std::optional<ArithProgression> ArithProgression::detect(const Generators& g) {
    const auto v = g.values();
    const std::int64_t d = v[1] - v[0];
    for (std::size_t i = 2; i < v.size(); ++i) {
        if (v[i] - v[i - 1] != d) return std::nullopt;
    }
    const auto k = static_cast<std::int64_t>(v.size());
    if (k > v[0] || std::gcd(v[0], d) != 1) return std::nullopt;
    return ArithProgression(v[0], d, k);
}

AperyTable apery_general(const Generators& g) {
    const std::int64_t a1 = g.smallest();
    constexpr std::int64_t unreached = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(a1), unreached);
    std::vector<std::int64_t> steps;
    for (std::int64_t v : g.values().subspan(1)) {
        if (v % a1 != 0) steps.push_back(v);
    }

    using Entry = std::pair<std::int64_t, std::int64_t>; // (distance, residue)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        const auto [du, u] = queue.top();
        queue.pop();
        if (du != dist[static_cast<std::size_t>(u)]) continue;
        for (std::int64_t step : steps) {
            const std::int64_t v = (u + step) % a1;
            const std::int64_t dv = du + step;
            if (dv < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = dv;
                queue.emplace(dv, v);
            }
        }
    }
    return {a1, std::move(dist)};
}

AperyTable apery_arith(const ArithProgression& ap) {
    const std::int64_t a = ap.a(), d = ap.d(), k = ap.k(), q = ap.q(), r = ap.r();
    AperyTable t{a, std::vector<std::int64_t>(static_cast<std::size_t>(a), -1)};
    t.m[0] = 0;
    auto place = [&](std::int64_t value) {
        std::int64_t& slot = t.m[static_cast<std::size_t>(value % a)];
        if (slot != -1) throw std::logic_error("arithmetic Apery rows collide");
        slot = value;
    };
    for (std::int64_t s = 1; s <= q; ++s) {
        for (std::int64_t j = (s - 1) * (k - 1) + 1; j <= s * (k - 1); ++j) place(s * a + j * d);
    }
    for (std::int64_t j = q * (k - 1) + 1; j <= q * (k - 1) + r; ++j) place((q + 1) * a + j * d);
    return t;
}

SparsePoly apery_polynomial(const AperyTable& t) {
    SparsePoly p;
    for (std::int64_t m : t.m) p.add_term(static_cast<SparsePoly::Exponent>(m), 1);
    return p;
}

} // namespace sylvsum
