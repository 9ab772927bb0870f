#include "sylvsum/lambda_spec.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <regex>
#include <stdexcept>

namespace sylvsum {

namespace {

std::string strip_spaces(const std::string& text) {
    std::string out;
    std::copy_if(text.begin(), text.end(), std::back_inserter(out),
                 [](unsigned char c) { return !std::isspace(c); });
    return out;
}

unsigned parse_positive(const std::string& text, const char* what) {
    if (text.empty() || text.size() > 9 ||
        !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw std::invalid_argument(std::string(what) + " must be a positive integer, got '" + text + "'");
    }
    const unsigned v = static_cast<unsigned>(std::stoul(text));
    if (v == 0) throw std::invalid_argument(std::string(what) + " must be positive");
    return v;
}

std::vector<BigRational> parse_list(const std::string& text, const char* what) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw std::invalid_argument(std::string(what) + " must be a bracketed list, got '" + text + "'");
    }
    std::vector<BigRational> out;
    const std::string body = text.substr(1, text.size() - 2);
    if (body.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = body.find(',', start);
        out.push_back(parse_rational(body.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

LambdaSpec parse_lambda_spec(const std::string& text) {
    const std::string s = strip_spaces(text);
    std::smatch m;
    static const std::regex root_re(R"(root\(([0-9]+),([^,()]+)\))");
    static const std::regex zeta_re(R"(zeta\(([0-9]+)\))");
    static const std::regex elem_re(R"(elem\(minpoly=(\[[^\]]*\]);coeffs=(\[[^\]]*\])\))");

    if (std::regex_match(s, m, root_re)) {
        return {RootWeight{parse_positive(m[1].str(), "root degree"), parse_rational(m[2].str())}, s};
    }
    if (std::regex_match(s, m, zeta_re)) {
        return {ZetaWeight{parse_positive(m[1].str(), "zeta order")}, s};
    }
    if (std::regex_match(s, m, elem_re)) {
        CustomWeight w{parse_list(m[1].str(), "minpoly"), parse_list(m[2].str(), "coeffs")};
        if (w.coeffs.empty()) throw std::invalid_argument("coeffs must not be empty");
        return {std::move(w), s};
    }
    try {
        return {RationalWeight{parse_rational(s)}, s};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("unrecognized weight '" + text +
                                    "'; expected p/q, root(n,p/q), zeta(n) or "
                                    "elem(minpoly=[...];coeffs=[...])");
    }
}

RingElement lambda_value(const LambdaSpec& spec) {
    return std::visit(
        [](const auto& w) -> RingElement {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, RationalWeight>) {
                return NumberRing::rationals().constant(w.value);
            } else if constexpr (std::is_same_v<T, RootWeight>) {
                return NumberRing::pure_root(w.degree, w.radicand).generator();
            } else if constexpr (std::is_same_v<T, ZetaWeight>) {
                return NumberRing::cyclotomic(w.order).generator();
            } else {
                return NumberRing(w.minpoly).element(w.coeffs);
            }
        },
        spec.kind);
}

Embedding default_embedding(const LambdaSpec& spec) {
    if (const auto* r = std::get_if<RootWeight>(&spec.kind)) {
        const double v = r->radicand.get_d();
        if (v >= 0) return Embedding::nearest(std::pow(v, 1.0 / r->degree));
        if (r->degree % 2 == 1) return Embedding::nearest(-std::pow(-v, 1.0 / r->degree));
        return Embedding::index(0);
    }
    if (const auto* z = std::get_if<ZetaWeight>(&spec.kind)) {
        return Embedding::nearest(std::polar(1.0, 2 * std::numbers::pi / z->order));
    }
    return Embedding::index(0);
}

Weight make_weight(const LambdaSpec& spec) {
    RingElement value = lambda_value(spec);
    if (value.is_zero()) throw std::invalid_argument("weight must be nonzero: " + spec.text);
    if (value.is_one()) throw std::invalid_argument("weight must differ from 1: " + spec.text);
    return {std::move(value), default_embedding(spec), spec.text};
}

} // namespace sylvsum
