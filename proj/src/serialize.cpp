#include "sylvsum/serialize.hpp"

#include <stdexcept>

namespace sylvsum {

namespace {

std::vector<BigRational> rational_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<BigRational> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw std::invalid_argument(std::string(what) + " entries must be strings");
        out.push_back(parse_rational(item.get<std::string>()));
    }
    return out;
}

} // namespace

nlohmann::json to_json(const BigInt& x) { return to_string(x); }

nlohmann::json to_json(const RingElement& x) {
    nlohmann::json minpoly = nlohmann::json::array();
    for (const auto& c : x.ring().minpoly()) minpoly.push_back(to_string(c));
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
    return {{"ring", {{"minpoly", minpoly}}}, {"coeffs", coeffs}};
}

RingElement ring_element_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("coeffs") ||
        !j["ring"].is_object() || !j["ring"].contains("minpoly")) {
        throw std::invalid_argument("ring element JSON needs ring.minpoly and coeffs");
    }
    NumberRing ring(rational_list(j["ring"]["minpoly"], "minpoly"));
    std::vector<BigRational> coeffs = rational_list(j["coeffs"], "coeffs");
    if (coeffs.size() != ring.degree()) {
        throw std::invalid_argument("coeffs length does not match ring degree");
    }
    return ring.element(std::move(coeffs));
}

} // namespace sylvsum
