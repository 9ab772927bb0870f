#pragma once

#include <string_view>

namespace sylvsum {

/// Which evaluation route produced a value.
enum class Method {
    general_apery,  // Apery-table formulas, weight not a root of unity of order | a1
    unity_a,        // Apery-table formulas for lambda^a1 = 1
    ap_closed_form, // arithmetic-progression closed form, unweighted
    ap_generic,     // arithmetic progression, lambda^a != 1 and lambda^d != 1
    ap_d_unity,     // arithmetic progression, lambda^d = 1
    ap_a_unity,     // arithmetic progression, lambda^a = 1
    oracle,         // brute-force sieve
};

constexpr std::string_view to_string(Method m) {
    switch (m) {
    case Method::general_apery: return "general-apery";
    case Method::unity_a: return "unity-a";
    case Method::ap_closed_form: return "ap-closed-form";
    case Method::ap_generic: return "ap-closed-form/generic";
    case Method::ap_d_unity: return "ap-closed-form/d-unity";
    case Method::ap_a_unity: return "ap-closed-form/a-unity";
    case Method::oracle: return "oracle";
    }
    return "unknown";
}

template <typename T>
struct Tagged {
    T value;
    Method method;
};

} // namespace sylvsum
