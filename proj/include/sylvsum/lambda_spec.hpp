#pragma once

// Weight descriptions accepted on the command line:
//
//   p/q                                 a rational weight
//   root(n,p/q)                         t with t^n = p/q
//   zeta(n)                             a primitive n-th root of unity
//   elem(minpoly=[c0,...,1];coeffs=[b0,...])   b0 + b1 t + ... in Q[t]/(f)
//
// Whitespace is ignored and only exact rational literals are accepted.

#include "sylvsum/exact.hpp"
#include "sylvsum/numberfield.hpp"

#include <string>
#include <variant>
#include <vector>

namespace sylvsum {

struct RationalWeight {
    BigRational value;
};

struct RootWeight {
    unsigned degree;
    BigRational radicand;
};

struct ZetaWeight {
    unsigned order;
};

struct CustomWeight {
    std::vector<BigRational> minpoly; // c0..cn, monic
    std::vector<BigRational> coeffs;
};

struct LambdaSpec {
    std::variant<RationalWeight, RootWeight, ZetaWeight, CustomWeight> kind;
    std::string text; // normalized source text
};

/// Throws std::invalid_argument with a message pointing at the bad part.
LambdaSpec parse_lambda_spec(const std::string& text);

/// The ring element a spec denotes; no check against 0 or 1.
RingElement lambda_value(const LambdaSpec& spec);

/// Default embedding: the principal real root for root(n, r) with r > 0 (the
/// real root for odd n and r < 0), e^(2 pi i/n) for zeta(n), root index 0
/// otherwise.
Embedding default_embedding(const LambdaSpec& spec);

/// A validated weight: lambda != 0 and lambda != 1.
struct Weight {
    RingElement value;
    Embedding embedding;
    std::string label;
};

/// Throws std::invalid_argument when the weight is 0 or 1.
Weight make_weight(const LambdaSpec& spec);

} // namespace sylvsum
