#pragma once

#include <stdexcept>
#include <string>

namespace sylvsum {

// Two independent evaluation routes disagreed, or a quantity that must be an
// integer came out fractional. Either way the library has a bug.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Elements from different rings were combined.
class ring_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Inversion found a nontrivial common factor with the modulus.
class reducible_modulus : public std::domain_error {
public:
    reducible_modulus(const std::string& what, std::string factor)
        : std::domain_error(what), factor_(std::move(factor)) {}
    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

// A formula was invoked outside the weight regime it is valid for.
class wrong_branch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sylvsum
