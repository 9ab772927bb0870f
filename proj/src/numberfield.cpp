#include "sylvsum/numberfield.hpp"

#include "sylvsum/errors.hpp"
#include "sylvsum/qpoly.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sylvsum {

NumberRing::NumberRing(std::vector<BigRational> monic_coeffs) {
    if (monic_coeffs.size() < 2) {
        throw std::invalid_argument("minimal polynomial must have degree >= 1");
    }
    if (monic_coeffs.back() != 1) {
        throw std::invalid_argument("minimal polynomial must be monic");
    }
    minpoly_ = std::make_shared<const std::vector<BigRational>>(std::move(monic_coeffs));
}

NumberRing NumberRing::rationals() {
    static const NumberRing q(std::vector<BigRational>{0, 1});
    return q;
}

NumberRing NumberRing::cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("zeta(n) needs n >= 1");
    return NumberRing(qpoly::cyclotomic(n));
}

NumberRing NumberRing::pure_root(unsigned n, const BigRational& r) {
    if (n == 0) throw std::invalid_argument("root(n, r) needs n >= 1");
    std::vector<BigRational> f(n + 1);
    f[0] = -r;
    f[n] = 1;
    return NumberRing(std::move(f));
}

RingElement NumberRing::zero() const {
    return RingElement(*this, std::vector<BigRational>(degree()));
}

RingElement NumberRing::one() const { return constant(1); }

RingElement NumberRing::generator() const { return element({0, 1}); }

RingElement NumberRing::constant(const BigRational& c) const {
    std::vector<BigRational> v(degree());
    v[0] = c;
    return RingElement(*this, std::move(v));
}

RingElement NumberRing::element(std::vector<BigRational> coeffs) const {
    const std::vector<BigRational>& f = minpoly();
    const std::size_t n = degree();
    for (std::size_t i = coeffs.size(); i-- > n;) {
        const BigRational c = coeffs[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n; ++j) coeffs[i - n + j] -= c * f[j];
        coeffs[i] = 0;
    }
    coeffs.resize(n);
    return RingElement(*this, std::move(coeffs));
}

bool NumberRing::operator==(const NumberRing& other) const {
    return minpoly_ == other.minpoly_ || *minpoly_ == *other.minpoly_;
}

std::string NumberRing::describe() const {
    return "Q[t]/(" + qpoly::format(minpoly(), "t") + ")";
}

void RingElement::check_same_ring(const RingElement& other, const char* op) const {
    if (!(ring_ == other.ring_)) {
        throw ring_mismatch(std::string(op) + ": operands live in " + ring_.describe() +
                            " and " + other.ring_.describe());
    }
}

bool RingElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigRational& c) { return c == 0; });
}

bool RingElement::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool RingElement::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const BigRational& c) { return c == 0; });
}

RingElement RingElement::operator-() const {
    RingElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

RingElement& RingElement::operator+=(const RingElement& other) {
    check_same_ring(other, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    check_same_ring(other, "sub");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
    check_same_ring(other, "mul");
    const std::size_t n = coeffs_.size();
    if (n == 1) {
        coeffs_[0] *= other.coeffs_[0];
        return *this;
    }
    std::vector<BigRational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (other.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    *this = ring_.element(std::move(prod));
    return *this;
}

RingElement& RingElement::operator*=(const BigRational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

RingElement operator+(RingElement a, const BigRational& c) {
    a.coeffs_[0] += c;
    return a;
}

RingElement operator-(RingElement a, const BigRational& c) {
    a.coeffs_[0] -= c;
    return a;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

std::string RingElement::format(const std::string& var) const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigRational& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigRational mag = negative ? BigRational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

RingElement pow(const RingElement& x, unsigned long e) {
    if (x.coeffs().size() == 1) {
        return x.ring().constant(pow(x.constant_term(), e));
    }
    RingElement result = x.ring().one();
    RingElement base = x;
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

RingElement inverse(const RingElement& x) {
    if (x.is_zero()) throw division_by_zero("inverse of zero ring element");
    if (x.coeffs().size() == 1) return x.ring().constant(1 / x.constant_term());
    qpoly::Poly a = x.coeffs();
    qpoly::trim(a);
    const qpoly::Bezout b = qpoly::xgcd(a, x.ring().minpoly());
    if (qpoly::degree(b.gcd) > 0) {
        const std::string factor = qpoly::format(b.gcd, "t");
        throw reducible_modulus("element is a zero divisor: modulus " + x.ring().describe() +
                                    " has the factor " + factor,
                                factor);
    }
    return x.ring().element(b.s);
}

bool is_power_unity(const RingElement& x, unsigned long e) {
    if (e == 0) throw std::invalid_argument("is_power_unity needs a positive exponent");
    return pow(x, e).is_one();
}

namespace {

using Complex = std::complex<long double>;

Complex horner(const std::vector<long double>& p, Complex z) {
    Complex acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

double argument_key(std::complex<double> z) {
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) < 1e-12 * scale) {
        return z.real() >= 0 ? 0.0 : std::numbers::pi;
    }
    double a = std::arg(z);
    if (a < 0) a += 2 * std::numbers::pi;
    return a;
}

} // namespace

std::vector<std::complex<double>> complex_roots(const NumberRing& ring) {
    const std::vector<BigRational>& f = ring.minpoly();
    const std::size_t n = ring.degree();
    std::vector<long double> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) coeffs[i] = f[i].get_d();

    std::vector<Complex> approx;
    if (n == 1) {
        approx.push_back(-coeffs[0]);
    } else {
        Eigen::VectorXd poly(n + 1);
        for (std::size_t i = 0; i <= n; ++i) poly[static_cast<Eigen::Index>(i)] = f[i].get_d();
        Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(poly);
        for (const auto& r : solver.roots()) approx.emplace_back(r.real(), r.imag());
    }

    std::vector<long double> deriv(n);
    for (std::size_t i = 1; i <= n; ++i) deriv[i - 1] = coeffs[i] * static_cast<long double>(i);

    std::vector<std::complex<double>> out;
    for (Complex z : approx) {
        // Newton polishing; multiple roots stall, so accept small residuals too.
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            const Complex fz = horner(coeffs, z);
            const Complex dz = horner(deriv, z);
            const long double scale = std::max<long double>(1.0L, std::abs(z));
            if (std::abs(fz) <= 1e-15L * std::pow(scale, static_cast<long double>(n))) {
                converged = true;
                break;
            }
            if (std::abs(dz) == 0) break;
            const Complex step = fz / dz;
            z -= step;
            if (std::abs(step) <= 1e-18L * scale) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw numeric_error("root refinement did not converge for " + ring.describe());
        }
        out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    std::sort(out.begin(), out.end(), [](std::complex<double> a, std::complex<double> b) {
        const double ka = argument_key(a), kb = argument_key(b);
        if (std::abs(ka - kb) > 1e-12) return ka < kb;
        return std::abs(a) < std::abs(b);
    });
    return out;
}

std::complex<double> numeric_eval(const RingElement& x, const Embedding& embedding) {
    const std::vector<std::complex<double>> roots = complex_roots(x.ring());
    std::complex<double> root;
    if (embedding.target) {
        root = *std::min_element(roots.begin(), roots.end(), [&](auto a, auto b) {
            return std::abs(a - *embedding.target) < std::abs(b - *embedding.target);
        });
    } else {
        if (embedding.root_index >= roots.size()) {
            throw std::out_of_range("embedding root index " + std::to_string(embedding.root_index) +
                                    " exceeds ring degree " + std::to_string(roots.size()));
        }
        root = roots[embedding.root_index];
    }
    Complex acc = 0;
    Complex power = 1;
    const Complex z(root.real(), root.imag());
    for (const BigRational& c : x.coeffs()) {
        acc += power * static_cast<long double>(c.get_d());
        power *= z;
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

} // namespace sylvsum
