#include "sylvsum/exact.hpp"

#include "sylvsum/errors.hpp"

#include <map>
#include <mutex>
#include <regex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sylvsum {

namespace {

// Akiyama-Tanigawa, extended one index at a time. The working row is kept so
// that growing the table never redoes earlier work. The algorithm yields
// B_1 = +1/2; the sign is flipped on the way out.
class BernoulliTable {
public:
    BigRational get(unsigned n) {
        std::lock_guard lock(mutex_);
        while (values_.size() <= n) {
            const unsigned m = static_cast<unsigned>(values_.size());
            row_.emplace_back(1, m + 1);
            for (unsigned j = m; j >= 1; --j) {
                row_[j - 1] = j * (row_[j - 1] - row_[j]);
            }
            values_.push_back(row_[0]);
        }
        BigRational b = values_[n];
        if (n == 1) b = -b;
        return b;
    }

private:
    std::mutex mutex_;
    std::vector<BigRational> row_;
    std::vector<BigRational> values_;
};

template <typename Key>
class Memo {
public:
    template <typename Compute>
    BigInt get(const Key& key, Compute&& compute) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = values_.find(key); it != values_.end()) return it->second;
        }
        BigInt value = compute();
        std::lock_guard lock(mutex_);
        values_.emplace(key, value);
        return value;
    }

private:
    std::mutex mutex_;
    std::map<Key, BigInt> values_;
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

} // namespace

BigRational bernoulli(unsigned n) { return bernoulli_table().get(n); }

BigInt stirling2(unsigned n, unsigned m) {
    if (m > n) return 0;
    if (n == 0) return 1;
    static Memo<std::pair<unsigned, unsigned>> memo;
    return memo.get({n, m}, [&] {
        // (1/m!) sum_i (-1)^i C(m,i) (m-i)^n
        BigInt acc = 0;
        for (unsigned i = 0; i <= m; ++i) {
            BigInt term = binomial(m, i) * pow(BigInt(m - i), n);
            if (i % 2 == 0) acc += term; else acc -= term;
        }
        BigInt fact = factorial(m);
        if (!mpz_divisible_p(acc.get_mpz_t(), fact.get_mpz_t())) {
            throw consistency_error("stirling2: alternating sum not divisible by m!");
        }
        BigInt out;
        mpz_divexact(out.get_mpz_t(), acc.get_mpz_t(), fact.get_mpz_t());
        return out;
    });
}

BigInt eulerian(unsigned n, long m) {
    const long top = n == 0 ? 0 : static_cast<long>(n) - 1;
    if (m < 0 || m > top) return 0;
    static Memo<std::pair<unsigned, long>> memo;
    return memo.get({n, m}, [&] {
        // sum_{k=0}^{m} (-1)^k C(n+1,k) (m-k+1)^n
        BigInt acc = 0;
        for (long k = 0; k <= m; ++k) {
            BigInt term = binomial(static_cast<long>(n) + 1, k) *
                          pow(BigInt(m - k + 1), n);
            if (k % 2 == 0) acc += term; else acc -= term;
        }
        return acc;
    });
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt pow(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

BigRational pow(const BigRational& base, unsigned long e) {
    BigRational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    BigRational out(num, den);
    out.canonicalize();
    return out;
}

bool is_integer(const BigRational& x) { return x.get_den() == 1; }

BigInt require_integer(const BigRational& x, const char* what) {
    if (!is_integer(x)) {
        throw consistency_error(std::string(what) + " is not an integer: " + to_string(x));
    }
    return x.get_num();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRational& x) { return x.get_str(); }

BigRational parse_rational(const std::string& text) {
    static const std::regex pattern(R"(([+-]?[0-9]+)(?:/([0-9]+))?)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern)) {
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    }
    std::string num_text = match[1].str();
    if (num_text.front() == '+') num_text.erase(0, 1);
    BigInt num(num_text);
    BigInt den = match[2].matched ? BigInt(match[2].str()) : BigInt(1);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return make_rational(num, den);
}

} // namespace sylvsum
