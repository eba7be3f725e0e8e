#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "kdim/error.hpp"

namespace kdim {

// n choose k, saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r = r * num / i;
    }
    return r;
}

// a * b, saturating at UINT64_MAX.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    if (b > std::numeric_limits<std::uint64_t>::max() - a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a + b;
}

// Visits every k-subset of {0, ..., n-1} in lexicographic order.
template <typename F>
inline void for_each_combination(int n, int k, F&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        fn(static_cast<const std::vector<int>&>(pick));
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

namespace detail {

// Little-endian base-2^16 limbs; products fit comfortably in the
// uint64 accumulators of the schoolbook multiply below.
using BigNum = std::vector<std::uint32_t>;

inline BigNum big_from(std::uint64_t v) {
    BigNum out;
    while (v != 0) {
        out.push_back(static_cast<std::uint32_t>(v & 0xffffu));
        v >>= 16;
    }
    return out;
}

inline BigNum big_mul(const BigNum& a, const BigNum& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
        }
    }
    BigNum out(acc.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        std::uint64_t t = acc[i] + carry;
        out[i] = static_cast<std::uint32_t>(t & 0xffffu);
        carry = t >> 16;
    }
    while (carry != 0) {
        out.push_back(static_cast<std::uint32_t>(carry & 0xffffu));
        carry >>= 16;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline BigNum big_pow(std::uint64_t base, unsigned exp) {
    BigNum r = big_from(1);
    BigNum b = big_from(base);
    for (unsigned i = 0; i < exp; ++i) r = big_mul(r, b);
    return r;
}

inline int big_cmp(const BigNum& a, const BigNum& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace detail

// Exact test of a^p >= b^q over the nonnegative integers.
inline bool pow_geq(std::uint64_t a, unsigned p, std::uint64_t b, unsigned q) {
    return detail::big_cmp(detail::big_pow(a, p), detail::big_pow(b, q)) >= 0;
}

// Positive rational, used for kernel exponents. Kept in lowest terms.
struct Rational {
    long long num = 1;
    long long den = 1;

    // Accepts "2", "5/3" and short decimals like "0.5". After reduction
    // both numerator and denominator must be in [1, 64].
    static Rational parse(const std::string& text) {
        auto to_ll = [&](const std::string& s) -> long long {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
                throw Error("invalid rational: '" + text + "'");
            }
            if (s.size() > 18) throw Error("rational out of range: '" + text + "'");
            return std::stoll(s);
        };
        long long num = 0;
        long long den = 1;
        auto slash = text.find('/');
        auto dot = text.find('.');
        if (slash != std::string::npos) {
            num = to_ll(text.substr(0, slash));
            den = to_ll(text.substr(slash + 1));
        } else if (dot != std::string::npos) {
            std::string frac = text.substr(dot + 1);
            if (frac.size() > 9) throw Error("rational out of range: '" + text + "'");
            num = to_ll(text.substr(0, dot) + frac);
            den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        } else {
            num = to_ll(text);
        }
        if (num <= 0 || den <= 0) throw Error("rational must be positive: '" + text + "'");
        long long g = std::gcd(num, den);
        num /= g;
        den /= g;
        if (num > 64 || den > 64) {
            throw Error("rational too fine-grained (numerator/denominator must reduce to <= 64): '" + text + "'");
        }
        return Rational{num, den};
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace kdim
