#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "staircase/errors.hpp"

namespace staircase {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline int sign_of(const Int &v) { return v.sign(); }
inline int sign_of(const Rat &v) { return v.sign(); }

inline Int isqrt_floor(const Int &n) {
    if (n < 0) throw DomainError("isqrt_floor: negative argument");
    return sqrt(n);
}

inline bool is_perfect_square(const Int &n, Int *root = nullptr) {
    if (n < 0) return false;
    Int r = sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

/// Prime factorization by trial division. Inputs that fit in 64 bits take a
/// native fast path; larger inputs fall back to cpp_int division and may be slow.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> out;
    if (n <= 1) return out;
    auto push = [&out](const Int &p, int e) {
        if (e > 0) out.emplace_back(p, e);
    };
    if (n <= Int(UINT64_MAX)) {
        std::uint64_t m = n.convert_to<std::uint64_t>();
        int e2 = 0;
        while ((m & 1u) == 0) {
            m >>= 1;
            ++e2;
        }
        push(Int(2), e2);
        for (std::uint64_t d = 3; d * d <= m; d += 2) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            push(Int(d), e);
        }
        if (m > 1) push(Int(m), 1);
        return out;
    }
    int e2 = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++e2;
    }
    push(Int(2), e2);
    for (Int d = 3; d * d <= n; d += 2) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        push(d, e);
    }
    if (n > 1) push(n, 1);
    return out;
}

/// n = square_part^2 * squarefree with squarefree square-free.
struct SqrtDecomposition {
    Int square_part;
    Int squarefree;
};

inline SqrtDecomposition squarefree_decompose(const Int &n) {
    if (n < 0) throw DomainError("squarefree_decompose: negative argument");
    if (n == 0) return {0, 0};
    SqrtDecomposition res{1, 1};
    for (const auto &[p, e] : factorize(n)) {
        for (int i = 0; i < e / 2; ++i) res.square_part *= p;
        if (e % 2) res.squarefree *= p;
    }
    return res;
}

/// squarefree_decompose(a*b) computed by factoring a and b separately.
/// Useful for t^2 - 4 = (t-2)(t+2), whose halves stay within the fast path
/// long after the product leaves it.
inline SqrtDecomposition squarefree_decompose_product(const Int &a, const Int &b) {
    if (a < 0 || b < 0) throw DomainError("squarefree_decompose_product: negative argument");
    if (a == 0 || b == 0) return {0, 0};
    auto fa = factorize(a);
    for (const auto &[p, e] : factorize(b)) {
        bool merged = false;
        for (auto &[q, f] : fa) {
            if (q == p) {
                f += e;
                merged = true;
                break;
            }
        }
        if (!merged) fa.emplace_back(p, e);
    }
    SqrtDecomposition res{1, 1};
    for (const auto &[p, e] : fa) {
        for (int i = 0; i < e / 2; ++i) res.square_part *= p;
        if (e % 2) res.squarefree *= p;
    }
    return res;
}

inline std::string format_int(const Int &v) { return v.str(); }

/// "n/d" with the denominator always written, including "/1".
inline std::string format_rat(const Rat &r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_rat(std::string_view text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rat(Int(std::string(text)));
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        if (den == 0) throw DivisionByZeroError("parse_rat: zero denominator");
        return Rat(num, den);
    } catch (const std::exception &e) {
        throw ParseError(std::string("parse_rat: cannot parse \"") + std::string(text) + "\": " +
                         e.what());
    }
}

inline double to_double(const Rat &r) { return BigFloat(r).convert_to<double>(); }

} // namespace staircase
