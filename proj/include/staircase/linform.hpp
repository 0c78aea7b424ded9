#pragma once

#include <optional>
#include <string>

#include "staircase/ints.hpp"
#include "staircase/quadext.hpp"

namespace staircase {

/// Open interval (lo, hi) of admissible values for the symbolic parameter b.
struct BInterval {
    Rat lo;
    Rat hi;

    bool valid() const { return lo < hi; }
    bool contains(const Rat &b) const { return lo < b && b < hi; }
    bool contains(const QuadExt &b) const { return QuadExt(lo) < b && b < QuadExt(hi); }
    bool contains(const BInterval &other) const { return lo <= other.lo && other.hi <= hi; }

    friend bool operator==(const BInterval &a, const BInterval &b) = default;

    std::string str() const { return "(" + format_rat(lo) + "," + format_rat(hi) + ")"; }
};

/// Linear form const_term + b_coef * b in the symbolic blow-up size b.
struct LinFormB {
    Rat const_term;
    Rat b_coef;

    LinFormB() = default;
    LinFormB(Rat c0, Rat c1) : const_term(std::move(c0)), b_coef(std::move(c1)) {}
    LinFormB(const Rat &r) : const_term(r) {} // NOLINT: implicit by design
    LinFormB(const Int &n) : const_term(n) {} // NOLINT
    LinFormB(int n) : const_term(n) {}        // NOLINT

    bool is_zero() const { return const_term == 0 && b_coef == 0; }
    bool is_constant() const { return b_coef == 0; }

    Rat eval(const Rat &b) const { return const_term + b_coef * b; }
    QuadExt eval(const QuadExt &b) const { return QuadExt(const_term) + QuadExt(b_coef) * b; }

    LinFormB operator-() const { return {-const_term, -b_coef}; }
    friend LinFormB operator+(const LinFormB &f, const LinFormB &g) {
        return {f.const_term + g.const_term, f.b_coef + g.b_coef};
    }
    friend LinFormB operator-(const LinFormB &f, const LinFormB &g) {
        return {f.const_term - g.const_term, f.b_coef - g.b_coef};
    }
    friend LinFormB operator*(const Rat &k, const LinFormB &f) {
        return {k * f.const_term, k * f.b_coef};
    }
    friend LinFormB operator*(const LinFormB &f, const Rat &k) { return k * f; }
    friend LinFormB operator/(const LinFormB &f, const Rat &k) {
        if (k == 0) throw DivisionByZeroError("LinFormB: division by zero");
        return {f.const_term / k, f.b_coef / k};
    }
    LinFormB &operator+=(const LinFormB &o) { return *this = *this + o; }
    LinFormB &operator-=(const LinFormB &o) { return *this = *this - o; }

    friend bool operator==(const LinFormB &f, const LinFormB &g) = default;

    /// Sign of the form on the whole open interval, or nullopt if it changes sign.
    std::optional<int> definite_sign_on(const BInterval &iv) const {
        Rat at_lo = eval(iv.lo);
        Rat at_hi = eval(iv.hi);
        int slo = at_lo.sign();
        int shi = at_hi.sign();
        if (slo == 0 && shi == 0) return 0;
        if (slo >= 0 && shi >= 0) return 1;
        if (slo <= 0 && shi <= 0) return -1;
        return std::nullopt;
    }

    bool positive_on(const BInterval &iv) const {
        auto s = definite_sign_on(iv);
        return s && *s > 0;
    }

    std::string str() const { return format_rat(const_term) + " + " + format_rat(b_coef) + "*b"; }
};

/// Shrinks iv to the sub-interval where f > 0. Returns false when that
/// sub-interval has empty interior.
inline bool restrict_positive(BInterval &iv, const LinFormB &f) {
    if (f.b_coef == 0) return f.const_term > 0;
    Rat root = -f.const_term / f.b_coef;
    if (f.b_coef > 0) {
        if (root > iv.lo) iv.lo = root;
    } else {
        if (root < iv.hi) iv.hi = root;
    }
    return iv.valid();
}

/// Quadratic polynomial in b; the product space of two linear forms.
/// Only needed to state area identities symbolically.
struct QuadPolyB {
    Rat c0, c1, c2;

    QuadPolyB() = default;
    QuadPolyB(Rat a0, Rat a1, Rat a2) : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)) {}
    QuadPolyB(const LinFormB &f) : c0(f.const_term), c1(f.b_coef), c2(0) {} // NOLINT

    friend QuadPolyB operator+(const QuadPolyB &f, const QuadPolyB &g) {
        return {f.c0 + g.c0, f.c1 + g.c1, f.c2 + g.c2};
    }
    friend QuadPolyB operator-(const QuadPolyB &f, const QuadPolyB &g) {
        return {f.c0 - g.c0, f.c1 - g.c1, f.c2 - g.c2};
    }
    friend bool operator==(const QuadPolyB &f, const QuadPolyB &g) = default;

    Rat eval(const Rat &b) const { return c0 + c1 * b + c2 * b * b; }
    QuadExt eval(const QuadExt &b) const {
        return QuadExt(c0) + QuadExt(c1) * b + QuadExt(c2) * b * b;
    }

    std::string str() const {
        return format_rat(c0) + " + " + format_rat(c1) + "*b + " + format_rat(c2) + "*b^2";
    }
};

inline QuadPolyB mul(const LinFormB &f, const LinFormB &g) {
    return {f.const_term * g.const_term, f.const_term * g.b_coef + f.b_coef * g.const_term,
            f.b_coef * g.b_coef};
}

} // namespace staircase
