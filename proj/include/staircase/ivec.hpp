#pragma once

#include <string>

#include "staircase/ints.hpp"

namespace staircase {

/// Integer lattice vector. "Primitive" means gcd(|x|,|y|) = 1.
struct IVec2 {
    Int x{};
    Int y{};

    friend bool operator==(const IVec2 &a, const IVec2 &b) = default;
    friend IVec2 operator+(const IVec2 &a, const IVec2 &b) { return {a.x + b.x, a.y + b.y}; }
    friend IVec2 operator-(const IVec2 &a, const IVec2 &b) { return {a.x - b.x, a.y - b.y}; }
    IVec2 operator-() const { return {-x, -y}; }
    friend IVec2 operator*(const Int &k, const IVec2 &v) { return {k * v.x, k * v.y}; }

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_primitive() const { return gcd(abs(x), abs(y)) == 1; }

    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Int cross(const IVec2 &a, const IVec2 &b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const IVec2 &a, const IVec2 &b) { return a.x * b.x + a.y * b.y; }

/// Row-major 2x2 integer matrix.
struct IMat2 {
    Int a{}, b{}, c{}, d{};

    static IMat2 identity() { return {1, 0, 0, 1}; }

    friend bool operator==(const IMat2 &m, const IMat2 &n) = default;

    Int det() const { return a * d - b * c; }

    friend IVec2 operator*(const IMat2 &m, const IVec2 &v) {
        return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
    }
    friend IMat2 operator*(const IMat2 &m, const IMat2 &n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                m.c * n.b + m.d * n.d};
    }

    std::string str() const {
        return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
    }
};

/// I + sign * n n^T J with J = ((0,-1),(1,0)): the unimodular shear fixing
/// the line through the origin in direction n.
inline IMat2 shear_matrix(const IVec2 &n, int sign) {
    // n n^T J = ((x y, -x^2), (y^2, -x y))
    Int s(sign);
    IMat2 m{1 + s * n.x * n.y, -s * n.x * n.x, s * n.y * n.y, 1 - s * n.x * n.y};
    return m;
}

} // namespace staircase
