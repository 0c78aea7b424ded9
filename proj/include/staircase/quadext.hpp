#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "staircase/ints.hpp"

namespace staircase {

/// Element rat + coef*sqrt(disc) of a real quadratic field.
///
/// disc is square-free and >= 2 whenever coef != 0; purely rational values
/// carry disc == 0 so that they combine with any field. All arithmetic and
/// sign determination is exact; floating point appears only in approx().
class QuadExt {
  public:
    QuadExt() = default;
    QuadExt(const Rat &r) : rat_(r) {} // NOLINT: implicit by design
    QuadExt(const Int &n) : rat_(n) {} // NOLINT
    QuadExt(int n) : rat_(n) {}        // NOLINT

    /// disc must be square-free (callers construct it via squarefree_decompose).
    QuadExt(Rat r, Rat c, Int d) : rat_(std::move(r)), coef_(std::move(c)), disc_(std::move(d)) {
        if (coef_ == 0) {
            disc_ = 0;
        } else if (disc_ < 2) {
            throw DomainError("QuadExt: discriminant must be >= 2 when coef != 0");
        }
    }

    const Rat &rat() const { return rat_; }
    const Rat &coef() const { return coef_; }
    const Int &disc() const { return disc_; }

    bool is_rational() const { return coef_ == 0; }
    bool is_zero() const { return rat_ == 0 && coef_ == 0; }

    QuadExt conjugate() const { return QuadExt(rat_, -coef_, disc_); }
    /// rat^2 - coef^2 * disc; multiplicative, rational.
    Rat norm() const { return rat_ * rat_ - coef_ * coef_ * Rat(disc_); }

    /// Exact sign via case analysis and comparison of rat^2 against coef^2*disc.
    int sign() const {
        int sr = rat_.sign();
        int sc = coef_.sign();
        if (sc == 0) return sr;
        if (sr == 0) return sc;
        if (sr == sc) return sr;
        // Opposite signs: |rat| vs |coef|*sqrt(disc).
        int cmp = (rat_ * rat_).compare(coef_ * coef_ * Rat(disc_));
        if (cmp == 0) return 0; // impossible for square-free disc >= 2, but exact anyway
        return cmp > 0 ? sr : sc;
    }

    QuadExt operator-() const { return QuadExt(-rat_, -coef_, disc_); }

    friend QuadExt operator+(const QuadExt &a, const QuadExt &b) {
        return QuadExt(a.rat_ + b.rat_, a.coef_ + b.coef_, merged_disc(a, b));
    }
    friend QuadExt operator-(const QuadExt &a, const QuadExt &b) {
        return QuadExt(a.rat_ - b.rat_, a.coef_ - b.coef_, merged_disc(a, b));
    }
    friend QuadExt operator*(const QuadExt &a, const QuadExt &b) {
        Int d = merged_disc(a, b);
        return QuadExt(a.rat_ * b.rat_ + a.coef_ * b.coef_ * Rat(d),
                       a.rat_ * b.coef_ + a.coef_ * b.rat_, d);
    }
    friend QuadExt operator/(const QuadExt &a, const QuadExt &b) {
        if (b.is_zero()) throw DivisionByZeroError("QuadExt: division by zero");
        if (b.is_rational()) return QuadExt(a.rat_ / b.rat_, a.coef_ / b.rat_, a.disc_);
        Rat n = b.norm();
        QuadExt num = a * b.conjugate();
        return QuadExt(num.rat_ / n, num.coef_ / n, num.disc_);
    }

    QuadExt &operator+=(const QuadExt &o) { return *this = *this + o; }
    QuadExt &operator-=(const QuadExt &o) { return *this = *this - o; }
    QuadExt &operator*=(const QuadExt &o) { return *this = *this * o; }
    QuadExt &operator/=(const QuadExt &o) { return *this = *this / o; }

    friend bool operator==(const QuadExt &a, const QuadExt &b) {
        return a.rat_ == b.rat_ && a.coef_ == b.coef_ && a.disc_ == b.disc_;
    }

    BigFloat to_bigfloat() const {
        BigFloat v(rat_);
        if (coef_ != 0) v += BigFloat(coef_) * sqrt(BigFloat(disc_));
        return v;
    }
    double approx() const { return to_bigfloat().convert_to<double>(); }

    /// Canonical textual form "a/b + c/d*sqrt(D)"; round-trips through parse().
    std::string str() const {
        return format_rat(rat_) + " + " + format_rat(coef_) + "*sqrt(" + disc_.str() + ")";
    }

    static QuadExt parse(std::string_view text) {
        auto plus = text.find(" + ");
        if (plus == std::string_view::npos)
            throw ParseError("QuadExt::parse: missing \" + \" separator");
        auto star = text.find("*sqrt(", plus);
        if (star == std::string_view::npos || text.back() != ')')
            throw ParseError("QuadExt::parse: missing \"*sqrt(D)\" tail");
        Rat r = parse_rat(text.substr(0, plus));
        Rat c = parse_rat(text.substr(plus + 3, star - plus - 3));
        Int d(std::string(text.substr(star + 6, text.size() - star - 7)));
        if (c == 0) return QuadExt(r);
        return QuadExt(r, c, d);
    }

  private:
    static Int merged_disc(const QuadExt &a, const QuadExt &b) {
        if (a.disc_ == 0) return b.disc_;
        if (b.disc_ == 0) return a.disc_;
        if (a.disc_ != b.disc_)
            throw FieldMismatchError("QuadExt: cannot combine sqrt(" + a.disc_.str() +
                                     ") with sqrt(" + b.disc_.str() + ")");
        return a.disc_;
    }

    Rat rat_{};
    Rat coef_{};
    Int disc_{};
};

/// Three-way comparison that also works across different quadratic fields,
/// by isolating one radical and squaring. Returns -1, 0, or +1.
inline int compare(const QuadExt &a, const QuadExt &b) {
    if (a.disc() == b.disc() || a.is_rational() || b.is_rational()) return (a - b).sign();
    // sign of (a.rat - b.rat + a.coef*sqrt(Da)) - b.coef*sqrt(Db)
    QuadExt t(a.rat() - b.rat(), a.coef(), a.disc());
    int st = t.sign();
    int sy = b.coef().sign(); // sign of b.coef*sqrt(Db)
    if (st != sy) return st < sy ? -1 : 1;
    if (st == 0) return 0;
    // Same nonzero sign: compare t^2 with (b.coef)^2 * Db inside Q(sqrt(Da)).
    QuadExt diff = t * t - QuadExt(b.coef() * b.coef() * Rat(b.disc()));
    int d = diff.sign();
    return st > 0 ? d : -d;
}

inline bool operator<(const QuadExt &a, const QuadExt &b) { return compare(a, b) < 0; }
inline bool operator>(const QuadExt &a, const QuadExt &b) { return compare(a, b) > 0; }
inline bool operator<=(const QuadExt &a, const QuadExt &b) { return compare(a, b) <= 0; }
inline bool operator>=(const QuadExt &a, const QuadExt &b) { return compare(a, b) >= 0; }

/// Nonnegative square root of x inside Q(sqrt(D)), if it exists there.
/// ambient_disc names the field when x itself is rational; pass 0 for plain Q.
inline std::optional<QuadExt> sqrt_in_field(const QuadExt &x, const Int &ambient_disc = 0) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return QuadExt(0);
    auto rational_sqrt = [](const Rat &r) -> std::optional<Rat> {
        if (r < 0) return std::nullopt;
        Int rn, rd;
        if (!is_perfect_square(numerator(r), &rn)) return std::nullopt;
        if (!is_perfect_square(denominator(r), &rd)) return std::nullopt;
        return Rat(rn, rd);
    };
    if (x.is_rational()) {
        if (auto r = rational_sqrt(x.rat())) return QuadExt(*r);
        if (ambient_disc >= 2) {
            if (auto v = rational_sqrt(x.rat() / Rat(ambient_disc)))
                return QuadExt(Rat(0), *v, ambient_disc);
        }
        return std::nullopt;
    }
    // (u + v sqrt(D))^2 = x: u^2 + v^2 D = x.rat, 2uv = x.coef.
    auto w = rational_sqrt(x.norm());
    if (!w) return std::nullopt;
    for (int branch = 0; branch < 2; ++branch) {
        Rat cand = branch == 0 ? (x.rat() + *w) / 2 : (x.rat() - *w) / 2;
        if (auto u = rational_sqrt(cand)) {
            if (*u == 0) continue;
            Rat v = x.coef() / (2 * *u);
            QuadExt root(*u, v, x.disc());
            if (root * root == x) return root.sign() >= 0 ? root : -root;
        }
    }
    return std::nullopt;
}

/// Exact square root of a nonnegative rational as a QuadExt, constructing the
/// square-free discriminant.
inline QuadExt sqrt_of_rational(const Rat &r) {
    if (r < 0) throw DomainError("sqrt_of_rational: negative argument");
    if (r == 0) return QuadExt(0);
    // sqrt(n/d) = sqrt(n*d)/d
    auto dec = squarefree_decompose(numerator(r) * denominator(r));
    Rat c(dec.square_part, denominator(r));
    if (dec.squarefree == 1) return QuadExt(c);
    return QuadExt(Rat(0), c, dec.squarefree);
}

} // namespace staircase
