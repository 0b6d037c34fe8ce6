#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "triality/rational.hpp"

namespace triality {

/// Exact element a + b·√3 of the real quadratic field Q(√3).
///
/// Equality is coefficient equality, which is sound because √3 is irrational.
class QuadExt {
public:
    static constexpr bool is_exact = true;

    QuadExt() = default;
    QuadExt(int a) : a_(a) {}             // NOLINT(google-explicit-constructor)
    QuadExt(long a) : a_(a) {}            // NOLINT(google-explicit-constructor)
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt from_rational(const Rational& r) { return QuadExt(r); }
    static QuadExt sqrt3() { return QuadExt(Rational(0), Rational(1)); }

    /// Rational part.
    const Rational& a() const noexcept { return a_; }
    /// Coefficient of √3.
    const Rational& b() const noexcept { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Sign of the real number a + b√3.
    int sign() const {
        const int sa = a_.sign();
        const int sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        const Rational lhs = a_ * a_;
        const Rational rhs = Rational(3) * b_ * b_;
        return lhs > rhs ? sa : sb;
    }

    /// Galois conjugate a − b√3.
    QuadExt galois() const { return QuadExt(a_, -b_); }

    /// Field norm a² − 3b², nonzero unless both coefficients vanish.
    Rational field_norm() const { return a_ * a_ - Rational(3) * b_ * b_; }

    QuadExt inverse() const {
        if (is_zero()) throw DivisionByZero();
        const Rational n = field_norm();
        return QuadExt(a_ / n, -b_ / n);
    }

    QuadExt operator-() const { return QuadExt(-a_, -b_); }

    QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadExt& operator*=(const QuadExt& o) {
        if (b_.is_zero() && o.b_.is_zero()) {
            a_ *= o.a_;
            return *this;
        }
        QuadExt product;
        product.add_product(*this, o);
        return *this = std::move(product);
    }

    /// this += k·x·y, the inner-loop operation of every product here.
    void add_product(const QuadExt& x, const QuadExt& y, long k = 1) {
        if (!x.a_.is_zero() && !y.a_.is_zero()) a_.add_product(x.a_, y.a_, k);
        if (x.b_.is_zero() && y.b_.is_zero()) return;
        if (!x.b_.is_zero() && !y.b_.is_zero()) a_.add_product(x.b_, y.b_, 3 * k);
        if (!x.a_.is_zero() && !y.b_.is_zero()) b_.add_product(x.a_, y.b_, k);
        if (!x.b_.is_zero() && !y.a_.is_zero()) b_.add_product(x.b_, y.a_, k);
    }
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    Rational a_;
    Rational b_;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline void add_product(QuadExt& acc, const QuadExt& x, const QuadExt& y, long k = 1) { acc.add_product(x, y, k); }

/// Nearest double to a + b√3, evaluated at 512 bits before rounding.
inline double to_double(const QuadExt& x) {
    if (x.is_rational()) return to_double(x.a());
    constexpr mp_bitcnt_t kPrecision = 512;
    mpf_class root(3, kPrecision);
    root = sqrt(root);
    mpf_class value(x.a().value(), kPrecision);
    const mpf_class b(x.b().value(), kPrecision);
    value += b * root;
    return detail::round_to_nearest(value, value.get_d());
}

inline QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }

/// "a", "b*r3" or "a+b*r3" (with "a-c*r3" for negative b).
inline std::string to_string(const QuadExt& x) {
    if (x.is_rational()) return to_string(x.a());
    std::string tail;
    if (x.b() == Rational(1)) tail = "r3";
    else if (x.b() == Rational(-1)) tail = "-r3";
    else tail = to_string(x.b()) + "*r3";
    if (x.a().is_zero()) return tail;
    if (tail.front() == '-') return to_string(x.a()) + tail;
    return to_string(x.a()) + "+" + tail;
}

namespace detail {

/// Splits "1/2-3/4*r3" into signed terms; exponent signs ("1e-3") stay attached.
inline std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> terms;
    std::string current;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        const bool is_sign = ch == '+' || ch == '-';
        const bool after_exponent = i > 0 && (s[i - 1] == 'e' || s[i - 1] == 'E');
        const bool after_operator = i > 0 && (s[i - 1] == '*' || s[i - 1] == '/');
        if (is_sign && !current.empty() && !after_exponent && !after_operator) {
            terms.push_back(current);
            current.clear();
        }
        current.push_back(ch);
    }
    if (!current.empty()) terms.push_back(current);
    return terms;
}

}  // namespace detail

/// Parses sums of rational terms and √3 terms, e.g. "-1/2 + 1/2*r3", "r3", "-r3*3/4".
inline QuadExt parse_quad_ext(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty scalar literal");
    Rational a, b;
    for (std::string term : detail::split_terms(s)) {
        bool negative = false;
        if (term[0] == '+' || term[0] == '-') {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        if (term.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
        const auto r3 = term.find("r3");
        if (r3 == std::string::npos) {
            const Rational v = parse_rational(term);
            a += negative ? -v : v;
            continue;
        }
        std::string coeff;
        if (term == "r3") coeff = "1";
        else if (r3 + 2 == term.size() && r3 >= 2 && term[r3 - 1] == '*') coeff = term.substr(0, r3 - 1);
        else if (r3 == 0 && term.size() > 3 && term[2] == '*') coeff = term.substr(3);
        else throw ParseError("malformed sqrt3 term '" + term + "'");
        if (coeff.find("r3") != std::string::npos)
            throw ParseError("repeated r3 in '" + term + "'");
        const Rational v = parse_rational(coeff);
        b += negative ? -v : v;
    }
    return QuadExt(a, b);
}

}  // namespace triality
