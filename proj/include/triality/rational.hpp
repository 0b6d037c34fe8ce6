#pragma once

#include <gmpxx.h>

#include <bit>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include "triality/errors.hpp"

namespace triality {

namespace detail {

/// Round-to-nearest-even selection between the truncated double `d` and its
/// neighbour away from zero. `Exact` is mpq_class or mpf_class.
template <class Exact>
double round_to_nearest(const Exact& value, double truncated) {
    if (!std::isfinite(truncated)) return truncated;
    const Exact at_d(truncated);
    if (at_d == value) return truncated;
    const double dir = value > at_d ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
    const double other = std::nextafter(truncated, dir);
    const Exact at_other(other);
    const Exact err_d = abs(Exact(value - at_d));
    const Exact err_other = abs(Exact(value - at_other));
    if (err_other < err_d) return other;
    if (err_d < err_other) return truncated;
    return (std::bit_cast<std::uint64_t>(truncated) & 1u) == 0 ? truncated : other;
}

inline double nearest_double(const mpq_class& q) { return round_to_nearest(q, q.get_d()); }

inline std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace detail

/// Arbitrary-precision rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    static constexpr bool is_exact = true;

    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational from_rational(const Rational& r) { return r; }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& value() const noexcept { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1) / q_);
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }

    /// this += k·a·b without temporaries.
    void add_product(const Rational& a, const Rational& b, long k = 1) {
        thread_local mpq_class scratch;
        mpq_mul(scratch.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        if (k != 1) {
            mpz_mul_si(mpq_numref(scratch.get_mpq_t()), mpq_numref(scratch.get_mpq_t()), k);
            mpq_canonicalize(scratch.get_mpq_t());
        }
        mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), scratch.get_mpq_t());
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline void add_product(Rational& acc, const Rational& a, const Rational& b, long k = 1) { acc.add_product(a, b, k); }
inline double to_double(const Rational& x) { return detail::nearest_double(x.value()); }
inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) {
    if (x.denominator() == 1) return x.numerator().get_str();
    return x.numerator().get_str() + "/" + x.denominator().get_str();
}

/// Accepts "p", "p/q" and finite decimals such as "-0.25" or "1.5e-3" (converted exactly).
inline Rational parse_rational(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    const std::string body = s.substr(pos);

    if (const auto slash = body.find('/'); slash != std::string::npos) {
        const std::string num = body.substr(0, slash);
        const std::string den = body.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den))
            throw ParseError("malformed rational '" + std::string(text) + "'");
        mpz_class n(num, 10);
        const mpz_class d(den, 10);
        if (negative) n = -n;
        return Rational(n, d);
    }

    std::string mantissa = body;
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string::npos) {
        mantissa = body.substr(0, e);
        std::string exp_text = body.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
            exp_negative = exp_text[0] == '-';
            exp_text.erase(0, 1);
        }
        if (!detail::all_digits(exp_text) || exp_text.size() > 6)
            throw ParseError("malformed exponent in '" + std::string(text) + "'");
        exponent = std::stol(exp_text) * (exp_negative ? -1 : 1);
    }
    std::string digits = mantissa;
    if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
        const std::string frac = mantissa.substr(dot + 1);
        digits = mantissa.substr(0, dot) + frac;
        exponent -= static_cast<long>(frac.size());
        if (mantissa.substr(0, dot).empty() && frac.empty())
            throw ParseError("malformed number '" + std::string(text) + "'");
    }
    if (!detail::all_digits(digits))
        throw ParseError("malformed number '" + std::string(text) + "'");
    mpz_class n(digits, 10);
    if (negative) n = -n;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    return exponent >= 0 ? Rational(n * scale, mpz_class(1)) : Rational(n, scale);
}

}  // namespace triality
