#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "triality/quad_ext.hpp"

namespace triality {

/// Double-precision real compared with an absolute tolerance.
///
/// Binary operations carry the larger of the two tolerances. Values created
/// without an explicit tolerance pick up `ApproxReal::default_eps()`, which the
/// CLI sets once per run (use `ToleranceScope` for a temporary change).
class ApproxReal {
public:
    static constexpr bool is_exact = false;
    static constexpr double kDefaultEps = 1e-9;

    static double& default_eps() {
        static double eps = kDefaultEps;
        return eps;
    }

    ApproxReal() : ApproxReal(0.0) {}
    ApproxReal(double value) : value_(value), eps_(default_eps()) {}  // NOLINT
    ApproxReal(int value) : ApproxReal(static_cast<double>(value)) {}  // NOLINT
    ApproxReal(double value, double eps) : value_(value), eps_(eps) {
        if (!(eps > 0)) throw Error("tolerance must be positive");
    }

    static ApproxReal from_rational(const Rational& r) { return ApproxReal(to_double(r)); }
    static ApproxReal sqrt3() { return ApproxReal(1.7320508075688772); }

    double value() const noexcept { return value_; }
    double eps() const noexcept { return eps_; }

    bool is_zero() const { return std::fabs(value_) <= eps_; }

    ApproxReal inverse() const {
        if (is_zero()) throw DivisionByZero();
        return ApproxReal(1.0 / value_, eps_);
    }

    ApproxReal operator-() const { return ApproxReal(-value_, eps_); }

    ApproxReal& operator+=(const ApproxReal& o) { value_ += o.value_; eps_ = std::max(eps_, o.eps_); return *this; }
    ApproxReal& operator-=(const ApproxReal& o) { value_ -= o.value_; eps_ = std::max(eps_, o.eps_); return *this; }
    ApproxReal& operator*=(const ApproxReal& o) { value_ *= o.value_; eps_ = std::max(eps_, o.eps_); return *this; }
    ApproxReal& operator/=(const ApproxReal& o) {
        if (o.is_zero()) throw DivisionByZero();
        value_ /= o.value_;
        eps_ = std::max(eps_, o.eps_);
        return *this;
    }

    friend ApproxReal operator+(ApproxReal x, const ApproxReal& y) { return x += y; }
    friend ApproxReal operator-(ApproxReal x, const ApproxReal& y) { return x -= y; }
    friend ApproxReal operator*(ApproxReal x, const ApproxReal& y) { return x *= y; }
    friend ApproxReal operator/(ApproxReal x, const ApproxReal& y) { return x /= y; }

    friend bool operator==(const ApproxReal& x, const ApproxReal& y) {
        return std::fabs(x.value_ - y.value_) <= std::max(x.eps_, y.eps_);
    }

private:
    double value_;
    double eps_;
};

/// Temporarily replaces the default tolerance for newly created ApproxReal values.
class ToleranceScope {
public:
    explicit ToleranceScope(double eps) : saved_(ApproxReal::default_eps()) {
        if (!(eps > 0)) throw Error("tolerance must be positive");
        ApproxReal::default_eps() = eps;
    }
    ~ToleranceScope() { ApproxReal::default_eps() = saved_; }
    ToleranceScope(const ToleranceScope&) = delete;
    ToleranceScope& operator=(const ToleranceScope&) = delete;

private:
    double saved_;
};

inline bool is_zero(const ApproxReal& x) { return x.is_zero(); }
inline void add_product(ApproxReal& acc, const ApproxReal& x, const ApproxReal& y, long k = 1) {
    acc += ApproxReal(static_cast<double>(k) * x.value() * y.value(), std::max(x.eps(), y.eps()));
}
inline double to_double(const ApproxReal& x) { return x.value(); }
inline ApproxReal abs(const ApproxReal& x) { return ApproxReal(std::fabs(x.value()), x.eps()); }

/// Shortest decimal literal that round-trips.
inline std::string to_string(const ApproxReal& x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x.value());
    return std::string(buf, end);
}

/// Decimal literal; rational and "r3" forms are accepted and rounded to nearest.
inline ApproxReal parse_approx_real(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    double value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && end == s.data() + s.size()) return ApproxReal(value);
    return ApproxReal(to_double(parse_quad_ext(s)));
}

/// Nearest-float image of an exact or approximate scalar.
inline ApproxReal embed_float(const Rational& x) { return ApproxReal(to_double(x)); }
inline ApproxReal embed_float(const QuadExt& x) { return ApproxReal(to_double(x)); }
inline ApproxReal embed_float(const ApproxReal& x) { return x; }

}  // namespace triality
