#pragma once

#include <cmath>
#include <concepts>
#include <limits>
#include <string>
#include <string_view>

#include "triality/approx_real.hpp"
#include "triality/quad_ext.hpp"
#include "triality/rational.hpp"

namespace triality {

/// Field element contract shared by Rational, QuadExt and ApproxReal.
template <class S>
concept Scalar = std::regular<S> && requires(const S a, const S b, S c, const Rational r) {
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { a / b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a.inverse() } -> std::same_as<S>;
    { is_zero(a) } -> std::same_as<bool>;
    add_product(c, a, b, 1L);
    { to_double(a) } -> std::same_as<double>;
    { to_string(a) } -> std::same_as<std::string>;
    { S::from_rational(r) } -> std::same_as<S>;
    { S::is_exact } -> std::convertible_to<bool>;
    S(0);
    S(1);
};

/// Backends that can represent √3 (needed for the cube roots of unity).
template <class S>
concept ScalarWithSqrt3 = Scalar<S> && requires {
    { S::sqrt3() } -> std::same_as<S>;
};

template <Scalar S>
inline constexpr bool is_exact_v = S::is_exact;

/// |a − b| as a double. Exact backends report exactly 0 for equal values and
/// never round a genuine difference down to 0.
template <Scalar S>
double residual(const S& a, const S& b) {
    if constexpr (S::is_exact) {
        if (a == b) return 0.0;
        const double d = std::fabs(to_double(S(a - b)));
        return d > 0 ? d : std::numeric_limits<double>::denorm_min();
    } else {
        return std::fabs(to_double(a) - to_double(b));
    }
}

template <Scalar S>
S parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) { return parse_rational(text); }
template <>
inline QuadExt parse_scalar<QuadExt>(std::string_view text) { return parse_quad_ext(text); }
template <>
inline ApproxReal parse_scalar<ApproxReal>(std::string_view text) { return parse_approx_real(text); }

/// Short backend label used in reports.
template <Scalar S>
constexpr std::string_view backend_name() {
    if constexpr (S::is_exact) return "exact";
    else return "float";
}

static_assert(ScalarWithSqrt3<QuadExt>);
static_assert(ScalarWithSqrt3<ApproxReal>);
static_assert(Scalar<Rational> && !ScalarWithSqrt3<Rational>);

}  // namespace triality
