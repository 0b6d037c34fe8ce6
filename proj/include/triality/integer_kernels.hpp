#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>

#include "triality/quad_ext.hpp"

/*
 * Exact matrix kernels on a common denominator.
 *
 * An exact N×N matrix M is stored as E/d with E over Z[√3] (or Z) and d a
 * positive integer, so inner loops are integer multiply-adds with no gcd.
 * Results go back through a single canonicalisation per entry.
 */

namespace triality::detail {

/// a + b√3 with integer coefficients.
struct IntQuad {
    mpz_class a;
    mpz_class b;
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    friend bool operator==(const IntQuad&, const IntQuad&) = default;
};

/// acc += sign·x·y.
inline void add_product(IntQuad& acc, const IntQuad& x, const IntQuad& y, int sign = 1) {
    thread_local mpz_class t;
    const bool xa = sgn(x.a) != 0, xb = sgn(x.b) != 0, ya = sgn(y.a) != 0, yb = sgn(y.b) != 0;
    if (sign > 0) {
        if (xa && ya) mpz_addmul(acc.a.get_mpz_t(), x.a.get_mpz_t(), y.a.get_mpz_t());
        if (xb && yb) {
            mpz_mul(t.get_mpz_t(), x.b.get_mpz_t(), y.b.get_mpz_t());
            mpz_addmul_ui(acc.a.get_mpz_t(), t.get_mpz_t(), 3);
        }
        if (xa && yb) mpz_addmul(acc.b.get_mpz_t(), x.a.get_mpz_t(), y.b.get_mpz_t());
        if (xb && ya) mpz_addmul(acc.b.get_mpz_t(), x.b.get_mpz_t(), y.a.get_mpz_t());
    } else {
        if (xa && ya) mpz_submul(acc.a.get_mpz_t(), x.a.get_mpz_t(), y.a.get_mpz_t());
        if (xb && yb) {
            mpz_mul(t.get_mpz_t(), x.b.get_mpz_t(), y.b.get_mpz_t());
            mpz_submul_ui(acc.a.get_mpz_t(), t.get_mpz_t(), 3);
        }
        if (xa && yb) mpz_submul(acc.b.get_mpz_t(), x.a.get_mpz_t(), y.b.get_mpz_t());
        if (xb && ya) mpz_submul(acc.b.get_mpz_t(), x.b.get_mpz_t(), y.a.get_mpz_t());
    }
}

inline IntQuad multiply(const IntQuad& x, const IntQuad& y) {
    IntQuad out;
    add_product(out, x, y);
    return out;
}

inline IntQuad scaled(const IntQuad& x, const mpz_class& k) { return {x.a * k, x.b * k}; }

/// x/y for y dividing x in Z[√3]: x·conj(y)/N(y) with N(y) = a² − 3b².
inline IntQuad divide_exact(const IntQuad& x, const IntQuad& y) {
    const mpz_class norm = y.a * y.a - 3 * y.b * y.b;
    IntQuad out{x.a * y.a - 3 * x.b * y.b, x.b * y.a - x.a * y.b};
    mpz_divexact(out.a.get_mpz_t(), out.a.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(out.b.get_mpz_t(), out.b.get_mpz_t(), norm.get_mpz_t());
    return out;
}

inline const mpq_class& rational_part(const Rational& x) { return x.value(); }
inline const mpq_class* sqrt3_part(const Rational&) { return nullptr; }
inline const mpq_class& rational_part(const QuadExt& x) { return x.a().value(); }
inline const mpq_class* sqrt3_part(const QuadExt& x) { return &x.b().value(); }

template <class S>
S from_scaled(const IntQuad& x, const mpz_class& den);

template <>
inline Rational from_scaled<Rational>(const IntQuad& x, const mpz_class& den) { return Rational(x.a, den); }

template <>
inline QuadExt from_scaled<QuadExt>(const IntQuad& x, const mpz_class& den) {
    return QuadExt(Rational(x.a, den), Rational(x.b, den));
}

/// E/den, row-major.
template <std::size_t N>
struct ScaledMatrix {
    std::array<IntQuad, N * N> e;
    mpz_class den{1};

    IntQuad& operator()(std::size_t r, std::size_t c) { return e[r * N + c]; }
    const IntQuad& operator()(std::size_t r, std::size_t c) const { return e[r * N + c]; }
};

/// Brings an exact matrix (anything with m(r, c) returning Rational or QuadExt) onto the lcm of its denominators.
template <std::size_t N, class M>
ScaledMatrix<N> scale(const M& m) {
    ScaledMatrix<N> out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), rational_part(m(r, c)).get_den_mpz_t());
            if (const mpq_class* b = sqrt3_part(m(r, c)))
                mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), b->get_den_mpz_t());
        }
    thread_local mpz_class factor;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            IntQuad& x = out(r, c);
            const mpq_class& a = rational_part(m(r, c));
            mpz_divexact(factor.get_mpz_t(), out.den.get_mpz_t(), a.get_den_mpz_t());
            mpz_mul(x.a.get_mpz_t(), a.get_num_mpz_t(), factor.get_mpz_t());
            if (const mpq_class* b = sqrt3_part(m(r, c))) {
                mpz_divexact(factor.get_mpz_t(), out.den.get_mpz_t(), b->get_den_mpz_t());
                mpz_mul(x.b.get_mpz_t(), b->get_num_mpz_t(), factor.get_mpz_t());
            }
        }
    return out;
}

template <std::size_t N>
ScaledMatrix<N> multiply(const ScaledMatrix<N>& x, const ScaledMatrix<N>& y) {
    ScaledMatrix<N> out;
    out.den = x.den * y.den;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t k = 0; k < N; ++k) {
            if (x(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < N; ++c)
                if (!y(k, c).is_zero()) add_product(out(r, c), x(r, k), y(k, c));
        }
    return out;
}

/// EᵗE == den²·I, i.e. the represented matrix is orthogonal.
template <std::size_t N>
bool is_orthogonal(const ScaledMatrix<N>& m) {
    const IntQuad one{m.den * m.den, 0};
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = r; c < N; ++c) {
            IntQuad g;
            for (std::size_t k = 0; k < N; ++k) add_product(g, m(k, r), m(k, c));
            if (r == c ? !(g == one) : !g.is_zero()) return false;
        }
    return true;
}

/// det(E) by Bareiss elimination; Z[√3] is an integral domain, so every division is exact.
template <std::size_t N>
IntQuad determinant(ScaledMatrix<N> m) {
    IntQuad prev{1, 0};
    bool negate = false;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < N && m(pivot, k).is_zero()) ++pivot;
            if (pivot == N) return {};
            for (std::size_t c = 0; c < N; ++c) std::swap(m(k, c), m(pivot, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                IntQuad t = multiply(m(i, j), m(k, k));
                add_product(t, m(i, k), m(k, j), -1);
                m(i, j) = divide_exact(t, prev);
            }
            m(i, k) = IntQuad{};
        }
        prev = m(k, k);
    }
    IntQuad d = m(N - 1, N - 1);
    if (negate) d = {-d.a, -d.b};
    return d;
}

}  // namespace triality::detail
