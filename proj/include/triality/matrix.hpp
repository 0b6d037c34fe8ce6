#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>

#include "triality/integer_kernels.hpp"
#include "triality/scalar.hpp"

namespace triality {

/// Dense row-major N×N matrix over a Scalar backend.
template <Scalar S, std::size_t N>
class Matrix {
public:
    static constexpr std::size_t size = N;
    using Column = std::array<S, N>;

    Matrix() { entries_.fill(S(0)); }

    static Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = S(1);
        return m;
    }

    static Matrix diagonal(const std::array<S, N>& diag) {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = diag[i];
        return m;
    }

    static Matrix from_columns(const std::array<Column, N>& columns) {
        Matrix m;
        for (std::size_t c = 0; c < N; ++c)
            for (std::size_t r = 0; r < N; ++r) m(r, c) = columns[c][r];
        return m;
    }

    S& operator()(std::size_t r, std::size_t c) { return entries_[r * N + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return entries_[r * N + c]; }

    Column column(std::size_t c) const {
        Column out;
        for (std::size_t r = 0; r < N; ++r) out[r] = (*this)(r, c);
        return out;
    }

    Matrix transpose() const {
        Matrix t;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    S trace() const {
        S t(0);
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const S& x) { return triality::is_zero(x); });
    }

    Column apply(std::span<const S, N> x) const {
        Column out;
        out.fill(S(0));
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c)
                if (!triality::is_zero(x[c]) && !triality::is_zero((*this)(r, c))) add_product(out[r], (*this)(r, c), x[c]);
        return out;
    }

    Matrix operator-() const {
        Matrix m;
        for (std::size_t i = 0; i < N * N; ++i) m.entries_[i] = -entries_[i];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if constexpr (S::is_exact) {
            const auto p = detail::multiply(detail::scale<N>(a), detail::scale<N>(b));
            Matrix m;
            for (std::size_t i = 0; i < N * N; ++i) m.entries_[i] = detail::from_scaled<S>(p.e[i], p.den);
            return m;
        }
        Matrix m;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t k = 0; k < N; ++k) {
                const S& lhs = a(r, k);
                if (triality::is_zero(lhs)) continue;
                for (std::size_t c = 0; c < N; ++c)
                    if (!triality::is_zero(b(k, c))) add_product(m(r, c), lhs, b(k, c));
            }
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < N * N; ++i) a.entries_[i] += b.entries_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < N * N; ++i) a.entries_[i] -= b.entries_[i];
        return a;
    }

    friend Matrix operator*(const S& k, Matrix m) {
        for (auto& e : m.entries_) e = k * e;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.entries_ == b.entries_; }

private:
    std::array<S, N * N> entries_;
};

template <Scalar S>
using Mat8 = Matrix<S, 8>;
template <Scalar S>
using Mat16 = Matrix<S, 16>;

/// Largest entrywise residual between two matrices.
template <Scalar S, std::size_t N>
double max_residual(const Matrix<S, N>& a, const Matrix<S, N>& b) {
    double worst = 0;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) worst = std::max(worst, residual(a(r, c), b(r, c)));
    return worst;
}

/// Fraction-free (Bareiss) elimination for exact backends, partial-pivot LU for floats.
template <Scalar S, std::size_t N>
S determinant(const Matrix<S, N>& m) {
    if constexpr (S::is_exact) {
        const auto scaled = detail::scale<N>(m);
        mpz_class den_power;
        mpz_pow_ui(den_power.get_mpz_t(), scaled.den.get_mpz_t(), N);
        return detail::from_scaled<S>(detail::determinant(scaled), den_power);
    } else {
        std::array<double, N * N> a;
        double eps = ApproxReal::default_eps();
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) a[r * N + c] = to_double(m(r, c));
        if constexpr (requires { m(0, 0).eps(); }) eps = m(0, 0).eps();
        double det = 1;
        for (std::size_t k = 0; k < N; ++k) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < N; ++i)
                if (std::fabs(a[i * N + k]) > std::fabs(a[pivot * N + k])) pivot = i;
            if (a[pivot * N + k] == 0.0) return S(ApproxReal(0.0, eps));
            if (pivot != k) {
                for (std::size_t c = 0; c < N; ++c) std::swap(a[k * N + c], a[pivot * N + c]);
                det = -det;
            }
            det *= a[k * N + k];
            for (std::size_t i = k + 1; i < N; ++i) {
                const double f = a[i * N + k] / a[k * N + k];
                for (std::size_t c = k + 1; c < N; ++c) a[i * N + c] -= f * a[k * N + c];
            }
        }
        return S(ApproxReal(det, eps));
    }
}

/// Largest entry of |MᵗM − I|.
template <Scalar S, std::size_t N>
double orthogonality_residual(const Matrix<S, N>& m) {
    return max_residual(Matrix<S, N>(m.transpose() * m), Matrix<S, N>::identity());
}

template <Scalar S, std::size_t N>
bool is_orthogonal(const Matrix<S, N>& m) {
    if constexpr (S::is_exact) return detail::is_orthogonal(detail::scale<N>(m));
    else return m.transpose() * m == Matrix<S, N>::identity();
}

/// MᵗM = I and det M = +1 (exact equality, or tolerance plus a sign test for floats).
template <Scalar S, std::size_t N>
bool is_special_orthogonal(const Matrix<S, N>& m) {
    if (!is_orthogonal(m)) return false;
    const S det = determinant(m);
    if constexpr (S::is_exact) return det == S(1);
    else return to_double(det) > 0;
}

/// Normalised trace metric ⟨A,B⟩ = (1/N)·trace(AᵗB).
template <Scalar S, std::size_t N>
S trace_inner_product(const Matrix<S, N>& a, const Matrix<S, N>& b) {
    S sum(0);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) add_product(sum, a(r, c), b(r, c));
    return sum / S(static_cast<int>(N));
}

/// Assembles [[top_left, top_right], [bottom_left, bottom_right]].
template <Scalar S>
Mat16<S> from_blocks(const Mat8<S>& top_left, const Mat8<S>& top_right,
                     const Mat8<S>& bottom_left, const Mat8<S>& bottom_right) {
    Mat16<S> m;
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            m(r, c) = top_left(r, c);
            m(r, c + 8) = top_right(r, c);
            m(r + 8, c) = bottom_left(r, c);
            m(r + 8, c + 8) = bottom_right(r, c);
        }
    return m;
}

/// 8×8 block (row_block, col_block) ∈ {0,1}².
template <Scalar S>
Mat8<S> block(const Mat16<S>& m, std::size_t row_block, std::size_t col_block) {
    Mat8<S> out;
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) out(r, c) = m(r + 8 * row_block, c + 8 * col_block);
    return out;
}

}  // namespace triality
