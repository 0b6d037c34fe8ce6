#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "triality/matrix.hpp"

/*
 * Octonions on R^8 with basis e1..e8, e1 the unit.
 *
 * The multiplication table comes from repeated Cayley-Dickson doubling
 *
 *     (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),   conj(a, b) = (conj(a), -b)
 *
 * starting from R. With that ordering the basis reads
 *
 *     e1 = 1, e2 = i, e3 = j, e4 = ij, e5 = l, e6 = il, e7 = jl, e8 = (ij)l
 *
 * where l is orthogonal to the quaternions H = span(1, i, j, ij).
 *
 * Indices in the C++ API are 0-based (coefficient k holds e_{k+1}); only
 * Octonion::basis() takes the 1-based label used in formulas.
 */

namespace triality {

struct ProductEntry {
    std::uint8_t index;  ///< 0-based basis index of e_i e_j
    std::int8_t sign;    ///< ±1
};

template <std::size_t N>
using ProductTable = std::array<std::array<ProductEntry, N>, N>;

namespace detail {

template <std::size_t N>
ProductTable<2 * N> double_table(const ProductTable<N>& t) {
    // basis p < N is (e_p, 0); basis p >= N is (0, e_{p-N}).
    auto conj_sign = [](std::size_t p) { return p == 0 ? 1 : -1; };
    ProductTable<2 * N> out{};
    for (std::size_t p = 0; p < 2 * N; ++p)
        for (std::size_t q = 0; q < 2 * N; ++q) {
            const bool p_hi = p >= N, q_hi = q >= N;
            const std::size_t a = p % N, c = q % N;
            ProductEntry e{};
            if (!p_hi && !q_hi) {  // (a,0)(c,0) = (ac, 0)
                e = t[a][c];
            } else if (!p_hi && q_hi) {  // (a,0)(0,d) = (0, d a)
                e = t[c][a];
                e.index = static_cast<std::uint8_t>(e.index + N);
            } else if (p_hi && !q_hi) {  // (0,b)(c,0) = (0, b conj(c))
                e = t[a][c];
                e.sign = static_cast<std::int8_t>(e.sign * conj_sign(c));
                e.index = static_cast<std::uint8_t>(e.index + N);
            } else {  // (0,b)(0,d) = (-conj(d) b, 0)
                e = t[c][a];
                e.sign = static_cast<std::int8_t>(-e.sign * conj_sign(c));
            }
            out[p][q] = e;
        }
    return out;
}

inline ProductTable<8> build_octonion_table() {
    const ProductTable<1> reals{{{{ProductEntry{0, 1}}}}};
    return double_table(double_table(double_table(reals)));
}

}  // namespace detail

/// The 8×8 signed basis product table, generated once.
inline const ProductTable<8>& multiplication_table() {
    static const ProductTable<8> table = detail::build_octonion_table();
    return table;
}

template <Scalar S>
class Octonion {
public:
    using Coefficients = std::array<S, 8>;

    Octonion() { c_.fill(S(0)); }
    explicit Octonion(const Coefficients& c) : c_(c) {}
    /// Real multiple of the unit.
    explicit Octonion(const S& real) : Octonion() { c_[0] = real; }

    /// e_k for k in 1..8.
    static Octonion basis(int k) {
        if (k < 1 || k > 8) throw Error("basis index out of range: " + std::to_string(k));
        Octonion x;
        x.c_[static_cast<std::size_t>(k - 1)] = S(1);
        return x;
    }
    static Octonion one() { return basis(1); }

    const Coefficients& coeffs() const noexcept { return c_; }
    std::span<const S, 8> span() const noexcept { return c_; }
    const S& operator[](std::size_t i) const { return c_[i]; }
    S& operator[](std::size_t i) { return c_[i]; }

    const S& real() const { return c_[0]; }
    Octonion imag() const {
        Octonion x = *this;
        x.c_[0] = S(0);
        return x;
    }
    bool is_zero() const {
        for (const auto& v : c_)
            if (!triality::is_zero(v)) return false;
        return true;
    }
    bool is_imaginary() const { return triality::is_zero(c_[0]); }

    /// Octonionic conjugation: negates coordinates 2..8.
    Octonion conj() const {
        Octonion x = *this;
        for (std::size_t i = 1; i < 8; ++i) x.c_[i] = -x.c_[i];
        return x;
    }

    /// Squared Euclidean norm.
    S norm2() const {
        S n(0);
        for (const auto& v : c_)
            if (!triality::is_zero(v)) add_product(n, v, v);
        return n;
    }

    S dot(const Octonion& o) const {
        S d(0);
        for (std::size_t i = 0; i < 8; ++i) add_product(d, c_[i], o.c_[i]);
        return d;
    }

    /// x⁻¹ = conj(x)/|x|².
    Octonion inverse() const {
        if (is_zero()) throw ZeroDivisor();
        return conj() * norm2().inverse();
    }

    Octonion operator-() const {
        Octonion x;
        for (std::size_t i = 0; i < 8; ++i) x.c_[i] = -c_[i];
        return x;
    }

    friend Octonion operator+(Octonion a, const Octonion& b) {
        for (std::size_t i = 0; i < 8; ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend Octonion operator-(Octonion a, const Octonion& b) {
        for (std::size_t i = 0; i < 8; ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    friend Octonion operator*(Octonion a, const S& k) {
        for (auto& v : a.c_) v *= k;
        return a;
    }
    friend Octonion operator*(const S& k, Octonion a) { return a * k; }

    friend Octonion operator*(const Octonion& x, const Octonion& y) {
        const auto& table = multiplication_table();
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) {
            if (triality::is_zero(x.c_[i])) continue;
            for (std::size_t j = 0; j < 8; ++j) {
                if (triality::is_zero(y.c_[j])) continue;
                const ProductEntry e = table[i][j];
                add_product(r.c_[e.index], x.c_[i], y.c_[j], e.sign);
            }
        }
        return r;
    }

    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

private:
    Coefficients c_;
};

template <Scalar S>
Octonion<S> conj(const Octonion<S>& x) { return x.conj(); }

/// Largest coordinate residual.
template <Scalar S>
double max_residual(const Octonion<S>& a, const Octonion<S>& b) {
    double worst = 0;
    for (std::size_t i = 0; i < 8; ++i) worst = std::max(worst, residual(a[i], b[i]));
    return worst;
}

template <Scalar S>
Octonion<S> operator*(const Mat8<S>& m, const Octonion<S>& x) {
    return Octonion<S>(m.apply(x.span()));
}

/// Left translation L(x): y ↦ xy.
template <Scalar S>
Mat8<S> left_translation(const Octonion<S>& x) {
    std::array<std::array<S, 8>, 8> cols;
    for (int j = 0; j < 8; ++j) cols[static_cast<std::size_t>(j)] = (x * Octonion<S>::basis(j + 1)).coeffs();
    return Mat8<S>::from_columns(cols);
}

/// Right translation R(x): y ↦ yx.
template <Scalar S>
Mat8<S> right_translation(const Octonion<S>& x) {
    std::array<std::array<S, 8>, 8> cols;
    for (int j = 0; j < 8; ++j) cols[static_cast<std::size_t>(j)] = (Octonion<S>::basis(j + 1) * x).coeffs();
    return Mat8<S>::from_columns(cols);
}

/// κ = diag(1, −1, …, −1), the matrix of octonionic conjugation.
template <Scalar S>
Mat8<S> kappa() {
    std::array<S, 8> d;
    d.fill(S(-1));
    d[0] = S(1);
    return Mat8<S>::diagonal(d);
}

/// Octonion with |x|² = 1, checked at construction.
template <Scalar S>
class UnitOctonion {
public:
    explicit UnitOctonion(Octonion<S> x) : x_(std::move(x)) {
        if (!(x_.norm2() == S(1))) throw NotUnit("|x|^2 = " + to_string(x_.norm2()));
    }
    const Octonion<S>& value() const noexcept { return x_; }
    operator const Octonion<S>&() const noexcept { return x_; }  // NOLINT

private:
    Octonion<S> x_;
};

/// Unit octonion with vanishing real part, i.e. a point of the 6-sphere in Im O.
template <Scalar S>
class ImaginaryUnit {
public:
    explicit ImaginaryUnit(Octonion<S> v) : v_(std::move(v)) {
        if (!v_.is_imaginary()) throw NotImaginaryUnit("real part " + to_string(v_.real()));
        if (!(v_.norm2() == S(1))) throw NotImaginaryUnit("|v|^2 = " + to_string(v_.norm2()));
    }
    const Octonion<S>& value() const noexcept { return v_; }
    operator const Octonion<S>&() const noexcept { return v_; }  // NOLINT
    ImaginaryUnit operator-() const { return ImaginaryUnit(-v_); }

private:
    Octonion<S> v_;
};

/// s = ½(−1 + √3·v): a primitive cube root of unity, s³ = 1 and s² = conj(s).
template <ScalarWithSqrt3 S>
Octonion<S> cube_root_of_unity(const ImaginaryUnit<S>& v) {
    const S half = S::from_rational(Rational(1, 2));
    return (Octonion<S>(S(-1)) + v.value() * S::sqrt3()) * half;
}

/// Formats as "[c1, c2, ..., c8]".
template <Scalar S>
std::string to_string(const Octonion<S>& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < 8; ++i) {
        if (i) out += ", ";
        out += to_string(x[i]);
    }
    return out + "]";
}

/// Parses "[c1, ..., c8]" with scalar literals per the backend.
template <Scalar S>
Octonion<S> parse_octonion(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("octonion literal must be bracketed: '" + std::string(text) + "'");
    std::vector<std::string> parts;
    std::string current;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(s[i]);
        }
    }
    parts.push_back(current);
    if (parts.size() != 8)
        throw ParseError("octonion literal needs 8 coordinates, got " + std::to_string(parts.size()));
    typename Octonion<S>::Coefficients c;
    for (std::size_t i = 0; i < 8; ++i) c[i] = parse_scalar<S>(parts[i]);
    return Octonion<S>(c);
}

}  // namespace triality
