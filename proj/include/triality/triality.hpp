#pragma once

#include <string>
#include <utility>

#include "triality/gamma.hpp"
#include "triality/octonion.hpp"

namespace triality {

namespace detail {

/// B(e_i e_j) = C(e_i)·A(e_j) on all basis pairs, in integer arithmetic:
/// den_b·(C'e_i)(A'e_j) = den_a·den_c·B'(e_i e_j).
inline bool triality_holds(const ScaledMatrix<8>& a, const ScaledMatrix<8>& b, const ScaledMatrix<8>& c,
                           const ProductTable<8>& table) {
    const mpz_class lhs_scale = a.den * c.den;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            std::array<IntQuad, 8> product;
            for (std::size_t p = 0; p < 8; ++p) {
                if (c(p, i).is_zero()) continue;
                for (std::size_t q = 0; q < 8; ++q) {
                    if (a(q, j).is_zero()) continue;
                    const ProductEntry e = table[p][q];
                    add_product(product[e.index], c(p, i), a(q, j), e.sign);
                }
            }
            const ProductEntry e = table[i][j];
            for (std::size_t k = 0; k < 8; ++k) {
                IntQuad expected = scaled(b(k, e.index), lhs_scale);
                if (e.sign < 0) expected = {-expected.a, -expected.b};
                if (!(scaled(product[k], b.den) == expected)) return false;
            }
        }
    return true;
}

}  // namespace detail

/// Outcome of testing B(xy) = (Cx)(Ay) on all 64 basis pairs.
struct TrialityCheck {
    bool special_orthogonal = false;
    bool holds = false;
    int worst_x = 1;  ///< 1-based basis index of the worst pair
    int worst_y = 1;
    double residual = 0;
};

template <Scalar S>
TrialityCheck check_triality(const Mat8<S>& a, const Mat8<S>& b, const Mat8<S>& c) {
    TrialityCheck out;
    out.special_orthogonal = is_special_orthogonal(a) && is_special_orthogonal(b) && is_special_orthogonal(c);
    out.holds = true;
    const auto& table = multiplication_table();
    if constexpr (S::is_exact) {
        if (detail::triality_holds(detail::scale<8>(a), detail::scale<8>(b), detail::scale<8>(c), table)) return out;
    }
    for (std::size_t i = 0; i < 8; ++i) {
        const Octonion<S> cx(c.column(i));
        for (std::size_t j = 0; j < 8; ++j) {
            const ProductEntry e = table[i][j];
            Octonion<S> lhs(b.column(e.index));
            if (e.sign < 0) lhs = -lhs;
            const Octonion<S> rhs = cx * Octonion<S>(a.column(j));
            const double r = max_residual(lhs, rhs);
            if (!(lhs == rhs)) out.holds = false;
            if (r > out.residual) {
                out.residual = r;
                out.worst_x = static_cast<int>(i) + 1;
                out.worst_y = static_cast<int>(j) + 1;
            }
        }
    }
    return out;
}

/// κDκ. Preserves SO8 and is an involution.
///
/// κ is octonionic conjugation on all of O (it negates e2..e8); no quaternionic
/// conjugation enters τ or σ.
template <Scalar S>
Mat8<S> kappa_conjugate(const Mat8<S>& d) {
    if (!is_special_orthogonal(d)) throw NotOrthogonal("kappa_conjugate: input is not in SO8");
    Mat8<S> out = d;
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            if ((r == 0) != (c == 0)) out(r, c) = -out(r, c);
    return out;
}

/// A = B = C = D with D(xy) = D(x)D(y) on all basis pairs.
template <Scalar S>
bool is_automorphism(const Mat8<S>& d) {
    const auto& table = multiplication_table();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const ProductEntry e = table[i][j];
            Octonion<S> lhs(d.column(e.index));
            if (e.sign < 0) lhs = -lhs;
            if (!(lhs == Octonion<S>(d.column(i)) * Octonion<S>(d.column(j)))) return false;
        }
    return true;
}

/// An element of Spin8 as a triple (A,B,C) of SO8 matrices with B(xy) = (Cx)(Ay).
/// Every instance has passed the full 64-pair check.
template <Scalar S>
class TrialityTriple {
public:
    static TrialityTriple verify(Mat8<S> a, Mat8<S> b, Mat8<S> c) {
        const TrialityCheck check = check_triality(a, b, c);
        if (!check.special_orthogonal) throw NotOrthogonal("triple component is not in SO8");
        if (!check.holds) throw TrialityViolated(check.worst_x, check.worst_y, check.residual);
        return TrialityTriple(std::move(a), std::move(b), std::move(c));
    }

    static TrialityTriple identity() {
        return TrialityTriple(Mat8<S>::identity(), Mat8<S>::identity(), Mat8<S>::identity());
    }

    /// Recovers C(x) = B(x)·conj(A(e1)) from a pair (A,B), then verifies the triple.
    static TrialityTriple from_pair(const Mat8<S>& a, const Mat8<S>& b) {
        const Octonion<S> a1(a.column(0));
        return verify(a, b, right_translation(a1.conj()) * b);
    }

    const Mat8<S>& a() const noexcept { return a_; }
    const Mat8<S>& b() const noexcept { return b_; }
    const Mat8<S>& c() const noexcept { return c_; }

    /// (Aᵗ, Bᵗ, Cᵗ).
    TrialityTriple inverse() const { return verify(a_.transpose(), b_.transpose(), c_.transpose()); }

    friend TrialityTriple operator*(const TrialityTriple& g, const TrialityTriple& h) {
        return verify(g.a_ * h.a_, g.b_ * h.b_, g.c_ * h.c_);
    }

    friend bool operator==(const TrialityTriple& g, const TrialityTriple& h) {
        return g.a_ == h.a_ && g.b_ == h.b_ && g.c_ == h.c_;
    }

private:
    TrialityTriple(Mat8<S> a, Mat8<S> b, Mat8<S> c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    Mat8<S> a_, b_, c_;
};

template <Scalar S>
double max_residual(const TrialityTriple<S>& g, const TrialityTriple<S>& h) {
    return std::max({max_residual(g.a(), h.a()), max_residual(g.b(), h.b()), max_residual(g.c(), h.c())});
}

/// (L(s), L(s̄), x ↦ s̄xs̄) for a unit octonion s.
template <Scalar S>
TrialityTriple<S> spin_from_unit(const UnitOctonion<S>& s) {
    const Octonion<S> sbar = s.value().conj();
    std::array<std::array<S, 8>, 8> cols;
    for (int k = 0; k < 8; ++k)
        cols[static_cast<std::size_t>(k)] = ((sbar * Octonion<S>::basis(k + 1)) * sbar).coeffs();
    return TrialityTriple<S>::verify(left_translation(s.value()), left_translation(sbar),
                                     Mat8<S>::from_columns(cols));
}

/// (D,D,D) with D: x ↦ s x s̄. An automorphism of O whenever s³ = 1.
template <Scalar S>
TrialityTriple<S> g2_conjugation(const UnitOctonion<S>& s) {
    const Octonion<S> sbar = s.value().conj();
    std::array<std::array<S, 8>, 8> cols;
    for (int k = 0; k < 8; ++k)
        cols[static_cast<std::size_t>(k)] = ((s.value() * Octonion<S>::basis(k + 1)) * sbar).coeffs();
    const Mat8<S> d = Mat8<S>::from_columns(cols);
    return TrialityTriple<S>::verify(d, d, d);
}

/// τ: (A,B,C) ↦ (κBκ, κCκ, A).
template <Scalar S>
TrialityTriple<S> apply_tau(const TrialityTriple<S>& g) {
    return TrialityTriple<S>::verify(kappa_conjugate(g.b()), kappa_conjugate(g.c()), g.a());
}

/// σ: (A,B,C) ↦ (B, A, κCκ).
template <Scalar S>
TrialityTriple<S> apply_sigma(const TrialityTriple<S>& g) {
    return TrialityTriple<S>::verify(g.b(), g.a(), kappa_conjugate(g.c()));
}

/// σ^a τ^b acting on g: τ first, then σ.
template <Scalar S>
TrialityTriple<S> apply_gamma(GammaElement w, TrialityTriple<S> g) {
    for (int k = 0; k < w.tau_power(); ++k) g = apply_tau(g);
    if (w.sigma_power()) g = apply_sigma(g);
    return g;
}

/// Fixed by τ (equivalently by τ and σ) and hence in G2 = Aut(O).
template <Scalar S>
bool is_g2(const TrialityTriple<S>& g) {
    return g.a() == g.b() && g.b() == g.c() && is_automorphism(g.a());
}

/// (g, γ) in the semidirect product Spin8 ⋊ Γ̂, with (g,γ)(h,δ) = (g·γ(h), γδ).
template <Scalar S>
class SemidirectElement {
public:
    SemidirectElement(TrialityTriple<S> spin, GammaElement gamma) : spin_(std::move(spin)), gamma_(gamma) {}

    static SemidirectElement identity() { return {TrialityTriple<S>::identity(), GammaElement::identity()}; }

    const TrialityTriple<S>& spin() const noexcept { return spin_; }
    GammaElement gamma() const noexcept { return gamma_; }

    /// (γ⁻¹(g⁻¹), γ⁻¹).
    SemidirectElement inverse() const {
        const GammaElement inv = gamma_.inverse();
        return {apply_gamma(inv, spin_.inverse()), inv};
    }

    friend SemidirectElement operator*(const SemidirectElement& p, const SemidirectElement& q) {
        return {p.spin_ * apply_gamma(p.gamma_, q.spin_), p.gamma_ * q.gamma_};
    }

    friend bool operator==(const SemidirectElement& p, const SemidirectElement& q) {
        return p.gamma_ == q.gamma_ && p.spin_ == q.spin_;
    }

private:
    TrialityTriple<S> spin_;
    GammaElement gamma_;
};

}  // namespace triality
