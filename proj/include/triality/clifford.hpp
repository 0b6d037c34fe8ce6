#pragma once

#include <optional>
#include <string_view>

#include "triality/octonion.hpp"

namespace triality {

/// Even elements are block diagonal, odd ones block antidiagonal.
enum class Parity { even, odd, mixed };

constexpr std::string_view to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::mixed: return "mixed";
    }
    return "mixed";
}

/// The zero matrix counts as even.
template <Scalar S>
Parity parity_of(const Mat16<S>& m) {
    const bool off_zero = block(m, 0, 1).is_zero() && block(m, 1, 0).is_zero();
    if (off_zero) return Parity::even;
    const bool diag_zero = block(m, 0, 0).is_zero() && block(m, 1, 1).is_zero();
    return diag_zero ? Parity::odd : Parity::mixed;
}

/// Element of Cl8 in the real 16×16 matrix model.
template <Scalar S>
class CliffordElement {
public:
    explicit CliffordElement(Mat16<S> m) : matrix_(std::move(m)), parity_(parity_of(matrix_)) {}

    const Mat16<S>& matrix() const noexcept { return matrix_; }
    Parity parity() const noexcept { return parity_; }

    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        return CliffordElement(a.matrix_ * b.matrix_);
    }

private:
    Mat16<S> matrix_;
    Parity parity_;
};

/// x̂ = [[0, −L(x̄)], [L(x), 0]].
template <Scalar S>
CliffordElement<S> clifford_embed(const Octonion<S>& x) {
    const Mat8<S> zero;
    return CliffordElement<S>(from_blocks(zero, Mat8<S>(-left_translation(x.conj())), left_translation(x), zero));
}

/// diag(A,B) · x̂ · diag(Aᵗ,Bᵗ). Both factors must lie in SO8.
template <Scalar S>
Mat16<S> ad_conjugate(const Mat8<S>& a, const Mat8<S>& b, const Octonion<S>& x) {
    if (!is_special_orthogonal(a)) throw NotOrthogonal("ad_conjugate: A is not in SO8");
    if (!is_special_orthogonal(b)) throw NotOrthogonal("ad_conjugate: B is not in SO8");
    const Mat8<S> zero;
    const Mat16<S> d = from_blocks(a, zero, zero, b);
    const Mat16<S> dt = from_blocks(a.transpose(), zero, zero, b.transpose());
    return d * clifford_embed(x).matrix() * dt;
}

/// w with m = ŵ, or nullopt. w is read from the lower-left block applied to e1,
/// and both off-diagonal blocks must then equal L(w) and −L(w̄) exactly (or within eps).
template <Scalar S>
std::optional<Octonion<S>> try_recover_vector(const Mat16<S>& m) {
    const Mat8<S> lower_left = block(m, 1, 0);
    const Octonion<S> w(lower_left.column(0));
    if (!block(m, 0, 0).is_zero() || !block(m, 1, 1).is_zero()) return std::nullopt;
    if (!(lower_left == left_translation(w))) return std::nullopt;
    if (!(block(m, 0, 1) == Mat8<S>(-left_translation(w.conj())))) return std::nullopt;
    return w;
}

template <Scalar S>
Octonion<S> recover_vector(const Mat16<S>& m) {
    auto w = try_recover_vector(m);
    if (!w) throw NotVectorShaped("matrix is not of the form x-hat (parity " +
                                  std::string(to_string(parity_of(m))) + ")");
    return *w;
}

}  // namespace triality
