#pragma once

#include <array>
#include <string>
#include <string_view>

#include "triality/errors.hpp"

namespace triality {

/// Element σ^a τ^b of the group generated by the triality automorphism τ and the
/// outer involution σ, with τ³ = σ² = e and στσ = τ². As a map, σ^a τ^b applies
/// τ first (b times) and σ afterwards.
class GammaElement {
public:
    constexpr GammaElement() = default;
    constexpr GammaElement(int sigma_power, int tau_power)
        : sigma_(static_cast<unsigned char>(((sigma_power % 2) + 2) % 2)),
          tau_(static_cast<unsigned char>(((tau_power % 3) + 3) % 3)) {}

    static constexpr GammaElement identity() { return {0, 0}; }
    static constexpr GammaElement tau() { return {0, 1}; }
    static constexpr GammaElement sigma() { return {1, 0}; }

    static constexpr std::array<GammaElement, 6> all() {
        return {GammaElement{0, 0}, GammaElement{0, 1}, GammaElement{0, 2},
                GammaElement{1, 0}, GammaElement{1, 1}, GammaElement{1, 2}};
    }

    constexpr int sigma_power() const noexcept { return sigma_; }
    constexpr int tau_power() const noexcept { return tau_; }
    constexpr bool is_identity() const noexcept { return sigma_ == 0 && tau_ == 0; }

    /// Uses τ^k σ = σ τ^{−k}.
    friend constexpr GammaElement operator*(GammaElement x, GammaElement y) {
        const int b = y.sigma_ ? -x.tau_ : x.tau_;
        return {x.sigma_ + y.sigma_, b + y.tau_};
    }

    constexpr GammaElement inverse() const {
        return sigma_ ? *this : GammaElement{0, -tau_};
    }

    friend constexpr bool operator==(GammaElement, GammaElement) = default;

private:
    unsigned char sigma_ = 0;
    unsigned char tau_ = 0;
};

/// "e", "t", "t2", "s", "st", "st2".
inline std::string to_string(GammaElement g) {
    if (g.is_identity()) return "e";
    std::string out = g.sigma_power() ? "s" : "";
    if (g.tau_power() == 1) out += "t";
    if (g.tau_power() == 2) out += "t2";
    return out;
}

inline GammaElement parse_gamma(std::string_view text) {
    for (GammaElement g : GammaElement::all())
        if (to_string(g) == text) return g;
    throw ParseError("unknown gamma element '" + std::string(text) + "' (expected e|t|t2|s|st|st2)");
}

}  // namespace triality
