#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "triality/sampling.hpp"

/*
 * X = S^7 x S^7 = Spin8/G2 as a space with isolated-fixed-point symmetries.
 *
 * Spin8 acts by (A,B,C)·(x,y) = (Ax, By); the base point is o = (1,1) and its
 * isotropy group is G2. In these coordinates
 *
 *     tau(x, y)   = (conj(y), x conj(y))
 *     sigma(x, y) = (y, x)
 *
 * A point z = g·o carries its transporter g explicitly ("witness"); the
 * symmetries at z are the conjugates g γ g⁻¹ evaluated through the semidirect
 * product, never by solving for a transporter.
 */

namespace triality {

template <Scalar S>
class SpherePoint {
public:
    SpherePoint(UnitOctonion<S> x, UnitOctonion<S> y) : x_(std::move(x)), y_(std::move(y)) {}
    SpherePoint(const Octonion<S>& x, const Octonion<S>& y) : x_(x), y_(y) {}

    /// o = (1, 1).
    static SpherePoint origin() { return {Octonion<S>::one(), Octonion<S>::one()}; }

    const Octonion<S>& x() const noexcept { return x_.value(); }
    const Octonion<S>& y() const noexcept { return y_.value(); }

    friend bool operator==(const SpherePoint& p, const SpherePoint& q) { return p.x() == q.x() && p.y() == q.y(); }

private:
    UnitOctonion<S> x_;
    UnitOctonion<S> y_;
};

template <Scalar S>
double max_residual(const SpherePoint<S>& p, const SpherePoint<S>& q) {
    return std::max(max_residual(p.x(), q.x()), max_residual(p.y(), q.y()));
}

/// (Ax, By).
template <Scalar S>
SpherePoint<S> act(const TrialityTriple<S>& g, const SpherePoint<S>& pt) {
    return {g.a() * pt.x(), g.b() * pt.y()};
}

template <Scalar S>
SpherePoint<S> tau_sphere(const SpherePoint<S>& pt) {
    const Octonion<S> ybar = pt.y().conj();
    return {ybar, pt.x() * ybar};
}

template <Scalar S>
SpherePoint<S> sigma_sphere(const SpherePoint<S>& pt) {
    return {pt.y(), pt.x()};
}

/// σ^a τ^b on X: τ first, then σ.
template <Scalar S>
SpherePoint<S> gamma_sphere(GammaElement w, SpherePoint<S> pt) {
    for (int k = 0; k < w.tau_power(); ++k) pt = tau_sphere(pt);
    if (w.sigma_power()) pt = sigma_sphere(pt);
    return pt;
}

/// (g,γ) acts as g ∘ γ.
template <Scalar S>
SpherePoint<S> act(const SemidirectElement<S>& p, const SpherePoint<S>& pt) {
    return act(p.spin(), gamma_sphere(p.gamma(), pt));
}

/// (s, s̄) with s = ½(−1 + √3 v); a point of the polar Y ⊂ Fix(τ).
template <ScalarWithSqrt3 S>
SpherePoint<S> fix_tau_point(const ImaginaryUnit<S>& v) {
    const Octonion<S> s = cube_root_of_unity(v);
    SpherePoint<S> p(s, s.conj());
    if (!(tau_sphere(p) == p)) throw Error("fix_tau_point: result is not fixed by tau");
    return p;
}

/// Direct evaluation of τ, cross-checked against conj(x) = y = x².
template <Scalar S>
bool is_fixed_by_tau(const SpherePoint<S>& pt) {
    const bool direct = tau_sphere(pt) == pt;
    const bool characterised = pt.x().conj() == pt.y() && pt.y() == pt.x() * pt.x();
    if (direct != characterised) throw Error("is_fixed_by_tau: direct evaluation disagrees with x^2 = conj(x) = y");
    return direct;
}

/// Fixed by the whole group generated by τ and σ.
template <Scalar S>
bool is_fixed_by_gamma_hat(const SpherePoint<S>& pt) {
    const auto all = GammaElement::all();
    return std::all_of(all.begin(), all.end(), [&](GammaElement w) { return gamma_sphere(w, pt) == pt; });
}

/// γ_x = (g,e)(1,γ)(g⁻¹,e) = (g·γ(g⁻¹), γ) for x = g·o.
template <Scalar S>
SemidirectElement<S> phi_x(const TrialityTriple<S>& witness, GammaElement w) {
    return {witness * apply_gamma(w, witness.inverse()), w};
}

struct FixedCheck {
    bool fixed = true;
    double residual = 0;
};

/// Whether z ∈ Fix(Γ_x) for Γ = ⟨τ⟩ and x = witness·o, with the largest residual seen.
template <Scalar S>
FixedCheck check_fixed_by_conjugate(const TrialityTriple<S>& witness, const SpherePoint<S>& z) {
    FixedCheck out;
    for (GammaElement w : {GammaElement{0, 1}, GammaElement{0, 2}}) {
        const SpherePoint<S> image = act(phi_x(witness, w), z);
        out.residual = std::max(out.residual, max_residual(image, z));
        if (!(image == z)) out.fixed = false;
    }
    return out;
}

struct KaiReport {
    bool holds = true;
    double residual = 0;
};

/// γ_x δ_y γ_x⁻¹ = φ_{γ_x(y)}(γ δ γ⁻¹), compared as maps on `grid`.
///
/// The witness for γ_x(y) is g_x·γ(g_x⁻¹ g_y), which follows from γ g = γ(g) γ
/// and γ(o) = o; the check also confirms that this witness transports o to γ_x(y).
template <Scalar S>
KaiReport kai_check(const TrialityTriple<S>& gx, const TrialityTriple<S>& gy, GammaElement gamma,
                   GammaElement delta, std::span<const SpherePoint<S>> grid) {
    const SemidirectElement<S> gamma_x = phi_x(gx, gamma);
    const SemidirectElement<S> delta_y = phi_x(gy, delta);
    const SemidirectElement<S> lhs = gamma_x * delta_y * gamma_x.inverse();

    const TrialityTriple<S> gz = gx * apply_gamma(gamma, gx.inverse() * gy);
    const SemidirectElement<S> rhs = phi_x(gz, gamma * delta * gamma.inverse());

    KaiReport out;
    const SpherePoint<S> y = act(gy, SpherePoint<S>::origin());
    const SpherePoint<S> z_direct = act(gamma_x, y);
    const SpherePoint<S> z_witness = act(gz, SpherePoint<S>::origin());
    out.residual = max_residual(z_direct, z_witness);
    out.holds = z_direct == z_witness;
    for (const auto& pt : grid) {
        const SpherePoint<S> l = act(lhs, pt);
        const SpherePoint<S> r = act(rhs, pt);
        out.residual = std::max(out.residual, max_residual(l, r));
        if (!(l == r)) out.holds = false;
    }
    return out;
}

/// The polar of x = witness·o: the 6-sphere witness·Y inside Fix(Γ_x).
template <ScalarWithSqrt3 S>
class PolarSphere {
public:
    explicit PolarSphere(TrialityTriple<S> witness) : witness_(std::move(witness)) {}

    SpherePoint<S> basepoint() const { return act(witness_, SpherePoint<S>::origin()); }
    const TrialityTriple<S>& witness() const noexcept { return witness_; }

    /// witness·(s, s̄) with s the cube root attached to v.
    SpherePoint<S> point(const ImaginaryUnit<S>& v) const { return act(witness_, fix_tau_point(v)); }

    bool contains_fixed(const SpherePoint<S>& z) const { return check_fixed_by_conjugate(witness_, z).fixed; }

private:
    TrialityTriple<S> witness_;
};

/// One entry of the pairwise certificate: `point` ∈ Fix(Γ_basepoint).
struct AntipodalCertificate {
    std::string basepoint;
    std::string point;
    bool fixed = false;
    double residual = 0;
};

/// {o, p, q} with p = (s, s̄), q = (s̄, s) and their transporters 1, spin(s), spin(s̄).
template <ScalarWithSqrt3 S>
class AntipodalSet {
public:
    static constexpr const char* kNames[3] = {"o", "p", "q"};

    explicit AntipodalSet(const ImaginaryUnit<S>& v)
        : v_(v), s_(cube_root_of_unity(v)),
          points_{SpherePoint<S>::origin(), SpherePoint<S>(s_, s_.conj()), SpherePoint<S>(s_.conj(), s_)},
          witnesses_{TrialityTriple<S>::identity(), spin_from_unit(UnitOctonion<S>(s_)),
                     spin_from_unit(UnitOctonion<S>(s_.conj()))} {}

    const ImaginaryUnit<S>& v() const noexcept { return v_; }
    const Octonion<S>& s() const noexcept { return s_; }
    const std::array<SpherePoint<S>, 3>& points() const noexcept { return points_; }
    const std::array<TrialityTriple<S>, 3>& witnesses() const noexcept { return witnesses_; }

    /// Every point checked against Γ_b for every basepoint b of the set.
    std::vector<AntipodalCertificate> certificates() const {
        std::vector<AntipodalCertificate> out;
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t z = 0; z < 3; ++z) {
                const auto check = check_fixed_by_conjugate(witnesses_[b], points_[z]);
                out.push_back({kNames[b], kNames[z], check.fixed, check.residual});
            }
        return out;
    }

    /// σ fixes o and exchanges p and q.
    bool sigma_swaps() const {
        return sigma_sphere(points_[0]) == points_[0] && sigma_sphere(points_[1]) == points_[2] &&
               sigma_sphere(points_[2]) == points_[1];
    }

private:
    ImaginaryUnit<S> v_;
    Octonion<S> s_;
    std::array<SpherePoint<S>, 3> points_;
    std::array<TrialityTriple<S>, 3> witnesses_;
};

/// Builds the 3-point set, checks that each witness transports o correctly and
/// that every pair is mutually antipodal.
template <ScalarWithSqrt3 S>
AntipodalSet<S> antipodal_set(const ImaginaryUnit<S>& v) {
    AntipodalSet<S> set(v);
    for (std::size_t i = 0; i < 3; ++i)
        if (!(act(set.witnesses()[i], SpherePoint<S>::origin()) == set.points()[i]))
            throw AntipodalityViolated(std::string("witness does not transport o to ") + AntipodalSet<S>::kNames[i]);
    for (const auto& cert : set.certificates())
        if (!cert.fixed)
            throw AntipodalityViolated(cert.point + " is not fixed by the symmetries at " + cert.basepoint);
    return set;
}

template <Scalar S>
struct ScanEntry {
    std::string label;         ///< "t=1", "w=v", "w=-v" or "random"
    SpherePoint<S> candidate;  ///< (st, s̄t̄)
    bool accepted = false;     ///< s̄t̄ = conj(st)
    double residual = 0;
};

template <Scalar S>
struct ScanReport {
    std::vector<ScanEntry<S>> entries;
    std::size_t accepted_count = 0;
    std::size_t extra_acceptances = 0;  ///< accepted candidates outside {o, p, q}
    bool found_o = false, found_p = false, found_q = false;

    /// Accepts exactly {o, p, q} and nothing else.
    bool exact_three() const { return found_o && found_p && found_q && extra_acceptances == 0; }
};

/// Candidates q̃ = (st, s̄t̄) ∈ g·Fix(τ) for t = 1, the cube roots for w = ±v, and
/// `trials` random unit imaginary w. A candidate lies in Fix(τ) iff s̄t̄ = conj(st).
template <ScalarWithSqrt3 S>
ScanReport<S> maximality_scan(const ImaginaryUnit<S>& v, int trials, std::uint64_t seed) {
    if (trials < 1) throw Error("maximality_scan: trials must be at least 1");
    const AntipodalSet<S> set(v);
    const Octonion<S>& s = set.s();
    const Octonion<S> sbar = s.conj();

    ScanReport<S> report;
    auto consider = [&](std::string label, const Octonion<S>& t) {
        const Octonion<S> st = s * t;
        const Octonion<S> lhs = sbar * t.conj();
        const Octonion<S> rhs = st.conj();
        ScanEntry<S> e{std::move(label), SpherePoint<S>(st, lhs), lhs == rhs, max_residual(lhs, rhs)};
        if (e.accepted) {
            ++report.accepted_count;
            const auto& pts = set.points();
            if (e.candidate == pts[0]) report.found_o = true;
            else if (e.candidate == pts[1]) report.found_p = true;
            else if (e.candidate == pts[2]) report.found_q = true;
            else ++report.extra_acceptances;
        }
        report.entries.push_back(std::move(e));
    };

    consider("t=1", Octonion<S>::one());
    consider("w=v", cube_root_of_unity(v));
    consider("w=-v", cube_root_of_unity(-v));
    Sampler<S> sampler(seed);
    for (int k = 0; k < trials; ++k) consider("random", cube_root_of_unity(sampler.random_imaginary_unit()));
    return report;
}

struct PolarIntersectionReport {
    bool o_q_in_fix_p = false;  ///< o, q ∈ Fix(Γ_p)
    bool o_p_in_fix_q = false;  ///< o, p ∈ Fix(Γ_q)
    bool p_q_in_fix_o = false;  ///< p, q ∈ Fix(Γ)
    bool q_antipode_of_p = false;  ///< q = fix_tau_point(−v)
    double residual = 0;

    bool holds() const { return o_q_in_fix_p && o_p_in_fix_q && p_q_in_fix_o && q_antipode_of_p; }
};

/// The three polars through {o, p, q} meet pairwise in the remaining points.
template <ScalarWithSqrt3 S>
PolarIntersectionReport polar_intersection_check(const ImaginaryUnit<S>& v) {
    const AntipodalSet<S> set(v);
    const auto& pts = set.points();
    const auto& wit = set.witnesses();
    PolarIntersectionReport r;
    auto fixed = [&](std::size_t base, std::size_t z) {
        const auto c = check_fixed_by_conjugate(wit[base], pts[z]);
        r.residual = std::max(r.residual, c.residual);
        return c.fixed;
    };
    r.o_q_in_fix_p = fixed(1, 0) && fixed(1, 2);
    r.o_p_in_fix_q = fixed(2, 0) && fixed(2, 1);
    r.p_q_in_fix_o = fixed(0, 1) && fixed(0, 2);
    const SpherePoint<S> antipode = fix_tau_point(-v);
    r.residual = std::max(r.residual, max_residual(antipode, pts[2]));
    r.q_antipode_of_p = antipode == pts[2];
    return r;
}

}  // namespace triality
