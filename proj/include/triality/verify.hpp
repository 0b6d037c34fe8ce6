#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "triality/clifford.hpp"
#include "triality/io.hpp"

/*
 * The verification suite: every identity and structural claim about the
 * octonions, Spin8 triples, tau/sigma and the space S^7 x S^7, each run as a
 * randomized check on one backend. Exact checks must have residual exactly 0;
 * float checks pass when the largest residual is within eps.
 *
 * Sample counts scale with RunConfig::trials (default 100):
 *   octonion axioms      2T exact pairs, 10T float pairs
 *   sandwich identity    T/2 (s,x) pairs plus T/2 quaternions h
 *   Theorem-level sets   1 + T/5 imaginary units v, each scanned with 10T w
 *   Fix(tau) / Fix(G^)   T/2 imaginary units
 *   everything else      T
 */

namespace triality {

enum class BackendSelector { exact, floating, both };

inline std::string to_string(BackendSelector b) {
    switch (b) {
        case BackendSelector::exact: return "exact";
        case BackendSelector::floating: return "float";
        case BackendSelector::both: return "both";
    }
    return "both";
}

inline BackendSelector parse_backend(std::string_view text) {
    if (text == "exact") return BackendSelector::exact;
    if (text == "float") return BackendSelector::floating;
    if (text == "both") return BackendSelector::both;
    throw ParseError("backend must be exact, float or both");
}

struct RunConfig {
    std::uint64_t seed = 0;
    int trials = 100;
    double eps = ApproxReal::kDefaultEps;
    BackendSelector backend = BackendSelector::both;
    std::optional<std::string> output_path;

    void validate() const {
        if (trials < 1) throw Error("trials must be at least 1");
        if (!(eps > 0)) throw Error("eps must be positive");
    }
};

struct CheckResult {
    std::string name;
    std::string paper_ref;
    std::string backend;
    bool pass = false;
    double max_residual = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string detail;  ///< first failure, empty on success
};

inline nlohmann::json to_json(const CheckResult& r) {
    nlohmann::json j = {{"name", r.name},       {"paper_ref", r.paper_ref},
                        {"backend", r.backend}, {"status", r.pass ? "pass" : "fail"},
                        {"max_residual", r.max_residual}, {"trials", r.trials},
                        {"seed", r.seed}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

/// Accumulates residuals and the first failure of a running check.
class Recorder {
public:
    template <class T>
    void equal(const T& a, const T& b, const char* what) {
        double r = 0;
        if constexpr (Scalar<T>) r = triality::residual(a, b);
        else r = max_residual(a, b);
        residual_ = std::max(residual_, r);
        if (!(a == b)) fail(std::string(what) + " (residual " + std::to_string(r) + ")");
    }

    void expect(bool ok, const char* what) {
        if (!ok) fail(what);
    }

    void note_residual(double r) { residual_ = std::max(residual_, r); }
    void count(int n = 1) { trials_ += n; }

    void fail(std::string what) {
        if (failure_.empty()) failure_ = std::move(what);
        failed_ = true;
    }

    bool failed() const noexcept { return failed_; }
    double residual() const noexcept { return residual_; }
    int trials() const noexcept { return trials_; }
    const std::string& failure() const noexcept { return failure_; }

private:
    bool failed_ = false;
    double residual_ = 0;
    int trials_ = 0;
    std::string failure_;
};

namespace checks {

template <ScalarWithSqrt3 S>
void octonion_axioms(Recorder& rec, Sampler<S>& smp, int trials) {
    const int pairs = S::is_exact ? 2 * trials : 10 * trials;
    for (int k = 0; k < pairs; ++k) {
        const Octonion<S> x = smp.random_octonion();
        const Octonion<S> y = smp.random_octonion();
        const Octonion<S> xy = x * y;
        rec.equal(xy.norm2(), S(x.norm2() * y.norm2()), "norm multiplicativity");
        rec.equal(Octonion<S>(x * xy), Octonion<S>((x * x) * y), "left alternativity");
        rec.equal(Octonion<S>((y * x) * x), Octonion<S>(y * (x * x)), "right alternativity");
        rec.equal(Octonion<S>((xy) * x), Octonion<S>(x * (y * x)), "flexibility");
        rec.equal(Octonion<S>(x.conj() * xy), Octonion<S>((x.conj() * x) * y), "two-generator associativity");
        rec.equal(xy.conj(), Octonion<S>(y.conj() * x.conj()), "conjugation anti-automorphism");
        rec.count();
    }
}

/// L(s)L(x)L(s) = L(sxs) and L(h)L(l) = L(l)L(h̄) for quaternionic h.
template <ScalarWithSqrt3 S>
void sandwich_identity(Recorder& rec, Sampler<S>& smp, int trials) {
    const int n = std::max(1, trials / 2);
    for (int k = 0; k < n; ++k) {
        const Octonion<S> s = smp.random_octonion();
        const Octonion<S> x = smp.random_octonion();
        const Mat8<S> ls = left_translation(s);
        rec.equal(Mat8<S>(ls * left_translation(x) * ls), left_translation(Octonion<S>((s * x) * s)),
                  "L(s)L(x)L(s) = L(sxs)");
        rec.count();
    }
    const Mat8<S> ell = left_translation(Octonion<S>::basis(5));
    for (int k = 0; k < n; ++k) {
        const Octonion<S> h = smp.random_quaternion();
        rec.equal(Mat8<S>(left_translation(h) * ell), Mat8<S>(ell * left_translation(h.conj())),
                  "L(h)L(l) = L(l)L(conj h)");
        rec.count();
    }
}

/// x̂ is odd, isometric for the trace metric, squares to −|x|², and round-trips.
template <ScalarWithSqrt3 S>
void clifford_embedding(Recorder& rec, Sampler<S>& smp, int trials) {
    for (int k = 0; k < trials; ++k) {
        const Octonion<S> x = smp.random_octonion();
        const Octonion<S> y = smp.random_octonion();
        const CliffordElement<S> xh = clifford_embed(x);
        const CliffordElement<S> yh = clifford_embed(y);
        rec.expect(xh.parity() == Parity::odd || x.is_zero(), "embedding is odd");
        rec.equal(trace_inner_product(xh.matrix(), yh.matrix()), x.dot(y), "isometry <x^,y^> = <x,y>");
        rec.equal((xh * xh).matrix(), Mat16<S>(S(-x.norm2()) * Mat16<S>::identity()), "x^ x^ = -|x|^2");
        rec.equal(recover_vector(xh.matrix()), x, "recover_vector round trip");
        rec.expect((xh * yh).parity() == Parity::even || x.is_zero() || y.is_zero(), "odd*odd is even");
        rec.count();
    }
}

/// Ad(diag(A,B)) x̂ = (Cx)^ for verified triples; generic pairs break the shape.
template <ScalarWithSqrt3 S>
void clifford_spin_equivalence(Recorder& rec, Sampler<S>& smp, int trials) {
    const int n = std::max(1, trials / 4);
    for (int k = 0; k < n; ++k) {
        const TrialityTriple<S> g = smp.random_spin();
        for (int i = 1; i <= 8; ++i) {
            const Octonion<S> e = Octonion<S>::basis(i);
            rec.equal(recover_vector(ad_conjugate(g.a(), g.b(), e)), Octonion<S>(g.c() * e), "Ad(A,B) x^ = (Cx)^");
        }
        rec.equal(TrialityTriple<S>::from_pair(g.a(), g.b()), g, "C recovered from (A,B)");

        const TrialityTriple<S> h = smp.random_spin();
        const Mat8<S> broken_b = g.b() * h.b();
        bool shape_broken = false;
        for (int i = 1; i <= 8 && !shape_broken; ++i)
            shape_broken = !try_recover_vector(ad_conjugate(g.a(), broken_b, Octonion<S>::basis(i))).has_value();
        // (A, B·B') stays in Spin8 only when B' = ±I.
        rec.expect(shape_broken || h.b() == Mat8<S>::identity() || h.b() == Mat8<S>(-Mat8<S>::identity()),
                   "non-Spin pair kept the vector shape");
        rec.count();
    }
}

/// Products and inverses of verified triples re-verify.
template <ScalarWithSqrt3 S>
void triality_closure(Recorder& rec, Sampler<S>& smp, int trials) {
    for (int k = 0; k < trials; ++k) {
        const TrialityTriple<S> g = smp.random_spin();
        const TrialityTriple<S> h = smp.random_spin();
        const TrialityTriple<S> gh = g * h;
        rec.expect(check_triality(gh.a(), gh.b(), gh.c()).holds, "product re-verifies");
        rec.equal(TrialityTriple<S>(g * g.inverse()), TrialityTriple<S>::identity(), "g g^-1 = 1");
        rec.equal(gh.inverse(), TrialityTriple<S>(h.inverse() * g.inverse()), "(gh)^-1 = h^-1 g^-1");
        rec.count();
    }
}

template <ScalarWithSqrt3 S>
void tau_order_three(Recorder& rec, Sampler<S>& smp, int trials) {
    for (int k = 0; k < trials; ++k) {
        const TrialityTriple<S> g = smp.random_spin();
        rec.equal(apply_tau(apply_tau(apply_tau(g))), g, "tau^3 = id");
        if (k % 4 == 0) {
            const TrialityTriple<S> h = smp.random_spin();
            rec.equal(apply_tau(TrialityTriple<S>(g * h)), TrialityTriple<S>(apply_tau(g) * apply_tau(h)),
                      "tau is a homomorphism");
        }
        rec.count();
    }
}

template <ScalarWithSqrt3 S>
void sigma_involution(Recorder& rec, Sampler<S>& smp, int trials) {
    for (int k = 0; k < trials; ++k) {
        const TrialityTriple<S> g = smp.random_spin();
        rec.equal(apply_sigma(apply_sigma(g)), g, "sigma^2 = id");
        if (k % 4 == 0) {
            const TrialityTriple<S> h = smp.random_spin();
            rec.equal(apply_sigma(TrialityTriple<S>(g * h)), TrialityTriple<S>(apply_sigma(g) * apply_sigma(h)),
                      "sigma is a homomorphism");
        }
        rec.count();
    }
}

/// στσ = τ² as maps, and the word engine is a group action.
template <ScalarWithSqrt3 S>
void s3_relations(Recorder& rec, Sampler<S>& smp, int trials) {
    for (int k = 0; k < trials; ++k) {
        const TrialityTriple<S> g = smp.random_spin();
        rec.equal(apply_sigma(apply_tau(apply_sigma(g))), apply_tau(apply_tau(g)), "sigma tau sigma = tau^2");
        const GammaElement w1 = smp.random_gamma();
        const GammaElement w2 = smp.random_gamma();
        rec.equal(apply_gamma(w1 * w2, g), apply_gamma(w1, apply_gamma(w2, g)), "word action composes");
        rec.count();
    }
}

/// τ-fixed ⇔ A = B = C ⇔ fixed by τ and σ, and then A ∈ Aut(O).
template <ScalarWithSqrt3 S>
void g2_fixed_group(Recorder& rec, Sampler<S>& smp, int trials) {
    int tau_fixed = 0, diagonal = 0;
    for (int k = 0; k < trials; ++k) {
        const TrialityTriple<S> g = k % 2 == 0 ? smp.random_g2() : smp.random_spin();
        const bool fixed_tau = apply_tau(g) == g;
        const bool fixed_sigma = apply_sigma(g) == g;
        const bool all_equal = g.a() == g.b() && g.b() == g.c();
        if (fixed_tau) {
            ++tau_fixed;
            rec.expect(all_equal, "tau-fixed triple has A = B = C");
            rec.expect(is_automorphism(g.a()), "tau-fixed A is an automorphism");
            rec.expect(fixed_sigma, "tau-fixed triple is sigma-fixed");
            rec.expect(is_g2(g), "is_g2 on tau-fixed triple");
        }
        if (all_equal) {
            ++diagonal;
            rec.expect(fixed_tau && fixed_sigma, "A = B = C triple is tau- and sigma-fixed");
        }
        rec.expect(fixed_tau == is_g2(g), "is_g2 agrees with tau-fixedness");
        if (k % 2 == 0) rec.equal(apply_tau(g), g, "G2 word is tau-fixed");
        rec.count();
    }
    rec.expect(tau_fixed > 0 && diagonal > 0, "no tau-fixed samples were drawn");
}

/// Stabiliser of o is G2; the orbit map g ↦ g·o is constant on cosets gG2.
template <ScalarWithSqrt3 S>
void isotropy(Recorder& rec, Sampler<S>& smp, int trials) {
    const SpherePoint<S> o = SpherePoint<S>::origin();
    for (int k = 0; k < trials; ++k) {
        const TrialityTriple<S> kk = smp.random_g2();
        rec.equal(act(kk, o), o, "G2 element fixes o");
        rec.expect(is_g2(kk), "stabiliser element is in G2");
        const TrialityTriple<S> g = smp.random_spin();
        const SpherePoint<S> go = act(g, o);
        rec.equal(act(TrialityTriple<S>(g * kk), o), go, "g k o = g o");
        if (go == o) rec.expect(is_g2(g), "random stabiliser element is in G2");
        rec.equal(go.y(), Octonion<S>(Octonion<S>(g.c() * Octonion<S>::one()) * go.x()), "C(1) A(1) = B(1)");
        rec.count();
    }
}

/// τ(A(1),B(1)) = (κBκ(1), κCκ(1)), equivariance of every word, and the relations on X.
template <ScalarWithSqrt3 S>
void tau_descent(Recorder& rec, Sampler<S>& smp, int trials) {
    const SpherePoint<S> o = SpherePoint<S>::origin();
    for (int k = 0; k < trials; ++k) {
        const TrialityTriple<S> g = smp.random_spin();
        rec.equal(tau_sphere(act(g, o)), act(apply_tau(g), o), "tau(g o) = tau(g) o");
        rec.equal(sigma_sphere(act(g, o)), act(apply_sigma(g), o), "sigma(g o) = sigma(g) o");
        const GammaElement w = smp.random_gamma();
        const SpherePoint<S> pt(smp.random_unit(), smp.random_unit());
        rec.equal(gamma_sphere(w, act(g, pt)), act(apply_gamma(w, g), gamma_sphere(w, pt)), "word equivariance");
        rec.equal(tau_sphere(tau_sphere(tau_sphere(pt))), pt, "tau^3 = id on X");
        rec.equal(sigma_sphere(tau_sphere(sigma_sphere(pt))), tau_sphere(tau_sphere(pt)), "sigma tau sigma = tau^2 on X");
        rec.count();
    }
}

/// Fix(τ) = {o} ∪ Y.
template <ScalarWithSqrt3 S>
void fix_tau(Recorder& rec, Sampler<S>& smp, int trials) {
    const int n = std::max(1, trials / 2);
    rec.expect(is_fixed_by_tau(SpherePoint<S>::origin()), "o is tau-fixed");
    for (int k = 0; k < n; ++k) {
        const ImaginaryUnit<S> v = smp.random_imaginary_unit();
        const SpherePoint<S> p = fix_tau_point(v);
        rec.expect(is_fixed_by_tau(p), "Y point is tau-fixed");
        rec.equal(tau_sphere(p), p, "tau(s, conj s) = (s, conj s)");
        const Octonion<S> s = p.x();
        rec.equal(Octonion<S>(s * s * s), Octonion<S>::one(), "s^3 = 1");
        rec.equal(Octonion<S>(s * s), s.conj(), "s^2 = conj s");
        rec.equal(fix_tau_point(-v), sigma_sphere(p), "fix_tau_point(-v) = sigma(fix_tau_point(v))");
        const SpherePoint<S> generic(smp.random_unit(), smp.random_unit());
        rec.expect(!is_fixed_by_tau(generic), "generic point is not tau-fixed");
        rec.count();
    }
}

/// Fix(σ) is the diagonal.
template <ScalarWithSqrt3 S>
void fix_sigma(Recorder& rec, Sampler<S>& smp, int trials) {
    for (int k = 0; k < trials; ++k) {
        const UnitOctonion<S> x = smp.random_unit();
        const SpherePoint<S> diag(x, x);
        rec.equal(sigma_sphere(diag), diag, "sigma fixes the diagonal");
        const UnitOctonion<S> y = smp.random_unit();
        if (!(x.value() == y.value())) rec.expect(!(sigma_sphere(SpherePoint<S>(x, y)) == SpherePoint<S>(x, y)),
                                                  "sigma fixes an off-diagonal point");
        rec.count();
    }
}

/// Fix(Γ̂) = {o}: Y misses the diagonal.
template <ScalarWithSqrt3 S>
void fix_gamma_hat(Recorder& rec, Sampler<S>& smp, int trials) {
    const int n = std::max(1, trials / 2);
    rec.expect(is_fixed_by_gamma_hat(SpherePoint<S>::origin()), "o is fixed by the full group");
    for (int k = 0; k < n; ++k) {
        const SpherePoint<S> p = fix_tau_point(smp.random_imaginary_unit());
        rec.expect(!(p.x() == p.y()), "Y point lies on the diagonal");
        rec.expect(!is_fixed_by_gamma_hat(p), "Y point is fixed by the full group");
        rec.count();
    }
}

/// γ_x δ_y γ_x⁻¹ = φ_{γ_x(y)}(γδγ⁻¹) on a 10-point grid.
template <ScalarWithSqrt3 S>
void kai_property(Recorder& rec, Sampler<S>& smp, int trials) {
    std::vector<SpherePoint<S>> grid{SpherePoint<S>::origin()};
    while (grid.size() < 10) grid.emplace_back(smp.random_unit(), smp.random_unit());
    for (int k = 0; k < trials; ++k) {
        const TrialityTriple<S> gx = smp.random_spin();
        const TrialityTriple<S> gy = smp.random_spin();
        const KaiReport r = kai_check(gx, gy, smp.random_gamma(), smp.random_gamma(),
                                      std::span<const SpherePoint<S>>(grid));
        rec.note_residual(r.residual);
        rec.expect(r.holds, "kai identity failed");
        rec.count();
    }
}

template <ScalarWithSqrt3 S>
std::vector<ImaginaryUnit<S>> theorem_directions(Sampler<S>& smp, int trials) {
    std::vector<ImaginaryUnit<S>> vs{ImaginaryUnit<S>(Octonion<S>::basis(2))};
    for (int k = 0; k < std::max(1, trials / 5); ++k) vs.push_back(smp.random_imaginary_unit());
    return vs;
}

/// {o, p, q} is antipodal, σ swaps p and q, and −v exchanges p and q.
template <ScalarWithSqrt3 S>
void antipodal(Recorder& rec, Sampler<S>& smp, int trials) {
    for (const auto& v : theorem_directions(smp, trials)) {
        const AntipodalSet<S> set = antipodal_set(v);
        for (const auto& c : set.certificates()) {
            rec.note_residual(c.residual);
            rec.expect(c.fixed, "pairwise antipodality certificate failed");
        }
        rec.expect(set.sigma_swaps(), "sigma does not swap p and q");
        const AntipodalSet<S> flipped = antipodal_set(-v);
        rec.equal(flipped.points()[1], set.points()[2], "p(-v) = q(v)");
        rec.equal(flipped.points()[2], set.points()[1], "q(-v) = p(v)");
        rec.equal(act(set.witnesses()[1], set.points()[2]), SpherePoint<S>::origin(), "g q = o");
        rec.count();
    }
}

/// Only t ∈ {1, s, s̄} survive among 10T random cube roots t.
template <ScalarWithSqrt3 S>
void maximality(Recorder& rec, Sampler<S>& smp, int trials) {
    for (const auto& v : theorem_directions(smp, trials)) {
        const std::uint64_t scan_seed = smp.engine()();
        const ScanReport<S> report = maximality_scan(v, 10 * trials, scan_seed);
        // Random candidates are rejected, so their residual measures separation, not error.
        rec.expect(report.exact_three(), "scan did not accept exactly {o, p, q}");
        for (const auto& e : report.entries)
            if (e.accepted) rec.note_residual(e.residual);
        rec.count();
    }
}

/// Polars of o, p, q meet pairwise in the remaining points; a perturbed q fails.
template <ScalarWithSqrt3 S>
void polar_intersection(Recorder& rec, Sampler<S>& smp, int trials) {
    for (const auto& v : theorem_directions(smp, trials)) {
        const PolarIntersectionReport r = polar_intersection_check(v);
        rec.note_residual(r.residual);
        rec.expect(r.holds(), "polar intersection check failed");
        const AntipodalSet<S> set(v);
        const ImaginaryUnit<S> other = smp.random_imaginary_unit();
        const SpherePoint<S> perturbed = fix_tau_point(other);
        if (!(perturbed == set.points()[2]) && !(perturbed == set.points()[1]))
            rec.expect(!check_fixed_by_conjugate(set.witnesses()[1], perturbed).fixed,
                       "perturbed point of Y is fixed by the symmetries at p");
        const PolarSphere<S> polar_p(set.witnesses()[1]);
        rec.equal(polar_p.basepoint(), set.points()[1], "polar basepoint");
        rec.expect(polar_p.contains_fixed(set.points()[0]) && polar_p.contains_fixed(set.points()[2]),
                   "polar of p misses o or q");
        rec.count();
    }
}

}  // namespace checks

/// A named check and the source anchor it reproduces.
struct CheckSpec {
    const char* name;
    const char* paper_ref;
};

/// Checks in report order. paper_ref is the LaTeX label key of the reproduced
/// result where it has one; unlabelled results use "section:", "lemma:",
/// "theorem:" or "figure:" followed by a short name.
inline constexpr CheckSpec kChecks[] = {
    {"octonion_axioms", "section:triality"},
    {"sandwich_identity", "sxs"},
    {"clifford_embedding", "section:triality"},
    {"clifford_spin_equivalence", "Bx=wA"},
    {"triality_closure", "ABC"},
    {"tau_order_three", "tau2"},
    {"sigma_involution", "sigma"},
    {"s3_relations", "lemma:S3"},
    {"g2_fixed_group", "lemma:G2"},
    {"isotropy", "S7S7"},
    {"tau_descent", "tauS"},
    {"fix_tau", "Fixtau"},
    {"fix_sigma", "fixed"},
    {"fix_gamma_hat", "FixGamma"},
    {"kai_property", "conj"},
    {"antipodal_set", "theorem:antipodal"},
    {"maximality_scan", "theorem:antipodal"},
    {"polar_intersection", "figure:fix"},
};

template <ScalarWithSqrt3 S>
using CheckFn = void (*)(Recorder&, Sampler<S>&, int);

template <ScalarWithSqrt3 S>
constexpr CheckFn<S> check_function(std::size_t index) {
    constexpr CheckFn<S> table[] = {
        checks::octonion_axioms<S>,  checks::sandwich_identity<S>, checks::clifford_embedding<S>,
        checks::clifford_spin_equivalence<S>, checks::triality_closure<S>, checks::tau_order_three<S>,
        checks::sigma_involution<S>, checks::s3_relations<S>, checks::g2_fixed_group<S>,
        checks::isotropy<S>,         checks::tau_descent<S>,       checks::fix_tau<S>,
        checks::fix_sigma<S>,        checks::fix_gamma_hat<S>,     checks::kai_property<S>,
        checks::antipodal<S>,        checks::maximality<S>,        checks::polar_intersection<S>,
    };
    static_assert(std::size(table) == std::size(kChecks));
    return table[index];
}

/// Runs one check on backend S. Exceptions count as failures.
template <ScalarWithSqrt3 S>
CheckResult run_check(std::size_t index, const RunConfig& cfg) {
    const ToleranceScope tolerance(cfg.eps);
    const std::uint64_t seed = derive_seed(cfg.seed, 2 * index + (S::is_exact ? 0 : 1));
    CheckResult out;
    out.name = kChecks[index].name;
    out.paper_ref = kChecks[index].paper_ref;
    out.backend = std::string(backend_name<S>());
    out.seed = seed;
    Recorder rec;
    Sampler<S> sampler(seed);
    try {
        check_function<S>(index)(rec, sampler, cfg.trials);
    } catch (const std::exception& e) {
        rec.fail(std::string("exception: ") + e.what());
    }
    out.max_residual = rec.residual();
    out.trials = rec.trials();
    if constexpr (S::is_exact) out.pass = !rec.failed() && rec.residual() == 0.0;
    else out.pass = !rec.failed() && rec.residual() <= cfg.eps;
    out.detail = rec.failure();
    if (out.detail.empty() && !out.pass) out.detail = "residual above tolerance";
    return out;
}

/// Every check, in report order, exact before float when both backends run.
/// `progress` (optional) sees each result as it completes.
inline std::vector<CheckResult> run_all(const RunConfig& cfg,
                                        const std::function<void(const CheckResult&)>& progress = {}) {
    cfg.validate();
    std::vector<CheckResult> results;
    for (std::size_t i = 0; i < std::size(kChecks); ++i) {
        if (cfg.backend != BackendSelector::floating) {
            results.push_back(run_check<QuadExt>(i, cfg));
            if (progress) progress(results.back());
        }
        if (cfg.backend != BackendSelector::exact) {
            results.push_back(run_check<ApproxReal>(i, cfg));
            if (progress) progress(results.back());
        }
    }
    return results;
}

inline nlohmann::json config_to_json(const RunConfig& cfg) {
    return {{"seed", cfg.seed}, {"trials", cfg.trials}, {"eps", cfg.eps}, {"backend", to_string(cfg.backend)}};
}

/// {"schema": 1, "config": {...}, "checks": [...]}
inline nlohmann::json make_report(const RunConfig& cfg, const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) checks.push_back(to_json(r));
    return {{"schema", 1}, {"config", config_to_json(cfg)}, {"checks", std::move(checks)}};
}

inline bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace triality
