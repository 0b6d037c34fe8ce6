#include <gtest/gtest.h>

#include "triality/sampling.hpp"

using namespace triality;

namespace {

using Q = QuadExt;
using Oct = Octonion<Q>;
using Triple = TrialityTriple<Q>;

Oct half_root() { return cube_root_of_unity(ImaginaryUnit<Q>(Oct::basis(2))); }

Mat8<Q> map_matrix(auto f) {
    std::array<std::array<Q, 8>, 8> cols;
    for (int k = 0; k < 8; ++k) cols[static_cast<std::size_t>(k)] = f(Oct::basis(k + 1)).coeffs();
    return Mat8<Q>::from_columns(cols);
}

Mat8<Q> neg(const Mat8<Q>& m) { return -m; }

}  // namespace

TEST(Verify, IdentityIsValid) {
    const Triple id = Triple::identity();
    EXPECT_TRUE(check_triality(id.a(), id.b(), id.c()).holds);
    EXPECT_NO_THROW(Triple::verify(Mat8<Q>::identity(), Mat8<Q>::identity(), Mat8<Q>::identity()));
}

TEST(Verify, SignMismatchReportsFirstBasisPair) {
    const Mat8<Q> id = Mat8<Q>::identity();
    const TrialityCheck check = check_triality(id, id, neg(id));
    EXPECT_FALSE(check.holds);
    EXPECT_EQ(check.worst_x, 1);
    EXPECT_EQ(check.worst_y, 1);
    EXPECT_EQ(check.residual, 2.0);
    try {
        Triple::verify(id, id, neg(id));
        FAIL() << "expected TrialityViolated";
    } catch (const TrialityViolated& e) {
        EXPECT_EQ(e.x_index(), 1);
        EXPECT_EQ(e.y_index(), 1);
    }
}

TEST(Verify, RejectsReflections) {
    EXPECT_THROW(Triple::verify(kappa<Q>(), kappa<Q>(), kappa<Q>()), NotOrthogonal);
}

TEST(SpinFromUnit, Examples) {
    EXPECT_EQ(spin_from_unit(UnitOctonion<Q>(Oct::one())), Triple::identity());
    const Oct s = half_root();
    const Triple g = spin_from_unit(UnitOctonion<Q>(s));
    EXPECT_EQ(g.a(), left_translation(s));
    EXPECT_EQ(g.b(), left_translation(s.conj()));
    EXPECT_EQ(g.c(), map_matrix([&](const Oct& x) { return s.conj() * x * s.conj(); }));
    EXPECT_EQ(spin_from_unit(UnitOctonion<Q>(Oct::basis(2))).a(), left_translation(Oct::basis(2)));
}

TEST(FromPair, RecoversC) {
    Sampler<Q> smp(1);
    for (int k = 0; k < 5; ++k) {
        const Triple g = smp.random_spin(4);
        EXPECT_EQ(Triple::from_pair(g.a(), g.b()), g);
    }
    const Oct s = half_root();
    EXPECT_THROW(Triple::from_pair(left_translation(s), left_translation(s)), TrialityViolated);
}

TEST(Group, ProductsAndInverses) {
    const Oct s = half_root();
    const Triple g = spin_from_unit(UnitOctonion<Q>(s));
    const Triple h = spin_from_unit(UnitOctonion<Q>(s.conj()));
    EXPECT_EQ(g * Triple::identity(), g);
    EXPECT_EQ((g * h).a(), Mat8<Q>::identity());
    EXPECT_EQ(Triple::identity().inverse(), Triple::identity());
    EXPECT_EQ(g.inverse().a(), left_translation(s.conj()));
    EXPECT_EQ(g.inverse(), h);

    Sampler<Q> smp(2);
    for (int k = 0; k < 5; ++k) {
        const Triple x = smp.random_spin(3), y = smp.random_spin(3);
        EXPECT_EQ((x * y).inverse(), y.inverse() * x.inverse());
        EXPECT_EQ(x * x.inverse(), Triple::identity());
    }
}

TEST(Group, SpinOfConjugateIsInverse) {
    Sampler<Q> smp(3);
    for (int k = 0; k < 5; ++k) {
        const UnitOctonion<Q> s = smp.random_unit();
        EXPECT_EQ(spin_from_unit(s).inverse(), spin_from_unit(UnitOctonion<Q>(s.value().conj())));
    }
}

TEST(KappaConjugate, Examples) {
    EXPECT_EQ(kappa_conjugate(Mat8<Q>::identity()), Mat8<Q>::identity());
    EXPECT_THROW(kappa_conjugate(kappa<Q>()), NotOrthogonal);
    const Oct s = half_root();
    EXPECT_EQ(kappa_conjugate(left_translation(s.conj())), right_translation(s));
}

TEST(Tau, Examples) {
    EXPECT_EQ(apply_tau(Triple::identity()), Triple::identity());
    const Oct s = half_root();
    const Triple t = apply_tau(spin_from_unit(UnitOctonion<Q>(s)));
    EXPECT_EQ(t.a(), right_translation(s));
    EXPECT_EQ(t.b(), map_matrix([&](const Oct& x) { return s * x * s; }));
    EXPECT_EQ(t.c(), left_translation(s));
}

TEST(Tau, OrderThreeAndAutomorphism) {
    Sampler<Q> smp(4);
    for (int k = 0; k < 5; ++k) {
        const Triple g = smp.random_spin(3), h = smp.random_spin(3);
        EXPECT_EQ(apply_tau(apply_tau(apply_tau(g))), g);
        EXPECT_NE(apply_tau(g), g);
        EXPECT_EQ(apply_tau(g * h), apply_tau(g) * apply_tau(h));
        EXPECT_EQ(apply_sigma(g * h), apply_sigma(g) * apply_sigma(h));
    }
}

TEST(Sigma, InvolutionAndRelation) {
    EXPECT_EQ(apply_sigma(Triple::identity()), Triple::identity());
    Sampler<Q> smp(5);
    for (int k = 0; k < 5; ++k) {
        const Triple g = smp.random_spin(3);
        EXPECT_EQ(apply_sigma(apply_sigma(g)), g);
        EXPECT_EQ(apply_sigma(apply_tau(apply_sigma(g))), apply_tau(apply_tau(g)));
    }
}

TEST(GammaWords, ApplyOrderAndComponents) {
    Sampler<Q> smp(6);
    const Triple g = smp.random_spin(3);
    EXPECT_EQ(apply_gamma(GammaElement::identity(), g), g);
    EXPECT_EQ(apply_gamma(GammaElement(1, 1), g), apply_sigma(apply_tau(g)));
    const Triple t2 = apply_gamma(GammaElement(0, 2), g);
    EXPECT_EQ(t2.a(), g.c());
    EXPECT_EQ(t2.b(), kappa_conjugate(g.a()));
    EXPECT_EQ(t2.c(), kappa_conjugate(g.b()));
}

TEST(GammaWords, ActionIsAGroupAction) {
    Sampler<Q> smp(7);
    const Triple g = smp.random_spin(2);
    for (GammaElement x : GammaElement::all())
        for (GammaElement y : GammaElement::all())
            EXPECT_EQ(apply_gamma(x * y, g), apply_gamma(x, apply_gamma(y, g)))
                << to_string(x) << " " << to_string(y);
}

TEST(GammaElement, GroupTable) {
    const GammaElement t = GammaElement::tau(), s = GammaElement::sigma(), e = GammaElement::identity();
    EXPECT_EQ(t * t * t, e);
    EXPECT_EQ(s * s, e);
    EXPECT_EQ(s * t * s, t * t);
    for (GammaElement x : GammaElement::all()) {
        EXPECT_EQ(x * x.inverse(), e);
        EXPECT_EQ(parse_gamma(to_string(x)), x);
    }
    EXPECT_EQ(to_string(GammaElement(1, 2)), "st2");
    EXPECT_THROW(parse_gamma("ts"), ParseError);
}

TEST(Semidirect, MultiplicationRule) {
    Sampler<Q> smp(8);
    const Triple g = smp.random_spin(2), h = smp.random_spin(2), k = smp.random_spin(2);
    using SD = SemidirectElement<Q>;
    const GammaElement e = GammaElement::identity(), t = GammaElement::tau(), s = GammaElement::sigma();
    EXPECT_EQ(SD(g, e) * SD(h, e), SD(g * h, e));
    EXPECT_EQ(SD(Triple::identity(), t) * SD(g, e), SD(apply_tau(g), t));
    const SD a(g, t), b(h, s), c(k, GammaElement(1, 2));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * a.inverse(), SD::identity());
    EXPECT_EQ(c.inverse() * c, SD::identity());
}

TEST(G2, Examples) {
    EXPECT_TRUE(is_g2(Triple::identity()));
    EXPECT_FALSE(is_g2(spin_from_unit(UnitOctonion<Q>(half_root()))));
    Sampler<Q> smp(9);
    for (int k = 0; k < 5; ++k) {
        const Triple g = smp.random_g2();
        EXPECT_TRUE(is_g2(g));
        EXPECT_EQ(apply_tau(g), g);
        EXPECT_EQ(apply_sigma(g), g);
        EXPECT_TRUE(is_automorphism(g.a()));
    }
}

TEST(Sampler, DeterministicPerSeed) {
    Sampler<Q> a(42), b(42);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(a.random_spin(3), b.random_spin(3));
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_EQ(derive_seed(1, 0), derive_seed(1, 0));
}

TEST(FloatBackend, TriplesVerifyWithinTolerance) {
    Sampler<ApproxReal> smp(10);
    for (int k = 0; k < 5; ++k) {
        const auto g = smp.random_spin(6);
        const auto c = check_triality(g.a(), g.b(), g.c());
        EXPECT_TRUE(c.holds);
        EXPECT_LT(c.residual, 1e-12);
        EXPECT_LE(max_residual(apply_tau(apply_tau(apply_tau(g))), g), 1e-12);
    }
}
