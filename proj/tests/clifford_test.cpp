#include <gtest/gtest.h>

#include "triality/clifford.hpp"
#include "triality/sampling.hpp"

using namespace triality;

namespace {

using Q = QuadExt;
using Oct = Octonion<Q>;

Oct half_root() {
    return cube_root_of_unity(ImaginaryUnit<Q>(Oct::basis(2)));
}

}  // namespace

TEST(CliffordEmbed, UnitEmbedsAsStandardBlocks) {
    const Mat8<Q> zero, id = Mat8<Q>::identity();
    const auto e1 = clifford_embed(Oct::one());
    EXPECT_EQ(e1.matrix(), from_blocks(zero, Mat8<Q>(-id), id, zero));
    EXPECT_EQ(e1.parity(), Parity::odd);
}

TEST(CliffordEmbed, OrthogonalBasisAndCliffordRelation) {
    const auto e2 = clifford_embed(Oct::basis(2));
    const auto e3 = clifford_embed(Oct::basis(3));
    EXPECT_EQ(trace_inner_product(e2.matrix(), e3.matrix()), Q(0));
    EXPECT_EQ((e2 * e2).matrix(), Mat16<Q>(-Mat16<Q>::identity()));
}

TEST(CliffordEmbed, IsometricForTraceMetric) {
    Sampler<Q> smp(1);
    for (int k = 0; k < 10; ++k) {
        const Oct x = smp.random_octonion(), y = smp.random_octonion();
        EXPECT_EQ(trace_inner_product(clifford_embed(x).matrix(), clifford_embed(y).matrix()), x.dot(y));
        const Oct u = smp.random_unit().value();
        EXPECT_EQ(trace_inner_product(clifford_embed(u).matrix(), clifford_embed(u).matrix()), Q(1));
        EXPECT_EQ((clifford_embed(x) * clifford_embed(x)).matrix(),
                  Mat16<Q>(-(x.norm2() * Mat16<Q>::identity())));
    }
}

TEST(CliffordEmbed, ParityOfProducts) {
    Sampler<Q> smp(2);
    const auto x = clifford_embed(smp.random_octonion());
    const auto y = clifford_embed(smp.random_octonion());
    const auto even = x * y;
    EXPECT_EQ(even.parity(), Parity::even);
    EXPECT_EQ((even * x).parity(), Parity::odd);
    EXPECT_EQ((even * even).parity(), Parity::even);
    const Mat16<Q> mixed = Mat16<Q>::identity() + x.matrix();
    EXPECT_EQ(parity_of(mixed), Parity::mixed);
    EXPECT_EQ(parity_of(Mat16<Q>()), Parity::even);
}

TEST(RecoverVector, RoundTripAndShapeErrors) {
    EXPECT_EQ(recover_vector(clifford_embed(Oct::basis(2)).matrix()), Oct::basis(2));
    EXPECT_THROW(recover_vector(Mat16<Q>::identity()), NotVectorShaped);
    // Odd but not of the x-hat shape: only the lower-left block is filled.
    const Mat8<Q> zero;
    const Mat16<Q> half = from_blocks(zero, zero, Mat8<Q>::identity(), zero);
    EXPECT_FALSE(try_recover_vector(half).has_value());
}

TEST(AdConjugate, IdentityPairIsTrivial) {
    Sampler<Q> smp(3);
    const Oct x = smp.random_octonion();
    EXPECT_EQ(ad_conjugate(Mat8<Q>::identity(), Mat8<Q>::identity(), x), clifford_embed(x).matrix());
}

TEST(AdConjugate, SpinPairActsThroughC) {
    const Oct s = half_root();
    const Oct sbar = s.conj();
    const Mat8<Q> a = left_translation(s), b = left_translation(sbar);
    EXPECT_EQ(ad_conjugate(a, b, Oct::one()), clifford_embed(sbar * sbar).matrix());
    Sampler<Q> smp(4);
    for (int k = 0; k < 5; ++k) {
        const Oct x = smp.random_octonion();
        EXPECT_EQ(recover_vector(ad_conjugate(a, b, x)), sbar * x * sbar);
    }
}

TEST(AdConjugate, AgreesWithTripleCondition) {
    Sampler<Q> smp(5);
    for (int k = 0; k < 3; ++k) {
        const auto g = smp.random_spin(3);
        for (int i = 1; i <= 8; ++i) {
            const Oct x = Oct::basis(i);
            EXPECT_EQ(recover_vector(ad_conjugate(g.a(), g.b(), x)), g.c() * x);
        }
    }
}

TEST(AdConjugate, GenericPairBreaksShape) {
    const Oct s = half_root();
    const Mat8<Q> a = left_translation(s);
    const Mat8<Q> b = left_translation(s) * left_translation(Oct::basis(3));
    bool broken = false;
    for (int i = 1; i <= 8; ++i) broken = broken || !try_recover_vector(ad_conjugate(a, b, Oct::basis(i)));
    EXPECT_TRUE(broken);
}

TEST(AdConjugate, RejectsNonRotations) {
    EXPECT_THROW(ad_conjugate(kappa<Q>(), Mat8<Q>::identity(), Oct::one()), NotOrthogonal);
    EXPECT_THROW(ad_conjugate(Mat8<Q>::identity(), kappa<Q>(), Oct::one()), NotOrthogonal);
}
