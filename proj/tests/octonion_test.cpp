#include <gtest/gtest.h>

#include <array>

#include "triality/sampling.hpp"

using namespace triality;

namespace {

using Q = QuadExt;
using Oct = Octonion<Q>;

// Independent oracle: Hamilton quaternions with integer coefficients, doubled once.
struct Quat {
    int w = 0, x = 0, y = 0, z = 0;
    Quat conj() const { return {w, -x, -y, -z}; }
    Quat operator-() const { return {-w, -x, -y, -z}; }
    friend Quat operator+(Quat a, Quat b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Quat operator-(Quat a, Quat b) { return a + (-b); }
    friend Quat operator*(Quat a, Quat b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
};

struct OctPair {
    Quat a, b;
    friend OctPair operator*(const OctPair& p, const OctPair& q) {
        return {p.a * q.a - q.b.conj() * p.b, q.b * p.a + p.b * q.a.conj()};
    }
};

OctPair oracle_basis(int k) {
    std::array<int, 8> c{};
    c[static_cast<std::size_t>(k - 1)] = 1;
    return {{c[0], c[1], c[2], c[3]}, {c[4], c[5], c[6], c[7]}};
}

std::array<int, 8> flatten(const OctPair& p) {
    return {p.a.w, p.a.x, p.a.y, p.a.z, p.b.w, p.b.x, p.b.y, p.b.z};
}

Oct half_root(int sign) {
    Oct s;
    s[0] = Q(Rational(-1, 2));
    s[1] = Q(Rational(0), Rational(sign, 2));
    return s;
}

}  // namespace

TEST(MultiplicationTable, MatchesQuaternionDoublingOracle) {
    const auto& table = multiplication_table();
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            const auto expected = flatten(oracle_basis(i) * oracle_basis(j));
            std::array<int, 8> got{};
            const ProductEntry e = table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            got[e.index] = e.sign;
            EXPECT_EQ(got, expected) << "e" << i << " * e" << j;
        }
}

TEST(Octonion, UnitAndBasisProducts) {
    Sampler<Q> smp(1);
    const Oct x = smp.random_octonion();
    EXPECT_EQ(Oct::one() * x, x);
    EXPECT_EQ(x * Oct::one(), x);
    EXPECT_EQ(Oct::basis(2) * Oct::basis(3), Oct::basis(4));
    EXPECT_EQ(Oct::basis(2) * Oct::basis(5), Oct::basis(6));
    EXPECT_EQ(Oct::basis(4) * Oct::basis(5), Oct::basis(8));
    EXPECT_THROW(Oct::basis(0), Error);
    EXPECT_THROW(Oct::basis(9), Error);
}

TEST(Octonion, CubeRootSquaresToConjugate) {
    const Oct s = half_root(1);
    EXPECT_EQ(s * s, s.conj());
    EXPECT_EQ(s * s * s, Oct::one());
}

TEST(Octonion, Conjugation) {
    EXPECT_EQ(Oct::one().conj(), Oct::one());
    EXPECT_EQ(Oct::basis(2).conj(), -Oct::basis(2));
    Sampler<Q> smp(2);
    for (int k = 0; k < 20; ++k) {
        const Oct x = smp.random_octonion(), y = smp.random_octonion();
        EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
    }
}

TEST(Octonion, Inverse) {
    EXPECT_EQ(Oct::one().inverse(), Oct::one());
    EXPECT_EQ(Oct::basis(2).inverse(), -Oct::basis(2));
    EXPECT_EQ(half_root(1).inverse(), half_root(-1));
    EXPECT_THROW(Oct().inverse(), ZeroDivisor);
    Sampler<Q> smp(3);
    const Oct x = smp.random_octonion();
    EXPECT_EQ(x * x.inverse(), Oct::one());
}

TEST(Octonion, NormMultiplicativeAndAlternative) {
    Sampler<Q> smp(4);
    for (int k = 0; k < 30; ++k) {
        const Oct x = smp.random_octonion(), y = smp.random_octonion();
        EXPECT_EQ((x * y).norm2(), x.norm2() * y.norm2());
        EXPECT_EQ(x * (x * y), (x * x) * y);
        EXPECT_EQ((y * x) * x, y * (x * x));
        EXPECT_EQ((x * y) * x, x * (y * x));
        EXPECT_EQ(x.conj() * (x * y), (x.conj() * x) * y);
    }
}

TEST(Octonion, NotAssociative) {
    const Oct a = Oct::basis(2), b = Oct::basis(3), c = Oct::basis(5);
    EXPECT_EQ((a * b) * c, -(a * (b * c)));
}

TEST(Octonion, LeftTranslation) {
    EXPECT_EQ(left_translation(Oct::one()), Mat8<Q>::identity());
    EXPECT_EQ(left_translation(Oct::basis(2)) * Oct::one(), Oct::basis(2));
    Sampler<Q> smp(5);
    for (int k = 0; k < 10; ++k) {
        const Oct s = smp.random_unit().value();
        const Oct x = smp.random_octonion();
        EXPECT_EQ(left_translation(s.conj()) * left_translation(s), Mat8<Q>::identity());
        EXPECT_EQ(left_translation(s) * left_translation(x) * left_translation(s), left_translation(s * x * s));
    }
}

TEST(Octonion, QuaternionsCommuteWithEllUpToConjugation) {
    const Mat8<Q> ell = left_translation(Oct::basis(5));
    Sampler<Q> smp(6);
    for (int k = 0; k < 10; ++k) {
        const Oct h = smp.random_quaternion();
        EXPECT_EQ(left_translation(h) * ell, ell * left_translation(h.conj()));
    }
}

TEST(Octonion, KappaConjugatedLeftTranslationIsRightTranslation) {
    const Mat8<Q> k = kappa<Q>();
    Sampler<Q> smp(7);
    for (int n = 0; n < 10; ++n) {
        const Oct x = smp.random_octonion(), y = smp.random_octonion();
        EXPECT_EQ(k * left_translation(x) * k * y, y * x.conj());
        EXPECT_EQ(k * left_translation(x) * k, right_translation(x.conj()));
    }
}

TEST(CubeRoot, FromImaginaryUnit) {
    const ImaginaryUnit<Q> v(Oct::basis(2));
    const Oct s = cube_root_of_unity(v);
    EXPECT_EQ(s, half_root(1));
    EXPECT_EQ(s * s * s, Oct::one());
    EXPECT_EQ(s * s, s.conj());
    EXPECT_EQ(cube_root_of_unity(-v), s.conj());
    Sampler<Q> smp(8);
    for (int k = 0; k < 10; ++k) {
        const Oct t = cube_root_of_unity(smp.random_imaginary_unit());
        EXPECT_EQ(t * t * t, Oct::one());
    }
}

TEST(UnitTypes, ValidateAtConstruction) {
    EXPECT_THROW(UnitOctonion<Q>(Oct::one() + Oct::basis(2)), NotUnit);
    EXPECT_THROW(ImaginaryUnit<Q>(Oct::one()), NotImaginaryUnit);
    EXPECT_THROW(ImaginaryUnit<Q>(Oct::basis(2) + Oct::basis(3)), NotImaginaryUnit);
    EXPECT_NO_THROW(ImaginaryUnit<Q>(parse_octonion<Q>("[0, 3/5, 4/5, 0, 0, 0, 0, 0]")));
}

TEST(OctonionText, RoundTripAndErrors) {
    const Oct s = half_root(1);
    EXPECT_EQ(to_string(s), "[-1/2, 1/2*r3, 0, 0, 0, 0, 0, 0]");
    EXPECT_EQ(parse_octonion<Q>(to_string(s)), s);
    EXPECT_THROW(parse_octonion<Q>("[1,2,3]"), ParseError);
    EXPECT_THROW(parse_octonion<Q>("1,0,0,0,0,0,0,0"), ParseError);
    EXPECT_THROW(parse_octonion<Q>("[a,0,0,0,0,0,0,0]"), ParseError);
}

TEST(Octonion, FloatBackendAgreesWithExact) {
    Sampler<Q> smp(9);
    for (int k = 0; k < 10; ++k) {
        const Oct x = smp.random_octonion(), y = smp.random_octonion();
        const Oct p = x * y;
        Octonion<ApproxReal> fx, fy;
        for (std::size_t i = 0; i < 8; ++i) {
            fx[i] = embed_float(x[i]);
            fy[i] = embed_float(y[i]);
        }
        const Octonion<ApproxReal> fp = fx * fy;
        for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(fp[i].value(), to_double(p[i]), 1e-12);
    }
}
