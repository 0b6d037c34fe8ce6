#include <gtest/gtest.h>

#include "triality/sampling.hpp"

using namespace triality;

namespace {

using Q = QuadExt;

template <Scalar S, std::size_t N>
Matrix<S, N> random_matrix(Sampler<S>& smp) {
    Matrix<S, N> m;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) m(r, c) = smp.random_scalar();
    return m;
}

// Cofactor expansion along the first row; an oracle for small sizes only.
template <Scalar S>
S cofactor_det(const std::vector<std::vector<S>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    S total(0);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<S>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<S> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const S term = m[0][c] * cofactor_det(minor);
        total = (c % 2 == 0) ? total + term : total - term;
    }
    return total;
}

}  // namespace

TEST(Matrix, IdentityAndTranspose) {
    Sampler<Q> smp(1);
    const auto a = random_matrix<Q, 8>(smp), b = random_matrix<Q, 8>(smp);
    EXPECT_EQ(Mat8<Q>::identity() * a, a);
    EXPECT_EQ(a * Mat8<Q>::identity(), a);
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
}

TEST(Matrix, ExactProductMatchesNaiveSum) {
    Sampler<Q> smp(2);
    auto a = random_matrix<Q, 8>(smp), b = random_matrix<Q, 8>(smp);
    a(0, 1) = Q(Rational(1, 3), Rational(-2, 7));
    b(1, 0) = Q::sqrt3();
    const Mat8<Q> p = a * b;
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            Q sum(0);
            for (std::size_t k = 0; k < 8; ++k) sum = sum + a(r, k) * b(k, c);
            EXPECT_EQ(p(r, c), sum);
        }
}

TEST(Matrix, ApplyReadsColumns) {
    const Mat8<Q> l = left_translation(Octonion<Q>::basis(2));
    EXPECT_EQ(Octonion<Q>(l.apply(Octonion<Q>::one().span())), Octonion<Q>::basis(2));
}

TEST(Determinant, MatchesCofactorExpansion) {
    Sampler<Q> smp(3);
    for (int trial = 0; trial < 5; ++trial) {
        const auto m = random_matrix<Q, 5>(smp);
        std::vector<std::vector<Q>> rows(5, std::vector<Q>(5));
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 5; ++c) rows[r][c] = m(r, c);
        EXPECT_EQ(determinant(m), cofactor_det(rows));
    }
}

TEST(Determinant, PivotsAndSingularMatrices) {
    Mat8<Q> swap = Mat8<Q>::identity();
    swap(0, 0) = Q(0);
    swap(1, 1) = Q(0);
    swap(0, 1) = Q(1);
    swap(1, 0) = Q(1);
    EXPECT_EQ(determinant(swap), Q(-1));
    Mat8<Q> singular = Mat8<Q>::identity();
    singular(3, 3) = Q(0);
    EXPECT_EQ(determinant(singular), Q(0));
    EXPECT_EQ(determinant(Mat8<Rational>::identity()), Rational(1));
}

TEST(Determinant, FloatLuMatchesExact) {
    Sampler<Q> smp(4);
    const auto m = random_matrix<Q, 8>(smp);
    Mat8<ApproxReal> f;
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) f(r, c) = embed_float(m(r, c));
    const double exact = to_double(determinant(m));
    EXPECT_NEAR(to_double(determinant(f)), exact, 1e-10 * std::max(1.0, std::fabs(exact)));
}

TEST(SpecialOrthogonal, Examples) {
    EXPECT_TRUE(is_special_orthogonal(Mat8<Q>::identity()));
    std::array<Q, 8> d;
    d.fill(Q(1));
    d[0] = Q(-1);
    const Mat8<Q> reflection = Mat8<Q>::diagonal(d);
    EXPECT_TRUE(is_orthogonal(reflection));
    EXPECT_FALSE(is_special_orthogonal(reflection));
    EXPECT_EQ(determinant(reflection), Q(-1));
    EXPECT_FALSE(is_special_orthogonal(kappa<Q>()));
    Mat8<Q> scaled = Mat8<Q>::identity();
    scaled(2, 2) = Q(2);
    EXPECT_FALSE(is_orthogonal(scaled));
}

TEST(SpecialOrthogonal, LeftTranslationsAndClosure) {
    Sampler<Q> smp(5);
    for (int k = 0; k < 10; ++k) {
        const Mat8<Q> a = left_translation(smp.random_unit().value());
        const Mat8<Q> b = left_translation(smp.random_unit().value());
        EXPECT_TRUE(is_special_orthogonal(a));
        EXPECT_TRUE(is_special_orthogonal(a * b));
        EXPECT_TRUE(is_special_orthogonal(a.transpose()));
        EXPECT_EQ(orthogonality_residual(a), 0.0);
    }
}

TEST(SpecialOrthogonal, FloatUsesToleranceAndSign) {
    Sampler<ApproxReal> smp(6);
    const Mat8<ApproxReal> a = left_translation(smp.random_unit().value());
    EXPECT_TRUE(is_special_orthogonal(a));
    EXPECT_LT(orthogonality_residual(a), 1e-12);
    std::array<ApproxReal, 8> d;
    d.fill(ApproxReal(1.0));
    d[7] = ApproxReal(-1.0);
    EXPECT_FALSE(is_special_orthogonal(Mat8<ApproxReal>::diagonal(d)));
}

TEST(TraceInnerProduct, Normalisation) {
    EXPECT_EQ(trace_inner_product(Mat16<Q>::identity(), Mat16<Q>::identity()), Q(1));
    EXPECT_EQ(trace_inner_product(Mat8<Q>::identity(), Mat8<Q>()), Q(0));
}

TEST(Blocks, RoundTrip) {
    Sampler<Q> smp(7);
    const auto a = random_matrix<Q, 8>(smp), b = random_matrix<Q, 8>(smp);
    const auto c = random_matrix<Q, 8>(smp), d = random_matrix<Q, 8>(smp);
    const Mat16<Q> m = from_blocks(a, b, c, d);
    EXPECT_EQ(block(m, 0, 0), a);
    EXPECT_EQ(block(m, 0, 1), b);
    EXPECT_EQ(block(m, 1, 0), c);
    EXPECT_EQ(block(m, 1, 1), d);
}
