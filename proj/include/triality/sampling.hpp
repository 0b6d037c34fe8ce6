#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "triality/triality.hpp"

namespace triality {

/// splitmix64 finaliser; derives independent per-check and per-trial seeds.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random sample points and group elements.
///
/// Exact backends get rational points on spheres from inverse stereographic
/// projection of small rational vectors, so everything downstream stays exact.
/// The float backend draws normalised Gaussian vectors.
template <Scalar S>
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() noexcept { return rng_; }

    S random_scalar() {
        if constexpr (S::is_exact) {
            std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
            return S::from_rational(Rational(num(rng_), den(rng_)));
        } else {
            return S(std::uniform_real_distribution<double>(-1.0, 1.0)(rng_));
        }
    }

    Octonion<S> random_octonion() {
        typename Octonion<S>::Coefficients c;
        for (auto& v : c) v = random_scalar();
        return Octonion<S>(c);
    }

    /// Element of the quaternion subalgebra span(e1, e2, e3, e4).
    Octonion<S> random_quaternion() {
        Octonion<S> x = random_octonion();
        for (std::size_t i = 4; i < 8; ++i) x[i] = S(0);
        return x;
    }

    UnitOctonion<S> random_unit() { return UnitOctonion<S>(Octonion<S>(sphere_point<8>(0))); }

    ImaginaryUnit<S> random_imaginary_unit() { return ImaginaryUnit<S>(Octonion<S>(sphere_point<7>(1))); }

    /// spin_from_unit(s), τ(spin_from_unit(s)) or σ(spin_from_unit(s)).
    TrialityTriple<S> random_generator() {
        const TrialityTriple<S> g = spin_from_unit(random_unit());
        switch (std::uniform_int_distribution<int>(0, 2)(rng_)) {
            case 0: return g;
            case 1: return apply_tau(g);
            default: return apply_sigma(g);
        }
    }

    /// Product of 1..max_length generators.
    TrialityTriple<S> random_spin(int max_length = 6) {
        const int length = std::uniform_int_distribution<int>(1, max_length)(rng_);
        TrialityTriple<S> g = random_generator();
        for (int k = 1; k < length; ++k) g = g * random_generator();
        return g;
    }

    /// Product of 1..max_length maps x ↦ s x s̄ with s a cube root of unity.
    TrialityTriple<S> random_g2(int max_length = 3) requires ScalarWithSqrt3<S> {
        const int length = std::uniform_int_distribution<int>(1, max_length)(rng_);
        TrialityTriple<S> g = TrialityTriple<S>::identity();
        for (int k = 0; k < length; ++k)
            g = g * g2_conjugation(UnitOctonion<S>(cube_root_of_unity(random_imaginary_unit())));
        return g;
    }

    GammaElement random_gamma() {
        return GammaElement::all()[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 5)(rng_))];
    }

private:
    /// Unit vector in R^Dim written into coordinates offset..offset+Dim-1 of R^8.
    template <std::size_t Dim>
    std::array<S, 8> sphere_point(std::size_t offset) {
        std::array<S, 8> out;
        out.fill(S(0));
        if constexpr (S::is_exact) {
            std::uniform_int_distribution<int> coord(-3, 3);
            std::array<Rational, Dim - 1> u;
            Rational len2;
            for (auto& x : u) {
                x = Rational(coord(rng_), 2);
                len2 += x * x;
            }
            const Rational denom = len2 + Rational(1);
            out[offset] = S::from_rational((len2 - Rational(1)) / denom);
            for (std::size_t i = 0; i + 1 < Dim; ++i)
                out[offset + 1 + i] = S::from_rational(Rational(2) * u[i] / denom);
        } else {
            std::normal_distribution<double> gauss;
            std::array<double, Dim> g;
            double len2 = 0;
            do {
                len2 = 0;
                for (auto& x : g) {
                    x = gauss(rng_);
                    len2 += x * x;
                }
            } while (len2 < 1e-6);
            const double len = std::sqrt(len2);
            for (std::size_t i = 0; i < Dim; ++i) out[offset + i] = S(g[i] / len);
        }
        return out;
    }

    std::mt19937_64 rng_;
};

}  // namespace triality
