#pragma once

#include "octdirac/matrix.hpp"
#include "octdirac/octonion.hpp"
#include "octdirac/perturbation.hpp"

#include <cstdint>
#include <random>

namespace octdirac {

/// Deterministic sample source for the randomized suites.  Every randomized
/// check in the library draws through this class from a documented seed, so
/// two runs with the same seed produce identical values.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    long long int_in(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }

    /// Rational with numerator in [-9,9] and denominator in [1,9].
    Rational rational() { return rat(int_in(-9, 9), int_in(1, 9)); }

    Octonion octonion() {
        Octonion o;
        for (auto& c : o.coeffs) c = rational();
        return o;
    }

    /// Matrix with entries drawn from {-1, 0, 1}.
    ExactMatrix sign_matrix(std::size_t rows, std::size_t cols) {
        ExactMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rat(int_in(-1, 1));
        return m;
    }

    /// Integer perturbation seed: s_0 and s_1..s_7 with entries in {-1,0,1}.
    PerturbationSeed perturbation_seed(Rational lambda) {
        PerturbationSeed s;
        s.s0 = sign_matrix(4, 4);
        for (auto& m : s.s_imag) m = sign_matrix(4, 4);
        s.lambda = std::move(lambda);
        return s;
    }

    /// Chain of the given length drawn from words in two fixed octonions:
    /// by the two-generator associativity theorem its folds must agree.
    AmplitudeChain two_generated_chain(std::size_t length) {
        const Octonion x = octonion();
        const Octonion y = octonion();
        AmplitudeChain chain;
        chain.reserve(length);
        for (std::size_t i = 0; i < length; ++i) {
            switch (int_in(0, 3)) {
                case 0: chain.push_back(x); break;
                case 1: chain.push_back(y); break;
                case 2: chain.push_back(mul(x, y)); break;
                default: chain.push_back(mul(y, mul(x, x))); break;
            }
        }
        return chain;
    }

private:
    std::mt19937_64 eng_;
};

/// Seed used by the CLI and test suites unless overridden.
inline constexpr std::uint64_t default_sampler_seed = 20110811;

} // namespace octdirac
