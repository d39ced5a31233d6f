#include "octdirac/linalg.hpp"
#include "octdirac/matrix.hpp"
#include "octdirac/sampling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

using namespace octdirac;

namespace {

ExactMatrix random_matrix(Sampler& rng, std::size_t rows, std::size_t cols) {
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational();
    return m;
}

} // namespace

TEST_CASE("rational arithmetic keeps the canonical form") {
    Sampler rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational();
        Rational b = rng.rational();
        for (const Rational& r : {Rational(a + b), Rational(a * b), Rational(a - b)}) {
            REQUIRE(denominator(r) > 0);
            REQUIRE(boost::multiprecision::gcd(BigInt(boost::multiprecision::abs(numerator(r))),
                                               denominator(r)) == 1);
        }
    }
}

TEST_CASE("kron of identities and diagonals") {
    const ExactMatrix i2 = ExactMatrix::identity(2);
    REQUIRE(kron(i2, i2) == ExactMatrix::identity(4));

    const ExactMatrix d = {{1, 0}, {0, -1}};
    const ExactMatrix expected = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
    REQUIRE(kron(d, i2) == expected);
}

TEST_CASE("kron of the real i*sigma2 with itself squares to +I4") {
    const ExactMatrix j = {{0, 1}, {-1, 0}};
    const ExactMatrix k = kron(j, j);
    const ExactMatrix frozen = {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}};
    REQUIRE(k == frozen);
    REQUIRE(k * k == ExactMatrix::identity(4));
}

TEST_CASE("matrix product basics") {
    Sampler rng(12);
    const ExactMatrix m = random_matrix(rng, 4, 4);
    REQUIRE(ExactMatrix::identity(4) * m == m);

    const ExactMatrix j = {{0, 1}, {-1, 0}};
    REQUIRE(j * j == -ExactMatrix::identity(2));

    REQUIRE_THROWS_AS(random_matrix(rng, 2, 3) * random_matrix(rng, 2, 3), DimensionMismatch);
}

TEST_CASE("kron mixed-product and transpose identities") {
    Sampler rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const ExactMatrix a = random_matrix(rng, 2, 3);
        const ExactMatrix b = random_matrix(rng, 3, 2);
        const ExactMatrix c = random_matrix(rng, 3, 2);
        const ExactMatrix d = random_matrix(rng, 2, 3);
        REQUIRE(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        REQUIRE(kron(a, b).transpose() == kron(a.transpose(), b.transpose()));
    }
}

TEST_CASE("nullspace of full-rank and zero matrices") {
    REQUIRE(nullspace(ExactMatrix::identity(3)).empty());

    const auto basis = nullspace(ExactMatrix::zero(2, 2));
    REQUIRE(basis.size() == 2);
}

TEST_CASE("nullspace vectors solve the system and complement the rank") {
    Sampler rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 2 + static_cast<std::size_t>(rng.int_in(0, 3));
        const std::size_t cols = 2 + static_cast<std::size_t>(rng.int_in(0, 3));
        ExactMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = rat(rng.int_in(-2, 2));

        const auto basis = nullspace(a);
        REQUIRE(basis.size() + rank(a) == cols);
        for (const auto& v : basis) REQUIRE((a * v).is_zero());
    }
}

TEST_CASE("span of the identity alone is one-dimensional") {
    std::vector<ExactMatrix> gens = {ExactMatrix::identity(2)};
    REQUIRE(span_dimension(gens) == 1);
}

TEST_CASE("span dimension is monotone in word length and bounded by rows^2") {
    Sampler rng(15);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<ExactMatrix> gens;
        for (int g = 0; g < 2; ++g) gens.push_back(rng.sign_matrix(3, 3));
        std::size_t prev = 0;
        for (std::size_t len = 0; len <= 5; ++len) {
            const std::size_t dim = span_dimension(gens, len);
            REQUIRE(dim >= prev);
            REQUIRE(dim <= 9);
            prev = dim;
        }
    }
}

TEST_CASE("exact inverse round-trips and rejects singular input") {
    Sampler rng(16);
    int done = 0;
    while (done < 5) {
        const ExactMatrix a = random_matrix(rng, 4, 4);
        if (rank(a) < 4) continue;
        REQUIRE(a * inverse(a) == ExactMatrix::identity(4));
        ++done;
    }
    REQUIRE_THROWS_AS(inverse(ExactMatrix::zero(3, 3)), InvariantViolation);
}

TEST_CASE("expm at zero and on diagonals") {
    REQUIRE(expm(FloatMatrix::zero(3, 3)) == FloatMatrix::identity(3));

    FloatMatrix d(2, 2);
    d(0, 0) = std::log(2.0);
    const FloatMatrix e = expm(d);
    REQUIRE(std::abs(e(0, 0) - 2.0) < 1e-12);
    REQUIRE(std::abs(e(1, 1) - 1.0) < 1e-12);
    REQUIRE(std::abs(e(0, 1)) < 1e-15);
    REQUIRE(std::abs(e(1, 0)) < 1e-15);
}

TEST_CASE("expm of a rotation generator matches the closed form") {
    for (double theta : {0.1, 0.7, 1.0, 2.5}) {
        FloatMatrix a(2, 2);
        a(0, 1) = theta;
        a(1, 0) = -theta;
        const FloatMatrix e = expm(a);
        REQUIRE(std::abs(e(0, 0) - std::cos(theta)) < 1e-12);
        REQUIRE(std::abs(e(0, 1) - std::sin(theta)) < 1e-12);
        REQUIRE(std::abs(e(1, 0) + std::sin(theta)) < 1e-12);
        REQUIRE(std::abs(e(1, 1) - std::cos(theta)) < 1e-12);
    }
}

TEST_CASE("expm(a) expm(-a) stays near the identity") {
    Sampler rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        FloatMatrix a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                a(i, j) = static_cast<double>(rng.int_in(-100, 100)) / 400.0;
        const FloatMatrix prod = expm(a) * expm(a * -1.0);
        REQUIRE(max_abs(prod - FloatMatrix::identity(4)) < 1e-10);
    }
}

TEST_CASE("expm rejects non-finite entries") {
    FloatMatrix a(2, 2);
    a(0, 0) = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(expm(a), InvariantViolation);
}
