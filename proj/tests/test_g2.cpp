#include "octdirac/g2.hpp"
#include "octdirac/linalg.hpp"
#include "octdirac/sampling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace octdirac;

namespace {

ExactMatrix sign_flip_4567() {
    ExactMatrix g = ExactMatrix::identity(7);
    for (std::size_t i = 3; i < 7; ++i) g(i, i) = -1;
    return g;
}

OctonionF to_float_octonion(const Octonion& a) {
    OctonionF r;
    for (std::size_t i = 0; i < 8; ++i) r.coeffs[i] = static_cast<double>(a.coeffs[i]);
    return r;
}

} // namespace

TEST_CASE("identity passes both automorphism conditions exactly") {
    const auto res = automorphism_residuals(ExactMatrix::identity(7), StructureTensor::standard());
    REQUIRE(res.orthogonality == 0);
    REQUIRE(res.structure == 0);

    const auto verdict = check_automorphism(UnitTransform{ExactMatrix::identity(7)});
    REQUIRE(verdict.pass);
}

TEST_CASE("sign flip of e4..e7 is an automorphism") {
    // Every structure triple contains zero or two indices from {4,5,6,7},
    // so the sign flips cancel pairwise in the structure condition.
    const auto res = automorphism_residuals(sign_flip_4567(), StructureTensor::standard());
    REQUIRE(res.orthogonality == 0);
    REQUIRE(res.structure == 0);
}

TEST_CASE("a generic rotation in the (e1,e4) plane is not an automorphism") {
    // Exact rotation with cos = 3/5, sin = 4/5: orthogonal but structure-
    // breaking.
    ExactMatrix g = ExactMatrix::identity(7);
    g(0, 0) = rat(3, 5);
    g(0, 3) = rat(4, 5);
    g(3, 0) = rat(-4, 5);
    g(3, 3) = rat(3, 5);

    const auto res = automorphism_residuals(g, StructureTensor::standard());
    REQUIRE(res.orthogonality == 0);
    REQUIRE(res.structure != 0);
    REQUIRE_FALSE(check_automorphism(UnitTransform{g}).pass);
}

TEST_CASE("derivation space has dimension 14") {
    const auto basis = derivation_space(StructureTensor::standard());
    REQUIRE(basis.size() == 14);

    for (const auto& d : basis) {
        REQUIRE_FALSE(d.matrix().is_zero());
        bool leading_found = false;
        for (std::size_t i = 0; i < 7 && !leading_found; ++i)
            for (std::size_t j = 0; j < 7 && !leading_found; ++j) {
                const Rational& v = d.matrix()(i, j);
                if (v != 0) {
                    REQUIRE(v > 0);
                    leading_found = true;
                }
                REQUIRE(is_integer(v));
            }
    }
}

TEST_CASE("derivation constructor rejects invalid matrices") {
    ExactMatrix not_antisym = ExactMatrix::identity(7);
    REQUIRE_THROWS_AS(Derivation(not_antisym), InvariantViolation);

    // Antisymmetric but not a derivation: rotation generator in (e1,e4).
    ExactMatrix bad = ExactMatrix::zero(7, 7);
    bad(0, 3) = 1;
    bad(3, 0) = -1;
    REQUIRE_THROWS_AS(Derivation(bad), InvariantViolation);
}

TEST_CASE("derivation basis is closed under the matrix commutator") {
    const auto basis = derivation_space(StructureTensor::standard());
    RowReducer red(49);
    for (const auto& d : basis) red.insert(d.matrix().vectorized());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            ExactMatrix comm =
                basis[i].matrix() * basis[j].matrix() - basis[j].matrix() * basis[i].matrix();
            REQUIRE(red.in_row_span(comm.vectorized()));
        }
}

TEST_CASE("exponentiated derivations are numerical automorphisms") {
    const auto basis = derivation_space(StructureTensor::standard());

    SECTION("t = 0 gives the identity") {
        const UnitTransform g = exponentiate(basis[0], 0.0);
        REQUIRE(max_abs(g.approx() - FloatMatrix::identity(7)) == 0.0);
    }

    SECTION("one-parameter group property") {
        const UnitTransform fwd = exponentiate(basis[3], 0.4);
        const UnitTransform bwd = exponentiate(basis[3], -0.4);
        REQUIRE(max_abs(fwd.approx() * bwd.approx() - FloatMatrix::identity(7)) < 1e-10);
    }

    SECTION("all basis derivations at t = 0.3") {
        for (const auto& d : basis) {
            const UnitTransform g = exponentiate(d, 0.3);
            const auto res = automorphism_residuals(g.approx(), StructureTensor::standard());
            REQUIRE(res.orthogonality < 1e-9);
            REQUIRE(res.structure < 1e-9);
        }
    }
}

TEST_CASE("transform_units on exact automorphisms") {
    const ExactMatrix id = ExactMatrix::identity(7);
    Sampler rng(31);
    const Octonion a = rng.octonion();
    REQUIRE(transform_units(id, a) == a);

    const ExactMatrix flip = sign_flip_4567();
    REQUIRE(transform_units(flip, Octonion::unit(4)) == -Octonion::unit(4));
    REQUIRE(transform_units(flip, Octonion::unit(1)) == Octonion::unit(1));

    // e1' e4' = transform(e1 e4): the transformed basis satisfies the same
    // multiplication table.
    const Octonion lhs = mul(transform_units(flip, Octonion::unit(1)),
                             transform_units(flip, Octonion::unit(4)));
    REQUIRE(lhs == transform_units(flip, mul(Octonion::unit(1), Octonion::unit(4))));
}

TEST_CASE("transform_units rejects non-automorphisms") {
    ExactMatrix g = ExactMatrix::identity(7);
    g(0, 0) = rat(3, 5);
    g(0, 3) = rat(4, 5);
    g(3, 0) = rat(-4, 5);
    g(3, 3) = rat(3, 5);
    REQUIRE_THROWS_AS(transform_units(g, Octonion::unit(1)), InvariantViolation);
}

TEST_CASE("exact automorphisms preserve products, norms, and associators") {
    const ExactMatrix flip = sign_flip_4567();
    Sampler rng(32);
    for (int i = 0; i < 50; ++i) {
        const Octonion a = rng.octonion();
        const Octonion b = rng.octonion();
        const Octonion c = rng.octonion();
        REQUIRE(mul(transform_units(flip, a), transform_units(flip, b)) ==
                transform_units(flip, mul(a, b)));
        REQUIRE(norm_sq(transform_units(flip, a)) == norm_sq(a));
        REQUIRE(associator(transform_units(flip, a), transform_units(flip, b),
                           transform_units(flip, c)) ==
                transform_units(flip, associator(a, b, c)));
    }
}

TEST_CASE("exponentiated automorphisms preserve products within tolerance") {
    const auto basis = derivation_space(StructureTensor::standard());
    const FloatMatrix g = exponentiate(basis[7], 0.6).approx();
    Sampler rng(33);
    for (int i = 0; i < 20; ++i) {
        const OctonionF a = to_float_octonion(rng.octonion());
        const OctonionF b = to_float_octonion(rng.octonion());
        const OctonionF lhs = mul(transform_units(g, a), transform_units(g, b));
        const OctonionF rhs = transform_units(g, mul(a, b));
        for (std::size_t k = 0; k < 8; ++k)
            REQUIRE(std::abs(lhs.coeffs[k] - rhs.coeffs[k]) < 1e-9 * 200.0);
    }
}
