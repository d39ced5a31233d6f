#include "octdirac/clifford.hpp"
#include "octdirac/linalg.hpp"
#include "octdirac/pauli.hpp"
#include "octdirac/tables.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using namespace octdirac;

TEST_CASE("pauli factors") {
    const ExactMatrix j = pauli::i_sigma2();
    REQUIRE(j * j == -ExactMatrix::identity(2));

    const ExactMatrix r2s2 = pauli::factor_4x4("rho2sigma2");
    for (const auto& v : r2s2.entries()) REQUIRE((v == 0 || v == 1 || v == -1));
    REQUIRE(r2s2 == -kron(j, j));

    const ExactMatrix ir2s1 = pauli::factor_4x4("irho2sigma1");
    REQUIRE(ir2s1 * ir2s1 == -ExactMatrix::identity(4));
    REQUIRE(ir2s1 == kron(j, pauli::sigma1()));

    SECTION("imaginary combinations are rejected") {
        REQUIRE_THROWS_AS(pauli::factor_4x4("sigma2"), ParseError);
        REQUIRE_THROWS_AS(pauli::factor_4x4("rho2"), ParseError);
        REQUIRE_THROWS_AS(pauli::factor_2x2("sigma2"), ParseError);
    }
    SECTION("unknown names are rejected") {
        REQUIRE_THROWS_AS(pauli::factor_4x4("tau1"), ParseError);
        REQUIRE_THROWS_AS(pauli::factor_4x4("rho4"), ParseError);
        REQUIRE_THROWS_AS(pauli::factor_2x2("rho2sigma1"), ParseError);
    }
}

TEST_CASE("generator tables parse, realize, and match the shipped data file") {
    const GeneratorTables& tables = default_generator_tables();
    REQUIRE(tables.gammas.size() == 11);
    REQUIRE(tables.units.size() == 7);
    REQUIRE(tables.gammas[0].sign == -1);
    REQUIRE(tables.gammas[0].metric == -1);

    const char* src = std::getenv("OCTDIRAC_SOURCE_DIR");
    if (src != nullptr) {
        const GeneratorTables from_file =
            load_generator_tables(std::string(src) + "/data/dirac_tables.txt");
        REQUIRE(from_file.gammas.size() == tables.gammas.size());
        for (std::size_t i = 0; i < tables.gammas.size(); ++i) {
            REQUIRE(from_file.gammas[i].name == tables.gammas[i].name);
            REQUIRE(from_file.gammas[i].realize() == tables.gammas[i].realize());
            REQUIRE(from_file.gammas[i].metric == tables.gammas[i].metric);
        }
        for (std::size_t i = 0; i < tables.units.size(); ++i)
            REQUIRE(from_file.units[i].realize() == tables.units[i].realize());
    }

    SECTION("malformed text is rejected") {
        REQUIRE_THROWS_AS(parse_generator_tables("gamma g0 - irho2sigma1 E4 E2"), ParseError);
        REQUIRE_THROWS_AS(parse_generator_tables("wib x + E4 E4 E2 +1"), ParseError);
    }
}

TEST_CASE("unit system satisfies the anticommutator table") {
    const UnitSystem units = build_unit_system();
    const ExactMatrix e32 = ExactMatrix::identity(32);
    REQUIRE(units.units.size() == 7);

    REQUIRE(units.units[0] * units.units[0] == -e32);
    REQUIRE((units.units[0] * units.units[1] + units.units[1] * units.units[0]).is_zero());

    for (const auto& u : units.units) {
        REQUIRE(is_signed_permutation(u));
        for (const auto& v : u.entries()) REQUIRE((v == 0 || v == 1 || v == -1));
    }

    SECTION("products of two distinct units stay in {-1,0,1}") {
        const ExactMatrix p = units.units[2] * units.units[5];
        for (const auto& v : p.entries()) REQUIRE((v == 0 || v == 1 || v == -1));
        REQUIRE(is_signed_permutation(p));
    }
}

TEST_CASE("corrupted unit table fails naming the offending pair") {
    const GeneratorTables bad =
        with_corrupted_factor(default_generator_tables(), "I3", 1, "irho2sigma1");
    try {
        build_unit_system(bad);
        FAIL("expected InvariantViolation");
    } catch (const InvariantViolation& e) {
        REQUIRE(std::string(e.what()).find("I3") != std::string::npos);
    }
}

TEST_CASE("eleven-dimensional system has the stated signature") {
    const CliffordSystem sys = build_gamma11();
    const ExactMatrix e32 = ExactMatrix::identity(32);
    REQUIRE(sys.dimension() == 11);
    REQUIRE(sys.size() == 32);

    REQUIRE(sys.generators[0] * sys.generators[0] == -e32);
    for (std::size_t a = 1; a < 11; ++a)
        REQUIRE(sys.generators[a] * sys.generators[a] == e32);
    REQUIRE((sys.generators[0] * sys.generators[5] + sys.generators[5] * sys.generators[0])
                .is_zero());

    for (const auto& g : sys.generators) REQUIRE(is_signed_permutation(g));
}

TEST_CASE("corrupted gamma table fails naming the offending pair") {
    const GeneratorTables bad = with_corrupted_factor(default_generator_tables(), "g7", 1, "E4");
    try {
        build_gamma11(bad);
        FAIL("expected InvariantViolation");
    } catch (const InvariantViolation& e) {
        REQUIRE(std::string(e.what()).find("g7") != std::string::npos);
    }
}

TEST_CASE("four-dimensional system") {
    const CliffordSystem sys = build_gamma4();
    const ExactMatrix e4 = ExactMatrix::identity(4);
    REQUIRE(sys.dimension() == 4);
    REQUIRE(sys.size() == 4);
    REQUIRE(sys.generators[0] * sys.generators[0] == -e4);
    for (std::size_t a = 1; a < 4; ++a) REQUIRE(sys.generators[a] * sys.generators[a] == e4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            REQUIRE((sys.generators[a] * sys.generators[b] + sys.generators[b] * sys.generators[a])
                        .is_zero());

    REQUIRE(span_dimension(sys.generators) == 16);
}

TEST_CASE("embedded complex unit") {
    const ExactMatrix unit = embed_complex_unit();
    REQUIRE(unit * unit == -ExactMatrix::identity(8));

    const CliffordSystem enlarged = enlarge(build_gamma4(), 2);
    for (const auto& g : enlarged.generators) REQUIRE(unit * g == g * unit);

    std::vector<ExactMatrix> gens = enlarged.generators;
    gens.push_back(unit);
    REQUIRE(span_dimension(gens) == 32);
}

TEST_CASE("embedded quaternion units") {
    const auto units = embed_quaternion_units();
    const ExactMatrix e16 = ExactMatrix::identity(16);
    for (const auto& u : units) REQUIRE(u * u == -e16);

    // The Table-1 matrices close with eps(1,2,3) = -1: I1 I2 = -I3 and
    // cyclic, I2 I1 = +I3 and cyclic.
    REQUIRE(units[0] * units[1] == -units[2]);
    REQUIRE(units[1] * units[2] == -units[0]);
    REQUIRE(units[2] * units[0] == -units[1]);
    REQUIRE(units[1] * units[0] == units[2]);

    const CliffordSystem enlarged = enlarge(build_gamma4(), 4);
    for (const auto& u : units)
        for (const auto& g : enlarged.generators) REQUIRE(u * g == g * u);

    std::vector<ExactMatrix> gens = enlarged.generators;
    for (const auto& u : units) gens.push_back(u);
    REQUIRE(span_dimension(gens) == 64);
}

TEST_CASE("maximal matrix-space parameters") {
    REQUIRE(max_ms_parameters(1).dimension == 3);
    REQUIRE(max_ms_parameters(1).matrix_size == 2);
    REQUIRE(max_ms_parameters(2).dimension == 5);
    REQUIRE(max_ms_parameters(2).matrix_size == 4);
    REQUIRE(max_ms_parameters(5).dimension == 11);
    REQUIRE(max_ms_parameters(5).matrix_size == 32);
    REQUIRE_THROWS_AS(max_ms_parameters(0), InvariantViolation);
}

TEST_CASE("hermitizing intertwiner of a symmetric toy system contains the identity") {
    CliffordSystem sys;
    sys.generators = {pauli::sigma1(), pauli::sigma3()};
    sys.metric = {1, 1};
    sys.names = {"s1", "s3"};
    verify_clifford(sys);

    const auto found = find_intertwiner(sys, IntertwinerKind::hermitizing);
    REQUIRE(found.has_value());
    // Both generators are symmetric, so X = E solves the system; the solution
    // space is 1-dimensional and the normalized representative is E itself.
    REQUIRE(found->solution_dim == 1);
    REQUIRE(found->matrix == ExactMatrix::identity(2));
}

TEST_CASE("exactly one intertwiner kind exists for the eleven-dimensional system") {
    const CliffordSystem sys = build_gamma11();
    const auto herm = find_intertwiner(sys, IntertwinerKind::hermitizing);
    const auto anti = find_intertwiner(sys, IntertwinerKind::anti_hermitizing);

    REQUIRE_FALSE(herm.has_value());
    REQUIRE(anti.has_value());
    REQUIRE(anti->solution_dim == 1);

    for (const auto& g : sys.generators) {
        ExactMatrix residual = anti->matrix * g + g.transpose() * anti->matrix;
        REQUIRE(residual.is_zero());
    }
}

TEST_CASE("commutator defect table") {
    const UnitSystem units = build_unit_system();
    const ExactMatrix defect = commutator_defect(units, StructureTensor::standard());

    std::size_t nonzero_offdiag = 0;
    for (std::size_t m = 0; m < 7; ++m) {
        REQUIRE(defect(m, m) == 0);
        for (std::size_t n = 0; n < 7; ++n) {
            REQUIRE(defect(m, n) == defect(n, m));
            if (m != n && defect(m, n) != 0) ++nonzero_offdiag;
        }
    }
    REQUIRE(nonzero_offdiag > 0);
}

TEST_CASE("span of the full eleven-dimensional system saturates the matrix algebra") {
    const CliffordSystem sys = build_gamma11();
    REQUIRE(span_dimension(sys.generators) == 1024);
}
