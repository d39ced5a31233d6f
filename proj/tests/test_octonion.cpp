#include "octdirac/octonion.hpp"
#include "octdirac/sampling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <set>
#include <vector>

using namespace octdirac;

namespace {

Octonion e(int k) { return Octonion::unit(k); }

// Independent oracle for the structure tensor: antisymmetrize the seven
// listed triples by explicit permutation enumeration, without touching the
// library's construction path.
int oracle_entry(int m, int n, int k) {
    for (const Triple& t : standard_triples) {
        const int base[3] = {t.m, t.n, t.k};
        const int idx[3] = {m, n, k};
        const int perms[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                                 {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}};
        for (const auto& p : perms)
            if (idx[0] == base[p[0]] && idx[1] == base[p[1]] && idx[2] == base[p[2]]) return p[3];
    }
    return 0;
}

} // namespace

TEST_CASE("structure tensor matches the permutation oracle on all 343 entries") {
    const StructureTensor& c = StructureTensor::standard();
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n)
            for (int k = 1; k <= 7; ++k) REQUIRE(c.entry(m, n, k) == oracle_entry(m, n, k));
}

TEST_CASE("structure tensor spot values") {
    const StructureTensor& c = StructureTensor::standard();
    REQUIRE(c.entry(1, 2, 3) == 1);
    REQUIRE(c.entry(2, 1, 3) == -1);
    REQUIRE(c.entry(1, 2, 4) == 0);
    REQUIRE(c.nonzeros().size() == 42);
}

TEST_CASE("structure tensor construction rejects malformed triples") {
    SECTION("index outside 1..7") {
        std::vector<Triple> t(standard_triples.begin(), standard_triples.end());
        t[0] = {1, 2, 8};
        REQUIRE_THROWS_AS(StructureTensor::from_triples(t), InvariantViolation);
    }
    SECTION("repeated index") {
        std::vector<Triple> t(standard_triples.begin(), standard_triples.end());
        t[3] = {4, 4, 7};
        REQUIRE_THROWS_AS(StructureTensor::from_triples(t), InvariantViolation);
    }
    SECTION("replacing a triple breaks the pair cover and names the offender") {
        std::vector<Triple> t(standard_triples.begin(), standard_triples.end());
        t[0] = {1, 2, 4};
        try {
            StructureTensor::from_triples(t);
            FAIL("expected InvariantViolation");
        } catch (const InvariantViolation& err) {
            REQUIRE(std::string(err.what()).find("(1,2,4)") != std::string::npos);
        }
    }
    SECTION("duplicated triple is an overlap") {
        std::vector<Triple> t(standard_triples.begin(), standard_triples.end());
        t[1] = {2, 3, 1};
        REQUIRE_THROWS_AS(StructureTensor::from_triples(t), InvariantViolation);
    }
}

TEST_CASE("basis products") {
    REQUIRE(mul(e(1), e(2)) == e(3));
    REQUIRE(mul(e(4), e(1)) == -e(5));
    REQUIRE(mul(e(2), e(4)) == e(6));
    REQUIRE(mul(e(1), e(6)) == -e(7));
    for (int m = 1; m <= 7; ++m) REQUIRE(mul(e(m), e(m)) == -e(0));
}

TEST_CASE("e0 is the two-sided unit") {
    Sampler rng(21);
    for (int i = 0; i < 50; ++i) {
        const Octonion a = rng.octonion();
        REQUIRE(mul(e(0), a) == a);
        REQUIRE(mul(a, e(0)) == a);
    }
}

TEST_CASE("anticommutators reproduce -2 delta e0 on all 49 pairs") {
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n) {
            const Octonion anti = mul(e(m), e(n)) + mul(e(n), e(m));
            if (m == n)
                REQUIRE(anti == Octonion::scalar(-2));
            else
                REQUIRE(anti.is_zero());
        }
}

TEST_CASE("commutators reproduce 2 C_MNK e_K") {
    const StructureTensor& c = StructureTensor::standard();
    REQUIRE(commutator(e(1), e(2)) == rat(2) * e(3));
    REQUIRE(commutator(e(0), e(5)).is_zero());
    Sampler rng(22);
    const Octonion a = rng.octonion();
    REQUIRE(commutator(a, a).is_zero());
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n) {
            Octonion expected;
            for (int k = 1; k <= 7; ++k)
                if (c.entry(m, n, k) != 0) expected += rat(2 * c.entry(m, n, k)) * e(k);
            REQUIRE(commutator(e(m), e(n)) == expected);
        }
}

TEST_CASE("conjugation, norm, inverse") {
    REQUIRE(conj(e(1)) == -e(1));
    REQUIRE(conj(e(0)) == e(0));

    const Octonion one_plus_e1 = e(0) + e(1);
    REQUIRE(norm_sq(one_plus_e1) == 2);

    const Octonion prod = mul(one_plus_e1, e(0) + e(2));
    REQUIRE(prod == e(0) + e(1) + e(2) + e(3));
    REQUIRE(norm_sq(prod) == 4);

    Sampler rng(23);
    for (int i = 0; i < 50; ++i) {
        Octonion a = rng.octonion();
        if (a.is_zero()) continue;
        REQUIRE(mul(a, inverse(a)) == e(0));
        REQUIRE(mul(inverse(a), a) == e(0));
    }
    REQUIRE_THROWS_AS(inverse(Octonion{}), DivisionByZero);
}

TEST_CASE("norm is multiplicative on random rational octonions") {
    Sampler rng(24);
    for (int i = 0; i < 300; ++i) {
        const Octonion a = rng.octonion();
        const Octonion b = rng.octonion();
        REQUIRE(norm_sq(mul(a, b)) == norm_sq(a) * norm_sq(b));
    }
}

TEST_CASE("associator spot values") {
    REQUIRE(associator(e(1), e(2), e(3)).is_zero());
    REQUIRE(associator(e(1), e(2), e(4)) == e(7));
}

TEST_CASE("alternativity: associator vanishes with a repeated argument") {
    Sampler rng(25);
    for (int i = 0; i < 200; ++i) {
        const Octonion a = rng.octonion();
        const Octonion b = rng.octonion();
        REQUIRE(associator(a, a, b).is_zero());
        REQUIRE(associator(a, b, b).is_zero());
        REQUIRE(associator(a, b, a).is_zero());
    }
}

TEST_CASE("associator is completely antisymmetric on basis triples") {
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n)
            for (int k = 1; k <= 7; ++k) {
                const Octonion d = associator(e(m), e(n), e(k));
                REQUIRE(associator(e(n), e(m), e(k)) == -d);
                REQUIRE(associator(e(m), e(k), e(n)) == -d);
                REQUIRE(associator(e(k), e(n), e(m)) == -d);
            }
}

TEST_CASE("some basis triple has a nonzero associator") {
    bool found = false;
    for (int m = 1; m <= 7 && !found; ++m)
        for (int n = 1; n <= 7 && !found; ++n)
            for (int k = 1; k <= 7 && !found; ++k)
                found = !associator(e(m), e(n), e(k)).is_zero();
    REQUIRE(found);
}

TEST_CASE("octonion rendering") {
    REQUIRE(to_string(Octonion{}) == "0");
    REQUIRE(to_string(e(0) - rat(2) * e(3)) == "1 - 2*e3");
    REQUIRE(to_string(rat(1, 2) * e(7)) == "1/2*e7");
}
