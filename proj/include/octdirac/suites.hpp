#pragma once

#include "octdirac/clifford.hpp"
#include "octdirac/g2.hpp"
#include "octdirac/io.hpp"
#include "octdirac/linalg.hpp"
#include "octdirac/octonion.hpp"
#include "octdirac/perturbation.hpp"
#include "octdirac/report.hpp"
#include "octdirac/sampling.hpp"
#include "octdirac/tables.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace octdirac {

struct OctonionSuiteOptions {
    std::vector<Triple> triples{standard_triples.begin(), standard_triples.end()};
    std::uint64_t seed = default_sampler_seed;
    std::size_t random_pairs = 1000;
};

/// The full invariant suite of the octonion algebra: table identities,
/// composition property, alternativity, associator antisymmetry, and the
/// nonassociativity witness.
inline VerificationReport run_octonion_suite(const OctonionSuiteOptions& opts = {}) {
    VerificationReport report;
    report.suite = "octonion";

    std::optional<StructureTensor> tensor;
    report.run_check("structure-tensor", [&] {
        tensor = StructureTensor::from_triples(opts.triples);
        return std::to_string(tensor->triples().size()) + " triples, " +
               std::to_string(tensor->nonzeros().size()) + " nonzero entries";
    });
    if (!tensor) return report;
    const StructureTensor& c = *tensor;

    report.run_check("unit-element", [&] {
        Sampler rng(opts.seed);
        for (int k = 0; k < 8; ++k) {
            const Octonion e = Octonion::unit(k);
            if (mul(c, Octonion::unit(0), e) != e || mul(c, e, Octonion::unit(0)) != e)
                throw InvariantViolation("e0 fails to act as the unit on e" + std::to_string(k));
        }
        for (int i = 0; i < 20; ++i) {
            const Octonion a = rng.octonion();
            if (mul(c, Octonion::unit(0), a) != a || mul(c, a, Octonion::unit(0)) != a)
                throw InvariantViolation("e0 fails to act as the unit on a random octonion");
        }
        return std::string("e0 central and unital");
    });

    report.run_check("anticommutator-table", [&] {
        for (int m = 1; m <= 7; ++m)
            for (int n = 1; n <= 7; ++n) {
                const Octonion em = Octonion::unit(m);
                const Octonion en = Octonion::unit(n);
                Octonion anti = mul(c, em, en) + mul(c, en, em);
                Octonion expected = m == n ? Octonion::scalar(-2) : Octonion{};
                if (anti != expected)
                    throw InvariantViolation("anticommutator fails at pair (" + std::to_string(m) +
                                             "," + std::to_string(n) + ")");
            }
        return std::string("49 pairs match -2*delta*e0");
    });

    report.run_check("commutator-table", [&] {
        for (int m = 1; m <= 7; ++m)
            for (int n = 1; n <= 7; ++n) {
                Octonion comm = commutator(c, Octonion::unit(m), Octonion::unit(n));
                Octonion expected;
                for (int k = 1; k <= 7; ++k) {
                    const int coeff = c.entry(m, n, k);
                    if (coeff != 0) expected += rat(2 * coeff) * Octonion::unit(k);
                }
                if (comm != expected)
                    throw InvariantViolation("commutator fails at pair (" + std::to_string(m) +
                                             "," + std::to_string(n) + ")");
            }
        return std::string("49 pairs match 2*C_MNK*e_K");
    });

    report.run_check("norm-composition", [&] {
        Sampler rng(opts.seed + 1);
        for (std::size_t i = 0; i < opts.random_pairs; ++i) {
            const Octonion a = rng.octonion();
            const Octonion b = rng.octonion();
            if (norm_sq(mul(c, a, b)) != norm_sq(a) * norm_sq(b))
                throw InvariantViolation("norm_sq(a*b) != norm_sq(a)*norm_sq(b) at sample " +
                                         std::to_string(i));
        }
        return std::to_string(opts.random_pairs) + " random pairs, exact equality";
    });

    report.run_check("alternativity", [&] {
        for (int m = 0; m <= 7; ++m)
            for (int n = 0; n <= 7; ++n) {
                const Octonion a = Octonion::unit(m);
                const Octonion b = Octonion::unit(n);
                if (!associator(c, a, a, b).is_zero() || !associator(c, a, b, b).is_zero() ||
                    !associator(c, a, b, a).is_zero())
                    throw InvariantViolation("alternativity fails on basis pair (" +
                                             std::to_string(m) + "," + std::to_string(n) + ")");
            }
        Sampler rng(opts.seed + 2);
        for (std::size_t i = 0; i < opts.random_pairs; ++i) {
            const Octonion a = rng.octonion();
            const Octonion b = rng.octonion();
            if (!associator(c, a, a, b).is_zero() || !associator(c, a, b, b).is_zero())
                throw InvariantViolation("alternativity fails on random pair " + std::to_string(i));
        }
        return std::to_string(opts.random_pairs) + " random pairs and all basis pairs";
    });

    report.run_check("associator-antisymmetry", [&] {
        for (int m = 1; m <= 7; ++m)
            for (int n = 1; n <= 7; ++n)
                for (int k = 1; k <= 7; ++k) {
                    const Octonion em = Octonion::unit(m);
                    const Octonion en = Octonion::unit(n);
                    const Octonion ek = Octonion::unit(k);
                    const Octonion d = associator(c, em, en, ek);
                    if (associator(c, en, em, ek) != -d || associator(c, em, ek, en) != -d)
                        throw InvariantViolation("associator not antisymmetric at (" +
                                                 std::to_string(m) + "," + std::to_string(n) + "," +
                                                 std::to_string(k) + ")");
                }
        return std::string("343 basis triples");
    });

    report.run_check("nonassociativity-witness", [&] {
        Octonion found;
        for (int m = 1; m <= 7 && found.is_zero(); ++m)
            for (int n = 1; n <= 7 && found.is_zero(); ++n)
                for (int k = 1; k <= 7 && found.is_zero(); ++k)
                    found = associator(c, Octonion::unit(m), Octonion::unit(n), Octonion::unit(k));
        if (found.is_zero())
            throw InvariantViolation("every basis associator vanished; algebra is associative");
        const Octonion witness =
            associator(c, Octonion::unit(1), Octonion::unit(2), Octonion::unit(4));
        return "assoc[e1,e2,e4] = " + to_string(witness);
    });

    report.run_check("inverse-roundtrip", [&] {
        Sampler rng(opts.seed + 3);
        std::size_t tested = 0;
        while (tested < 100) {
            const Octonion a = rng.octonion();
            if (a.is_zero()) continue;
            if (mul(c, a, inverse(a)) != Octonion::unit(0))
                throw InvariantViolation("a * inverse(a) != e0");
            ++tested;
        }
        return std::string("100 random octonions");
    });

    return report;
}

enum class CliffordTarget { gamma4, gamma11, units, table1 };

inline std::string to_string(CliffordTarget t) {
    switch (t) {
        case CliffordTarget::gamma4: return "gamma4";
        case CliffordTarget::gamma11: return "gamma11";
        case CliffordTarget::units: return "units";
        case CliffordTarget::table1: return "table1";
    }
    return "?";
}

struct CliffordSuiteOptions {
    GeneratorTables tables = default_generator_tables();
    bool include_span = true;
};

namespace detail {

inline std::string signature_string(const CliffordSystem& sys) {
    std::size_t plus = 0, minus = 0;
    for (const auto& g : sys.metric) (g > 0 ? plus : minus)++;
    return std::to_string(minus) + "(-)&" + std::to_string(plus) + "(+)";
}

inline void check_signed_permutations(const std::vector<ExactMatrix>& mats,
                                      const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < mats.size(); ++i)
        if (!is_signed_permutation(mats[i]))
            throw InvariantViolation("generator " + names[i] + " is not a signed permutation");
}

} // namespace detail

/// Invariant suite for one matrix-realization target.
inline VerificationReport run_clifford_suite(CliffordTarget target,
                                             const CliffordSuiteOptions& opts = {}) {
    VerificationReport report;
    report.suite = "clifford-" + to_string(target);

    switch (target) {
        case CliffordTarget::gamma4: {
            std::optional<CliffordSystem> sys;
            report.run_check("construction", [&] {
                sys = build_gamma4(opts.tables);
                return std::to_string(sys->dimension()) + " generators of size " +
                       std::to_string(sys->size());
            });
            if (!sys) break;
            report.run_check("signature",
                             [&] { return detail::signature_string(*sys); });
            report.run_check("signed-permutation", [&] {
                detail::check_signed_permutations(sys->generators, sys->names);
                return std::to_string(sys->generators.size()) + " generators";
            });
            if (opts.include_span)
                report.run_check("span-dimension", [&] {
                    const std::size_t dim = span_dimension(sys->generators);
                    if (dim != 16)
                        throw InvariantViolation("span dimension " + std::to_string(dim) +
                                                 ", expected 16");
                    return std::to_string(dim);
                });
            break;
        }
        case CliffordTarget::gamma11: {
            std::optional<CliffordSystem> sys;
            report.run_check("construction", [&] {
                sys = build_gamma11(opts.tables);
                return std::to_string(sys->dimension()) + " generators of size " +
                       std::to_string(sys->size());
            });
            if (!sys) break;
            report.run_check("signature", [&] {
                const std::string sig = detail::signature_string(*sys);
                if (sig != "1(-)&10(+)")
                    throw InvariantViolation("signature " + sig + ", expected 1(-)&10(+)");
                return sig;
            });
            report.run_check("signed-permutation", [&] {
                detail::check_signed_permutations(sys->generators, sys->names);
                return std::to_string(sys->generators.size()) + " generators";
            });
            if (opts.include_span)
                report.run_check("span-dimension", [&] {
                    const std::size_t dim = span_dimension(sys->generators);
                    if (dim != 1024)
                        throw InvariantViolation("span dimension " + std::to_string(dim) +
                                                 ", expected 1024");
                    return std::to_string(dim);
                });
            report.run_check("intertwiner", [&] {
                const auto herm = find_intertwiner(*sys, IntertwinerKind::hermitizing);
                const auto anti = find_intertwiner(*sys, IntertwinerKind::anti_hermitizing);
                if (herm.has_value() == anti.has_value())
                    throw InvariantViolation("expected exactly one intertwiner kind to exist");
                const auto& found = herm ? *herm : *anti;
                const auto kind =
                    herm ? IntertwinerKind::hermitizing : IntertwinerKind::anti_hermitizing;
                if (found.solution_dim != 1)
                    throw InvariantViolation("intertwiner solution space has dimension " +
                                             std::to_string(found.solution_dim) + ", expected 1");
                const Rational sign = kind == IntertwinerKind::hermitizing ? -1 : 1;
                for (std::size_t a = 0; a < sys->generators.size(); ++a) {
                    const ExactMatrix& g = sys->generators[a];
                    ExactMatrix res = found.matrix * g + sign * (g.transpose() * found.matrix);
                    if (!res.is_zero())
                        throw InvariantViolation("intertwiner residual nonzero on " +
                                                 sys->names[a]);
                }
                return to_string(kind) + ", dimension 1";
            });
            break;
        }
        case CliffordTarget::units: {
            std::optional<UnitSystem> sys;
            report.run_check("construction", [&] {
                sys = build_unit_system(opts.tables);
                return std::to_string(sys->units.size()) + " units of size " +
                       std::to_string(sys->size());
            });
            if (!sys) break;
            report.run_check("signed-permutation", [&] {
                detail::check_signed_permutations(sys->units, sys->names);
                return std::to_string(sys->units.size()) + " units";
            });
            report.run_check("commutator-defect", [&] {
                const ExactMatrix defect = commutator_defect(*sys, StructureTensor::standard());
                std::size_t nonzero_offdiag = 0;
                for (std::size_t m = 0; m < 7; ++m) {
                    if (defect(m, m) != 0)
                        throw InvariantViolation("defect diagonal entry (" + std::to_string(m + 1) +
                                                 "," + std::to_string(m + 1) + ") is nonzero");
                    for (std::size_t n = 0; n < 7; ++n) {
                        if (defect(m, n) != defect(n, m))
                            throw InvariantViolation("defect table not symmetric at (" +
                                                     std::to_string(m + 1) + "," +
                                                     std::to_string(n + 1) + ")");
                        if (m != n && defect(m, n) != 0) ++nonzero_offdiag;
                    }
                }
                if (nonzero_offdiag == 0)
                    throw InvariantViolation(
                        "defect table vanishes entirely; matrix units would represent the "
                        "octonion commutator exactly");
                return std::to_string(nonzero_offdiag) + " of 42 off-diagonal entries nonzero";
            });
            break;
        }
        case CliffordTarget::table1: {
            report.run_check("max-ms-parameters", [&] {
                const auto p1 = max_ms_parameters(1);
                const auto p2 = max_ms_parameters(2);
                const auto p5 = max_ms_parameters(5);
                if (p1.dimension != 3 || p1.matrix_size != 2 || p2.dimension != 5 ||
                    p2.matrix_size != 4 || p5.dimension != 11 || p5.matrix_size != 32)
                    throw InvariantViolation("maximal matrix-space parameters disagree with "
                                             "n=2k+1, N=2^k");
                return std::string("k=1:(3,2) k=2:(5,4) k=5:(11,32)");
            });

            const CliffordSystem base = build_gamma4(opts.tables);
            report.run_check("complex-unit", [&] {
                const ExactMatrix unit = embed_complex_unit();
                const ExactMatrix e8 = ExactMatrix::identity(8);
                if (unit * unit != -e8)
                    throw InvariantViolation("embedded complex unit does not square to -E8");
                const CliffordSystem enlarged = enlarge(base, 2);
                for (std::size_t a = 0; a < enlarged.generators.size(); ++a)
                    if (unit * enlarged.generators[a] != enlarged.generators[a] * unit)
                        throw InvariantViolation("complex unit fails to commute with enlarged " +
                                                 enlarged.names[a]);
                return std::string("squares to -E8, commutes with the enlarged system");
            });
            if (opts.include_span)
                report.run_check("complex-span", [&] {
                    CliffordSystem enlarged = enlarge(base, 2);
                    std::vector<ExactMatrix> gens = enlarged.generators;
                    gens.push_back(embed_complex_unit());
                    const std::size_t dim = span_dimension(gens);
                    if (dim != 32)
                        throw InvariantViolation("complex-row span " + std::to_string(dim) +
                                                 ", expected 32");
                    return std::to_string(dim);
                });

            report.run_check("quaternion-units", [&] {
                const auto units = embed_quaternion_units();
                const ExactMatrix e16 = ExactMatrix::identity(16);
                // Products close with the antisymmetric tensor fixed by
                // eps(1,2,3) = -1; this is the orientation the Table-1
                // matrices actually produce.
                const int eps123 = -1;
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) {
                        ExactMatrix expected =
                            a == b ? ExactMatrix(rat(-1) * e16) : ExactMatrix::zero(16, 16);
                        if (a != b) {
                            const int cidx = 3 - a - b;
                            const int parity = ((b - a + 3) % 3 == 1) ? 1 : -1;
                            expected = rat(eps123 * parity) *
                                       units[static_cast<std::size_t>(cidx)];
                        }
                        if (units[static_cast<std::size_t>(a)] *
                                units[static_cast<std::size_t>(b)] !=
                            expected)
                            throw InvariantViolation("quaternion product I" + std::to_string(a + 1) +
                                                     "*I" + std::to_string(b + 1) +
                                                     " breaks the closure relations");
                    }
                return std::string("squares -E16, products close with eps(1,2,3) = -1");
            });
            report.run_check("quaternion-commute", [&] {
                const auto units = embed_quaternion_units();
                const CliffordSystem enlarged = enlarge(base, 4);
                for (const auto& u : units)
                    for (std::size_t a = 0; a < enlarged.generators.size(); ++a)
                        if (u * enlarged.generators[a] != enlarged.generators[a] * u)
                            throw InvariantViolation(
                                "quaternion unit fails to commute with enlarged " +
                                enlarged.names[a]);
                return std::string("all three units commute with the enlarged system");
            });
            if (opts.include_span)
                report.run_check("quaternion-span", [&] {
                    CliffordSystem enlarged = enlarge(base, 4);
                    std::vector<ExactMatrix> gens = enlarged.generators;
                    for (const auto& u : embed_quaternion_units()) gens.push_back(u);
                    const std::size_t dim = span_dimension(gens);
                    if (dim != 64)
                        throw InvariantViolation("quaternion-row span " + std::to_string(dim) +
                                                 ", expected 64");
                    return std::to_string(dim);
                });
            break;
        }
    }
    return report;
}

/// Derivation-algebra suite: dimension 14, exact constraints, Lie closure.
inline VerificationReport run_g2_dimension_suite() {
    VerificationReport report;
    report.suite = "g2-derivations";

    std::vector<Derivation> basis;
    report.run_check("derivation-dimension", [&] {
        basis = derivation_space(StructureTensor::standard());
        if (basis.size() != 14)
            throw InvariantViolation("derivation space has dimension " +
                                     std::to_string(basis.size()) + ", expected 14");
        return std::to_string(basis.size());
    });
    if (basis.empty()) return report;

    report.run_check("basis-normalization", [&] {
        for (const auto& d : basis) {
            const ExactMatrix& m = d.matrix();
            bool seen_nonzero = false;
            for (std::size_t i = 0; i < 7; ++i)
                for (std::size_t j = 0; j < 7; ++j) {
                    if (!is_integer(m(i, j)))
                        throw InvariantViolation("derivation basis entry is not an integer");
                    if (!seen_nonzero && m(i, j) != 0) {
                        if (m(i, j) < 0)
                            throw InvariantViolation(
                                "derivation basis first nonzero entry is negative");
                        seen_nonzero = true;
                    }
                }
            if (!seen_nonzero) throw InvariantViolation("derivation basis holds the zero matrix");
        }
        return std::string("integer entries, positive leading entry, no zero member");
    });

    report.run_check("lie-closure", [&] {
        RowReducer red(49);
        for (const auto& d : basis) red.insert(d.matrix().vectorized());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                ExactMatrix comm = basis[i].matrix() * basis[j].matrix() -
                                   basis[j].matrix() * basis[i].matrix();
                if (!red.in_row_span(comm.vectorized()))
                    throw InvariantViolation("commutator of basis members " + std::to_string(i) +
                                             "," + std::to_string(j) + " leaves the span");
            }
        return std::string("91 commutators stay in the 14-dimensional span");
    });

    return report;
}

/// Checks one candidate transform against both automorphism conditions.
inline VerificationReport run_g2_check_suite(const UnitTransform& g) {
    VerificationReport report;
    report.suite = "g2-check";

    std::string orth, structure;
    bool orth_ok = false, structure_ok = false;
    if (g.is_exact()) {
        const auto res = automorphism_residuals(g.exact(), StructureTensor::standard());
        orth_ok = res.orthogonality == 0;
        structure_ok = res.structure == 0;
        orth = "residual " + to_string(res.orthogonality) + " (exact)";
        structure = "residual " + to_string(res.structure) + " (exact)";
    } else {
        const auto res = automorphism_residuals(g.approx(), StructureTensor::standard());
        orth_ok = res.orthogonality <= automorphism_tolerance;
        structure_ok = res.structure <= automorphism_tolerance;
        orth = "residual " + std::to_string(res.orthogonality) + " (tolerance 1e-9)";
        structure = "residual " + std::to_string(res.structure) + " (tolerance 1e-9)";
    }
    report.run_check("orthogonality", [&] {
        if (!orth_ok) throw InvariantViolation(orth);
        return orth;
    });
    report.run_check("structure-preservation", [&] {
        if (!structure_ok) throw InvariantViolation(structure);
        return structure;
    });
    return report;
}

/// Exponentiates one basis derivation and validates the finite transform.
inline VerificationReport run_g2_exp_suite(std::size_t basis_index, double t) {
    VerificationReport report;
    report.suite = "g2-exp";

    std::optional<UnitTransform> g;
    report.run_check("exponentiate", [&] {
        const auto basis = derivation_space(StructureTensor::standard());
        if (basis_index >= basis.size())
            throw InvariantViolation("basis index " + std::to_string(basis_index) +
                                     " outside 0.." + std::to_string(basis.size() - 1));
        g = exponentiate(basis[basis_index], t);
        std::ostringstream os;
        os << "exp(t*d" << basis_index << ") at t=" << t;
        return os.str();
    });
    if (!g) return report;

    const auto res = automorphism_residuals(g->approx(), StructureTensor::standard());
    report.run_check("orthogonality", [&] {
        if (res.orthogonality > automorphism_tolerance)
            throw InvariantViolation("residual " + std::to_string(res.orthogonality) +
                                     " above 1e-9");
        return "residual " + std::to_string(res.orthogonality);
    });
    report.run_check("structure-preservation", [&] {
        if (res.structure > automorphism_tolerance)
            throw InvariantViolation("residual " + std::to_string(res.structure) + " above 1e-9");
        return "residual " + std::to_string(res.structure);
    });
    report.run_check("roundtrip", [&] {
        const auto basis = derivation_space(StructureTensor::standard());
        const FloatMatrix back = expm(to_float(basis[basis_index].matrix()) * -t);
        const FloatMatrix prod = g->approx() * back;
        const FloatMatrix residual = prod - FloatMatrix::identity(7);
        const double err = max_abs(residual);
        if (err > 1e-10)
            throw InvariantViolation("exp(td)*exp(-td) deviates from identity by " +
                                     std::to_string(err));
        return "deviation " + std::to_string(err);
    });
    return report;
}

struct PerturbSuiteOptions {
    std::vector<Rational> lambdas;                    // empty: {1/64, 1/32, 1/16}
    std::optional<PerturbationSeed> seed_from_file;   // overrides PRNG
    std::uint64_t seed = default_sampler_seed;
};

/// First-order construction suite: pointwise residuals for a single lambda,
/// exact polynomial extraction for three or more, plus the 32x32 similarity
/// invariance check.
inline VerificationReport run_perturbation_suite(const PerturbSuiteOptions& opts = {}) {
    VerificationReport report;
    report.suite = "perturbation";

    std::vector<Rational> lambdas = opts.lambdas;
    if (lambdas.empty()) lambdas = {rat(1, 64), rat(1, 32), rat(1, 16)};

    std::optional<PerturbationSeed> seed;
    report.run_check("seed", [&] {
        if (opts.seed_from_file) {
            seed = *opts.seed_from_file;
            return std::string("loaded from file");
        }
        Sampler rng(opts.seed);
        seed = rng.perturbation_seed(lambdas.back());
        return "generated from sampler seed " + std::to_string(opts.seed);
    });
    if (!seed) return report;

    if (lambdas.size() == 1) {
        report.run_check("pointwise-residual", [&] {
            const auto table =
                clifford_residual(build_octonion_ds(seed->with_lambda(lambdas.front())));
            const Rational overall = table.max_abs_overall();
            if (lambdas.front() == 0 && overall != 0)
                throw InvariantViolation("residual at lambda=0 is " + to_string(overall) +
                                         ", expected 0");
            return "max-abs residual " + to_string(overall) + " at lambda=" +
                   to_string(lambdas.front());
        });
    } else if (lambdas.size() >= 3) {
        const std::array<Rational, 3> l3{lambdas[0], lambdas[1], lambdas[2]};
        std::optional<OctonionResidualPolynomial> poly;
        report.run_check("residual-polynomial", [&] {
            poly = octonion_residual_polynomial(*seed, l3);
            std::ostringstream os;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = a; b < 4; ++b)
                    os << "(" << a << "," << b << "): c0=" << to_string(poly->coeff_max_abs(a, b, 0))
                       << " c1=" << to_string(poly->coeff_max_abs(a, b, 1))
                       << " c2=" << to_string(poly->coeff_max_abs(a, b, 2)) << "; ";
            return os.str();
        });
        if (poly) {
            report.run_check("degree-0-vanishes", [&] {
                for (std::size_t a = 0; a < 4; ++a)
                    for (std::size_t b = 0; b < 4; ++b)
                        if (poly->coeff_max_abs(a, b, 0) != 0)
                            throw InvariantViolation("constant residual coefficient nonzero at (" +
                                                     std::to_string(a) + "," + std::to_string(b) +
                                                     ")");
                return std::string("all pairs exactly zero");
            });
            report.run_check("degree-1-vanishes", [&] {
                for (std::size_t a = 0; a < 4; ++a)
                    for (std::size_t b = 0; b < 4; ++b)
                        if (poly->coeff_max_abs(a, b, 1) != 0)
                            throw InvariantViolation("linear residual coefficient nonzero at (" +
                                                     std::to_string(a) + "," + std::to_string(b) +
                                                     ")");
                return std::string("all pairs exactly zero");
            });
            report.run_check("quadratic-witness", [&] {
                if (!poly->quadratic_witness())
                    throw InvariantViolation(
                        "quadratic coefficient vanishes for every generator pair");
                return std::string("nonzero quadratic coefficient exists");
            });
        }
    } else {
        report.run_check("lambda-count", [&]() -> std::string {
            throw InvariantViolation("supply one lambda (pointwise) or at least three (extraction)");
        });
        return report;
    }

    report.run_check("gamma11-similarity", [&] {
        const CliffordSystem base = build_gamma11();
        const UnitSystem units = build_unit_system();
        Rational lambda = 0;
        for (const auto& l : lambdas)
            if (l > lambda) lambda = l;
        const ExactMatrix s = perturbation_matrix(seed->with_lambda(lambda), units);
        const ExactMatrix big_s = ExactMatrix::identity(32) + s;
        const ExactMatrix s_inv = inverse(big_s);
        CliffordSystem conjugated;
        conjugated.metric = base.metric;
        conjugated.names = base.names;
        for (const auto& g : base.generators)
            conjugated.generators.push_back(big_s * g * s_inv);
        verify_clifford(conjugated);
        return "S gamma S^-1 satisfies the Clifford relation exactly at lambda=" +
               to_string(lambda);
    });

    return report;
}

/// Fold report for one amplitude chain: both folds, their difference, and the
/// norm gap (which must vanish by the composition property).
inline VerificationReport run_fold_report(const AmplitudeChain& chain) {
    VerificationReport report;
    report.suite = "fold";
    const Octonion left = fold_left(chain);
    const Octonion right = fold_right(chain);
    report.run_check("fold-left", [&] { return to_string(left); });
    report.run_check("fold-right", [&] { return to_string(right); });
    report.run_check("difference", [&] { return to_string(Octonion(left - right)); });
    report.run_check("norm-gap", [&] {
        const Rational gap = norm_sq(left) - norm_sq(right);
        if (gap != 0)
            throw InvariantViolation("squared norms differ by " + to_string(gap));
        return "0 (|left|^2 = " + to_string(norm_sq(left)) + ")";
    });
    return report;
}

/// Every suite in dependency order.
inline std::vector<VerificationReport> run_all_suites(std::uint64_t seed = default_sampler_seed) {
    std::vector<VerificationReport> reports;
    OctonionSuiteOptions oct;
    oct.seed = seed;
    reports.push_back(run_octonion_suite(oct));
    reports.push_back(run_clifford_suite(CliffordTarget::units));
    reports.push_back(run_clifford_suite(CliffordTarget::gamma4));
    reports.push_back(run_clifford_suite(CliffordTarget::gamma11));
    reports.push_back(run_clifford_suite(CliffordTarget::table1));
    reports.push_back(run_g2_dimension_suite());
    reports.push_back(run_g2_exp_suite(0, 0.3));
    PerturbSuiteOptions perturb;
    perturb.seed = seed;
    reports.push_back(run_perturbation_suite(perturb));
    return reports;
}

} // namespace octdirac
