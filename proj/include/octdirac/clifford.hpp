#pragma once

#include "octdirac/linalg.hpp"
#include "octdirac/matrix.hpp"
#include "octdirac/octonion.hpp"
#include "octdirac/tables.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace octdirac {

/// An ordered set of generators together with the diagonal metric they are
/// required to satisfy: g_A g_B + g_B g_A = 2 g_AB E, checked exactly.
struct CliffordSystem {
    std::vector<ExactMatrix> generators;
    std::vector<Rational> metric;
    std::vector<std::string> names;

    std::size_t dimension() const { return generators.size(); }
    std::size_t size() const { return generators.empty() ? 0 : generators.front().rows(); }
};

/// The seven matrix imaginary units: pairwise [I_M, I_N]_+ = -2 delta_MN E.
struct UnitSystem {
    std::vector<ExactMatrix> units;
    std::vector<std::string> names;

    std::size_t size() const { return units.empty() ? 0 : units.front().rows(); }
};

/// Exhaustive anticommutator check of the Clifford relation; throws an
/// InvariantViolation naming the offending generator pair.
inline void verify_clifford(const CliffordSystem& sys) {
    if (sys.generators.size() != sys.metric.size())
        throw InvariantViolation("clifford system: generator count differs from metric length");
    const std::size_t n = sys.size();
    const ExactMatrix two_e = rat(2) * ExactMatrix::identity(n);
    for (std::size_t a = 0; a < sys.generators.size(); ++a)
        for (std::size_t b = a; b < sys.generators.size(); ++b) {
            ExactMatrix anti = sys.generators[a] * sys.generators[b] +
                               sys.generators[b] * sys.generators[a];
            ExactMatrix expected =
                a == b ? ExactMatrix(sys.metric[a] * two_e) : ExactMatrix::zero(n, n);
            if (anti != expected) {
                const std::string na = a < sys.names.size() ? sys.names[a] : std::to_string(a);
                const std::string nb = b < sys.names.size() ? sys.names[b] : std::to_string(b);
                throw InvariantViolation("clifford relation fails for generator pair (" + na +
                                         "," + nb + ")");
            }
        }
}

/// Exhaustive check of [I_M, I_N]_+ = -2 delta_MN E; throws naming (M,N).
inline void verify_units(const UnitSystem& sys) {
    const std::size_t n = sys.size();
    const ExactMatrix minus_two_e = rat(-2) * ExactMatrix::identity(n);
    for (std::size_t m = 0; m < sys.units.size(); ++m)
        for (std::size_t k = m; k < sys.units.size(); ++k) {
            ExactMatrix anti = sys.units[m] * sys.units[k] + sys.units[k] * sys.units[m];
            ExactMatrix expected = m == k ? minus_two_e : ExactMatrix::zero(n, n);
            if (anti != expected) {
                const std::string nm = m < sys.names.size() ? sys.names[m] : std::to_string(m + 1);
                const std::string nk = k < sys.names.size() ? sys.names[k] : std::to_string(k + 1);
                throw InvariantViolation("unit anticommutator fails for pair (" + nm + "," + nk +
                                         ")");
            }
        }
}

/// The seven 32x32 real imaginary units, realized from the declarative table
/// and verified at construction.
inline UnitSystem build_unit_system(const GeneratorTables& tables = default_generator_tables()) {
    UnitSystem sys;
    for (const auto& rec : tables.units) {
        sys.units.push_back(rec.realize());
        sys.names.push_back(rec.name);
    }
    verify_units(sys);
    return sys;
}

/// The eleven 32x32 real generators with metric diag(-1, +1 x 10), realized
/// from the declarative table and verified at construction.
inline CliffordSystem build_gamma11(const GeneratorTables& tables = default_generator_tables()) {
    CliffordSystem sys;
    for (const auto& rec : tables.gammas) {
        sys.generators.push_back(rec.realize());
        sys.metric.push_back(rec.metric);
        sys.names.push_back(rec.name);
    }
    verify_clifford(sys);
    return sys;
}

/// The 4D real system with metric diag(-1,1,1,1): the first-slot tensor
/// factors of the first four gamma records.
inline CliffordSystem build_gamma4(const GeneratorTables& tables = default_generator_tables()) {
    CliffordSystem sys;
    for (std::size_t a = 0; a < 4 && a < tables.gammas.size(); ++a) {
        const auto& rec = tables.gammas[a];
        ExactMatrix m = pauli::factor(rec.factors[0], 4);
        sys.generators.push_back(rec.sign < 0 ? -m : m);
        sys.metric.push_back(rec.metric);
        sys.names.push_back(rec.name);
    }
    verify_clifford(sys);
    return sys;
}

/// Generators tensored with an identity block (the enlarged systems of the
/// number-field embeddings); the metric is unchanged.
inline CliffordSystem enlarge(const CliffordSystem& sys, std::size_t block) {
    CliffordSystem out;
    const ExactMatrix e = ExactMatrix::identity(block);
    for (std::size_t a = 0; a < sys.generators.size(); ++a) {
        out.generators.push_back(kron(sys.generators[a], e));
        out.metric.push_back(sys.metric[a]);
        out.names.push_back(sys.names.size() > a ? sys.names[a] : std::to_string(a));
    }
    return out;
}

/// The embedded complex unit E4 (x) i*sigma2: real, squares to -E8, and
/// commutes with every generator of the enlarged 4D system.
inline ExactMatrix embed_complex_unit() {
    return kron(pauli::e4(), pauli::i_sigma2());
}

/// The three embedded quaternion units E4 (x) {i rho2 sigma1, i sigma2,
/// i rho2 sigma3}: each squares to -E16 and they anticommute pairwise.
inline std::array<ExactMatrix, 3> embed_quaternion_units() {
    return {kron(pauli::e4(), pauli::factor_4x4("irho2sigma1")),
            kron(pauli::e4(), pauli::factor_4x4("isigma2")),
            kron(pauli::e4(), pauli::factor_4x4("irho2sigma3"))};
}

/// Maximal matrix-space parameters: dimension n = 2k+1 and matrix size
/// N = 2^k.
struct MaxMsParameters {
    std::size_t dimension;
    std::size_t matrix_size;
};

inline MaxMsParameters max_ms_parameters(unsigned k) {
    if (k < 1 || k > 32) throw InvariantViolation("max_ms_parameters requires 1 <= k <= 32");
    return {2 * static_cast<std::size_t>(k) + 1, std::size_t{1} << k};
}

enum class IntertwinerKind { hermitizing, anti_hermitizing };

inline std::string to_string(IntertwinerKind kind) {
    return kind == IntertwinerKind::hermitizing ? "hermitizing" : "anti_hermitizing";
}

/// A solution X of X g_a -+ g_a^T X = 0 for every generator, normalized to
/// integer entries with positive leading entry, plus the dimension of the
/// full solution space.
struct Intertwiner {
    ExactMatrix matrix;
    std::size_t solution_dim;
};

/// Solves the homogeneous linear system X g_a -+ g_a^T X = 0 (minus for the
/// hermitizing kind, plus for the anti-hermitizing kind) over all generators
/// via an exact nullspace computation; absent when only the zero solution
/// exists.
inline std::optional<Intertwiner> find_intertwiner(const CliffordSystem& sys,
                                                   IntertwinerKind kind) {
    const std::size_t n = sys.size();
    const Rational transpose_sign = kind == IntertwinerKind::hermitizing ? -1 : 1;
    RowReducer red(n * n);
    const auto unknown = [n](std::size_t i, std::size_t j) { return i * n + j; };

    std::map<std::size_t, Rational> row;
    for (const auto& g : sys.generators) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                row.clear();
                for (std::size_t k = 0; k < n; ++k) {
                    if (g(k, j) != 0) row[unknown(i, k)] += g(k, j);
                    if (g(k, i) != 0) row[unknown(k, j)] += transpose_sign * g(k, i);
                }
                SparseRow sparse(row.begin(), row.end());
                red.insert_sparse(sparse);
                if (red.rank() == n * n) return std::nullopt;
            }
        }
    }

    auto basis = red.nullspace_basis();
    if (basis.empty()) return std::nullopt;
    auto v = detail::normalized_integer_vector(std::move(basis.front()));
    ExactMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = v[unknown(i, j)];
    return Intertwiner{std::move(x), basis.size()};
}

/// Entry (M,N) is the entrywise max-abs of [I_M, I_N]_- - 2 C_MNK I_K: how
/// far the matrix units depart from the octonion commutator table.
inline ExactMatrix commutator_defect(const UnitSystem& sys, const StructureTensor& c) {
    ExactMatrix defect(7, 7);
    for (int m = 1; m <= 7; ++m)
        for (int k = 1; k <= 7; ++k) {
            const ExactMatrix& im = sys.units[static_cast<std::size_t>(m - 1)];
            const ExactMatrix& ik = sys.units[static_cast<std::size_t>(k - 1)];
            ExactMatrix diff = im * ik - ik * im;
            for (int s = 1; s <= 7; ++s) {
                const int coeff = c.entry(m, k, s);
                if (coeff != 0)
                    diff -= rat(2 * coeff) * sys.units[static_cast<std::size_t>(s - 1)];
            }
            defect(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(k - 1)) =
                max_abs(diff);
        }
    return defect;
}

} // namespace octdirac
