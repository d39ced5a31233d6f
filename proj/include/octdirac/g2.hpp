#pragma once

#include "octdirac/linalg.hpp"
#include "octdirac/matrix.hpp"
#include "octdirac/octonion.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace octdirac {

/// Residual tolerance accepted for floating-point transforms (exponentiated
/// derivations); exact transforms must have exactly zero residuals.
inline constexpr double automorphism_tolerance = 1e-9;

/// A candidate automorphism of the imaginary-unit algebra: a 7x7 transform,
/// exact or floating, fixing e_0.
struct UnitTransform {
    std::variant<ExactMatrix, FloatMatrix> matrix;

    bool is_exact() const { return std::holds_alternative<ExactMatrix>(matrix); }
    const ExactMatrix& exact() const { return std::get<ExactMatrix>(matrix); }
    const FloatMatrix& approx() const { return std::get<FloatMatrix>(matrix); }
};

/// Max-abs residuals of the two automorphism conditions: orthogonality
/// G G^T = delta, and structure preservation G_MA G_NB C_ABC = C_MNS G_SC.
template <typename T>
struct AutomorphismResiduals {
    T orthogonality{};
    T structure{};
};

template <typename T>
AutomorphismResiduals<T> automorphism_residuals(const Matrix<T>& g, const StructureTensor& c) {
    if (g.rows() != 7 || g.cols() != 7)
        throw DimensionMismatch("unit transform must be 7x7");
    AutomorphismResiduals<T> res;
    auto bump = [](T& slot, T value) {
        if (value < T{}) value = -value;
        if (value > slot) slot = value;
    };

    for (std::size_t m = 0; m < 7; ++m)
        for (std::size_t n = 0; n < 7; ++n) {
            T acc{};
            for (std::size_t k = 0; k < 7; ++k) acc += g(m, k) * g(n, k);
            if (m == n) acc -= T{1};
            bump(res.orthogonality, acc);
        }

    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n)
            for (int k = 1; k <= 7; ++k) {
                T lhs{};
                for (const auto& [a, b, cc, sign] : c.nonzeros()) {
                    if (cc != k) continue;
                    T term = g(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(a - 1)) *
                             g(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(b - 1));
                    lhs += sign > 0 ? term : -term;
                }
                T rhs{};
                for (int s = 1; s <= 7; ++s) {
                    const int coeff = c.entry(m, n, s);
                    if (coeff == 0) continue;
                    T term = g(static_cast<std::size_t>(s - 1), static_cast<std::size_t>(k - 1));
                    rhs += coeff > 0 ? term : -term;
                }
                bump(res.structure, lhs - rhs);
            }
    return res;
}

/// Pass/fail verdict with both residuals rendered (exact rationals for exact
/// transforms, decimals for floating ones).
struct AutomorphismVerdict {
    bool pass = false;
    std::string orthogonality_residual;
    std::string structure_residual;
};

inline AutomorphismVerdict check_automorphism(const UnitTransform& g,
                                              const StructureTensor& c = StructureTensor::standard()) {
    AutomorphismVerdict v;
    if (g.is_exact()) {
        const auto res = automorphism_residuals(g.exact(), c);
        v.pass = res.orthogonality == 0 && res.structure == 0;
        v.orthogonality_residual = to_string(res.orthogonality);
        v.structure_residual = to_string(res.structure);
    } else {
        const auto res = automorphism_residuals(g.approx(), c);
        v.pass = res.orthogonality <= automorphism_tolerance &&
                 res.structure <= automorphism_tolerance;
        v.orthogonality_residual = std::to_string(res.orthogonality);
        v.structure_residual = std::to_string(res.structure);
    }
    return v;
}

/// An infinitesimal automorphism: antisymmetric 7x7 exact matrix satisfying
/// the linearized structure condition D_MA C_ANK + D_NA C_MAK = C_MNS D_SK.
/// Both invariants are checked at construction.
class Derivation {
public:
    explicit Derivation(ExactMatrix d, const StructureTensor& c = StructureTensor::standard())
        : d_(std::move(d)) {
        if (d_.rows() != 7 || d_.cols() != 7)
            throw DimensionMismatch("derivation must be 7x7");
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                if (d_(i, j) != -d_(j, i))
                    throw InvariantViolation("derivation is not antisymmetric at (" +
                                             std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                             ")");
        for (int m = 1; m <= 7; ++m)
            for (int n = 1; n <= 7; ++n)
                for (int k = 1; k <= 7; ++k) {
                    Rational lhs = 0;
                    for (int a = 1; a <= 7; ++a) {
                        lhs += at(m, a) * rat(c.entry(a, n, k));
                        lhs += at(n, a) * rat(c.entry(m, a, k));
                    }
                    Rational rhs = 0;
                    for (int s = 1; s <= 7; ++s) rhs += rat(c.entry(m, n, s)) * at(s, k);
                    if (lhs != rhs)
                        throw InvariantViolation(
                            "derivation violates the linearized structure condition at (" +
                            std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) +
                            ")");
                }
    }

    const ExactMatrix& matrix() const { return d_; }

private:
    Rational at(int i, int j) const {
        return d_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }

    ExactMatrix d_;
};

namespace detail {

// Unknown ordering for the 21 antisymmetric degrees of freedom: pairs (m,n)
// with m < n in lexicographic order; D(m,n) = x[pair], D(n,m) = -x[pair].
inline std::size_t antisym_index(int m, int n) {
    // m < n, both 1-based
    std::size_t idx = 0;
    for (int i = 1; i < m; ++i) idx += static_cast<std::size_t>(7 - i);
    return idx + static_cast<std::size_t>(n - m - 1);
}

inline void add_antisym_coeff(std::vector<Rational>& row, int i, int j, const Rational& coeff) {
    if (i == j || coeff == 0) return;
    if (i < j)
        row[antisym_index(i, j)] += coeff;
    else
        row[antisym_index(j, i)] -= coeff;
}

} // namespace detail

/// Exact basis of the derivation algebra of the structure tensor, computed as
/// the nullspace of the linearized automorphism condition on the 21 antisym-
/// metric degrees of freedom.  Basis vectors are normalized to integer
/// entries with positive first nonzero entry; expected dimension is 14.
inline std::vector<Derivation> derivation_space(const StructureTensor& c) {
    RowReducer red(21);
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n)
            for (int k = 1; k <= 7; ++k) {
                std::vector<Rational> row(21, Rational(0));
                for (int a = 1; a <= 7; ++a) {
                    detail::add_antisym_coeff(row, m, a, rat(c.entry(a, n, k)));
                    detail::add_antisym_coeff(row, n, a, rat(c.entry(m, a, k)));
                }
                for (int s = 1; s <= 7; ++s)
                    detail::add_antisym_coeff(row, s, k, rat(-c.entry(m, n, s)));
                red.insert(std::move(row));
            }

    std::vector<Derivation> basis;
    for (auto& v : red.nullspace_basis()) {
        v = detail::normalized_integer_vector(std::move(v));
        ExactMatrix d(7, 7);
        for (int m = 1; m <= 7; ++m)
            for (int n = m + 1; n <= 7; ++n) {
                const Rational& x = v[detail::antisym_index(m, n)];
                d(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(n - 1)) = x;
                d(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(m - 1)) = -x;
            }
        basis.emplace_back(std::move(d), c);
    }
    return basis;
}

/// Finite transform exp(t d).  Scaling-and-squaring handles any |t| up to
/// ~1e2 * ||d||; residuals of both automorphism conditions stay below 1e-9
/// for |t| <= 1 on the normalized basis derivations.
inline UnitTransform exponentiate(const Derivation& d, double t) {
    FloatMatrix a = to_float(d.matrix()) * t;
    return UnitTransform{expm(a)};
}

/// Applies e_M -> G_MN e_N with e_0 fixed; rejects transforms that fail
/// check_automorphism for their tolerance class.
template <typename T>
BasicOctonion<T> transform_units(const Matrix<T>& g, const BasicOctonion<T>& a,
                                 const StructureTensor& c = StructureTensor::standard()) {
    const auto res = automorphism_residuals(g, c);
    bool ok;
    if constexpr (std::is_same_v<T, Rational>)
        ok = res.orthogonality == 0 && res.structure == 0;
    else
        ok = res.orthogonality <= automorphism_tolerance && res.structure <= automorphism_tolerance;
    if (!ok) throw InvariantViolation("transform_units: matrix is not an accepted automorphism");

    BasicOctonion<T> out;
    out.coeffs[0] = a.coeffs[0];
    for (std::size_t n = 1; n <= 7; ++n) {
        T acc{};
        for (std::size_t m = 1; m <= 7; ++m) acc += g(m - 1, n - 1) * a.coeffs[m];
        out.coeffs[n] = acc;
    }
    return out;
}

} // namespace octdirac
