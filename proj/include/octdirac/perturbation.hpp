#pragma once

#include "octdirac/clifford.hpp"
#include "octdirac/linalg.hpp"
#include "octdirac/matrix.hpp"
#include "octdirac/octonion.hpp"

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace octdirac {

/// A 4x4 matrix with octonion entries.  Products are computed entrywise with
/// octonion multiplication; triple products are not associative and must be
/// parenthesized explicitly.
using OctonionMatrix = Matrix<Octonion>;

/// Seed of the first-order construction: a scalar-part matrix s_0, seven
/// imaginary-part matrices s_1..s_7 (all 4x4, entries bounded by 1 in
/// absolute value), and the smallness scale lambda in [0,1) that multiplies
/// them.
struct PerturbationSeed {
    ExactMatrix s0;
    std::array<ExactMatrix, 7> s_imag;
    Rational lambda;

    void validate() const {
        auto check = [](const ExactMatrix& m, const std::string& name) {
            if (m.rows() != 4 || m.cols() != 4)
                throw InvariantViolation("seed matrix " + name + " must be 4x4");
            if (max_abs(m) > 1)
                throw InvariantViolation("seed matrix " + name + " has an entry exceeding 1");
        };
        check(s0, "s0");
        for (std::size_t n = 0; n < 7; ++n) check(s_imag[n], "s" + std::to_string(n + 1));
        if (lambda < 0 || lambda >= 1)
            throw InvariantViolation("seed scale lambda must lie in [0,1)");
    }

    PerturbationSeed with_lambda(Rational l) const {
        PerturbationSeed s = *this;
        s.lambda = std::move(l);
        return s;
    }
};

namespace detail {

inline ExactMatrix matrix_commutator(const ExactMatrix& a, const ExactMatrix& b) {
    return a * b - b * a;
}

} // namespace detail

/// The four octonion Dirac symbols gamma_a = gbar_a + [l s_0, gbar_a] e_0 +
/// [l s_N, gbar_a] e_N over the real 4D base system.
inline std::array<OctonionMatrix, 4> build_octonion_ds(const PerturbationSeed& seed) {
    seed.validate();
    const CliffordSystem base = build_gamma4();
    std::array<OctonionMatrix, 4> out;
    for (std::size_t a = 0; a < 4; ++a) {
        const ExactMatrix& gbar = base.generators[a];
        ExactMatrix f0 = detail::matrix_commutator(ExactMatrix(seed.lambda * seed.s0), gbar);
        std::array<ExactMatrix, 7> fn;
        for (std::size_t n = 0; n < 7; ++n)
            fn[n] = detail::matrix_commutator(ExactMatrix(seed.lambda * seed.s_imag[n]), gbar);

        OctonionMatrix g(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Octonion& entry = g(i, j);
                entry.coeffs[0] = gbar(i, j) + f0(i, j);
                for (std::size_t n = 0; n < 7; ++n) entry.coeffs[n + 1] = fn[n](i, j);
            }
        out[a] = std::move(g);
    }
    return out;
}

/// Residuals of the 4D Clifford relation for octonion Dirac symbols:
/// R_ab = g_a g_b + g_b g_a - 2 g_ab E with metric diag(-1,1,1,1).
struct OctonionResidualTable {
    std::array<std::array<OctonionMatrix, 4>, 4> residual;

    Rational max_abs(std::size_t a, std::size_t b) const {
        Rational best = 0;
        for (const auto& entry : residual[a][b].entries()) {
            Rational v = max_abs_coeff(entry);
            if (v > best) best = v;
        }
        return best;
    }

    Rational max_abs_overall() const {
        Rational best = 0;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) {
                Rational v = max_abs(a, b);
                if (v > best) best = v;
            }
        return best;
    }
};

inline OctonionResidualTable clifford_residual(const std::array<OctonionMatrix, 4>& gammas) {
    static const std::array<Rational, 4> metric = {-1, 1, 1, 1};
    OctonionMatrix unit(4, 4);
    for (std::size_t i = 0; i < 4; ++i) unit(i, i) = Octonion::scalar(1);

    OctonionResidualTable table;
    // The residual is symmetric in (a,b); compute the upper triangle.
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a; b < 4; ++b) {
            OctonionMatrix r = gammas[a] * gammas[b] + gammas[b] * gammas[a];
            if (a == b) r -= unit * Octonion::scalar(2 * metric[a]);
            if (a != b) table.residual[b][a] = r;
            table.residual[a][b] = std::move(r);
        }
    return table;
}

namespace detail {

// Exact weights turning three evaluations of a degree-<=2 polynomial at
// distinct rational points into its coefficients: row k of the inverse
// Vandermonde matrix gives the weights of coefficient k.
inline std::array<std::array<Rational, 3>, 3> vandermonde3_weights(
    const std::array<Rational, 3>& lambdas) {
    if (lambdas[0] == lambdas[1] || lambdas[0] == lambdas[2] || lambdas[1] == lambdas[2])
        throw InvariantViolation("polynomial extraction needs three distinct lambda values");
    ExactMatrix v(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        v(i, 0) = 1;
        v(i, 1) = lambdas[i];
        v(i, 2) = lambdas[i] * lambdas[i];
    }
    const ExactMatrix w = inverse(v);
    std::array<std::array<Rational, 3>, 3> out;
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i) out[k][i] = w(k, i);
    return out;
}

} // namespace detail

/// Coefficients of the residual as an exact polynomial c0 + c1 l + c2 l^2 in
/// the seed scale, one coefficient triple per generator pair.  The residual
/// of the first-order construction is exactly quadratic, so three exact
/// evaluations determine it.
struct OctonionResidualPolynomial {
    std::array<std::array<std::array<OctonionMatrix, 3>, 4>, 4> coeff;

    Rational coeff_max_abs(std::size_t a, std::size_t b, std::size_t k) const {
        Rational best = 0;
        for (const auto& entry : coeff[a][b][k].entries()) {
            Rational v = max_abs_coeff(entry);
            if (v > best) best = v;
        }
        return best;
    }

    bool degree01_vanish() const {
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
                if (coeff_max_abs(a, b, 0) != 0 || coeff_max_abs(a, b, 1) != 0) return false;
        return true;
    }

    bool quadratic_witness() const {
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
                if (coeff_max_abs(a, b, 2) != 0) return true;
        return false;
    }
};

inline OctonionResidualPolynomial octonion_residual_polynomial(
    const PerturbationSeed& seed, const std::array<Rational, 3>& lambdas) {
    const auto weights = detail::vandermonde3_weights(lambdas);
    std::array<OctonionResidualTable, 3> tables;
    for (std::size_t i = 0; i < 3; ++i)
        tables[i] = clifford_residual(build_octonion_ds(seed.with_lambda(lambdas[i])));

    OctonionResidualPolynomial poly;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t k = 0; k < 3; ++k) {
                OctonionMatrix acc(4, 4);
                for (std::size_t i = 0; i < 3; ++i)
                    acc += tables[i].residual[a][b] * Octonion::scalar(weights[k][i]);
                poly.coeff[a][b][k] = std::move(acc);
            }
    return poly;
}

/// The 32x32 perturbation matrix s = l (s_0 E + s_N I_N), with the 4x4 seed
/// blocks acting on the first tensor slot.
inline ExactMatrix perturbation_matrix(const PerturbationSeed& seed,
                                       const UnitSystem& units) {
    seed.validate();
    const ExactMatrix e8 = ExactMatrix::identity(8);
    ExactMatrix s = kron(seed.s0, e8);
    for (std::size_t n = 0; n < 7; ++n) s += kron(seed.s_imag[n], e8) * units.units[n];
    return seed.lambda * s;
}

/// The eleven first-order generators gamma_A = gbar_A + [s, gbar_A] as exact
/// 32x32 matrices.
inline std::vector<ExactMatrix> build_perturbed_gamma11(const PerturbationSeed& seed,
                                                        const CliffordSystem& base,
                                                        const UnitSystem& units) {
    const ExactMatrix s = perturbation_matrix(seed, units);
    std::vector<ExactMatrix> out;
    out.reserve(base.generators.size());
    for (const auto& gbar : base.generators)
        out.push_back(gbar + detail::matrix_commutator(s, gbar));
    return out;
}

inline std::vector<ExactMatrix> build_perturbed_gamma11(const PerturbationSeed& seed) {
    return build_perturbed_gamma11(seed, build_gamma11(), build_unit_system());
}

/// Residual coefficients of the 32x32 construction, pair (A,B) -> (c0,c1,c2).
struct MatrixResidualPolynomial {
    std::size_t count = 0;
    std::vector<std::array<ExactMatrix, 3>> coeff;  // indexed A * count + B

    const std::array<ExactMatrix, 3>& at(std::size_t a, std::size_t b) const {
        return coeff[a * count + b];
    }

    bool degree01_vanish() const {
        for (const auto& c : coeff)
            if (!c[0].is_zero() || !c[1].is_zero()) return false;
        return true;
    }

    bool quadratic_witness() const {
        for (const auto& c : coeff)
            if (!c[2].is_zero()) return true;
        return false;
    }
};

inline MatrixResidualPolynomial gamma11_residual_polynomial(const PerturbationSeed& seed,
                                                            const std::array<Rational, 3>& lambdas,
                                                            const CliffordSystem& base,
                                                            const UnitSystem& units) {
    const auto weights = detail::vandermonde3_weights(lambdas);
    const std::size_t count = base.generators.size();
    const std::size_t n = base.size();
    const ExactMatrix e = ExactMatrix::identity(n);

    std::array<std::vector<ExactMatrix>, 3> residuals;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto gammas = build_perturbed_gamma11(seed.with_lambda(lambdas[i]), base, units);
        residuals[i].reserve(count * count);
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = 0; b < count; ++b) {
                ExactMatrix r = gammas[a] * gammas[b] + gammas[b] * gammas[a];
                if (a == b) r -= Rational(2 * base.metric[a]) * e;
                residuals[i].push_back(std::move(r));
            }
    }

    MatrixResidualPolynomial poly;
    poly.count = count;
    poly.coeff.reserve(count * count);
    for (std::size_t idx = 0; idx < count * count; ++idx) {
        std::array<ExactMatrix, 3> c{ExactMatrix(n, n), ExactMatrix(n, n), ExactMatrix(n, n)};
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t i = 0; i < 3; ++i) c[k] += weights[k][i] * residuals[i][idx];
        poly.coeff.push_back(std::move(c));
    }
    return poly;
}

/// Ordered transition amplitudes A_1, A_2, ...; folds need at least one.
using AmplitudeChain = std::vector<Octonion>;

/// Left-parenthesized product ((A1 A2) A3) ...
inline Octonion fold_left(const AmplitudeChain& chain) {
    if (chain.empty()) throw InvariantViolation("amplitude chain must contain at least one element");
    Octonion acc = chain.front();
    for (std::size_t i = 1; i < chain.size(); ++i) acc = mul(acc, chain[i]);
    return acc;
}

/// Right-parenthesized product (A1 (A2 (A3 ...))).
inline Octonion fold_right(const AmplitudeChain& chain) {
    if (chain.empty()) throw InvariantViolation("amplitude chain must contain at least one element");
    Octonion acc = chain.back();
    for (std::size_t i = chain.size() - 1; i-- > 0;) acc = mul(chain[i], acc);
    return acc;
}

/// The fold defect: amplitude difference between the two parenthesizations
/// and the gap between their squared norms (always zero, by the composition
/// property, even when the amplitudes differ).
struct FoldDefect {
    Octonion difference;
    Rational norm_gap;
};

inline FoldDefect fold_defect(const AmplitudeChain& chain) {
    const Octonion left = fold_left(chain);
    const Octonion right = fold_right(chain);
    return FoldDefect{left - right, norm_sq(left) - norm_sq(right)};
}

} // namespace octdirac
