#pragma once

#include "octdirac/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace octdirac {

/// One sparse row of an exact linear system: sorted (column, value) pairs.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental exact Gaussian elimination over the rationals.
///
/// Rows are inserted one at a time and reduced against the pivot rows seen so
/// far (first-nonzero pivoting, leading coefficient normalized to 1).  The
/// accumulated pivot rows form a row-echelon basis of the span of everything
/// inserted, which serves three purposes here: rank, right-nullspace bases,
/// and the span-dimension computation for generator words.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }

    /// Reduces v in place; if a nonzero remainder survives, installs it as a
    /// new pivot row and returns its pivot column.  Returns nullopt when v
    /// already lies in the row span.
    std::optional<std::size_t> insert(std::vector<Rational> v) {
        std::size_t col = reduce(v);
        if (col == cols_) return std::nullopt;
        install(col, v);
        return col;
    }

    std::optional<std::size_t> insert_sparse(const SparseRow& row) {
        std::vector<Rational> v(cols_, Rational(0));
        for (const auto& [c, val] : row) v[c] += val;
        return insert(std::move(v));
    }

    /// Membership test without modifying the reducer.
    bool in_row_span(std::vector<Rational> v) const { return reduce(v) == cols_; }

    /// Basis of { x : r . x = 0 for every inserted row r }, one vector per
    /// free column, ordered by free-column index.  Exact back-substitution.
    std::vector<std::vector<Rational>> nullspace_basis() const {
        std::vector<std::vector<Rational>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (pivots_.count(f)) continue;
            std::vector<Rational> x(cols_, Rational(0));
            x[f] = 1;
            for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
                const std::size_t p = it->first;
                if (p > f) continue;
                Rational acc = 0;
                for (const auto& [c, val] : it->second)
                    if (c != p) acc += val * x[c];
                x[p] = -acc;
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

private:
    // Returns the pivot column of the remainder, or cols_ if v reduced to zero.
    std::size_t reduce(std::vector<Rational>& v) const {
        for (std::size_t col = 0; col < cols_; ++col) {
            if (v[col] == 0) continue;
            auto it = pivots_.find(col);
            if (it == pivots_.end()) return col;
            const Rational factor = v[col];
            for (const auto& [c, val] : it->second) v[c] -= factor * val;
        }
        return cols_;
    }

    void install(std::size_t col, const std::vector<Rational>& v) {
        const Rational lead = v[col];
        SparseRow row;
        for (std::size_t c = col; c < cols_; ++c)
            if (v[c] != 0) row.emplace_back(c, v[c] / lead);
        pivots_.emplace(col, std::move(row));
    }

    std::size_t cols_;
    std::map<std::size_t, SparseRow> pivots_;
};

inline std::size_t rank(const ExactMatrix& a) {
    RowReducer red(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<Rational> row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
        red.insert(std::move(row));
    }
    return red.rank();
}

namespace detail {

inline std::vector<ExactMatrix> columns_from_basis(std::vector<std::vector<Rational>> basis) {
    std::vector<ExactMatrix> out;
    out.reserve(basis.size());
    for (auto& v : basis) {
        ExactMatrix col(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = std::move(v[i]);
        out.push_back(std::move(col));
    }
    return out;
}

} // namespace detail

/// Exact basis of the right nullspace of a; empty iff a has full column rank.
inline std::vector<ExactMatrix> nullspace(const ExactMatrix& a) {
    RowReducer red(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<Rational> row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
        red.insert(std::move(row));
    }
    return detail::columns_from_basis(red.nullspace_basis());
}

/// Nullspace of a system given as sparse rows (used where materializing the
/// dense constraint matrix would be wasteful, e.g. intertwiner systems).
inline std::vector<std::vector<Rational>> nullspace_of_rows(std::size_t cols,
                                                            std::span<const SparseRow> rows) {
    RowReducer red(cols);
    for (const auto& r : rows) red.insert_sparse(r);
    return red.nullspace_basis();
}

/// Exact inverse via Gauss-Jordan on [a | E]; throws on singular input.
inline ExactMatrix inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = a.rows();
    ExactMatrix work = a;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col) == 0) ++pivot;
        if (pivot == n) throw InvariantViolation("matrix is singular; no inverse");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational lead = work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) /= lead;
            inv(col, j) /= lead;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work(i, col) == 0) continue;
            const Rational f = work(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= f * work(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

namespace detail {

// Rescales a rational vector to coprime integer entries with positive first
// nonzero entry; used to report reproducible nullspace bases.
inline std::vector<Rational> normalized_integer_vector(std::vector<Rational> v) {
    BigInt denom_lcm = 1;
    for (const auto& x : v)
        if (x != 0) denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(x));
    BigInt num_gcd = 0;
    for (auto& x : v) {
        x *= Rational(denom_lcm);
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(x));
    }
    if (num_gcd > 1)
        for (auto& x : v) x /= Rational(num_gcd);
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

// Canonical sparse form used to recognize scalar multiples of words already
// seen: nonzero entries scaled so the leading one is +1.
inline SparseRow canonical_form(const ExactMatrix& m) {
    SparseRow row;
    Rational lead = 0;
    const auto& data = m.entries();
    for (std::size_t k = 0; k < data.size(); ++k) {
        if (data[k] == 0) continue;
        if (lead == 0) lead = data[k];
        row.emplace_back(k, data[k] / lead);
    }
    return row;
}

} // namespace detail

/// Dimension of the real linear span of all products of the generators of
/// word length <= max_word_length (empty word included).  Breadth-first over
/// words with incremental exact Gaussian elimination; stops as soon as a
/// whole word length adds nothing or the span reaches rows^2.
inline std::size_t span_dimension(std::span<const ExactMatrix> generators,
                                  std::size_t max_word_length) {
    if (generators.empty()) throw DimensionMismatch("span_dimension needs at least one generator");
    const std::size_t n = generators.front().rows();
    for (const auto& g : generators)
        if (!g.is_square() || g.rows() != n)
            throw DimensionMismatch("span_dimension generators must be square and equally sized");

    const std::size_t full = n * n;
    RowReducer red(full);
    // Scalar multiples of already-processed words contribute nothing to the
    // span and nothing new downstream, so they are skipped outright.
    std::map<SparseRow, bool> seen;

    ExactMatrix id = ExactMatrix::identity(n);
    seen.emplace(detail::canonical_form(id), true);
    red.insert(id.vectorized());

    std::vector<ExactMatrix> frontier{std::move(id)};
    for (std::size_t len = 1; len <= max_word_length && !frontier.empty(); ++len) {
        std::vector<ExactMatrix> next;
        for (const auto& word : frontier) {
            for (const auto& g : generators) {
                ExactMatrix candidate = word * g;
                auto [it, fresh] = seen.emplace(detail::canonical_form(candidate), true);
                if (!fresh) continue;
                if (red.insert(candidate.vectorized())) {
                    if (red.rank() == full) return full;
                    next.push_back(std::move(candidate));
                }
            }
        }
        frontier = std::move(next);
    }
    return red.rank();
}

inline std::size_t span_dimension(std::span<const ExactMatrix> generators) {
    return span_dimension(generators, 2 * generators.size() + 1);
}

inline std::size_t span_dimension(const std::vector<ExactMatrix>& generators) {
    return span_dimension(std::span<const ExactMatrix>(generators));
}

inline std::size_t span_dimension(const std::vector<ExactMatrix>& generators,
                                  std::size_t max_word_length) {
    return span_dimension(std::span<const ExactMatrix>(generators), max_word_length);
}

/// Matrix exponential by scaling-and-squaring with a truncated Taylor series.
/// The input is scaled until its max-abs norm is below 1/2, the series is
/// summed until terms vanish at double precision, and the result is squared
/// back up.  Accurate to ~1e-13 relative for inputs of norm up to ~100.
inline FloatMatrix expm(const FloatMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("expm of non-square matrix");
    for (double v : a.entries())
        if (!std::isfinite(v)) throw InvariantViolation("expm input has non-finite entries");
    const std::size_t n = a.rows();

    int squarings = 0;
    double norm = max_abs(a) * static_cast<double>(n);
    while (norm > 0.5 && squarings < 64) {
        norm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    FloatMatrix t = a * scale;

    FloatMatrix result = FloatMatrix::identity(n);
    FloatMatrix term = FloatMatrix::identity(n);
    for (int k = 1; k <= 32; ++k) {
        term = term * t;
        term *= 1.0 / static_cast<double>(k);
        result += term;
        if (max_abs(term) < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

} // namespace octdirac
