#pragma once

#include "octdirac/errors.hpp"
#include "octdirac/rational.hpp"

#include <array>
#include <cstddef>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace octdirac {

/// One oriented triple (M,N,K) with C_MNK = +1; indices run 1..7.
struct Triple {
    int m = 0, n = 0, k = 0;
    bool operator==(const Triple&) const = default;
};

/// The seven triples defining the imaginary-unit multiplication table.
inline constexpr std::array<Triple, 7> standard_triples{{
    {1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {1, 7, 6}, {2, 5, 7}, {3, 6, 5},
}};

namespace detail {

inline std::string triple_name(const Triple& t) {
    return "(" + std::to_string(t.m) + "," + std::to_string(t.n) + "," + std::to_string(t.k) + ")";
}

} // namespace detail

/// The completely antisymmetric tensor C_MNK on indices 1..7, generated from
/// seven oriented triples and validated structurally: entries in {-1,0,+1},
/// full antisymmetry, exactly seven positive triples, and every unordered
/// index pair covered by exactly one triple.  Validation failures name the
/// offending triple or pair.
class StructureTensor {
public:
    static StructureTensor from_triples(std::span<const Triple> triples) {
        StructureTensor c;
        c.triples_.assign(triples.begin(), triples.end());
        for (const Triple& t : triples) {
            for (int idx : {t.m, t.n, t.k})
                if (idx < 1 || idx > 7)
                    throw InvariantViolation("structure triple " + detail::triple_name(t) +
                                             " has an index outside 1..7");
            if (t.m == t.n || t.n == t.k || t.m == t.k)
                throw InvariantViolation("structure triple " + detail::triple_name(t) +
                                         " repeats an index");
            c.assign_antisymmetrized(t);
        }
        c.validate();
        return c;
    }

    static const StructureTensor& standard() {
        static const StructureTensor c = from_triples(standard_triples);
        return c;
    }

    int entry(int m, int n, int k) const { return data_[index(m, n, k)]; }

    /// All 42 nonzero (m, n, k, sign) entries.
    const std::vector<std::array<int, 4>>& nonzeros() const { return nonzeros_; }

    const std::vector<Triple>& triples() const { return triples_; }

    /// Structural validation; throws InvariantViolation naming the offender.
    void validate() const {
        for (int m = 1; m <= 7; ++m)
            for (int n = 1; n <= 7; ++n)
                for (int k = 1; k <= 7; ++k) {
                    const int v = entry(m, n, k);
                    if (v < -1 || v > 1)
                        throw InvariantViolation("structure entry (" + std::to_string(m) + "," +
                                                 std::to_string(n) + "," + std::to_string(k) +
                                                 ") outside {-1,0,1}");
                    if (entry(n, m, k) != -v || entry(m, k, n) != -v)
                        throw InvariantViolation("structure tensor not antisymmetric at (" +
                                                 std::to_string(m) + "," + std::to_string(n) + "," +
                                                 std::to_string(k) + ")");
                }

        int positive_triples = 0;
        for (int m = 1; m <= 7; ++m)
            for (int n = m + 1; n <= 7; ++n)
                for (int k = n + 1; k <= 7; ++k)
                    if (entry(m, n, k) != 0) ++positive_triples;
        if (positive_triples != 7)
            throw InvariantViolation("structure tensor has " + std::to_string(positive_triples) +
                                     " nonzero triples, expected 7");

        // Fano coverage: each unordered pair must sit in exactly one triple.
        // Anomalies are gathered into one message so a corrupted triple is
        // named alongside the pairs it breaks.
        std::string anomalies;
        for (int m = 1; m <= 7; ++m)
            for (int n = m + 1; n <= 7; ++n) {
                std::vector<Triple> hits;
                for (const Triple& t : triples_) {
                    const bool has_m = t.m == m || t.n == m || t.k == m;
                    const bool has_n = t.m == n || t.n == n || t.k == n;
                    if (has_m && has_n) hits.push_back(t);
                }
                if (hits.size() == 1) continue;
                anomalies += " pair {" + std::to_string(m) + "," + std::to_string(n) +
                             "} covered by " + std::to_string(hits.size()) + " triples";
                if (!hits.empty()) {
                    anomalies += " [";
                    for (std::size_t i = 0; i < hits.size(); ++i)
                        anomalies += (i ? " " : "") + detail::triple_name(hits[i]);
                    anomalies += "]";
                }
                anomalies += ";";
            }
        if (!anomalies.empty())
            throw InvariantViolation("structure tensor pair cover broken:" + anomalies);
    }

private:
    StructureTensor() { data_.fill(0); }

    static std::size_t index(int m, int n, int k) {
        return static_cast<std::size_t>((m - 1) * 49 + (n - 1) * 7 + (k - 1));
    }

    void assign_antisymmetrized(const Triple& t) {
        const int idx[3] = {t.m, t.n, t.k};
        const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        const int signs[6] = {1, 1, 1, -1, -1, -1};
        for (int p = 0; p < 6; ++p) {
            const std::size_t pos = index(idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]]);
            if (data_[pos] != 0)
                throw InvariantViolation("structure triple " + detail::triple_name(t) +
                                         " overlaps an earlier triple");
            data_[pos] = static_cast<signed char>(signs[p]);
            nonzeros_.push_back({idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]], signs[p]});
        }
    }

    std::array<signed char, 343> data_{};
    std::vector<std::array<int, 4>> nonzeros_;
    std::vector<Triple> triples_;
};

/// An octonion with coefficients over the basis e_0..e_7; e_0 is the unit.
template <typename T>
struct BasicOctonion {
    std::array<T, 8> coeffs{};

    BasicOctonion() = default;
    explicit BasicOctonion(std::array<T, 8> c) : coeffs(std::move(c)) {}

    static BasicOctonion unit(int k) {
        if (k < 0 || k > 7) throw InvariantViolation("octonion basis index outside 0..7");
        BasicOctonion o;
        o.coeffs[static_cast<std::size_t>(k)] = T{1};
        return o;
    }

    static BasicOctonion scalar(const T& v) {
        BasicOctonion o;
        o.coeffs[0] = v;
        return o;
    }

    const T& operator[](std::size_t i) const { return coeffs[i]; }
    T& operator[](std::size_t i) { return coeffs[i]; }

    BasicOctonion& operator+=(const BasicOctonion& o) {
        for (std::size_t i = 0; i < 8; ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    BasicOctonion& operator-=(const BasicOctonion& o) {
        for (std::size_t i = 0; i < 8; ++i) coeffs[i] -= o.coeffs[i];
        return *this;
    }
    BasicOctonion& operator*=(const T& s) {
        for (auto& c : coeffs) c = c * s;
        return *this;
    }

    friend BasicOctonion operator+(BasicOctonion a, const BasicOctonion& b) { return a += b; }
    friend BasicOctonion operator-(BasicOctonion a, const BasicOctonion& b) { return a -= b; }
    friend BasicOctonion operator*(BasicOctonion a, const T& s) { return a *= s; }
    friend BasicOctonion operator*(const T& s, BasicOctonion a) { return a *= s; }
    BasicOctonion operator-() const {
        BasicOctonion r = *this;
        for (auto& c : r.coeffs) c = -c;
        return r;
    }

    bool operator==(const BasicOctonion&) const = default;

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!(c == T{})) return false;
        return true;
    }
};

using Octonion = BasicOctonion<Rational>;
using OctonionF = BasicOctonion<double>;

/// Bilinear product from the structure tensor: e_M e_N = -delta_MN e_0 +
/// C_MNK e_K with e_0 central and unital.
template <typename T>
BasicOctonion<T> mul(const StructureTensor& c, const BasicOctonion<T>& a,
                     const BasicOctonion<T>& b) {
    BasicOctonion<T> r;
    r.coeffs[0] = a.coeffs[0] * b.coeffs[0];
    for (std::size_t m = 1; m <= 7; ++m) r.coeffs[0] -= a.coeffs[m] * b.coeffs[m];
    for (std::size_t k = 1; k <= 7; ++k)
        r.coeffs[k] = a.coeffs[0] * b.coeffs[k] + a.coeffs[k] * b.coeffs[0];
    for (const auto& [m, n, k, sign] : c.nonzeros()) {
        const T term = a.coeffs[static_cast<std::size_t>(m)] * b.coeffs[static_cast<std::size_t>(n)];
        if (sign > 0)
            r.coeffs[static_cast<std::size_t>(k)] += term;
        else
            r.coeffs[static_cast<std::size_t>(k)] -= term;
    }
    return r;
}

template <typename T>
BasicOctonion<T> mul(const BasicOctonion<T>& a, const BasicOctonion<T>& b) {
    return mul(StructureTensor::standard(), a, b);
}

template <typename T>
BasicOctonion<T> operator*(const BasicOctonion<T>& a, const BasicOctonion<T>& b) {
    return mul(a, b);
}

template <typename T>
BasicOctonion<T> conj(const BasicOctonion<T>& a) {
    BasicOctonion<T> r = a;
    for (std::size_t i = 1; i < 8; ++i) r.coeffs[i] = -r.coeffs[i];
    return r;
}

template <typename T>
T norm_sq(const BasicOctonion<T>& a) {
    T s{};
    for (const auto& c : a.coeffs) s += c * c;
    return s;
}

template <typename T>
BasicOctonion<T> inverse(const BasicOctonion<T>& a) {
    const T n = norm_sq(a);
    if (n == T{}) throw DivisionByZero("inverse of the zero octonion");
    BasicOctonion<T> r = conj(a);
    for (auto& c : r.coeffs) c = c / n;
    return r;
}

template <typename T>
BasicOctonion<T> commutator(const BasicOctonion<T>& a, const BasicOctonion<T>& b) {
    return mul(a, b) - mul(b, a);
}

template <typename T>
BasicOctonion<T> commutator(const StructureTensor& c, const BasicOctonion<T>& a,
                            const BasicOctonion<T>& b) {
    return mul(c, a, b) - mul(c, b, a);
}

/// Associator with the conventional 1/2 factor: ((ab)c - a(bc)) / 2.
template <typename T>
BasicOctonion<T> associator(const BasicOctonion<T>& a, const BasicOctonion<T>& b,
                            const BasicOctonion<T>& c) {
    BasicOctonion<T> d = mul(mul(a, b), c) - mul(a, mul(b, c));
    return d * (T{1} / T{2});
}

template <typename T>
BasicOctonion<T> associator(const StructureTensor& ct, const BasicOctonion<T>& a,
                            const BasicOctonion<T>& b, const BasicOctonion<T>& c) {
    BasicOctonion<T> d = mul(ct, mul(ct, a, b), c) - mul(ct, a, mul(ct, b, c));
    return d * (T{1} / T{2});
}

inline Rational max_abs_coeff(const Octonion& a) {
    Rational best = 0;
    for (const auto& c : a.coeffs) {
        Rational v = abs(c);
        if (v > best) best = v;
    }
    return best;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const BasicOctonion<T>& a) {
    os << "(";
    for (std::size_t i = 0; i < 8; ++i) {
        if (i) os << ",";
        os << a.coeffs[i];
    }
    return os << ")";
}

/// Human-readable rendering, e.g. "1 - 2*e3 + 1/2*e7"; "0" for zero.
inline std::string to_string(const Octonion& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < 8; ++i) {
        const Rational& c = a.coeffs[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const Rational mag = abs(c);
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "e" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace octdirac
