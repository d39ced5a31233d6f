#pragma once

#include "octdirac/errors.hpp"
#include "octdirac/matrix.hpp"

#include <string>
#include <string_view>

namespace octdirac::pauli {

inline ExactMatrix e2() { return ExactMatrix::identity(2); }
inline ExactMatrix e4() { return ExactMatrix::identity(4); }

inline ExactMatrix sigma1() { return {{0, 1}, {1, 0}}; }
inline ExactMatrix sigma3() { return {{1, 0}, {0, -1}}; }

/// The real matrix i*sigma2 = [[0,1],[-1,0]]; squares to -E2.
inline ExactMatrix i_sigma2() { return {{0, 1}, {-1, 0}}; }

namespace detail {

// Real content of one Pauli factor: sigma_a = i^power * real part.  sigma2
// itself is imaginary, so it is carried as i^3 * (i*sigma2).
struct RealFactor {
    ExactMatrix real;
    int i_power = 0;
};

inline RealFactor pauli_factor(int index) {
    switch (index) {
        case 0: return {e2(), 0};
        case 1: return {sigma1(), 0};
        case 2: return {i_sigma2(), 3};
        case 3: return {sigma3(), 0};
    }
    throw ParseError("pauli index outside 0..3");
}

struct FactorName {
    bool i_prefix = false;
    int rho = 0;    // 0 = absent
    int sigma = 0;  // 0 = absent
};

inline FactorName parse_factor_name(std::string_view name) {
    FactorName f;
    std::string_view rest = name;
    if (rest.starts_with("i")) {
        f.i_prefix = true;
        rest.remove_prefix(1);
    }
    auto take_index = [&](std::string_view keyword) -> int {
        if (!rest.starts_with(keyword)) return 0;
        rest.remove_prefix(keyword.size());
        if (rest.empty() || rest.front() < '1' || rest.front() > '3')
            throw ParseError("factor '" + std::string(name) + "': expected index 1..3 after '" +
                             std::string(keyword) + "'");
        int idx = rest.front() - '0';
        rest.remove_prefix(1);
        return idx;
    };
    f.rho = take_index("rho");
    f.sigma = take_index("sigma");
    if (!rest.empty() || (f.rho == 0 && f.sigma == 0))
        throw ParseError("unknown tensor factor name '" + std::string(name) + "'");
    return f;
}

} // namespace detail

/// Real 4x4 matrix named in rho-sigma notation: rho_a acts on the first 2x2
/// slot, sigma_b on the second, and any factors of i are absorbed so that the
/// result is real ("irho2sigma1" = i * rho2 sigma1, "E4" = identity).  Names
/// whose value would be imaginary are rejected.
inline ExactMatrix factor_4x4(std::string_view name) {
    if (name == "E4") return e4();
    const auto f = detail::parse_factor_name(name);
    const auto rho = detail::pauli_factor(f.rho);
    const auto sigma = detail::pauli_factor(f.sigma);
    const int power = (f.i_prefix ? 1 : 0) + rho.i_power + sigma.i_power;
    ExactMatrix m = kron(rho.real, sigma.real);
    switch (power % 4) {
        case 0: return m;
        case 2: return -m;
        default:
            throw ParseError("factor '" + std::string(name) + "' names an imaginary matrix");
    }
}

/// Real 2x2 factor: "E2", "sigma1", "sigma3", "isigma2".
inline ExactMatrix factor_2x2(std::string_view name) {
    if (name == "E2") return e2();
    const auto f = detail::parse_factor_name(name);
    if (f.rho != 0)
        throw ParseError("factor '" + std::string(name) + "' uses rho in a 2x2 slot");
    const auto sigma = detail::pauli_factor(f.sigma);
    const int power = (f.i_prefix ? 1 : 0) + sigma.i_power;
    switch (power % 4) {
        case 0: return sigma.real;
        case 2: return -sigma.real;
        default:
            throw ParseError("factor '" + std::string(name) + "' names an imaginary matrix");
    }
}

inline ExactMatrix factor(std::string_view name, std::size_t size) {
    if (size == 2) return factor_2x2(name);
    if (size == 4) return factor_4x4(name);
    throw ParseError("tensor slots are 2x2 or 4x4");
}

} // namespace octdirac::pauli
