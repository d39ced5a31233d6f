#pragma once

#include "octdirac/errors.hpp"
#include "octdirac/g2.hpp"
#include "octdirac/matrix.hpp"
#include "octdirac/octonion.hpp"
#include "octdirac/perturbation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace octdirac {

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
inline Rational parse_rational(const std::string& token) {
    const auto slash = token.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(token));
        const BigInt num(token.substr(0, slash));
        const BigInt den(token.substr(slash + 1));
        if (den == 0) throw ParseError("rational '" + token + "' has zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + token + "'");
    }
}

inline bool looks_like_decimal(const std::string& token) {
    return token.find('.') != std::string::npos || token.find('e') != std::string::npos ||
           token.find('E') != std::string::npos;
}

namespace detail {

inline std::vector<std::string> tokenize_file(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
    }
    return tokens;
}

inline std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    return in;
}

} // namespace detail

/// Reads a rows x cols matrix of whitespace-separated row-major entries.
/// Entries are rationals ("3", "-1/2") for an exact matrix; if any entry is
/// written as a decimal the whole matrix is read as floating point.
inline UnitTransform parse_transform(std::istream& in, std::size_t rows, std::size_t cols) {
    const auto tokens = detail::tokenize_file(in);
    if (tokens.size() != rows * cols)
        throw ParseError("expected " + std::to_string(rows * cols) + " matrix entries, found " +
                         std::to_string(tokens.size()));
    bool any_decimal = false;
    for (const auto& t : tokens)
        if (looks_like_decimal(t)) any_decimal = true;

    if (any_decimal) {
        FloatMatrix m(rows, cols);
        for (std::size_t k = 0; k < tokens.size(); ++k) {
            try {
                std::size_t used = 0;
                m(k / cols, k % cols) = std::stod(tokens[k], &used);
                if (used != tokens[k].size()) throw ParseError("");
            } catch (const std::exception&) {
                throw ParseError("malformed number '" + tokens[k] + "'");
            }
        }
        for (double v : m.entries())
            if (!std::isfinite(v)) throw ParseError("matrix file holds a non-finite entry");
        return UnitTransform{std::move(m)};
    }

    ExactMatrix m(rows, cols);
    for (std::size_t k = 0; k < tokens.size(); ++k) m(k / cols, k % cols) = parse_rational(tokens[k]);
    return UnitTransform{std::move(m)};
}

inline UnitTransform load_transform(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return parse_transform(in, 7, 7);
}

/// Seed file: 128 rational entries, the 4x4 blocks s0, s1, ..., s7 in row-
/// major order.  The scale lambda is supplied separately.
inline PerturbationSeed parse_seed(std::istream& in, Rational lambda) {
    const auto tokens = detail::tokenize_file(in);
    if (tokens.size() != 128)
        throw ParseError("seed file must hold 128 entries (8 blocks of 4x4), found " +
                         std::to_string(tokens.size()));
    PerturbationSeed seed;
    seed.lambda = std::move(lambda);
    auto read_block = [&](std::size_t block) {
        ExactMatrix m(4, 4);
        for (std::size_t k = 0; k < 16; ++k)
            m(k / 4, k % 4) = parse_rational(tokens[block * 16 + k]);
        return m;
    };
    seed.s0 = read_block(0);
    for (std::size_t n = 0; n < 7; ++n) seed.s_imag[n] = read_block(n + 1);
    seed.validate();
    return seed;
}

inline PerturbationSeed load_seed(const std::string& path, Rational lambda) {
    auto in = detail::open_or_throw(path);
    return parse_seed(in, std::move(lambda));
}

/// Chain file: one octonion per non-comment line, eight rational coefficients
/// (e_0 first).
inline AmplitudeChain parse_chain(std::istream& in) {
    AmplitudeChain chain;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() != 8)
            throw ParseError("chain line " + std::to_string(lineno) +
                             ": expected 8 coefficients, found " + std::to_string(tokens.size()));
        Octonion o;
        for (std::size_t i = 0; i < 8; ++i) o.coeffs[i] = parse_rational(tokens[i]);
        chain.push_back(std::move(o));
    }
    if (chain.empty()) throw ParseError("chain file holds no amplitudes");
    return chain;
}

inline AmplitudeChain load_chain(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return parse_chain(in);
}

} // namespace octdirac
