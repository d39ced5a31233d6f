#pragma once

#include "octdirac/errors.hpp"
#include "octdirac/matrix.hpp"
#include "octdirac/pauli.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace octdirac {

/// One declarative record of the generator tables: a 32x32 matrix given as a
/// global sign times a three-slot tensor product (4x4, 4x4, 2x2 factors).
struct GeneratorRecord {
    std::string kind;   // "gamma" or "unit"
    std::string name;   // g0..g10, I1..I7
    int sign = 1;       // +1 or -1
    std::array<std::string, 3> factors;
    int metric = 0;     // +1/-1 for gamma records, 0 for units

    ExactMatrix realize() const {
        ExactMatrix m = kron(pauli::factor(factors[0], 4), pauli::factor(factors[1], 4),
                             pauli::factor(factors[2], 2));
        return sign < 0 ? -m : m;
    }
};

struct GeneratorTables {
    std::vector<GeneratorRecord> gammas;
    std::vector<GeneratorRecord> units;
};

/// Default table text; identical content ships as data/dirac_tables.txt.
inline constexpr std::string_view default_generator_tables_text = R"(# Generator tables: the eleven metric generators (gamma records) and the
# seven imaginary units (unit records), each a signed three-slot tensor
# product of real Pauli factors.
#
#   gamma <name> <sign> <slot1> <slot2> <slot3> <metric>
#   unit  <name> <sign> <slot1> <slot2> <slot3>
#
# Slots 1 and 2 are 4x4, slot 3 is 2x2.  Factor names use rho-sigma notation
# with factors of i absorbed into the real matrix (see pauli.hpp).

gamma g0  - irho2sigma1 E4          E2      -1
gamma g1  + rho1        E4          E2      +1
gamma g2  + rho2sigma2  E4          E2      +1
gamma g3  + rho3        E4          E2      +1
gamma g4  + irho2sigma3 irho2sigma1 sigma1  +1
gamma g5  + irho2sigma3 isigma2     sigma1  +1
gamma g6  + irho2sigma3 irho2sigma3 sigma1  +1
gamma g7  + irho2sigma3 irho1sigma2 sigma3  +1
gamma g8  + irho2sigma3 irho2       sigma3  +1
gamma g9  + irho2sigma3 irho3sigma2 sigma3  +1
gamma g10 + irho2sigma3 E4          isigma2 +1

unit  I1  + E4          irho2sigma1 sigma1
unit  I2  + E4          isigma2     sigma1
unit  I3  + E4          irho2sigma3 sigma1
unit  I4  + E4          irho1sigma2 sigma3
unit  I5  + E4          irho2       sigma3
unit  I6  + E4          irho3sigma2 sigma3
unit  I7  + E4          E4          isigma2
)";

inline GeneratorTables parse_generator_tables(std::string_view text) {
    GeneratorTables tables;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string kind;
        if (!(fields >> kind)) continue;

        GeneratorRecord rec;
        rec.kind = kind;
        std::string sign;
        if (!(fields >> rec.name >> sign >> rec.factors[0] >> rec.factors[1] >> rec.factors[2]))
            throw ParseError("generator tables line " + std::to_string(lineno) +
                             ": expected <kind> <name> <sign> <f1> <f2> <f3>");
        if (sign == "+")
            rec.sign = 1;
        else if (sign == "-")
            rec.sign = -1;
        else
            throw ParseError("generator tables line " + std::to_string(lineno) +
                             ": sign must be + or -");

        if (kind == "gamma") {
            std::string metric;
            if (!(fields >> metric) || (metric != "+1" && metric != "-1"))
                throw ParseError("generator tables line " + std::to_string(lineno) +
                                 ": gamma record needs metric +1 or -1");
            rec.metric = metric == "+1" ? 1 : -1;
            tables.gammas.push_back(std::move(rec));
        } else if (kind == "unit") {
            tables.units.push_back(std::move(rec));
        } else {
            throw ParseError("generator tables line " + std::to_string(lineno) +
                             ": unknown record kind '" + kind + "'");
        }
        std::string extra;
        if (fields >> extra)
            throw ParseError("generator tables line " + std::to_string(lineno) +
                             ": trailing field '" + extra + "'");
    }
    if (tables.gammas.size() != 11)
        throw ParseError("generator tables: expected 11 gamma records, found " +
                         std::to_string(tables.gammas.size()));
    if (tables.units.size() != 7)
        throw ParseError("generator tables: expected 7 unit records, found " +
                         std::to_string(tables.units.size()));
    return tables;
}

inline GeneratorTables load_generator_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open generator tables file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_generator_tables(buf.str());
}

inline const GeneratorTables& default_generator_tables() {
    static const GeneratorTables tables = parse_generator_tables(default_generator_tables_text);
    return tables;
}

/// Test hook: replaces one slot factor of the named record.
inline GeneratorTables with_corrupted_factor(GeneratorTables tables, const std::string& name,
                                             std::size_t slot, const std::string& factor) {
    if (slot > 2) throw ParseError("factor slot must be 0, 1, or 2");
    for (auto* list : {&tables.gammas, &tables.units})
        for (auto& rec : *list)
            if (rec.name == name) {
                rec.factors[slot] = factor;
                return tables;
            }
    throw ParseError("no generator record named '" + name + "'");
}

} // namespace octdirac
