#pragma once

#include <json.hpp>

#include <chrono>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace octdirac {

/// One named check inside a verification suite.  The value field carries the
/// quantity the check verified (a dimension, an exact residual, a witness),
/// rendered as an exact string.
struct CheckRecord {
    std::string id;
    bool pass = false;
    std::string value;
    double elapsed_seconds = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    /// Runs fn, which must return the value string, and records the check
    /// with its elapsed time; failures thrown as exceptions are recorded as
    /// failing checks carrying the message.
    template <typename Fn>
    void run_check(const std::string& id, Fn&& fn) {
        const auto start = std::chrono::steady_clock::now();
        CheckRecord rec;
        rec.id = id;
        try {
            rec.value = fn();
            rec.pass = true;
        } catch (const std::exception& e) {
            rec.value = e.what();
            rec.pass = false;
        }
        rec.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        checks.push_back(std::move(rec));
    }
};

/// Plain-text rendering: one line per check, timing in a trailing column so
/// that reports are byte-identical across runs apart from the timings.
inline void render_text(const VerificationReport& report, std::ostream& os) {
    os << "suite " << report.suite << "\n";
    for (const auto& c : report.checks) {
        os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.id;
        if (!c.value.empty()) os << ": " << c.value;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", c.elapsed_seconds);
        os << "  [" << buf << "s]";
        os << "\n";
    }
    os << (report.passed() ? "PASS" : "FAIL") << " " << report.suite << "\n";
}

inline nlohmann::json render_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"id", c.id},
                          {"status", c.pass ? "pass" : "fail"},
                          {"value", c.value},
                          {"elapsed_seconds", c.elapsed_seconds}});
    return {{"suite", report.suite},
            {"status", report.passed() ? "pass" : "fail"},
            {"checks", checks}};
}

} // namespace octdirac
