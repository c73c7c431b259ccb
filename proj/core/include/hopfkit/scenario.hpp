#pragma once

#include "hopfkit/weyl.hpp"

namespace hopfkit {

/// Command-line overrides applied on top of a scenario's own options.
struct Overrides {
    std::optional<size_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<int> degree_bound;
    std::optional<int> conductor;
    bool keep_going = false;
};

struct AnalysisResult {
    std::string analysis;
    std::string status;  // "pass" | "fail" | "theorem_violation"
    /// Ordered key/value facts; part of the machine report.
    std::vector<std::pair<std::string, std::string>> facts;
    /// Label-formatted expansions (bases, witnesses); text report only.
    std::vector<std::string> details;
    double seconds = 0.0;  // text report only
};

struct Report {
    std::string scenario;
    std::string status;  // "pass" | "fail" | "theorem_violation"
    std::vector<AnalysisResult> analyses;

    /// 0 pass, 1 fail, 2 theorem_violation.
    int exit_code() const;
};

/// Parses and runs a scenario file, executing its analyses in order and
/// short-circuiting on the first failure unless keep_going is set.
/// Throws ParseError (with line/column) or ValidationError (naming the field).
Report run_scenario_file(const std::string& path, const Overrides& o);
/// Same, on in-memory scenario text.
Report run_scenario_text(const std::string& text, const std::string& name, const Overrides& o);

/// Runs only a seeded coideal scan against the scenario's algebra/coaction.
Report run_scan_file(const std::string& path, size_t samples, std::uint64_t seed,
                     const Overrides& o);

std::string format_report_text(const Report& r);
/// Versioned ("schema": 1) JSON; byte-identical across runs (no timings).
std::string format_report_machine(const Report& r);

}  // namespace hopfkit
