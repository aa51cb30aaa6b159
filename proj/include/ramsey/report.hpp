#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ramsey/search.hpp"

namespace ramsey {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kReportSchema = "ramsey-count/1";

enum class ReportFormat { json, csv };

/// Flat key/value problem document: t, r, p plus optional run settings.
/// Unknown keys are rejected.
struct ProblemFileConfig {
    std::optional<int> t;
    std::optional<int> r;
    std::optional<std::vector<int>> p;
    std::optional<int> n;
    std::optional<std::string> engine;
    std::optional<int> k_cutoff;
    std::optional<std::uint64_t> budget;
    std::optional<int> workers;
};

/// Parses "key = value" lines ('#' comments, blank lines allowed).
/// Throws std::invalid_argument with the offending line on any error.
ProblemFileConfig parse_problem_file(const std::string& text);

std::vector<int> parse_int_list(const std::string& text);

nlohmann::ordered_json report_compute(const ProblemSpec& spec, const EngineReport& report,
                                      const EngineOptions& opt);
nlohmann::ordered_json report_search(const ProblemSpec& spec, const SearchResult& result,
                                     EngineId engine, int n_max, const EngineOptions& opt);
nlohmann::ordered_json report_validate(const ProblemSpec& spec, const ValidationReport& result,
                                       const EngineOptions& opt);
nlohmann::ordered_json report_kmax(const ProblemSpec& spec, int n, const ExactCount& bound,
                                   std::optional<int> realized);

/// JSON: pretty-printed document. CSV: header plus one row per (n, engine).
std::string render_report(const nlohmann::ordered_json& doc, ReportFormat format);

}  // namespace ramsey
