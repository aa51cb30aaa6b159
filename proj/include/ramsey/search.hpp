#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/engines.hpp"

namespace ramsey {

struct SearchResult {
    std::optional<int> ramsey_n;          // least witness n, if found within n_max
    std::vector<EngineReport> per_n;      // reports for n = 1, 2, ... in scan order
    std::optional<Coloring> witness;      // W-false coloring at ramsey_n - 1 (brute engine)
    std::optional<int> witness_n;
};

/// True iff the engine's N(W) equals t^C(n,r) at this n.
bool is_ramsey_witness(const ProblemSpec& spec, int n, EngineId engine,
                       const EngineOptions& opt = {});

/// Scans n = 1..n_max and stops at the first witness; every coloring at
/// a witness n satisfies W, and that is assumed to persist for larger n.
SearchResult ramsey_number(const ProblemSpec& spec, int n_max, EngineId engine,
                           const EngineOptions& opt = {});

struct ValidationReport {
    int n = 0;
    std::vector<EngineReport> reports;        // engines that completed
    std::vector<std::string> failures;        // "<engine>: <error>" for the rest
    bool agree = false;                       // all completed engines agree
    ExactCount kmax_bound = 0;                // Venn-free compatibility bound
    int realized_max_k = 0;                   // deepest compatible tuple seen (direct)
};

/// Runs all three engines at (spec, n); per-engine failures are recorded,
/// not fatal. agree is true when every engine that completed returned the
/// same count.
ValidationReport cross_validate(const ProblemSpec& spec, int n, const EngineOptions& opt = {});

}  // namespace ramsey
