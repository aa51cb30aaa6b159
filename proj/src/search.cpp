#include "ramsey/search.hpp"

#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

bool is_ramsey_witness(const ProblemSpec& spec, int n, EngineId engine,
                       const EngineOptions& opt) {
    EngineReport report = engine_report(engine, spec, n, opt);
    return report.n_w == report.total;
}

SearchResult ramsey_number(const ProblemSpec& spec, int n_max, EngineId engine,
                           const EngineOptions& opt) {
    spec.validate();
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    SearchResult result;
    for (int n = 1; n <= n_max; ++n) {
        EngineReport report = engine_report(engine, spec, n, opt);
        bool witness = report.n_w == report.total;
        if (!witness && report.no_w_witness) {
            result.witness = report.no_w_witness;
            result.witness_n = n;
        }
        result.per_n.push_back(std::move(report));
        if (witness) {
            result.ramsey_n = n;
            break;
        }
    }
    // When the scan stops at ramsey_n, the witness recorded last belongs
    // to ramsey_n - 1; when nothing is found it belongs to n_max.
    return result;
}

ValidationReport cross_validate(const ProblemSpec& spec, int n, const EngineOptions& opt) {
    spec.validate();
    ValidationReport out;
    out.n = n;
    out.kmax_bound = kmax_upper_bound(spec, n);
    for (EngineId id : {EngineId::brute, EngineId::direct, EngineId::spectrum}) {
        try {
            EngineReport report = engine_report(id, spec, n, opt);
            if (id == EngineId::direct) out.realized_max_k = report.max_k;
            out.reports.push_back(std::move(report));
        } catch (const BudgetExceeded& e) {
            out.failures.push_back(std::string(engine_name(id)) + ": " + e.what());
        }
    }
    out.agree = true;
    for (size_t i = 1; i < out.reports.size(); ++i)
        if (out.reports[i].n_w != out.reports[0].n_w) out.agree = false;
    return out;
}

}  // namespace ramsey
