#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/exact.hpp"
#include "ramsey/model.hpp"
#include "ramsey/venn.hpp"

namespace ramsey {

/// Cap on enumerated objects shared by all engines (colorings, event
/// tuples, spectrum search nodes). Exceeding it raises BudgetExceeded.
constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

enum class EngineId { brute, direct, spectrum };

std::string_view engine_name(EngineId id);
std::optional<EngineId> engine_from_name(std::string_view name);

struct EngineOptions {
    std::uint64_t budget = kDefaultBudget;
    int workers = 1;
    std::optional<int> k_cutoff;  // truncate the tuple-size sum (direct/spectrum)
};

/// Box index (1..t) for every r-subset, indexed by rank_rsubset.
using Coloring = std::vector<int>;

struct EngineReport {
    std::string engine;
    int n = 0;
    ExactCount n_w = 0;
    ExactCount total = 0;  // t^C(n,r)
    double seconds = 0.0;
    std::uint64_t objects = 0;  // enumerated objects (budget metric)
    int max_k = 0;              // deepest tuple size reached (direct/spectrum)
    // Signed term sum per tuple size k (index k-1): (-1)^(k-1) * sum of
    // the size-k tuple values. Partial sums alternate around n_w.
    std::vector<ExactCount> per_k;
    std::optional<Coloring> no_w_witness;  // brute: least coloring with W false
};

/// True iff some box i contains every r-subset of some P_i-subset.
bool w_holds(const Coloring& coloring, const ProblemSpec& spec, int n);

/// Exhaustive count over all t^C(n,r) colorings.
EngineReport brute_force_report(const ProblemSpec& spec, int n, const EngineOptions& opt = {});

/// Inclusion-exclusion over all compatible event tuples, pruned on
/// pairwise-incompatible extensions.
EngineReport direct_ie_report(const ProblemSpec& spec, int n, const EngineOptions& opt = {});

/// Tuple-type and Venn-spectrum grouped evaluation of the same sum.
EngineReport spectrum_report(const ProblemSpec& spec, int n, const EngineOptions& opt = {});

ExactCount brute_force_nw(const ProblemSpec& spec, int n, const EngineOptions& opt = {});
ExactCount direct_ie_nw(const ProblemSpec& spec, int n, const EngineOptions& opt = {});
ExactCount spectrum_nw(const ProblemSpec& spec, int n, const EngineOptions& opt = {});

EngineReport engine_report(EngineId id, const ProblemSpec& spec, int n,
                           const EngineOptions& opt = {});

/// N(A_1 and ... and A_k): zero for incompatible tuples, else t raised to
/// the number of r-subsets left free once the tuple's demands are placed.
ExactCount tuple_value(const EventTuple& tuple, const ProblemSpec& spec, int n);

/// Multinomial n! / prod Q_B! where n is the spectrum's total mass: the
/// number of ways to fill the 2^k labeled Venn parts to the given sizes.
ExactCount frequency(const VennSpectrum& spec);

/// Upper bound on the size of any compatible tuple: every event must be
/// compatible with some fixed P_i-event, and those are countable.
ExactCount kmax_upper_bound(const ProblemSpec& spec, int n);

/// Enumerates every spectrum that satisfies the type/compatibility/
/// distinctness constraints for one tuple type, in label-lexicographic
/// order. Returns the number of search nodes visited.
std::uint64_t for_each_constrained_spectrum(const ProblemSpec& spec, int n, const TupleType& type,
                                            const std::function<void(const VennSpectrum&)>& fn,
                                            std::uint64_t budget = kDefaultBudget);

}  // namespace ramsey
