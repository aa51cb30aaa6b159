#include "ramsey/engines.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Thrown inside workers to unwind once another worker already tripped the
// budget; translated to BudgetExceeded by the engine entry point.
struct EnumerationAborted {};

// Shared cap on enumerated objects. Workers batch their ticks locally and
// flush into the shared counter, so the success/failure outcome depends
// only on the true total, not on thread interleaving.
struct BudgetGate {
    explicit BudgetGate(std::uint64_t budget_) : budget(budget_) {}

    std::uint64_t budget;
    std::atomic<std::uint64_t> used{0};
    std::atomic<bool> over{false};

    struct Local {
        BudgetGate* gate = nullptr;
        std::uint64_t pending = 0;

        void tick(std::uint64_t delta = 1) {
            pending += delta;
            if (pending >= 4096) flush();
        }
        void flush() {
            if (pending) {
                std::uint64_t prev = gate->used.fetch_add(pending, std::memory_order_relaxed);
                if (prev + pending > gate->budget)
                    gate->over.store(true, std::memory_order_relaxed);
                pending = 0;
            }
            if (gate->over.load(std::memory_order_relaxed)) throw EnumerationAborted{};
        }
    };
    Local local() { return Local{this, 0}; }
};

// Runs `body(worker_id)` on `workers` threads and rethrows the first
// non-abort exception. Abort unwinds are silent; the caller inspects the
// budget gate afterwards.
void run_workers(int workers, const std::function<void(int)>& body) {
    if (workers == 1) {
        try {
            body(0);
        } catch (const EnumerationAborted&) {
        }
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                body(w);
            } catch (const EnumerationAborted&) {
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

void validate_options(const EngineOptions& opt) {
    if (opt.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (opt.budget < 1) throw std::invalid_argument("budget must be >= 1");
    if (opt.k_cutoff && *opt.k_cutoff < 1)
        throw std::invalid_argument("k-cutoff must be >= 1");
}

ExactCount total_colorings(const ProblemSpec& spec, int n) {
    ExactCount exponent = binom(n, spec.r);
    if (!fits_u64(exponent) || to_u64(exponent) > (std::uint64_t{1} << 20))
        throw std::overflow_error("C(n,r) too large to form t^C(n,r)");
    ExactCount out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(spec.t),
                  static_cast<unsigned long>(to_u64(exponent)));
    return out;
}

// One event's demand: every listed r-subset must sit in `box` (1-based).
struct Demand {
    int box;
    std::vector<std::uint32_t> ranks;
};

std::vector<Demand> build_demands(const ProblemSpec& spec, int n) {
    std::vector<Demand> out;
    for (int box = 1; box <= spec.t; ++box) {
        const int pi = spec.p[box - 1];
        if (pi > n) continue;
        for (auto& subset : combinations(n, pi)) {
            Demand d{box, {}};
            for (auto& picks : combinations(pi, spec.r)) {
                VertexSet rsub(spec.r);
                for (int i = 0; i < spec.r; ++i) rsub[i] = subset[picks[i] - 1];
                d.ranks.push_back(static_cast<std::uint32_t>(rank_rsubset(rsub, n, spec.r)));
            }
            out.push_back(std::move(d));
        }
    }
    return out;
}

bool demand_met(const Demand& d, const std::vector<int>& boxes0) {
    for (auto rank : d.ranks)
        if (boxes0[rank] != d.box - 1) return false;
    return true;
}

// Histogram of tuple counts keyed by exponent; dense for small exponent
// ranges, ordered map otherwise. Merging and iteration are deterministic.
class ExponentHist {
public:
    explicit ExponentHist(std::uint64_t max_exp) {
        if (max_exp < kDenseLimit) dense_.assign(max_exp + 1, 0);
    }
    void add(std::uint64_t exp) {
        if (!dense_.empty())
            ++dense_[exp];
        else
            ++sparse_[exp];
    }
    void merge(const ExponentHist& other) {
        if (!dense_.empty() && !other.dense_.empty()) {
            for (size_t i = 0; i < dense_.size(); ++i) dense_[i] += other.dense_[i];
            return;
        }
        other.for_each([&](std::uint64_t exp, std::uint64_t cnt) {
            if (!dense_.empty())
                dense_[exp] += cnt;
            else
                sparse_[exp] += cnt;
        });
    }
    template <class Fn>
    void for_each(Fn fn) const {
        if (!dense_.empty()) {
            for (size_t i = 0; i < dense_.size(); ++i)
                if (dense_[i]) fn(static_cast<std::uint64_t>(i), dense_[i]);
        } else {
            for (auto& [exp, cnt] : sparse_) fn(exp, cnt);
        }
    }

private:
    static constexpr std::uint64_t kDenseLimit = 1 << 16;
    std::vector<std::uint64_t> dense_;
    std::map<std::uint64_t, std::uint64_t> sparse_;
};

ExactCount pow_t(int t, std::uint64_t exp) {
    ExactCount out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(t),
                  static_cast<unsigned long>(exp));
    return out;
}

}  // namespace

std::string_view engine_name(EngineId id) {
    switch (id) {
        case EngineId::brute: return "brute";
        case EngineId::direct: return "direct";
        case EngineId::spectrum: return "spectrum";
    }
    throw std::logic_error("unknown engine id");
}

std::optional<EngineId> engine_from_name(std::string_view name) {
    if (name == "brute") return EngineId::brute;
    if (name == "direct") return EngineId::direct;
    if (name == "spectrum") return EngineId::spectrum;
    return std::nullopt;
}

bool w_holds(const Coloring& coloring, const ProblemSpec& spec, int n) {
    spec.validate();
    if (coloring.size() != binom_u64(n, spec.r))
        throw std::invalid_argument("coloring must assign every r-subset");
    std::vector<int> boxes0(coloring.size());
    for (size_t i = 0; i < coloring.size(); ++i) {
        if (coloring[i] < 1 || coloring[i] > spec.t)
            throw std::invalid_argument("coloring entry outside 1..t");
        boxes0[i] = coloring[i] - 1;
    }
    for (auto& d : build_demands(spec, n))
        if (demand_met(d, boxes0)) return true;
    return false;
}

EngineReport brute_force_report(const ProblemSpec& spec, int n, const EngineOptions& opt) {
    spec.validate();
    validate_options(opt);
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    auto start = Clock::now();

    EngineReport report;
    report.engine = std::string(engine_name(EngineId::brute));
    report.n = n;
    report.total = total_colorings(spec, n);

    auto demands = build_demands(spec, n);
    if (demands.empty()) {
        // No P_i-subset exists, so no coloring can satisfy W; the
        // all-box-1 coloring is the least W-false one.
        report.n_w = 0;
        report.no_w_witness = Coloring(binom_u64(n, spec.r), 1);
        report.seconds = seconds_since(start);
        return report;
    }

    if (report.total > ExactCount(static_cast<unsigned long>(opt.budget)))
        throw BudgetExceeded("brute force would enumerate " + to_decimal(report.total) +
                                 " colorings (budget " + std::to_string(opt.budget) + ")",
                             opt.budget, to_decimal(report.total));

    const std::uint64_t total = to_u64(report.total);
    const std::uint64_t num_rsubsets = binom_u64(n, spec.r);
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(std::max(opt.workers, 1), std::max<std::uint64_t>(total, 1)));

    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::uint64_t> witness(workers, std::numeric_limits<std::uint64_t>::max());

    run_workers(workers, [&](int w) {
        const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        const std::uint64_t hi =
            lo + total / workers + (static_cast<std::uint64_t>(w) < total % workers ? 1 : 0);
        std::vector<int> boxes0(num_rsubsets, 0);
        std::uint64_t idx = lo;
        for (std::uint64_t rest = lo, j = 0; rest && j < num_rsubsets; ++j) {
            boxes0[j] = static_cast<int>(rest % spec.t);
            rest /= spec.t;
        }
        std::uint64_t hit = 0;
        std::uint64_t first_miss = std::numeric_limits<std::uint64_t>::max();
        for (; idx < hi; ++idx) {
            bool w_true = false;
            for (auto& d : demands)
                if (demand_met(d, boxes0)) {
                    w_true = true;
                    break;
                }
            if (w_true)
                ++hit;
            else if (first_miss == std::numeric_limits<std::uint64_t>::max())
                first_miss = idx;
            // odometer step
            for (std::uint64_t j = 0; j < num_rsubsets; ++j) {
                if (++boxes0[j] < spec.t) break;
                boxes0[j] = 0;
            }
        }
        counts[w] = hit;
        witness[w] = first_miss;
    });

    std::uint64_t n_w = 0;
    std::uint64_t min_witness = std::numeric_limits<std::uint64_t>::max();
    for (int w = 0; w < workers; ++w) {
        n_w += counts[w];
        min_witness = std::min(min_witness, witness[w]);
    }
    report.n_w = ExactCount(static_cast<unsigned long>(n_w));
    report.objects = total;
    if (min_witness != std::numeric_limits<std::uint64_t>::max()) {
        Coloring witness_coloring(num_rsubsets, 1);
        for (std::uint64_t rest = min_witness, j = 0; j < num_rsubsets; ++j) {
            witness_coloring[j] = static_cast<int>(rest % spec.t) + 1;
            rest /= spec.t;
        }
        report.no_w_witness = std::move(witness_coloring);
    }
    report.seconds = seconds_since(start);
    return report;
}

ExactCount tuple_value(const EventTuple& tuple, const ProblemSpec& spec, int n) {
    spec.validate();
    if (tuple.empty()) throw std::invalid_argument("tuple must contain at least one event");
    for (size_t i = 0; i < tuple.size(); ++i) {
        const Event& ev = tuple[i];
        if (ev.box < 1 || ev.box > spec.t) throw std::invalid_argument("event box outside 1..t");
        if (static_cast<int>(ev.vertices.size()) != spec.p[ev.box - 1])
            throw std::invalid_argument("event vertex set has wrong size for its box");
        for (size_t j = 0; j + 1 < ev.vertices.size(); ++j)
            if (ev.vertices[j] >= ev.vertices[j + 1])
                throw std::invalid_argument("event vertices must be strictly increasing");
        if (ev.vertices.front() < 1 || ev.vertices.back() > n)
            throw std::invalid_argument("event vertices outside 1..n");
        if (i + 1 < tuple.size() && !(tuple[i] < tuple[i + 1]))
            throw std::invalid_argument("tuple events must be strictly increasing");
    }

    if (!is_compatible(tuple, spec.r)) return 0;

    std::vector<VertexSet> sets;
    sets.reserve(tuple.size());
    for (auto& ev : tuple) sets.push_back(ev.vertices);
    auto intersections = intersections_of(venn_spectrum_of(sets, n));

    // |union of Tr(sets)| by inclusion-exclusion over the tuple positions.
    ExactCount covered = 0;
    for (unsigned mask = 1; mask < intersections.p.size(); ++mask) {
        ExactCount term = binom(intersections.p[mask], spec.r);
        if (std::popcount(mask) % 2 == 1)
            covered += term;
        else
            covered -= term;
    }
    ExactCount exponent = binom(n, spec.r) - covered;
    if (sgn(exponent) < 0) throw std::logic_error("union exceeded the number of r-subsets");
    if (!fits_u64(exponent) || to_u64(exponent) > (std::uint64_t{1} << 20))
        throw std::overflow_error("exponent too large");
    return pow_t(spec.t, to_u64(exponent));
}

ExactCount frequency(const VennSpectrum& spec) {
    long n = 0;
    for (int q : spec.q) {
        if (q < 0) throw std::invalid_argument("spectrum entries must be >= 0");
        n += q;
    }
    ExactCount out = factorial(static_cast<unsigned long>(n));
    for (int q : spec.q)
        if (q > 1) {
            ExactCount f = factorial(static_cast<unsigned long>(q));
            mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), f.get_mpz_t());
        }
    return out;
}

ExactCount kmax_upper_bound(const ProblemSpec& spec, int n) {
    spec.validate();
    ExactCount best = 0;
    for (int i = 0; i < spec.t; ++i) {
        ExactCount bound = binom(n, spec.p[i]);
        for (int j = 0; j < spec.t; ++j) {
            if (j == i) continue;
            for (int v = 0; v <= spec.r - 1; ++v)
                bound += binom(spec.p[i], v) * binom(n - spec.p[i], spec.p[j] - v);
        }
        best = std::max(best, bound);
    }
    return best;
}

// ---------------------------------------------------------------------
// Direct inclusion-exclusion engine: depth-first extension of compatible
// tuples, tracking the union of demanded r-subsets incrementally.
// ---------------------------------------------------------------------

EngineReport direct_ie_report(const ProblemSpec& spec, int n, const EngineOptions& opt) {
    spec.validate();
    validate_options(opt);
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    auto start = Clock::now();

    EngineReport report;
    report.engine = std::string(engine_name(EngineId::direct));
    report.n = n;
    report.total = total_colorings(spec, n);

    ExactCount event_total = spec.event_count(n);
    if (event_total == 0) {
        report.n_w = 0;
        report.seconds = seconds_since(start);
        return report;
    }
    // The pairwise compatibility matrix is enumeration work too; charge it
    // against the budget up front.
    ExactCount pair_work = event_total * (event_total - 1) / 2;
    if (!fits_u64(pair_work) || to_u64(pair_work) > opt.budget)
        throw BudgetExceeded("direct engine needs " + to_decimal(pair_work) +
                                 " event-pair checks (budget " + std::to_string(opt.budget) + ")",
                             opt.budget, to_decimal(pair_work));

    const auto events = enumerate_events(spec, n);
    const int S = static_cast<int>(events.size());
    const std::uint64_t num_rsubsets = binom_u64(n, spec.r);

    // Demanded r-subset ranks per event.
    std::vector<std::vector<std::uint32_t>> demanded(S);
    for (int i = 0; i < S; ++i) {
        const int pi = static_cast<int>(events[i].vertices.size());
        for (auto& picks : combinations(pi, spec.r)) {
            VertexSet rsub(spec.r);
            for (int v = 0; v < spec.r; ++v) rsub[v] = events[i].vertices[picks[v] - 1];
            demanded[i].push_back(static_cast<std::uint32_t>(rank_rsubset(rsub, n, spec.r)));
        }
    }

    // Pairwise compatibility matrix.
    std::vector<std::uint8_t> compat(static_cast<size_t>(S) * S, 1);
    for (int i = 0; i < S; ++i)
        for (int j = i + 1; j < S; ++j) {
            bool ok = events[i].box == events[j].box ||
                      intersection_size(events[i].vertices, events[j].vertices) <= spec.r - 1;
            compat[static_cast<size_t>(i) * S + j] = ok;
            compat[static_cast<size_t>(j) * S + i] = ok;
        }

    const int k_limit = opt.k_cutoff ? std::min(*opt.k_cutoff, S) : S;

    BudgetGate gate(opt.budget);
    gate.used.store(to_u64(pair_work), std::memory_order_relaxed);
    const int workers = std::max(1, std::min(opt.workers, S));

    std::vector<std::vector<ExponentHist>> hists(workers);
    std::vector<int> max_depth(workers, 0);

    run_workers(workers, [&](int w) {
        auto local = gate.local();
        std::vector<char> covered(num_rsubsets, 0);
        std::uint64_t covered_count = 0;
        std::vector<std::vector<std::uint32_t>> undo(k_limit + 1);
        std::vector<std::vector<int>> cands(k_limit + 1);
        auto& hist = hists[w];

        auto push_event = [&](int idx, int depth) {
            auto& newly = undo[depth];
            newly.clear();
            for (auto rank : demanded[idx])
                if (!covered[rank]) {
                    covered[rank] = 1;
                    newly.push_back(rank);
                }
            covered_count += newly.size();
        };
        auto pop_event = [&](int depth) {
            for (auto rank : undo[depth]) covered[rank] = 0;
            covered_count -= undo[depth].size();
        };

        auto dfs = [&](auto&& self, int depth) -> void {
            // depth = number of events already chosen; extend from cands[depth].
            const auto& cand = cands[depth];
            for (size_t ci = 0; ci < cand.size(); ++ci) {
                const int idx = cand[ci];
                local.tick();
                push_event(idx, depth);
                while (static_cast<int>(hist.size()) <= depth)
                    hist.emplace_back(num_rsubsets);
                hist[depth].add(num_rsubsets - covered_count);
                max_depth[w] = std::max(max_depth[w], depth + 1);
                if (depth + 2 <= k_limit && ci + 1 < cand.size()) {
                    auto& next = cands[depth + 1];
                    next.clear();
                    const std::uint8_t* row = compat.data() + static_cast<size_t>(idx) * S;
                    for (size_t cj = ci + 1; cj < cand.size(); ++cj)
                        if (row[cand[cj]]) next.push_back(cand[cj]);
                    if (!next.empty()) self(self, depth + 1);
                }
                pop_event(depth);
            }
        };

        // First events are dealt round-robin across workers.
        for (int root = w; root < S; root += workers) {
            local.tick();
            push_event(root, 0);
            while (hist.empty()) hist.emplace_back(num_rsubsets);
            hist[0].add(num_rsubsets - covered_count);
            max_depth[w] = std::max(max_depth[w], 1);
            if (k_limit >= 2) {
                auto& next = cands[1];
                next.clear();
                const std::uint8_t* row = compat.data() + static_cast<size_t>(root) * S;
                for (int j = root + 1; j < S; ++j)
                    if (row[j]) next.push_back(j);
                if (!next.empty()) dfs(dfs, 1);
            }
            pop_event(0);
        }
        local.flush();
    });

    if (gate.over.load())
        throw BudgetExceeded("direct engine exceeded the enumeration budget of " +
                                 std::to_string(opt.budget) + " objects",
                             opt.budget, "unknown");

    size_t depth_max = 0;
    for (auto& hist : hists) depth_max = std::max(depth_max, hist.size());
    report.per_k.assign(depth_max, ExactCount(0));
    for (size_t depth = 0; depth < depth_max; ++depth) {
        ExponentHist merged(num_rsubsets);
        for (auto& hist : hists)
            if (depth < hist.size()) merged.merge(hist[depth]);
        ExactCount sum = 0;
        merged.for_each([&](std::uint64_t exp, std::uint64_t cnt) {
            sum += ExactCount(static_cast<unsigned long>(cnt)) * pow_t(spec.t, exp);
        });
        report.per_k[depth] = (depth % 2 == 0) ? sum : -sum;
        report.n_w += report.per_k[depth];
    }
    for (int w = 0; w < workers; ++w) report.max_k = std::max(report.max_k, max_depth[w]);
    report.objects = gate.used.load();
    report.seconds = seconds_since(start);
    return report;
}

// ---------------------------------------------------------------------
// Spectrum engine: tuple types, then all constraint-satisfying spectra,
// enumerated as nonincreasing label multisets (one label per element).
// ---------------------------------------------------------------------

namespace {

struct SpectrumSearch {
    int k = 0;
    int L = 0;
    int n = 0;
    int r = 0;
    std::vector<int> box_of_bit;     // bit index -> 0-based box
    std::vector<int> marg_goal;      // bit index -> P of its box
    std::vector<unsigned> cross;     // masks of cross-box bit pairs
    std::vector<unsigned> same;      // masks of same-box bit pairs
    std::vector<unsigned> cands;     // statically allowed labels, descending

    SpectrumSearch(const ProblemSpec& prob, int n_, const TupleType& type) {
        k = type.total();
        if (k < 1) throw std::invalid_argument("tuple type must contain at least one event");
        if (k > 24) throw std::overflow_error("tuple size beyond 24 digits");
        L = 1 << k;
        n = n_;
        r = prob.r;
        box_of_bit.assign(k, 0);
        marg_goal.assign(k, 0);
        for (int pos = 1; pos <= k; ++pos) {
            int box = type.box_of_position(pos);
            box_of_bit[k - pos] = box - 1;
            marg_goal[k - pos] = prob.p[box - 1];
        }
        for (int b1 = 0; b1 < k; ++b1)
            for (int b2 = b1 + 1; b2 < k; ++b2) {
                unsigned mask = (1u << b1) | (1u << b2);
                if (box_of_bit[b1] != box_of_bit[b2])
                    cross.push_back(mask);
                else
                    same.push_back(mask);
            }
        for (int label = L - 1; label >= 0; --label) {
            bool ok = true;
            if (r == 1)
                for (unsigned pair : cross)
                    if ((static_cast<unsigned>(label) & pair) == pair) {
                        ok = false;
                        break;
                    }
            if (ok) cands.push_back(static_cast<unsigned>(label));
        }
    }

    // tick() is charged once per examined candidate label; emit(q) once
    // per spectrum satisfying every constraint.
    template <class Tick, class Emit>
    void run(Tick&& tick, Emit&& emit) {
        std::vector<int> q(L, 0);
        std::vector<int> marg_rem = marg_goal;
        std::vector<int> pair_used(cross.size(), 0);
        std::vector<int> diff(same.size(), 0);
        long marg_sum = 0;
        for (int m : marg_rem) marg_sum += m;
        place(tick, emit, q, marg_rem, pair_used, diff, marg_sum, n, 0);
    }

private:
    template <class Tick, class Emit>
    void place(Tick& tick, Emit& emit, std::vector<int>& q, std::vector<int>& marg_rem,
               std::vector<int>& pair_used, std::vector<int>& diff, long marg_sum,
               int units_left, size_t from) {
        if (units_left == 0) {
            if (marg_sum != 0) return;
            for (int d : diff)
                if (d < 1) return;
            emit(VennSpectrum{k, q});
            return;
        }
        if (marg_sum > static_cast<long>(units_left) * k) return;
        for (size_t ci = from; ci < cands.size(); ++ci) {
            const unsigned label = cands[ci];
            tick();
            bool ok = true;
            for (int bit = 0; ok && bit < k; ++bit)
                if ((label >> bit) & 1u) {
                    if (marg_rem[bit] < 1 || marg_rem[bit] > units_left) ok = false;
                }
            if (!ok) continue;
            for (size_t pi = 0; ok && pi < cross.size(); ++pi)
                if ((label & cross[pi]) == cross[pi] && pair_used[pi] + 1 > r - 1) ok = false;
            if (!ok) continue;
            // Every open marginal must still be coverable by later units.
            int covered_bits = std::popcount(label);
            bool feasible = true;
            for (int bit = 0; feasible && bit < k; ++bit) {
                int need = marg_rem[bit] - (((label >> bit) & 1u) ? 1 : 0);
                if (need > units_left - 1) feasible = false;
            }
            if (!feasible) continue;

            ++q[label];
            for (int bit = 0; bit < k; ++bit)
                if ((label >> bit) & 1u) --marg_rem[bit];
            for (size_t pi = 0; pi < cross.size(); ++pi)
                if ((label & cross[pi]) == cross[pi]) ++pair_used[pi];
            for (size_t si = 0; si < same.size(); ++si)
                if (std::popcount(label & same[si]) == 1) ++diff[si];

            place(tick, emit, q, marg_rem, pair_used, diff, marg_sum - covered_bits,
                  units_left - 1, ci);

            --q[label];
            for (int bit = 0; bit < k; ++bit)
                if ((label >> bit) & 1u) ++marg_rem[bit];
            for (size_t pi = 0; pi < cross.size(); ++pi)
                if ((label & cross[pi]) == cross[pi]) --pair_used[pi];
            for (size_t si = 0; si < same.size(); ++si)
                if (std::popcount(label & same[si]) == 1) --diff[si];
        }
    }
};

std::vector<TupleType> admissible_types(const ProblemSpec& spec, int n, int k_limit) {
    std::vector<TupleType> out;
    std::vector<int> box_caps(spec.t);
    for (int i = 0; i < spec.t; ++i) {
        ExactCount c = binom(n, spec.p[i]);
        box_caps[i] = static_cast<int>(
            std::min<std::uint64_t>(fits_u64(c) ? to_u64(c) : std::uint64_t(k_limit),
                                    static_cast<std::uint64_t>(k_limit)));
    }
    std::vector<int> current(spec.t, 0);
    auto rec = [&](auto&& self, int box, int used) -> void {
        if (box == spec.t) {
            if (used >= 1) out.push_back(TupleType{current});
            return;
        }
        for (int ki = 0; ki <= std::min(box_caps[box], k_limit - used); ++ki) {
            current[box] = ki;
            self(self, box + 1, used + ki);
        }
        current[box] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

std::uint64_t for_each_constrained_spectrum(const ProblemSpec& spec, int n, const TupleType& type,
                                            const std::function<void(const VennSpectrum&)>& fn,
                                            std::uint64_t budget) {
    spec.validate();
    if (static_cast<int>(type.per_box.size()) != spec.t)
        throw std::invalid_argument("tuple type does not match problem spec");
    SpectrumSearch search(spec, n, type);
    std::uint64_t nodes = 0;
    search.run(
        [&] {
            if (++nodes > budget)
                throw BudgetExceeded("spectrum enumeration exceeded budget of " +
                                         std::to_string(budget) + " nodes",
                                     budget, "unknown");
        },
        fn);
    return nodes;
}

EngineReport spectrum_report(const ProblemSpec& spec, int n, const EngineOptions& opt) {
    spec.validate();
    validate_options(opt);
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    auto start = Clock::now();

    EngineReport report;
    report.engine = std::string(engine_name(EngineId::spectrum));
    report.n = n;
    report.total = total_colorings(spec, n);

    const std::uint64_t num_rsubsets = binom_u64(n, spec.r);

    ExactCount kb = kmax_upper_bound(spec, n);
    int k_limit = fits_u64(kb) && to_u64(kb) < 1000 ? static_cast<int>(to_u64(kb)) : 1000;
    if (opt.k_cutoff) k_limit = std::min(k_limit, *opt.k_cutoff);
    if (k_limit < 1) {
        report.n_w = 0;
        report.seconds = seconds_since(start);
        return report;
    }

    const auto types = admissible_types(spec, n, k_limit);
    if (types.empty()) {
        report.n_w = 0;
        report.seconds = seconds_since(start);
        return report;
    }

    BudgetGate gate(opt.budget);
    const int workers = std::max(1, std::min<int>(opt.workers, static_cast<int>(types.size())));
    std::vector<std::vector<ExactCount>> per_k_local(workers);
    std::vector<int> max_k_local(workers, 0);

    run_workers(workers, [&](int w) {
        auto local = gate.local();
        auto& per_k = per_k_local[w];
        for (size_t ti = w; ti < types.size(); ti += workers) {
            const TupleType& type = types[ti];
            const int k = type.total();
            if (k > 24 || (std::uint64_t{1} << k) > gate.budget)
                throw BudgetExceeded("spectrum label space 2^" + std::to_string(k) +
                                         " exceeds budget " + std::to_string(gate.budget),
                                     gate.budget, "unknown");
            SpectrumSearch search(spec, n, type);

            // Group frequencies by exponent; the per-type aggregate is
            // divisible by prod k_i! (each unordered tuple appears once
            // per within-box permutation of its events).
            std::map<std::uint64_t, ExactCount> freq_by_exp;
            std::uint64_t spectra = 0;
            search.run([&] { local.tick(); },
                       [&](const VennSpectrum& q) {
                           ++spectra;
                           auto inter = intersections_of(q);
                           // Box-grouped union size: cross-box terms vanish.
                           long long covered = 0;
                           int offset = 0;
                           for (int box = 0; box < spec.t; ++box) {
                               const int kb_i = type.per_box[box];
                               if (kb_i == 0) continue;
                               unsigned box_mask = 0;
                               for (int pos = offset + 1; pos <= offset + kb_i; ++pos)
                                   box_mask |= digit_bit(k, pos);
                               // subsets of box_mask, nonempty
                               for (unsigned sub = box_mask; sub; sub = (sub - 1) & box_mask) {
                                   long long term = static_cast<long long>(
                                       binom_u64(inter.p[sub], spec.r));
                                   covered += (std::popcount(sub) % 2 == 1) ? term : -term;
                               }
                               offset += kb_i;
                           }
                           if (covered < 0 ||
                               static_cast<std::uint64_t>(covered) > num_rsubsets)
                               throw std::logic_error("union size out of range");
                           freq_by_exp[num_rsubsets - covered] += frequency(q);
                       });
            if (spectra == 0) continue;

            ExactCount type_sum = 0;
            for (auto& [exp, freq] : freq_by_exp) type_sum += freq * pow_t(spec.t, exp);
            ExactCount divisor = 1;
            for (int ki : type.per_box) divisor *= factorial(static_cast<unsigned long>(ki));
            ExactCount quotient, remainder;
            mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), type_sum.get_mpz_t(),
                        divisor.get_mpz_t());
            if (remainder != 0)
                throw std::logic_error(
                    "per-type value sum not divisible by the within-box permutation count");

            if (static_cast<int>(per_k.size()) < k) per_k.resize(k, ExactCount(0));
            per_k[k - 1] += (k % 2 == 1) ? quotient : -quotient;
            max_k_local[w] = std::max(max_k_local[w], k);
        }
        local.flush();
    });

    if (gate.over.load())
        throw BudgetExceeded("spectrum engine exceeded the enumeration budget of " +
                                 std::to_string(opt.budget) + " objects",
                             opt.budget, "unknown");

    size_t depth_max = 0;
    for (auto& pk : per_k_local) depth_max = std::max(depth_max, pk.size());
    report.per_k.assign(depth_max, ExactCount(0));
    for (int w = 0; w < workers; ++w) {
        for (size_t i = 0; i < per_k_local[w].size(); ++i) report.per_k[i] += per_k_local[w][i];
        report.max_k = std::max(report.max_k, max_k_local[w]);
    }
    for (auto& term : report.per_k) report.n_w += term;
    report.objects = gate.used.load();
    report.seconds = seconds_since(start);
    return report;
}

ExactCount brute_force_nw(const ProblemSpec& spec, int n, const EngineOptions& opt) {
    return brute_force_report(spec, n, opt).n_w;
}
ExactCount direct_ie_nw(const ProblemSpec& spec, int n, const EngineOptions& opt) {
    return direct_ie_report(spec, n, opt).n_w;
}
ExactCount spectrum_nw(const ProblemSpec& spec, int n, const EngineOptions& opt) {
    return spectrum_report(spec, n, opt).n_w;
}

EngineReport engine_report(EngineId id, const ProblemSpec& spec, int n, const EngineOptions& opt) {
    switch (id) {
        case EngineId::brute: return brute_force_report(spec, n, opt);
        case EngineId::direct: return direct_ie_report(spec, n, opt);
        case EngineId::spectrum: return spectrum_report(spec, n, opt);
    }
    throw std::logic_error("unknown engine id");
}

}  // namespace ramsey
