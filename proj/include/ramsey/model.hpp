#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "ramsey/exact.hpp"

namespace ramsey {

/// Sorted list of distinct elements of {1,...,n}.
using VertexSet = std::vector<int>;

/// The problem instance (t, r, P_1 <= ... <= P_t).
struct ProblemSpec {
    int t = 0;
    int r = 0;
    std::vector<int> p;  // nondecreasing, p.front() >= r

    ProblemSpec() = default;
    ProblemSpec(int t_, int r_, std::vector<int> p_);

    /// Throws std::invalid_argument when any invariant is broken.
    void validate() const;

    /// Number of events for ambient size n: sum_i C(n, P_i).
    ExactCount event_count(int n) const;
};

/// "All r-subsets of `vertices` are in box `box`"; |vertices| = P_box.
struct Event {
    int box = 0;  // 1..t
    VertexSet vertices;

    // Box-major order, ties broken by the lexicographic subset order.
    auto operator<=>(const Event&) const = default;
};

/// Strictly increasing sequence of distinct events.
using EventTuple = std::vector<Event>;

std::strong_ordering compare_events(const Event& a, const Event& b);

/// Tuple order: shorter tuples first, then elementwise event order.
std::strong_ordering compare_tuples(const EventTuple& a, const EventTuple& b);

/// C(n, k); zero when k < 0 or k > n.
ExactCount binom(long n, long k);

/// C(n, k) as uint64_t; throws std::overflow_error when it does not fit.
std::uint64_t binom_u64(int n, int k);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<VertexSet> combinations(int n, int k);

/// Advances `c` to the lexicographically next k-subset of {1..n};
/// returns false (leaving `c` untouched) when `c` is already the last one.
bool next_combination(VertexSet& c, int n);

/// All events for (spec, n), strictly increasing: box-major, subsets in
/// lexicographic order within each box.
std::vector<Event> enumerate_events(const ProblemSpec& spec, int n);

/// Rank of an r-subset of {1..n} within the lexicographic order, 0-based.
std::uint64_t rank_rsubset(const VertexSet& s, int n, int r);

/// Inverse of rank_rsubset; throws std::out_of_range for idx >= C(n,r).
VertexSet unrank_rsubset(std::uint64_t idx, int n, int r);

}  // namespace ramsey
