#pragma once

#include <vector>

#include "ramsey/model.hpp"

namespace ramsey {

// Venn-part labels are k-digit binary numbers stored as integers
// 0..2^k-1. Digit m (1-based, counted from the most significant end)
// sits at bit k-m, so the label listing order of the spectrum is plain
// integer order.
inline unsigned digit_bit(int k, int m) { return 1u << (k - m); }

/// The 2^k Venn-part cardinalities of a k-set tuple; q[B] is the number
/// of ground elements whose membership pattern is the label B.
struct VennSpectrum {
    int k = 0;
    std::vector<int> q;  // size 1<<k

    int total() const;  // sum of all parts (= ambient n)
    bool operator==(const VennSpectrum&) const = default;
};

/// All nonempty intersection cardinalities of a k-set tuple, indexed by
/// position mask (digit_bit convention); p[0] holds the ambient size n.
struct IntersectionSpectrum {
    int k = 0;
    std::vector<int> p;  // size 1<<k, p[0] = n

    int n() const { return p.at(0); }
    bool operator==(const IntersectionSpectrum&) const = default;
};

/// Number of chosen events per box; spectrum digit positions 1..k_1
/// belong to box 1, the next k_2 to box 2, and so on.
struct TupleType {
    std::vector<int> per_box;

    int total() const;
    int box_of_position(int pos) const;  // 1-based position -> 1-based box
    bool operator==(const TupleType&) const = default;
};

/// Classify each element of {1..n} by its membership pattern across the
/// k sets and count patterns. sum(q) == n.
VennSpectrum venn_spectrum_of(const std::vector<VertexSet>& sets, int n);

/// |intersection of the sets selected by 1-based `positions`|: the sum of
/// all Q's whose digits at those positions are 1. positions must be nonempty.
int p_from_q(const VennSpectrum& spec, const std::vector<int>& positions);

/// Same, with the positions given as a label mask.
int p_from_q_mask(const VennSpectrum& spec, unsigned mask);

/// All 2^k intersection cardinalities of the spectrum at once (superset
/// sums of q); entry 0 is the ambient size.
IntersectionSpectrum intersections_of(const VennSpectrum& spec);

/// Intersection cardinalities computed straight from the sets.
IntersectionSpectrum intersection_spectrum_of(const std::vector<VertexSet>& sets, int n);

/// Invert intersections to Venn parts by inclusion-exclusion. Throws
/// UnrealizableSpectrum when some part comes out negative, which is
/// exactly the case where no actual sets realize the input.
VennSpectrum q_from_p(const IntersectionSpectrum& ispec);

/// Size of the intersection of two sorted vertex sets.
int intersection_size(const VertexSet& a, const VertexSet& b);

/// Distributional compatibility: every pair of events in distinct boxes
/// shares at most r-1 vertices. Same-box pairs are unconstrained.
bool is_compatible(const EventTuple& tuple, int r);

/// Per-box event counts of a tuple.
TupleType tuple_type_of(const EventTuple& tuple, const ProblemSpec& spec);

/// True iff the spectrum can belong to a compatible tuple of the given
/// type: total mass n, per-position marginals P_i, cross-box pair
/// marginals <= r-1, and at least one separating element for every
/// same-box pair (distinct events demand distinct sets).
bool check_spectrum_constraints(const VennSpectrum& spec, const TupleType& type,
                                const ProblemSpec& prob, int n);

}  // namespace ramsey
