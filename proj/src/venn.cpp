#include "ramsey/venn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

int VennSpectrum::total() const { return std::accumulate(q.begin(), q.end(), 0); }

int TupleType::total() const { return std::accumulate(per_box.begin(), per_box.end(), 0); }

int TupleType::box_of_position(int pos) const {
    int upto = 0;
    for (size_t i = 0; i < per_box.size(); ++i) {
        upto += per_box[i];
        if (pos <= upto) return static_cast<int>(i) + 1;
    }
    throw std::out_of_range("position beyond tuple size");
}

VennSpectrum venn_spectrum_of(const std::vector<VertexSet>& sets, int n) {
    const int k = static_cast<int>(sets.size());
    if (k < 1 || k > 24) throw std::invalid_argument("need 1..24 sets");
    VennSpectrum out{k, std::vector<int>(size_t{1} << k, 0)};
    for (int e = 1; e <= n; ++e) {
        unsigned label = 0;
        for (int m = 1; m <= k; ++m)
            if (std::binary_search(sets[m - 1].begin(), sets[m - 1].end(), e))
                label |= digit_bit(k, m);
        ++out.q[label];
    }
    return out;
}

static unsigned positions_to_mask(int k, const std::vector<int>& positions) {
    if (positions.empty()) throw std::invalid_argument("need at least one position");
    unsigned mask = 0;
    for (int m : positions) {
        if (m < 1 || m > k) throw std::invalid_argument("position out of range");
        mask |= digit_bit(k, m);
    }
    return mask;
}

int p_from_q_mask(const VennSpectrum& spec, unsigned mask) {
    int sum = 0;
    for (unsigned b = 0; b < spec.q.size(); ++b)
        if ((b & mask) == mask) sum += spec.q[b];
    return sum;
}

int p_from_q(const VennSpectrum& spec, const std::vector<int>& positions) {
    return p_from_q_mask(spec, positions_to_mask(spec.k, positions));
}

IntersectionSpectrum intersections_of(const VennSpectrum& spec) {
    IntersectionSpectrum out{spec.k, spec.q};
    // Zeta transform over supersets: p[S] = sum of q[T] for T >= S.
    for (int bit = 0; bit < spec.k; ++bit)
        for (unsigned m = 0; m < out.p.size(); ++m)
            if (!(m & (1u << bit))) out.p[m] += out.p[m | (1u << bit)];
    return out;
}

IntersectionSpectrum intersection_spectrum_of(const std::vector<VertexSet>& sets, int n) {
    const int k = static_cast<int>(sets.size());
    if (k < 1 || k > 24) throw std::invalid_argument("need 1..24 sets");
    IntersectionSpectrum out{k, std::vector<int>(size_t{1} << k, 0)};
    out.p[0] = n;
    for (unsigned mask = 1; mask < out.p.size(); ++mask) {
        VertexSet acc;
        bool first = true;
        for (int m = 1; m <= k; ++m) {
            if (!(mask & digit_bit(k, m))) continue;
            if (first) {
                acc = sets[m - 1];
                first = false;
            } else {
                VertexSet next;
                std::set_intersection(acc.begin(), acc.end(), sets[m - 1].begin(),
                                      sets[m - 1].end(), std::back_inserter(next));
                acc = std::move(next);
            }
        }
        out.p[mask] = static_cast<int>(acc.size());
    }
    return out;
}

VennSpectrum q_from_p(const IntersectionSpectrum& ispec) {
    VennSpectrum out{ispec.k, ispec.p};
    // Moebius transform over supersets, the inverse of intersections_of.
    for (int bit = 0; bit < ispec.k; ++bit)
        for (unsigned m = 0; m < out.q.size(); ++m)
            if (!(m & (1u << bit))) out.q[m] -= out.q[m | (1u << bit)];
    for (unsigned b = 0; b < out.q.size(); ++b)
        if (out.q[b] < 0)
            throw UnrealizableSpectrum("no sets realize this intersection spectrum (part " +
                                       std::to_string(b) + " would have cardinality " +
                                       std::to_string(out.q[b]) + ")");
    return out;
}

int intersection_size(const VertexSet& a, const VertexSet& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            ++count, ++ia, ++ib;
    }
    return count;
}

bool is_compatible(const EventTuple& tuple, int r) {
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j) {
            if (tuple[i].box == tuple[j].box) continue;
            if (intersection_size(tuple[i].vertices, tuple[j].vertices) > r - 1) return false;
        }
    return true;
}

TupleType tuple_type_of(const EventTuple& tuple, const ProblemSpec& spec) {
    TupleType type{std::vector<int>(spec.t, 0)};
    for (auto& ev : tuple) {
        if (ev.box < 1 || ev.box > spec.t) throw std::invalid_argument("event box out of range");
        ++type.per_box[ev.box - 1];
    }
    return type;
}

bool check_spectrum_constraints(const VennSpectrum& spec, const TupleType& type,
                                const ProblemSpec& prob, int n) {
    const int k = type.total();
    if (spec.k != k || spec.q.size() != (size_t{1} << k))
        throw std::invalid_argument("spectrum size does not match tuple type");
    if (static_cast<int>(type.per_box.size()) != prob.t)
        throw std::invalid_argument("tuple type does not match problem spec");

    if (spec.total() != n) return false;
    for (int pos = 1; pos <= k; ++pos) {
        int want = prob.p[type.box_of_position(pos) - 1];
        if (p_from_q_mask(spec, digit_bit(k, pos)) != want) return false;
    }
    for (int mu = 1; mu <= k; ++mu)
        for (int nu = mu + 1; nu <= k; ++nu) {
            unsigned pair = digit_bit(k, mu) | digit_bit(k, nu);
            if (type.box_of_position(mu) != type.box_of_position(nu)) {
                if (p_from_q_mask(spec, pair) > prob.r - 1) return false;
            } else {
                // Distinct same-box events need an element telling the
                // two sets apart.
                int differing = 0;
                for (unsigned b = 0; b < spec.q.size(); ++b) {
                    bool inMu = b & digit_bit(k, mu);
                    bool inNu = b & digit_bit(k, nu);
                    if (inMu != inNu) differing += spec.q[b];
                }
                if (differing < 1) return false;
            }
        }
    return true;
}

}  // namespace ramsey
