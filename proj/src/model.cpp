#include "ramsey/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramsey {

ProblemSpec::ProblemSpec(int t_, int r_, std::vector<int> p_) : t(t_), r(r_), p(std::move(p_)) {
    validate();
}

void ProblemSpec::validate() const {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (static_cast<int>(p.size()) != t)
        throw std::invalid_argument("p must list exactly t box sizes");
    if (!std::is_sorted(p.begin(), p.end()))
        throw std::invalid_argument("p must be nondecreasing");
    if (p.front() < r) throw std::invalid_argument("P_1 must be >= r");
}

ExactCount ProblemSpec::event_count(int n) const {
    ExactCount total = 0;
    for (int pi : p) total += binom(n, pi);
    return total;
}

std::strong_ordering compare_events(const Event& a, const Event& b) { return a <=> b; }

std::strong_ordering compare_tuples(const EventTuple& a, const EventTuple& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

ExactCount binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    ExactCount out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::uint64_t binom_u64(int n, int k) {
    ExactCount c = binom(n, k);
    if (!fits_u64(c)) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    return to_u64(c);
}

bool next_combination(VertexSet& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

std::vector<VertexSet> combinations(int n, int k) {
    std::vector<VertexSet> out;
    if (k < 0 || k > n) return out;
    VertexSet c(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    do {
        out.push_back(c);
    } while (next_combination(c, n));
    return out;
}

std::vector<Event> enumerate_events(const ProblemSpec& spec, int n) {
    std::vector<Event> out;
    for (int box = 1; box <= spec.t; ++box)
        for (auto& s : combinations(n, spec.p[box - 1])) out.push_back({box, s});
    return out;
}

std::uint64_t rank_rsubset(const VertexSet& s, int n, int r) {
    if (static_cast<int>(s.size()) != r) throw std::invalid_argument("subset has wrong size");
    std::uint64_t rank = 0;
    int prev = 0;
    for (int i = 0; i < r; ++i) {
        if (s[i] <= prev || s[i] > n) throw std::invalid_argument("not a sorted subset of 1..n");
        for (int v = prev + 1; v < s[i]; ++v) rank += binom_u64(n - v, r - i - 1);
        prev = s[i];
    }
    return rank;
}

VertexSet unrank_rsubset(std::uint64_t idx, int n, int r) {
    if (idx >= binom_u64(n, r))
        throw std::out_of_range("subset rank " + std::to_string(idx) + " out of range");
    VertexSet s(r);
    int v = 1;
    for (int i = 0; i < r; ++i) {
        for (;; ++v) {
            std::uint64_t block = binom_u64(n - v, r - i - 1);
            if (idx < block) break;
            idx -= block;
        }
        s[i] = v++;
    }
    return s;
}

}  // namespace ramsey
