#ifndef GENSQ_PSQUARES_HPP
#define GENSQ_PSQUARES_HPP

#include <map>
#include <utility>
#include <vector>

#include "gensq/index.hpp"
#include "gensq/repeats.hpp"
#include "gensq/text.hpp"

namespace gensq {

struct Interval {
    int lo = 0;  // inclusive
    int hi = 0;  // inclusive

    bool contains(int x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Sorted, disjoint, non-adjacent closed intervals.
class IntervalSet {
public:
    IntervalSet() = default;
    // Sorts and merges overlapping or adjacent input intervals.
    explicit IntervalSet(std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }
    bool contains(int x) const;
    long long cardinality() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> intervals_;
};

using IntervalMap = std::map<int, std::vector<Interval>>;  // half period -> intervals

struct PSquare {
    int start = 0;
    int length = 0;

    friend bool operator==(const PSquare&, const PSquare&) = default;
    friend auto operator<=>(const PSquare&, const PSquare&) = default;
};

struct PSquareReport {
    std::map<int, IntervalSet> verified;  // half period -> p-square starts
    std::vector<PSquare> squares;         // ordered by (length, start)
};

// Candidate start intervals R_l: intersections of the uniform sigma-run
// intervals of the forward profile with the mapped ones of the reversed
// backward profile. Every p-square start lies in one of them.
IntervalMap candidate_intervals(const Text& t);

// Keeps the candidate intervals whose left endpoint starts a p-square, using
// one LCP query each on a parameterized-matching index of t.
std::map<int, IntervalSet> verify_intervals(const Text& t, const IntervalMap& candidates, const ScerIndex& param_index);

// Splits a k-run of `profile` into its uniform k-runs with kangaroo jumps
// (two LCP queries per emitted run) on an exact index of `profile`.
std::vector<UniformKRun> partition_sigma_run(const KRun& run, const Text& profile, const ScerIndex& profile_index);

// Every p-square class once, at its leftmost occurrence.
PSquareReport report_nonequivalent(const Text& t);

// Every p-square distinct as a string once, at its leftmost occurrence.
PSquareReport report_distinct(const Text& t);

}  // namespace gensq

#endif
