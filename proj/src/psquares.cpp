#include "gensq/psquares.hpp"

#include <algorithm>
#include <stdexcept>

#include "gensq/encodings.hpp"

namespace gensq {

IntervalSet::IntervalSet(std::vector<Interval> intervals)
{
    std::sort(intervals.begin(), intervals.end());
    for (const Interval& iv : intervals) {
        if (iv.lo > iv.hi) continue;
        if (!intervals_.empty() && iv.lo <= intervals_.back().hi + 1)
            intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
        else
            intervals_.push_back(iv);
    }
}

bool IntervalSet::contains(int x) const
{
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](int v, const Interval& iv) { return v < iv.lo; });
    return it != intervals_.begin() && std::prev(it)->contains(x);
}

long long IntervalSet::cardinality() const
{
    long long total = 0;
    for (const Interval& iv : intervals_) total += iv.hi - iv.lo + 1;
    return total;
}

namespace {

Text as_text(const Positional<Symbol>& values)
{
    std::vector<std::int64_t> v(values.begin(), values.end());
    return Text::from_values(v);
}

Text as_reversed_text(const Positional<Symbol>& values)
{
    std::vector<std::int64_t> v(values.begin(), values.end());
    std::reverse(v.begin(), v.end());
    return Text::from_values(v);
}

// Intersects two families of pairwise disjoint intervals. Each non-empty
// I ∩ J is kept separately, even when it touches the next one.
std::vector<Interval> intersect_families(const std::vector<Interval>& fwd, const std::vector<Interval>& bwd)
{
    struct Event {
        int pos;
        int delta;
    };
    std::vector<Event> events;
    events.reserve(2 * (fwd.size() + bwd.size()));
    for (const auto* fam : {&fwd, &bwd})
        for (const Interval& iv : *fam) {
            events.push_back({iv.lo, +1});
            events.push_back({iv.hi + 1, -1});
        }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.pos < b.pos; });

    std::vector<Interval> out;
    int depth = 0, open_at = 0;
    for (std::size_t e = 0; e < events.size();) {
        const int pos = events[e].pos;
        const int before = depth;
        for (; e < events.size() && events[e].pos == pos; ++e) depth += events[e].delta;
        // Any endpoint while both families cover us ends the current piece.
        if (before == 2) out.push_back({open_at, pos - 1});
        if (depth == 2) open_at = pos;
    }
    return out;
}

PSquareReport report_with_lpf(const Text& t, const ScerIndex& param_index, const Positional<int>& lpf_values)
{
    PSquareReport report;
    if (t.n() < 2) return report;
    report.verified = verify_intervals(t, candidate_intervals(t), param_index);

    SparseTableMin rmq(lpf_values.to_vector());
    for (const auto& [ell, set] : report.verified) {
        std::vector<Interval> todo(set.intervals().rbegin(), set.intervals().rend());
        while (!todo.empty()) {
            Interval iv = todo.back();
            todo.pop_back();
            if (iv.lo > iv.hi) continue;
            const int i = static_cast<int>(rmq.argmin(static_cast<std::size_t>(iv.lo - 1), static_cast<std::size_t>(iv.hi - 1))) + 1;
            if (lpf_values[static_cast<std::size_t>(i)] >= 2 * ell) continue;
            report.squares.push_back({i, 2 * ell});
            todo.push_back({i + 1, iv.hi});
            todo.push_back({iv.lo, i - 1});
        }
    }
    std::sort(report.squares.begin(), report.squares.end(), [](const PSquare& a, const PSquare& b) {
        return a.length != b.length ? a.length < b.length : a.start < b.start;
    });
    return report;
}

}  // namespace

IntervalMap candidate_intervals(const Text& t)
{
    IntervalMap result;
    const int n = t.n();
    if (n < 2) return result;
    const int sigma = t.sigma();

    const Profiles prof = profiles(t);
    std::map<int, std::vector<Interval>> fwd, bwd;
    for (const UniformKRun& run : uniform_k_runs(as_text(prof.forward), sigma))
        fwd[run.ell].push_back({run.a, run.b - 2 * run.ell});
    for (const UniformKRun& run : uniform_k_runs(as_reversed_text(prof.backward), sigma)) {
        // A window at a' of the reversed profile covers T[n-a'-2l+2 .. n-a'+2).
        const int ell = run.ell;
        const int a = run.a, b = run.b - 2 * ell;
        bwd[ell].push_back({n - b - 2 * ell + 2, n - a - 2 * ell + 2});
    }
    for (auto& [ell, list] : bwd) std::sort(list.begin(), list.end());

    for (const auto& [ell, list] : fwd) {
        auto it = bwd.find(ell);
        if (it == bwd.end()) continue;
        auto pieces = intersect_families(list, it->second);
        if (!pieces.empty()) result[ell] = std::move(pieces);
    }
    return result;
}

std::map<int, IntervalSet> verify_intervals(const Text& t, const IntervalMap& candidates, const ScerIndex& param_index)
{
    if (relation_of(param_index.encoding()) != Relation::param)
        throw std::invalid_argument("verify_intervals: index must encode parameterized matching");
    if (param_index.n() != t.n()) throw std::invalid_argument("verify_intervals: index built for another text");
    std::map<int, IntervalSet> out;
    for (const auto& [ell, list] : candidates) {
        std::vector<Interval> keep;
        for (const Interval& iv : list)
            if (param_index.lcp(iv.lo, iv.lo + ell) >= ell) keep.push_back(iv);
        if (!keep.empty()) out.emplace(ell, IntervalSet(std::move(keep)));
    }
    return out;
}

std::vector<UniformKRun> partition_sigma_run(const KRun& run, const Text& profile, const ScerIndex& profile_index)
{
    if (profile_index.encoding() != Encoding::exact || profile_index.n() != profile.n())
        throw std::invalid_argument("partition_sigma_run: needs an exact index of the profile");
    const int ell = run.ell;
    std::vector<UniformKRun> out;
    int a = run.a;
    while (run.b - a >= 2 * ell) {
        const int last_window_offset = run.b - a - 2 * ell;
        const int d1 = 1 + std::min(profile_index.lcp(a, a + ell), last_window_offset);
        const int d2 = 1 + std::min(profile_index.lcp(a + ell, a + 2 * ell), last_window_offset);
        const int d = std::min(d1, d2);

        UniformKRun u{a, a + d - 1 + 2 * ell, ell, run.k, {}};
        for (int m = a + profile_index.lcp(a, a + ell); m < a + ell; m += 1 + profile_index.lcp(m + 1, m + 1 + ell))
            u.mismatches.push_back(m);
        out.push_back(std::move(u));
        a += d;
    }
    return out;
}

PSquareReport report_nonequivalent(const Text& t)
{
    if (t.n() < 2) return {};
    Encoder enc(t, Encoding::big_e);
    ScerIndex idx(enc);
    return report_with_lpf(t, idx, lpf(idx));
}

PSquareReport report_distinct(const Text& t)
{
    if (t.n() < 2) return {};
    Encoder enc(t, Encoding::big_e);
    ScerIndex idx(enc);
    Encoder exact(t, Encoding::exact);
    ScerIndex exact_idx(exact);
    return report_with_lpf(t, idx, lpf(exact_idx));
}

}  // namespace gensq
