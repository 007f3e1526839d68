#include "gensq/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gensq {

CountingStructure::CountingStructure(int n) : n_(n), present_(static_cast<std::size_t>(std::max(n, 0)) + 1, 0)
{
    if (n < 0) throw std::invalid_argument("CountingStructure: negative universe");
}

void CountingStructure::check(int x) const
{
    if (x < 1 || x > n_) throw std::out_of_range("CountingStructure: element " + std::to_string(x) + " outside [1.." + std::to_string(n_) + "]");
}

long long CountingStructure::insert(int x)
{
    check(x);
    if (present_[static_cast<std::size_t>(x)]) throw std::logic_error("CountingStructure: element already present");
    present_[static_cast<std::size_t>(x)] = 1;
    if (x > cursor_) ++answer_;
    return answer_;
}

long long CountingStructure::erase(int x)
{
    check(x);
    if (!present_[static_cast<std::size_t>(x)]) throw std::logic_error("CountingStructure: element not present");
    present_[static_cast<std::size_t>(x)] = 0;
    if (x > cursor_) --answer_;
    return answer_;
}

long long CountingStructure::inc()
{
    if (cursor_ == n_) throw std::out_of_range("CountingStructure: cursor above n");
    ++cursor_;
    answer_ -= present_[static_cast<std::size_t>(cursor_)];
    return answer_;
}

long long CountingStructure::dec()
{
    if (cursor_ == 0) throw std::out_of_range("CountingStructure: cursor below 0");
    answer_ += present_[static_cast<std::size_t>(cursor_)];
    --cursor_;
    return answer_;
}

long long CountingStructure::move_to(int l)
{
    if (l < 0 || l > n_) throw std::out_of_range("CountingStructure: cursor target out of range");
    while (cursor_ < l) inc();
    while (cursor_ > l) dec();
    return answer_;
}

std::vector<SquareStart> nonextendible_pairs(const ScerIndex& idx)
{
    const int n = idx.n();
    const WeightedTreeView tree(idx);
    const auto& nodes = tree.nodes();
    const auto& order = idx.order();
    std::vector<SquareStart> out;

    for (const auto& v : nodes) {
        if (v.is_leaf() || v.weight == 0 || v.children.size() < 2) continue;
        const int w = v.weight;
        int heavy = v.children.front();
        for (int c : v.children)
            if (nodes[static_cast<std::size_t>(c)].leaf_count() > nodes[static_cast<std::size_t>(heavy)].leaf_count()) heavy = c;

        for (int c : v.children) {
            if (c == heavy) continue;
            const auto& child = nodes[static_cast<std::size_t>(c)];
            for (int r = child.leaf_lo; r <= child.leaf_hi; ++r) {
                const int i = order[static_cast<std::size_t>(r)];
                for (int j : {i - w, i + w}) {
                    if (j < 1 || j > n) continue;
                    const int rj = idx.rank(j);
                    if (rj < v.leaf_lo || rj > v.leaf_hi) continue;
                    if (rj >= child.leaf_lo && rj <= child.leaf_hi) continue;
                    out.push_back({std::min(i, j), w});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Right ends of maximal runs of square starts: non-extendible squares whose
// successor start fails, i.e. lcp(i+1, i+p+1) stays at p-1.
std::map<int, std::vector<int>> right_ends(const ScerIndex& idx)
{
    std::map<int, std::vector<int>> out;
    for (const SquareStart& s : nonextendible_pairs(idx))
        if (idx.lcp(s.i + 1, s.i + s.p + 1) == s.p - 1) out[s.p].push_back(s.i);
    for (auto& [p, list] : out) std::sort(list.begin(), list.end());
    return out;
}

}  // namespace

NonShiftable nonshiftable_squares(const ScerIndex& idx, const ScerIndex& mirror_idx)
{
    const int n = idx.n();
    if (mirror_idx.n() != n) throw std::invalid_argument("nonshiftable_squares: index size mismatch");
    NonShiftable out;
    out.right = right_ends(idx);
    // T[i..i+2p) is rev(T)[n-i-2p+2..n-i+2) reversed.
    for (auto& [p, list] : right_ends(mirror_idx)) {
        auto& left = out.left[p];
        for (int ir : list) left.push_back(n - ir - 2 * p + 2);
        std::sort(left.begin(), left.end());
    }
    return out;
}

bool SquaresTable::contains(int i, int p) const
{
    auto it = per_p.find(p);
    return it != per_p.end() && it->second.contains(i);
}

std::size_t SquaresTable::interval_count() const
{
    std::size_t total = 0;
    for (const auto& [p, set] : per_p) total += set.size();
    return total;
}

SquaresTable squares_table(const ScerIndex& idx, const ScerIndex& mirror_idx)
{
    const NonShiftable ns = nonshiftable_squares(idx, mirror_idx);
    SquaresTable table;
    table.n = idx.n();
    for (const auto& [p, rights] : ns.right) {
        auto it = ns.left.find(p);
        const std::size_t lefts = it == ns.left.end() ? 0 : it->second.size();
        if (lefts != rights.size())
            throw std::logic_error("squares_table: " + std::to_string(lefts) + " left ends vs " +
                                   std::to_string(rights.size()) + " right ends for p=" + std::to_string(p));
        std::vector<Interval> intervals;
        intervals.reserve(rights.size());
        for (std::size_t t = 0; t < rights.size(); ++t) {
            if (it->second[t] > rights[t]) throw std::logic_error("squares_table: crossed interval ends");
            intervals.push_back({it->second[t], rights[t]});
        }
        table.per_p.emplace(p, IntervalSet(std::move(intervals)));
    }
    if (ns.left.size() != ns.right.size()) throw std::logic_error("squares_table: unmatched left ends");
    return table;
}

namespace {

struct Indexes {
    Text reversed;
    ScerIndex forward;
    ScerIndex mirror;

    Indexes(const Text& t, Relation r)
        : reversed(t.reversed()),
          forward(Encoder(t, default_encoding(r))),
          mirror(Encoder(reversed, mirror_encoding(r)))
    {
    }
};

}  // namespace

SquaresTable squares_table(const Text& t, Relation r)
{
    if (t.n() < 2) return SquaresTable{t.n(), {}};
    Indexes ix(t, r);
    return squares_table(ix.forward, ix.mirror);
}

long long sweep_count(const SquaresTable& table, const Positional<int>& lpf_values)
{
    const int n = table.n;
    if (n < 2) return 0;
    if (static_cast<int>(lpf_values.size()) != n) throw std::invalid_argument("sweep_count: LPF length mismatch");

    // Bucket interval ends by position.
    std::vector<std::vector<int>> opens(static_cast<std::size_t>(n) + 1), closes(static_cast<std::size_t>(n) + 1);
    for (const auto& [p, set] : table.per_p)
        for (const Interval& iv : set.intervals()) {
            opens[static_cast<std::size_t>(iv.lo)].push_back(2 * p);
            closes[static_cast<std::size_t>(iv.hi)].push_back(2 * p);
        }

    CountingStructure cs(n);
    long long total = 0;
    for (int k = 1; k <= n; ++k) {
        for (int len : opens[static_cast<std::size_t>(k)]) cs.insert(len);
        total += cs.move_to(lpf_values[static_cast<std::size_t>(k)]);
        for (int len : closes[static_cast<std::size_t>(k)]) cs.erase(len);
    }
    return total;
}

long long naive_range_count(const SquaresTable& table, const Positional<int>& lpf_values)
{
    long long total = 0;
    for (const auto& [p, set] : table.per_p)
        for (const Interval& iv : set.intervals())
            for (int k = iv.lo; k <= iv.hi; ++k) total += lpf_values[static_cast<std::size_t>(k)] < 2 * p;
    return total;
}

CountReport count_squares(const Text& t, Relation r)
{
    CountReport report;
    report.relation = r;
    if (t.n() < 2) return report;
    Indexes ix(t, r);
    const SquaresTable table = squares_table(ix.forward, ix.mirror);
    const Positional<int> approx = lpf(ix.forward);
    report.intervals = table.interval_count();
    report.oscillation = oscillation(approx);
    report.nonequivalent = sweep_count(table, approx);
    if (r == Relation::exact) {
        report.distinct = report.nonequivalent;
    } else {
        const Encoder exact(t, Encoding::exact);
        report.distinct = sweep_count(table, lpf(ScerIndex(exact)));
    }
    return report;
}

long long count_nonequivalent(const Text& t, Relation r) { return count_squares(t, r).nonequivalent; }

long long count_distinct(const Text& t, Relation r) { return count_squares(t, r).distinct; }

}  // namespace gensq
