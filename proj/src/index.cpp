#include "gensq/index.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cassert>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gensq {

SparseTableMin::SparseTableMin(std::vector<int> values) : values_(std::move(values))
{
    const std::size_t n = values_.size();
    if (n == 0) return;
    levels_.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i) levels_[0][i] = i;
    for (std::size_t width = 2; width <= n; width *= 2) {
        const auto& prev = levels_.back();
        std::vector<std::size_t> cur(n - width + 1);
        for (std::size_t i = 0; i + width <= n; ++i) cur[i] = better(prev[i], prev[i + width / 2]);
        levels_.push_back(std::move(cur));
    }
}

std::size_t SparseTableMin::argmin(std::size_t lo, std::size_t hi) const
{
    assert(lo <= hi && hi < values_.size());
    const std::size_t len = hi - lo + 1;
    const std::size_t k = static_cast<std::size_t>(std::bit_width(len) - 1);
    return better(levels_[k][lo], levels_[k][hi + 1 - (std::size_t{1} << k)]);
}

namespace {

struct Item {
    Code key;
    int pos;
};

class CodeStrings {
public:
    CodeStrings(const Encoder& enc) : enc_(enc), n_(enc.text().n()) {}

    // Depth-th symbol (0-based) of Code(T[pos..n])#.
    Code at(int pos, int depth) const
    {
        const int j = pos + depth;
        return j <= n_ ? enc_.code_unchecked(pos, j) : Code{-1};
    }

private:
    const Encoder& enc_;
    int n_;
};

// Multikey quicksort on code strings. Keys of a range stay valid for the
// "<" and ">" parts, so each depth is evaluated once per partition level.
std::vector<int> sort_code_strings(const CodeStrings& cs, int n)
{
    std::vector<Item> items(static_cast<std::size_t>(n) + 1);
    for (int p = 1; p <= n + 1; ++p) items[static_cast<std::size_t>(p - 1)] = {0, p};

    struct Frame {
        std::size_t lo, hi;
        int depth;
        bool keyed;
    };
    std::vector<Frame> stack{{0, items.size(), 0, false}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.hi - f.lo <= 1) continue;
        if (!f.keyed)
            for (std::size_t k = f.lo; k < f.hi; ++k) items[k].key = cs.at(items[k].pos, f.depth);

        const Code a = items[f.lo].key, b = items[(f.lo + f.hi) / 2].key, c = items[f.hi - 1].key;
        const Code pivot = std::max(std::min(a, b), std::min(std::max(a, b), c));

        std::size_t lt = f.lo, i = f.lo, gt = f.hi;
        while (i < gt) {
            if (items[i].key < pivot) std::swap(items[lt++], items[i++]);
            else if (items[i].key > pivot) std::swap(items[i], items[--gt]);
            else ++i;
        }
        stack.push_back({f.lo, lt, f.depth, true});
        stack.push_back({gt, f.hi, f.depth, true});
        if (pivot != -1) stack.push_back({lt, gt, f.depth + 1, false});
    }

    std::vector<int> order(items.size());
    for (std::size_t r = 0; r < items.size(); ++r) order[r] = items[r].pos;
    return order;
}

}  // namespace

ScerIndex::ScerIndex(const Encoder& enc) : n_(enc.text().n()), encoding_(enc.encoding())
{
    CodeStrings cs(enc);
    order_ = sort_code_strings(cs, n_);
    rank_.assign(static_cast<std::size_t>(n_) + 2, 0);
    for (std::size_t r = 0; r < order_.size(); ++r) rank_[static_cast<std::size_t>(order_[r])] = static_cast<int>(r);

    // Rank walk in text order. The quasi-suffix property gives
    // LCP(S_{j+1}, S_{i+1}) >= h - 1 when LCP(S_j, S_i) = h > 0, but unlike
    // plain suffixes S_{j+1} need not precede S_{i+1}; the carry is only a
    // valid lower bound for the predecessor when it does.
    lcp_.assign(order_.size(), 0);
    int carry = 0;
    for (int i = 1; i <= n_; ++i) {
        const int r = rank_[static_cast<std::size_t>(i)];
        const int j = order_[static_cast<std::size_t>(r - 1)];
        int h = carry;
        while (cs.at(i, h) == cs.at(j, h) && cs.at(i, h) != -1) ++h;
        lcp_[static_cast<std::size_t>(r)] = h;
        carry = (h > 0 && rank_[static_cast<std::size_t>(j + 1)] < rank_[static_cast<std::size_t>(i + 1)]) ? h - 1 : 0;
    }
    rmq_ = SparseTableMin(lcp_);
}

int ScerIndex::lcp(int i, int j) const
{
    if (i < 1 || j < 1 || i > n_ + 1 || j > n_ + 1)
        throw std::out_of_range("lcp: position out of range [1.." + std::to_string(n_ + 1) + "]");
    if (i == j) return n_ - i + 1;
    int a = rank_[static_cast<std::size_t>(i)], b = rank_[static_cast<std::size_t>(j)];
    if (a > b) std::swap(a, b);
    return rmq_.min(static_cast<std::size_t>(a + 1), static_cast<std::size_t>(b));
}

void ScerIndex::dump_tsv(std::ostream& out) const
{
    out << "rank\tpos\tlcp\n";
    for (std::size_t r = 0; r < order_.size(); ++r) out << r << '\t' << order_[r] << '\t' << lcp_[r] << '\n';
}

Positional<int> lpf(const ScerIndex& idx)
{
    const int n = idx.n();
    Positional<int> out(static_cast<std::size_t>(n));
    const auto& order = idx.order();
    const int m = static_cast<int>(order.size());

    // Nearest rank on either side holding a smaller start position.
    std::vector<int> left(static_cast<std::size_t>(m), -1), right(static_cast<std::size_t>(m), -1);
    std::vector<int> stack;
    for (int r = 0; r < m; ++r) {
        while (!stack.empty() && order[static_cast<std::size_t>(stack.back())] > order[static_cast<std::size_t>(r)]) {
            right[static_cast<std::size_t>(stack.back())] = r;
            stack.pop_back();
        }
        left[static_cast<std::size_t>(r)] = stack.empty() ? -1 : stack.back();
        stack.push_back(r);
    }
    for (int r = 0; r < m; ++r) {
        const int pos = order[static_cast<std::size_t>(r)];
        if (pos > n) continue;
        int best = 0;
        for (int other : {left[static_cast<std::size_t>(r)], right[static_cast<std::size_t>(r)]})
            if (other >= 0) best = std::max(best, idx.lcp(pos, order[static_cast<std::size_t>(other)]));
        out[static_cast<std::size_t>(pos)] = best;
    }
    return out;
}

LpfArrays lpf_arrays(const ScerIndex& relation_index, const ScerIndex& exact_index)
{
    if (relation_index.n() != exact_index.n()) throw std::invalid_argument("lpf_arrays: index size mismatch");
    return {lpf(relation_index), lpf(exact_index)};
}

long long oscillation(const Positional<int>& a)
{
    long long total = 0;
    for (std::size_t i = 1; i < a.size(); ++i) total += std::abs(a[i + 1] - a[i]);
    return total;
}

WeightedTreeView::WeightedTreeView(const ScerIndex& idx) : n_(idx.n()), leaf_(static_cast<std::size_t>(idx.n()) + 2, -1)
{
    const auto& order = idx.order();
    const auto& lcp = idx.lcp_array();

    auto add_leaf = [&](int r) {
        const int pos = order[static_cast<std::size_t>(r)];
        Node leaf;
        leaf.weight = n_ - pos + 2;
        leaf.label = pos;
        leaf.leaf_lo = leaf.leaf_hi = r;
        nodes_.push_back(std::move(leaf));
        const int id = static_cast<int>(nodes_.size()) - 1;
        leaf_[static_cast<std::size_t>(pos)] = id;
        return id;
    };
    auto attach = [&](int parent, int child) {
        nodes_[static_cast<std::size_t>(child)].parent = parent;
        nodes_[static_cast<std::size_t>(parent)].children.push_back(child);
    };

    nodes_.push_back(Node{});  // root, weight 0
    // Leaves are stacked like nodes; their weight exceeds every LCP value.
    std::vector<int> open{0};
    open.push_back(add_leaf(0));
    for (int r = 1; r < static_cast<int>(order.size()); ++r) {
        const int h = lcp[static_cast<std::size_t>(r)];
        int last = -1;
        while (nodes_[static_cast<std::size_t>(open.back())].weight > h) {
            last = open.back();
            open.pop_back();
            if (nodes_[static_cast<std::size_t>(open.back())].weight >= h) {
                attach(open.back(), last);
                last = -1;
            }
        }
        if (nodes_[static_cast<std::size_t>(open.back())].weight < h) {
            Node inner;
            inner.weight = h;
            nodes_.push_back(std::move(inner));
            const int id = static_cast<int>(nodes_.size()) - 1;
            if (last != -1) attach(id, last);
            open.push_back(id);
        }
        open.push_back(add_leaf(r));
    }
    while (open.size() > 1) {
        const int v = open.back();
        open.pop_back();
        attach(open.back(), v);
    }

    // Pre/post numbering and leaf rank ranges.
    int clock = 0;
    std::vector<std::pair<int, std::size_t>> dfs{{0, 0}};
    nodes_[0].pre = clock++;
    while (!dfs.empty()) {
        auto& [v, next] = dfs.back();
        Node& node = nodes_[static_cast<std::size_t>(v)];
        if (next < node.children.size()) {
            const int c = node.children[next++];
            nodes_[static_cast<std::size_t>(c)].pre = clock++;
            dfs.emplace_back(c, 0);
            continue;
        }
        node.post = clock++;
        if (!node.is_leaf() && !node.children.empty()) {
            node.leaf_lo = nodes_[static_cast<std::size_t>(node.children.front())].leaf_lo;
            node.leaf_hi = nodes_[static_cast<std::size_t>(node.children.back())].leaf_hi;
        }
        dfs.pop_back();
    }
}

std::vector<int> WeightedTreeView::leaf_labels() const
{
    std::vector<int> labels;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        const Node& node = nodes_[static_cast<std::size_t>(v)];
        if (node.is_leaf()) labels.push_back(node.label);
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.push_back(*it);
    }
    return labels;
}

int WeightedTreeView::lca(int u, int v) const
{
    while (!in_subtree(v, u)) u = nodes_[static_cast<std::size_t>(u)].parent;
    return u;
}

}  // namespace gensq
