#ifndef GENSQ_INDEX_HPP
#define GENSQ_INDEX_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "gensq/encodings.hpp"
#include "gensq/text.hpp"

namespace gensq {

// Sparse table over a fixed array; O(1) range minimum (and its leftmost
// position) after O(n log n) preprocessing.
class SparseTableMin {
public:
    SparseTableMin() = default;
    explicit SparseTableMin(std::vector<int> values);

    std::size_t size() const { return values_.size(); }
    int value(std::size_t i) const { return values_[i]; }

    // Inclusive 0-based range, lo <= hi.
    std::size_t argmin(std::size_t lo, std::size_t hi) const;
    int min(std::size_t lo, std::size_t hi) const { return values_[argmin(lo, hi)]; }

private:
    std::size_t better(std::size_t a, std::size_t b) const
    {
        return values_[b] < values_[a] || (values_[b] == values_[a] && b < a) ? b : a;
    }

    std::vector<int> values_;
    std::vector<std::vector<std::size_t>> levels_;
};

// Sorted order of the code strings Code(T[i..n])#, i in [1..n+1], with the
// sentinel # below every code, plus the adjacent LCP array and RMQ over it.
class ScerIndex {
public:
    explicit ScerIndex(const Encoder& enc);

    int n() const { return n_; }
    Encoding encoding() const { return encoding_; }

    // order()[r] is the start position (1..n+1) with rank r; rank 0 is n+1.
    const std::vector<int>& order() const { return order_; }
    int rank(int pos) const { return rank_[static_cast<std::size_t>(pos)]; }
    // lcp_array()[r] = LCP of ranks r-1 and r; entry 0 is 0.
    const std::vector<int>& lcp_array() const { return lcp_; }

    // Longest l with T[i..i+l) ~ T[j..j+l); i, j in [1..n+1].
    int lcp(int i, int j) const;

    // Rank, start position and LCP value per row.
    void dump_tsv(std::ostream& out) const;

private:
    int n_;
    Encoding encoding_;
    std::vector<int> order_;
    std::vector<int> rank_;
    std::vector<int> lcp_;
    SparseTableMin rmq_;
};

// LPF[i] = max l such that T[i..i+l) matches T[j..j+l) for some j < i.
Positional<int> lpf(const ScerIndex& idx);

struct LpfArrays {
    Positional<int> approx;
    Positional<int> exact;
};

// approx from the relation index, exact from an exact-relation index of the same text.
LpfArrays lpf_arrays(const ScerIndex& relation_index, const ScerIndex& exact_index);

// Sum of |A[i+1] - A[i]|.
long long oscillation(const Positional<int>& a);

// Compacted trie materialised from (order, lcp). Internal nodes carry their
// string depth; leaves carry the length of their code string including #.
class WeightedTreeView {
public:
    struct Node {
        int weight = 0;
        int parent = -1;
        std::vector<int> children;
        int label = 0;            // start position for leaves, 0 for internal nodes
        int leaf_lo = 0;          // rank range of the leaves below
        int leaf_hi = -1;
        int pre = 0;
        int post = 0;
        bool is_leaf() const { return label != 0; }
        int leaf_count() const { return leaf_hi - leaf_lo + 1; }
    };

    explicit WeightedTreeView(const ScerIndex& idx);

    const std::vector<Node>& nodes() const { return nodes_; }
    int root() const { return 0; }
    int leaf_of(int pos) const { return leaf_[static_cast<std::size_t>(pos)]; }
    int n() const { return n_; }

    // Leaves left to right, i.e. the index order.
    std::vector<int> leaf_labels() const;

    bool in_subtree(int node, int ancestor) const
    {
        const Node& a = nodes_[static_cast<std::size_t>(ancestor)];
        const Node& v = nodes_[static_cast<std::size_t>(node)];
        return a.pre <= v.pre && v.post <= a.post;
    }

    // Walks parent links; intended for checks, not hot paths.
    int lca(int u, int v) const;

private:
    int n_;
    std::vector<Node> nodes_;
    std::vector<int> leaf_;
};

}  // namespace gensq

#endif
