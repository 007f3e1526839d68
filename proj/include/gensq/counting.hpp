#ifndef GENSQ_COUNTING_HPP
#define GENSQ_COUNTING_HPP

#include <map>
#include <vector>

#include "gensq/encodings.hpp"
#include "gensq/index.hpp"
#include "gensq/psquares.hpp"
#include "gensq/text.hpp"

namespace gensq {

// Dynamic set Y over [1..n] with a cursor l in [0..n]; every operation
// returns |Y ∩ [l+1..n]|.
class CountingStructure {
public:
    explicit CountingStructure(int n);

    long long insert(int x);
    long long erase(int x);
    long long inc();
    long long dec();
    // Moves the cursor with inc/dec steps.
    long long move_to(int l);

    long long count() const { return answer_; }
    int cursor() const { return cursor_; }
    int n() const { return n_; }
    bool contains(int x) const { return present_[static_cast<std::size_t>(x)] != 0; }

private:
    void check(int x) const;

    int n_;
    int cursor_ = 0;
    long long answer_ = 0;
    std::vector<char> present_;
};

// T[i..i+2p) is a square under the index relation.
struct SquareStart {
    int i = 0;
    int p = 0;

    friend bool operator==(const SquareStart&, const SquareStart&) = default;
    friend auto operator<=>(const SquareStart&, const SquareStart&) = default;
};

// All (i, p) with lcp(i, i+p) = p, sorted by (i, p). Pairs are listed from
// the tree view: for a node of weight w, leaves outside its largest child
// probe partners at distance w.
std::vector<SquareStart> nonextendible_pairs(const ScerIndex& idx);

// Per half period p: starts of squares that cannot be shifted one position
// left (left) or right (right), sorted.
struct NonShiftable {
    std::map<int, std::vector<int>> left;
    std::map<int, std::vector<int>> right;
};

// idx indexes T under some relation, mirror_idx indexes rev(T) under
// mirror_encoding of that relation.
NonShiftable nonshiftable_squares(const ScerIndex& idx, const ScerIndex& mirror_idx);

struct SquaresTable {
    int n = 0;
    std::map<int, IntervalSet> per_p;  // only non-empty entries

    bool contains(int i, int p) const;
    std::size_t interval_count() const;
};

SquaresTable squares_table(const ScerIndex& idx, const ScerIndex& mirror_idx);
SquaresTable squares_table(const Text& t, Relation r);

// Sum over all table intervals [i..j] and p of |{k in [i..j] : lpf[k] < 2p}|,
// by a left-to-right sweep over a CountingStructure.
long long sweep_count(const SquaresTable& table, const Positional<int>& lpf_values);

// Same quantity by direct double loop.
long long naive_range_count(const SquaresTable& table, const Positional<int>& lpf_values);

struct CountReport {
    Relation relation = Relation::exact;
    long long nonequivalent = 0;
    long long distinct = 0;
    std::size_t intervals = 0;
    long long oscillation = 0;  // of the relation's LPF array
};

CountReport count_squares(const Text& t, Relation r);

long long count_nonequivalent(const Text& t, Relation r);
long long count_distinct(const Text& t, Relation r);

}  // namespace gensq

#endif
