#include "gensq/encodings.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace gensq {

std::string_view to_string(Relation r)
{
    switch (r) {
    case Relation::exact: return "exact";
    case Relation::param: return "param";
    case Relation::op: return "op";
    case Relation::ct: return "ct";
    case Relation::pal: return "pal";
    }
    return "?";
}

std::string_view to_string(Encoding e)
{
    switch (e) {
    case Encoding::exact: return "exact";
    case Encoding::prev: return "prev";
    case Encoding::order: return "order";
    case Encoding::parent_distance: return "parent-distance";
    case Encoding::parent_distance_strict: return "parent-distance-strict";
    case Encoding::lpal: return "lpal";
    case Encoding::big_e: return "big-e";
    }
    return "?";
}

std::optional<Relation> parse_relation(std::string_view s)
{
    for (Relation r : all_relations)
        if (to_string(r) == s) return r;
    return std::nullopt;
}

Relation relation_of(Encoding e)
{
    switch (e) {
    case Encoding::exact: return Relation::exact;
    case Encoding::prev:
    case Encoding::big_e: return Relation::param;
    case Encoding::order: return Relation::op;
    case Encoding::parent_distance:
    case Encoding::parent_distance_strict: return Relation::ct;
    case Encoding::lpal: return Relation::pal;
    }
    return Relation::exact;
}

Encoding default_encoding(Relation r)
{
    switch (r) {
    case Relation::exact: return Encoding::exact;
    case Relation::param: return Encoding::prev;
    case Relation::op: return Encoding::order;
    case Relation::ct: return Encoding::parent_distance;
    case Relation::pal: return Encoding::lpal;
    }
    return Encoding::exact;
}

Encoding mirror_encoding(Relation r)
{
    // PD uses "<=" so an earlier equal symbol acts as the smaller one; after
    // reversal the later one must win, which is the strict comparison.
    return r == Relation::ct ? Encoding::parent_distance_strict : default_encoding(r);
}

PalindromeRadii maximal_palindromes(const Text& t)
{
    const int n = t.n();
    PalindromeRadii res{Positional<int>(t.size()), Positional<int>(t.size())};
    auto s = t.symbols();

    // Manacher, 0-based internally.
    std::vector<int> d1(static_cast<std::size_t>(n)), d2(static_cast<std::size_t>(n));
    for (int i = 0, l = 0, r = -1; i < n; ++i) {
        int k = (i > r) ? 1 : std::min(d1[static_cast<std::size_t>(l + r - i)], r - i + 1);
        while (i - k >= 0 && i + k < n && s[static_cast<std::size_t>(i - k)] == s[static_cast<std::size_t>(i + k)]) ++k;
        d1[static_cast<std::size_t>(i)] = k--;
        if (i + k > r) { l = i - k; r = i + k; }
    }
    for (int i = 0, l = 0, r = -1; i < n; ++i) {
        int k = (i > r) ? 0 : std::min(d2[static_cast<std::size_t>(l + r - i + 1)], r - i + 1);
        while (i - k - 1 >= 0 && i + k < n && s[static_cast<std::size_t>(i - k - 1)] == s[static_cast<std::size_t>(i + k)]) ++k;
        d2[static_cast<std::size_t>(i)] = k--;
        if (i + k > r) { l = i - k - 1; r = i + k; }
    }
    for (int c = 1; c <= n; ++c) res.odd[static_cast<std::size_t>(c)] = d1[static_cast<std::size_t>(c - 1)] - 1;
    // d2[k] is centred between 0-based k-1 and k, i.e. 1-based k and k+1.
    for (int c = 1; c < n; ++c) res.even[static_cast<std::size_t>(c)] = d2[static_cast<std::size_t>(c)];
    return res;
}

namespace {

Positional<Symbol> forward_profile(const Text& t)
{
    Positional<Symbol> out(t.size());
    std::vector<int> last(static_cast<std::size_t>(t.sigma()), 0);
    for (int i = 1; i <= t.n(); ++i) {
        const int p = last[static_cast<std::size_t>(t[i])];
        int distinct = 0;
        for (int l : last) distinct += (l > p) ? 1 : 0;
        out[static_cast<std::size_t>(i)] = distinct;
        last[static_cast<std::size_t>(t[i])] = i;
    }
    return out;
}

// Max segment tree answering "leftmost index in [lo..hi] with value >= v".
class LeftmostAtLeast {
public:
    LeftmostAtLeast() = default;
    explicit LeftmostAtLeast(std::vector<int> values) : n_(static_cast<int>(values.size()))
    {
        size_ = 1;
        while (size_ < n_) size_ <<= 1;
        tree_.assign(2 * static_cast<std::size_t>(size_), std::numeric_limits<int>::min());
        for (int i = 0; i < n_; ++i) tree_[static_cast<std::size_t>(size_ + i)] = values[static_cast<std::size_t>(i)];
        for (int i = size_ - 1; i >= 1; --i)
            tree_[static_cast<std::size_t>(i)] = std::max(tree_[static_cast<std::size_t>(2 * i)], tree_[static_cast<std::size_t>(2 * i + 1)]);
    }

    // 0-based inclusive range; -1 if none.
    int query(int lo, int hi, int v) const
    {
        if (lo > hi || n_ == 0) return -1;
        return descend(1, 0, size_ - 1, lo, hi, v);
    }

private:
    int descend(int node, int nl, int nr, int lo, int hi, int v) const
    {
        if (nr < lo || nl > hi || tree_[static_cast<std::size_t>(node)] < v) return -1;
        if (nl == nr) return nl;
        const int mid = (nl + nr) / 2;
        int r = descend(2 * node, nl, mid, lo, hi, v);
        if (r != -1) return r;
        return descend(2 * node + 1, mid + 1, nr, lo, hi, v);
    }

    int n_ = 0;
    int size_ = 1;
    std::vector<int> tree_;
};

}  // namespace

Profiles profiles(const Text& t)
{
    Profiles p;
    p.forward = forward_profile(t);
    Positional<Symbol> rev = forward_profile(t.reversed());
    p.backward = Positional<Symbol>(t.size());
    const int n = t.n();
    for (int i = 1; i <= n; ++i) p.backward[static_cast<std::size_t>(i)] = rev[static_cast<std::size_t>(n + 1 - i)];
    return p;
}

// Points (c, c + r) for maximal palindromes; Lpal(T[i..j]) takes the leftmost
// centre in the admissible range whose palindrome still reaches j.
struct Encoder::Lpal {
    LeftmostAtLeast odd;   // index c-1 holds c + odd[c]
    LeftmostAtLeast even;  // index c-1 holds c + even[c], c in [1..n-1]
};

Encoder::Encoder(const Text& t, Encoding e) : text_(&t), encoding_(e), link_(t.size())
{
    const int n = t.n();
    switch (e) {
    case Encoding::prev:
    case Encoding::big_e:
        link_ = prev_array(t);
        if (e == Encoding::big_e) counts_ = std::make_unique<PrefixCounts>(t);
        break;
    case Encoding::parent_distance:
    case Encoding::parent_distance_strict: {
        const bool strict = e == Encoding::parent_distance_strict;
        std::vector<int> stack;
        for (int j = 1; j <= n; ++j) {
            // Keep on the stack exactly the candidates that can still be a
            // nearest "<= T[j]" (or "<") to the left.
            while (!stack.empty() && (strict ? t[stack.back()] >= t[j] : t[stack.back()] > t[j])) stack.pop_back();
            link_[static_cast<std::size_t>(j)] = stack.empty() ? 0 : stack.back();
            stack.push_back(j);
        }
        break;
    }
    case Encoding::lpal: {
        PalindromeRadii rad = maximal_palindromes(t);
        std::vector<int> odd(static_cast<std::size_t>(n)), even(static_cast<std::size_t>(std::max(n - 1, 0)));
        for (int c = 1; c <= n; ++c) odd[static_cast<std::size_t>(c - 1)] = c + rad.odd[static_cast<std::size_t>(c)];
        for (int c = 1; c < n; ++c) even[static_cast<std::size_t>(c - 1)] = c + rad.even[static_cast<std::size_t>(c)];
        lpal_ = std::make_unique<Lpal>(Lpal{LeftmostAtLeast(std::move(odd)), LeftmostAtLeast(std::move(even))});
        break;
    }
    case Encoding::exact:
    case Encoding::order:
        break;
    }
}

Encoder::~Encoder() = default;
Encoder::Encoder(Encoder&&) noexcept = default;
Encoder& Encoder::operator=(Encoder&&) noexcept = default;

Code Encoder::code(int i, int j) const
{
    if (i < 1 || j > text_->n() || i > j)
        throw std::out_of_range("code: invalid range [" + std::to_string(i) + ".." + std::to_string(j) + "] for n=" +
                                std::to_string(text_->n()));
    return code_unchecked(i, j);
}

Code Encoder::code_unchecked(int i, int j) const
{
    switch (encoding_) {
    case Encoding::exact:
        return (*text_)[static_cast<std::size_t>(j)];
    case Encoding::prev:
    case Encoding::parent_distance:
    case Encoding::parent_distance_strict: {
        const int p = link_[static_cast<std::size_t>(j)];
        return p >= i ? j - p : 0;
    }
    case Encoding::order:
        return order_code(i, j);
    case Encoding::lpal:
        return lpal_code(i, j);
    case Encoding::big_e:
        return big_e_code(i, j);
    }
    return 0;
}

Code Encoder::order_code(int i, int j) const
{
    const Text& t = *text_;
    const Symbol last = t[static_cast<std::size_t>(j)];
    Symbol below = -1, above = std::numeric_limits<Symbol>::max();
    int alpha = 0, beta = 0;
    for (int k = j - 1; k >= i; --k) {
        const Symbol v = t[static_cast<std::size_t>(k)];
        if (v <= last && v > below) { below = v; alpha = k - i + 1; }
        if (v >= last && v < above) { above = v; beta = k - i + 1; }
    }
    return static_cast<Code>(alpha) * (j - i + 1) + beta;
}

Code Encoder::lpal_code(int i, int j) const
{
    // Odd: centre x in [ceil((i+j)/2)..j] with x + odd[x] >= j; x = j always qualifies.
    const int odd_lo = (i + j + 1) / 2;
    const int x = lpal_->odd.query(odd_lo - 1, j - 1, j) + 1;
    Code best = 2 * static_cast<Code>(j - x) + 1;
    // Even: centre c in [ceil((i+j-1)/2)..j-1] with c + even[c] >= j.
    if (j > i) {
        const int even_lo = (i + j) / 2;
        const int c = lpal_->even.query(even_lo - 1, j - 2, j);
        if (c >= 0) best = std::max(best, 2 * static_cast<Code>(j - (c + 1)));
    }
    return best;
}

Code Encoder::big_e_code(int i, int j) const
{
    const int from = std::max(link_[static_cast<std::size_t>(j)] + 1, i);
    if (from > j - 1) return 0;
    Code distinct = 0;
    for (Symbol c = 0; c < counts_->sigma(); ++c)
        distinct += (counts_->count(c, j - 1) - counts_->count(c, from - 1) > 0) ? 1 : 0;
    return distinct;
}

bool scer_match(const Encoder& enc, int i1, int j1, int i2, int j2)
{
    const int n = enc.text().n();
    auto bad = [n](int i, int j) { return i < 1 || j > n || i > j + 1; };
    if (bad(i1, j1) || bad(i2, j2)) throw std::out_of_range("scer_match: invalid range");
    if (j1 - i1 != j2 - i2) return false;
    for (int k = 0; i1 + k <= j1; ++k)
        if (enc.code_unchecked(i1, i1 + k) != enc.code_unchecked(i2, i2 + k)) return false;
    return true;
}

int scan_lcp(const Encoder& enc, int i, int j)
{
    const int n = enc.text().n();
    int l = 0;
    while (i + l <= n && j + l <= n && enc.code_unchecked(i, i + l) == enc.code_unchecked(j, j + l)) ++l;
    return l;
}

}  // namespace gensq
