#include "gensq/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace gensq::oracle {

namespace {

void check_cap(const Text& t, int cap)
{
    if (t.n() > cap)
        throw CapExceeded("oracle: text length " + std::to_string(t.n()) + " exceeds cap " + std::to_string(cap));
}

std::span<const Symbol> slice(const Text& t, int i, int len)
{
    return t.symbols().subspan(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(len));
}

bool param_match(std::span<const Symbol> x, std::span<const Symbol> y)
{
    std::unordered_map<Symbol, Symbol> f, g;
    for (std::size_t a = 0; a < x.size(); ++a) {
        auto [fi, fnew] = f.emplace(x[a], y[a]);
        auto [gi, gnew] = g.emplace(y[a], x[a]);
        if (fi->second != y[a] || gi->second != x[a]) return false;
    }
    return true;
}

int sign(Symbol a, Symbol b) { return (a > b) - (a < b); }

bool op_match(std::span<const Symbol> x, std::span<const Symbol> y)
{
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b)
            if (sign(x[a], x[b]) != sign(y[a], y[b])) return false;
    return true;
}

// Parent array of the min-Cartesian tree; among equal values the leftmost is the ancestor.
std::vector<int> cartesian_parents(std::span<const Symbol> x)
{
    std::vector<int> parent(x.size(), -1), stack;
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
        int last = -1;
        while (!stack.empty() && x[static_cast<std::size_t>(stack.back())] > x[static_cast<std::size_t>(i)]) {
            last = stack.back();
            stack.pop_back();
        }
        if (last != -1) parent[static_cast<std::size_t>(last)] = i;
        if (!stack.empty()) parent[static_cast<std::size_t>(i)] = stack.back();
        stack.push_back(i);
    }
    return parent;
}

bool is_palindrome(std::span<const Symbol> x, std::size_t a, std::size_t b)
{
    while (a < b)
        if (x[a++] != x[b--]) return false;
    return true;
}

bool pal_match(std::span<const Symbol> x, std::span<const Symbol> y)
{
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a; b < x.size(); ++b)
            if (is_palindrome(x, a, b) != is_palindrome(y, a, b)) return false;
    return true;
}

std::vector<int> canonical(Relation r, std::span<const Symbol> x)
{
    std::vector<int> out;
    switch (r) {
    case Relation::exact:
        out.assign(x.begin(), x.end());
        break;
    case Relation::param: {
        std::map<Symbol, int> label;
        for (Symbol c : x) out.push_back(label.emplace(c, static_cast<int>(label.size())).first->second);
        break;
    }
    case Relation::op: {
        std::vector<Symbol> values(x.begin(), x.end());
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (Symbol c : x)
            out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin()));
        break;
    }
    case Relation::ct:
        out = cartesian_parents(x);
        break;
    case Relation::pal:
        for (std::size_t a = 0; a < x.size(); ++a)
            for (std::size_t b = a; b < x.size(); ++b) out.push_back(is_palindrome(x, a, b));
        break;
    }
    return out;
}

}  // namespace

bool brute_match(Relation r, std::span<const Symbol> x, std::span<const Symbol> y)
{
    if (x.size() != y.size()) throw std::invalid_argument("brute_match: length mismatch");
    switch (r) {
    case Relation::exact: return std::equal(x.begin(), x.end(), y.begin());
    case Relation::param: return param_match(x, y);
    case Relation::op: return op_match(x, y);
    case Relation::ct: return cartesian_parents(x) == cartesian_parents(y);
    case Relation::pal: return pal_match(x, y);
    }
    return false;
}

bool brute_match(Relation r, const Text& t, int i, int j, int len)
{
    return brute_match(r, slice(t, i, len), slice(t, j, len));
}

bool brute_is_square(Relation r, const Text& t, int i, int p)
{
    return i >= 1 && p >= 1 && i + 2 * p - 1 <= t.n() && brute_match(r, t, i, i + p, p);
}

int brute_lcp(Relation r, const Text& t, int i, int j)
{
    const int limit = t.n() + 1 - std::max(i, j);
    int l = 0;
    while (l < limit && brute_match(r, t, i, j, l + 1)) ++l;
    return l;
}

Positional<int> brute_lpf(const Text& t, Relation r, int cap)
{
    check_cap(t, cap);
    Positional<int> out(t.size());
    for (int i = 1; i <= t.n(); ++i)
        for (int j = 1; j < i; ++j) out[static_cast<std::size_t>(i)] = std::max(out[static_cast<std::size_t>(i)], brute_lcp(r, t, i, j));
    return out;
}

std::vector<UniformKRun> brute_uniform_k_runs(const Text& t, int k, int cap)
{
    check_cap(t, cap);
    const int n = t.n();
    std::vector<UniformKRun> out;
    for (int ell = 1; 2 * ell <= n; ++ell) {
        const int windows = n - 2 * ell + 1;
        std::vector<std::vector<int>> sets(static_cast<std::size_t>(windows) + 2);
        for (int i = 1; i <= windows; ++i)
            for (int j = i; j < i + ell; ++j)
                if (t[static_cast<std::size_t>(j)] != t[static_cast<std::size_t>(j + ell)]) sets[static_cast<std::size_t>(i)].push_back(j);
        for (int a = 1; a <= windows; ++a) {
            const auto& set = sets[static_cast<std::size_t>(a)];
            if (static_cast<int>(set.size()) > k) continue;
            if (a > 1 && sets[static_cast<std::size_t>(a - 1)] == set) continue;  // extends to the left
            int last = a;
            while (last + 1 <= windows && sets[static_cast<std::size_t>(last + 1)] == set) ++last;
            out.push_back({a, last + 2 * ell, ell, k, set});
        }
    }
    return out;
}

std::vector<KRun> brute_k_runs(const Text& t, int k, int cap)
{
    check_cap(t, cap);
    const int n = t.n();
    std::vector<KRun> out;
    auto ok = [&](int i, int ell) {
        int h = 0;
        for (int j = i; j < i + ell; ++j) h += t[static_cast<std::size_t>(j)] != t[static_cast<std::size_t>(j + ell)];
        return h <= k;
    };
    for (int ell = 1; 2 * ell <= n; ++ell) {
        const int windows = n - 2 * ell + 1;
        for (int a = 1; a <= windows; ++a) {
            if (!ok(a, ell) || (a > 1 && ok(a - 1, ell))) continue;
            int last = a;
            while (last + 1 <= windows && ok(last + 1, ell)) ++last;
            out.push_back({a, last + 2 * ell, ell, k});
        }
    }
    return out;
}

std::vector<Mgr> brute_mgrs(const Text& t, int cap)
{
    check_cap(t, cap);
    const int n = t.n();
    auto sym = [&](int i) { return t[static_cast<std::size_t>(i)]; };
    std::vector<Mgr> out;
    for (int ell = 2; ell < n; ++ell)
        for (int x = 1; x + ell <= n; ++x)
            for (int arm = 1; arm < ell && x + ell + arm <= n + 1; ++arm) {
                const int y = x + ell + arm;
                bool arms_equal = true;
                for (int d = 0; d < arm && arms_equal; ++d) arms_equal = sym(x + d) == sym(x + ell + d);
                if (!arms_equal) break;  // longer arms contain this mismatch too
                const bool left_max = x == 1 || sym(x - 1) != sym(x - 1 + ell);
                const bool right_max = y == n + 1 || sym(y) != sym(y - ell);
                if (left_max && right_max) out.push_back({x, y, ell, arm});
            }
    return out;
}

std::vector<GeneralisedRun> brute_generalised_runs(const Text& t, int cap)
{
    check_cap(t, cap);
    const int n = t.n();
    auto sym = [&](int i) { return t[static_cast<std::size_t>(i)]; };
    std::vector<GeneralisedRun> out;
    for (int p = 1; 2 * p <= n; ++p)
        for (int x = 1; x + 2 * p <= n + 1; ++x)
            for (int y = x + 2 * p; y <= n + 1; ++y) {
                bool periodic = true;
                for (int j = x; j + p < y && periodic; ++j) periodic = sym(j) == sym(j + p);
                if (!periodic) break;
                const bool left_max = x == 1 || sym(x - 1) != sym(x - 1 + p);
                const bool right_max = y == n + 1 || sym(y) != sym(y - p);
                if (left_max && right_max) out.push_back({x, y, p});
            }
    return out;
}

std::map<int, std::vector<int>> brute_squares_table(const Text& t, Relation r, int cap)
{
    check_cap(t, cap);
    std::map<int, std::vector<int>> out;
    for (int p = 1; 2 * p <= t.n(); ++p)
        for (int i = 1; i + 2 * p - 1 <= t.n(); ++i)
            if (brute_is_square(r, t, i, p)) out[p].push_back(i);
    return out;
}

std::vector<std::pair<int, int>> brute_nonextendible(const Text& t, Relation r, int cap)
{
    check_cap(t, cap);
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= t.n(); ++i)
        for (int p = 1; i + 2 * p - 1 <= t.n(); ++p)
            if (brute_is_square(r, t, i, p) && (i + 2 * p - 1 == t.n() || !brute_match(r, t, i, i + p, p + 1)))
                out.emplace_back(i, p);
    return out;
}

Shiftability brute_nonshiftable(const Text& t, Relation r, int cap)
{
    check_cap(t, cap);
    Shiftability out;
    for (int p = 1; 2 * p <= t.n(); ++p)
        for (int i = 1; i + 2 * p - 1 <= t.n(); ++i) {
            if (!brute_is_square(r, t, i, p)) continue;
            if (!brute_is_square(r, t, i - 1, p)) out.left[p].push_back(i);
            if (!brute_is_square(r, t, i + 1, p)) out.right[p].push_back(i);
        }
    return out;
}

long long brute_count(const Text& t, Relation r, int cap)
{
    check_cap(t, cap);
    std::set<std::vector<int>> classes;
    for (int p = 1; 2 * p <= t.n(); ++p)
        for (int i = 1; i + 2 * p - 1 <= t.n(); ++i)
            if (brute_is_square(r, t, i, p)) classes.insert(canonical(r, slice(t, i, 2 * p)));
    return static_cast<long long>(classes.size());
}

long long brute_count_distinct(const Text& t, Relation r, int cap)
{
    check_cap(t, cap);
    std::set<std::vector<int>> strings;
    for (int p = 1; 2 * p <= t.n(); ++p)
        for (int i = 1; i + 2 * p - 1 <= t.n(); ++i)
            if (brute_is_square(r, t, i, p)) strings.insert(canonical(Relation::exact, slice(t, i, 2 * p)));
    return static_cast<long long>(strings.size());
}

long long brute_psquare_classes(const Text& t, int cap) { return brute_count(t, Relation::param, cap); }

std::vector<PSquare> brute_psquare_report(const Text& t, int cap)
{
    check_cap(t, cap);
    std::vector<PSquare> out;
    for (int p = 1; 2 * p <= t.n(); ++p) {
        std::set<std::vector<int>> seen;
        for (int i = 1; i + 2 * p - 1 <= t.n(); ++i)
            if (brute_is_square(Relation::param, t, i, p) && seen.insert(canonical(Relation::param, slice(t, i, 2 * p))).second)
                out.push_back({i, 2 * p});
    }
    return out;
}

}  // namespace gensq::oracle
