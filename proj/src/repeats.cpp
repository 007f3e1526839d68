#include "gensq/repeats.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

namespace gensq {

namespace {

// Runs fn(period) for every period in [lo..hi] and concatenates the per-period
// outputs in period order, independent of the thread count.
template <typename T, typename Fn>
std::vector<T> per_period(int lo, int hi, int threads, Fn fn)
{
    if (hi < lo) return {};
    const int count = hi - lo + 1;
    std::vector<std::vector<T>> parts(static_cast<std::size_t>(count));
    const int workers = std::clamp(threads, 1, count);
    if (workers == 1) {
        for (int p = lo; p <= hi; ++p) parts[static_cast<std::size_t>(p - lo)] = fn(p);
    } else {
        std::atomic<int> next{lo};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int p = next++; p <= hi; p = next++) parts[static_cast<std::size_t>(p - lo)] = fn(p);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<T> out;
    for (auto& part : parts) out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    return out;
}

std::pair<int, int> clamp_periods(const PeriodRange& r, int natural_max)
{
    const int lo = std::max(1, r.lo);
    const int hi = r.hi <= 0 ? natural_max : std::min(r.hi, natural_max);
    return {lo, hi};
}

// Visits every maximal stretch of windows [i..i+ell) with the same mismatch
// set; emit(first_window, last_window, mismatch_count).
template <typename Emit>
void scan_uniform(const Text& t, int ell, Emit&& emit)
{
    const int n = t.n();
    const int windows = n - 2 * ell + 1;
    if (windows <= 0) return;
    const Symbol* s = t.symbols().data() - 1;  // 1-based
    int count = 0;
    for (int x = 1; x <= ell; ++x) count += s[x] != s[x + ell];
    int start = 1, start_count = count;
    for (int i = 2; i <= windows; ++i) {
        const bool out = s[i - 1] != s[i - 1 + ell];
        const bool in = s[i + ell - 1] != s[i + 2 * ell - 1];
        if (out | in) {
            emit(start, i - 1, start_count);
            count += static_cast<int>(in) - static_cast<int>(out);
            start = i;
            start_count = count;
        }
    }
    emit(start, windows, start_count);
}

// Maximal blocks [s..e] of positions x in [1..n-p] with T[x] = T[x+p].
template <typename Emit>
void scan_blocks(const Text& t, int p, Emit&& emit)
{
    const int n = t.n();
    const Symbol* s = t.symbols().data() - 1;
    int x = 1;
    while (x <= n - p) {
        if (s[x] != s[x + p]) { ++x; continue; }
        const int start = x;
        while (x <= n - p && s[x] == s[x + p]) ++x;
        emit(start, x - 1);
    }
}

}  // namespace

std::vector<int> mismatch_positions(const Text& t, int ell)
{
    if (ell < 1 || ell > t.n()) throw std::invalid_argument("mismatch_positions: period out of range");
    std::vector<int> out;
    for (int i = 1; i + ell <= t.n(); ++i)
        if (t[static_cast<std::size_t>(i)] != t[static_cast<std::size_t>(i + ell)]) out.push_back(i);
    return out;
}

bool is_k_mismatch_square(const Text& t, int i, int ell, int k)
{
    if (i < 1 || ell < 1 || i + 2 * ell > t.n() + 1)
        throw std::out_of_range("is_k_mismatch_square: T[" + std::to_string(i) + ".." + std::to_string(i + 2 * ell) +
                                ") exceeds the text");
    int mism = 0;
    for (int j = i; j < i + ell; ++j) mism += t[static_cast<std::size_t>(j)] != t[static_cast<std::size_t>(j + ell)];
    return mism <= k;
}

std::vector<UniformKRun> uniform_k_runs(const Text& t, int k, const EnumOptions& opt)
{
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    auto [lo, hi] = clamp_periods(opt.periods, t.n() / 2);
    return per_period<UniformKRun>(lo, hi, opt.threads, [&](int ell) {
        std::vector<UniformKRun> runs;
        scan_uniform(t, ell, [&](int first, int last, int count) {
            if (count > k) return;
            UniformKRun run{first, last + 2 * ell, ell, k, {}};
            if (count > 0)
                for (int j = first; j < first + ell; ++j)
                    if (t[static_cast<std::size_t>(j)] != t[static_cast<std::size_t>(j + ell)]) run.mismatches.push_back(j);
            runs.push_back(std::move(run));
        });
        return runs;
    });
}

long long count_uniform_k_runs(const Text& t, int k, const EnumOptions& opt)
{
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    auto [lo, hi] = clamp_periods(opt.periods, t.n() / 2);
    auto counts = per_period<long long>(lo, hi, opt.threads, [&](int ell) {
        long long c = 0;
        scan_uniform(t, ell, [&](int, int, int count) { c += count <= k; });
        return std::vector<long long>{c};
    });
    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

std::vector<KRun> k_runs(const Text& t, int k, const EnumOptions& opt)
{
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    auto [lo, hi] = clamp_periods(opt.periods, t.n() / 2);
    return per_period<KRun>(lo, hi, opt.threads, [&](int ell) {
        std::vector<KRun> runs;
        const int windows = t.n() - 2 * ell + 1;
        const Symbol* s = t.symbols().data() - 1;
        int count = 0;
        for (int x = 1; x <= ell; ++x) count += s[x] != s[x + ell];
        int start = 0;  // 0: not inside a run
        for (int i = 1; i <= windows; ++i) {
            if (i > 1) count += static_cast<int>(s[i + ell - 1] != s[i + 2 * ell - 1]) - static_cast<int>(s[i - 1] != s[i - 1 + ell]);
            if (count <= k) {
                if (start == 0) start = i;
            } else if (start != 0) {
                runs.push_back({start, i - 1 + 2 * ell, ell, k});
                start = 0;
            }
        }
        if (start != 0) runs.push_back({start, windows + 2 * ell, ell, k});
        return runs;
    });
}

std::vector<GeneralisedRun> generalised_runs(const Text& t, const EnumOptions& opt)
{
    auto [lo, hi] = clamp_periods(opt.periods, t.n() / 2);
    return per_period<GeneralisedRun>(lo, hi, opt.threads, [&](int p) {
        std::vector<GeneralisedRun> runs;
        scan_blocks(t, p, [&](int s, int e) {
            if (e - s + 1 >= p) runs.push_back({s, e + p + 1, p});
        });
        return runs;
    });
}

std::vector<Mgr> mgrs(const Text& t, std::optional<Rational> alpha_max, const EnumOptions& opt)
{
    auto [lo, hi] = clamp_periods(opt.periods, t.n() - 1);
    lo = std::max(lo, 2);
    return per_period<Mgr>(lo, hi, opt.threads, [&](int ell) {
        std::vector<Mgr> out;
        scan_blocks(t, ell, [&](int s, int e) {
            const int arm = e - s + 1;
            if (arm >= ell) return;  // empty or negative gap: generalised-run territory
            if (alpha_max && static_cast<long long>(ell) * alpha_max->den > alpha_max->num * arm) return;
            out.push_back({s, s + ell + arm, ell, arm});
        });
        return out;
    });
}

namespace {

bool intersects(int x, int y, int ell, const UniformKRun& run)
{
    if (ell != run.ell) throw std::invalid_argument("induces: period mismatch");
    // [x..y-ell) and [a..b-ell) as half-open intervals.
    return std::max(x, run.a) < std::min(y - ell, run.b - ell);
}

}  // namespace

bool induces(const Mgr& rep, const UniformKRun& run) { return intersects(rep.x, rep.y, rep.ell, run); }
bool induces(const GeneralisedRun& rep, const UniformKRun& run) { return intersects(rep.x, rep.y, rep.p, run); }

}  // namespace gensq
