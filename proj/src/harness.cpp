#include "gensq/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "gensq/counting.hpp"
#include "gensq/index.hpp"
#include "gensq/psquares.hpp"
#include "gensq/repeats.hpp"

namespace gensq {

Text random_text(int n, int sigma, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> letter(0, std::max(sigma, 1) - 1);
    std::vector<std::int64_t> v(static_cast<std::size_t>(std::max(n, 0)));
    for (auto& x : v) x = letter(rng);
    return Text::from_values(v);
}

std::vector<Text> exhaustive_texts(int max_n, int sigma)
{
    std::vector<Text> out;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
        while (true) {
            out.push_back(Text::from_values(v));
            int pos = n - 1;
            while (pos >= 0 && v[static_cast<std::size_t>(pos)] == sigma - 1) v[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
            ++v[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

bool VerifyReport::ok() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

bool VerifyReport::group_ok(int group) const
{
    return std::all_of(suites.begin(), suites.end(), [&](const SuiteResult& s) { return s.group != group || s.ok(); });
}

namespace {

struct Failure {
    long long text_id = -1;
    std::string what;
};

class Ledger {
public:
    explicit Ledger(const std::vector<std::pair<std::string, int>>& names)
    {
        for (const auto& [name, group] : names) {
            slot_.emplace(name, results_.size());
            results_.push_back({name, group, 0, 0, {}});
            first_.emplace_back();
        }
    }

    void record(const std::string& name, bool ok, long long text_id, const std::function<std::string()>& what)
    {
        const std::size_t s = slot_.at(name);
        ++results_[s].cases;
        if (ok) return;
        ++results_[s].failures;
        if (first_[s].text_id < 0) first_[s] = {text_id, what()};
    }

    void merge(const Ledger& other)
    {
        for (std::size_t s = 0; s < results_.size(); ++s) {
            results_[s].cases += other.results_[s].cases;
            results_[s].failures += other.results_[s].failures;
            const Failure& f = other.first_[s];
            if (f.text_id >= 0 && (first_[s].text_id < 0 || f.text_id < first_[s].text_id)) first_[s] = f;
        }
    }

    std::vector<SuiteResult> finish() const
    {
        auto out = results_;
        for (std::size_t s = 0; s < out.size(); ++s) out[s].first_failure = first_[s].what;
        return out;
    }

private:
    std::map<std::string, std::size_t> slot_;
    std::vector<SuiteResult> results_;
    std::vector<Failure> first_;
};

std::string describe(const Text& t, long long id)
{
    std::ostringstream os;
    os << "text #" << id << " n=" << t.n() << " [";
    for (int i = 1; i <= std::min(t.n(), 40); ++i) os << (i > 1 ? "," : "") << t[static_cast<std::size_t>(i)];
    if (t.n() > 40) os << ",...";
    os << "]";
    return os.str();
}

std::string rel_name(const char* base, Relation r) { return std::string(base) + "/" + std::string(to_string(r)); }

std::vector<std::pair<std::string, int>> suite_names()
{
    std::vector<std::pair<std::string, int>> names = {
        {"uniform_k_runs", 4}, {"k_runs", 4}, {"mgrs", 4}, {"generalised_runs", 4},
    };
    for (Relation r : all_relations) {
        names.emplace_back(rel_name("squares_table", r), 4);
        names.emplace_back(rel_name("nonextendible_pairs", r), 4);
        names.emplace_back(rel_name("nonshiftable_squares", r), 4);
        names.emplace_back(rel_name("count_nonequivalent", r), 4);
        names.emplace_back(rel_name("count_distinct", r), 4);
    }
    names.emplace_back("report_nonequivalent/param", 4);
    names.emplace_back("induced_uniform_runs_at_most_2k+1", 5);
    names.emplace_back("uniform_run_coverage", 5);
    for (Relation r : all_relations) names.emplace_back(rel_name("lpf_oscillation_below_3n", r), 5);
    names.emplace_back("generalised_runs_below_1.5n", 6);
    names.emplace_back("alpha_mgrs_below_13n_alpha", 6);
    names.emplace_back("psquare_classes_below_n_sigma", 6);
    for (Relation r : all_relations) names.emplace_back(rel_name("sweep_equals_range_count", r), 8);
    names.emplace_back("counting_structure_ops", 8);
    return names;
}

template <typename T, typename Key>
std::vector<T> sorted_by(std::vector<T> v, Key key)
{
    std::sort(v.begin(), v.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
    return v;
}

void check_repeats(const Text& t, long long id, const VerifyConfig& cfg, Ledger& led)
{
    const int n = t.n();
    auto what = [&] { return describe(t, id); };

    const auto gr = generalised_runs(t);
    const auto mg = mgrs(t);
    const auto gkey = [](const GeneralisedRun& g) { return std::tuple(g.p, g.x, g.y); };
    const auto mkey = [](const Mgr& m) { return std::tuple(m.ell, m.x, m.y, m.arm); };
    led.record("generalised_runs", sorted_by(gr, gkey) == sorted_by(oracle::brute_generalised_runs(t, cfg.cap), gkey), id, what);
    led.record("mgrs", sorted_by(mg, mkey) == sorted_by(oracle::brute_mgrs(t, cfg.cap), mkey), id, what);
    led.record("generalised_runs_below_1.5n", gr.empty() || static_cast<double>(gr.size()) < 1.5 * n, id, what);

    std::map<int, std::vector<const Mgr*>> mgr_by_period;
    std::map<int, std::vector<const GeneralisedRun*>> gr_by_period;
    for (const Mgr& m : mg) mgr_by_period[m.ell].push_back(&m);
    for (const GeneralisedRun& g : gr) gr_by_period[g.p].push_back(&g);

    const auto ukey = [](const UniformKRun& u) { return std::tuple(u.ell, u.a, u.b); };
    const auto kkey = [](const KRun& u) { return std::tuple(u.ell, u.a, u.b); };
    for (int k = 0; k <= cfg.max_k; ++k) {
        auto what_k = [&] { return describe(t, id) + " k=" + std::to_string(k); };
        auto ur = uniform_k_runs(t, k);
        if (cfg.mutation == Mutation::windowing && !ur.empty()) ++ur.front().b;
        led.record("uniform_k_runs", sorted_by(ur, ukey) == sorted_by(oracle::brute_uniform_k_runs(t, k, cfg.cap), ukey), id, what_k);
        led.record("k_runs", sorted_by(k_runs(t, k), kkey) == sorted_by(oracle::brute_k_runs(t, k, cfg.cap), kkey), id, what_k);

        std::map<int, std::vector<const UniformKRun*>> ur_by_period;
        for (const UniformKRun& u : ur) ur_by_period[u.ell].push_back(&u);
        auto induced_count = [&](const auto& rep, int period) {
            int c = 0;
            auto it = ur_by_period.find(period);
            if (it != ur_by_period.end())
                for (const UniformKRun* u : it->second) c += induces(rep, *u);
            return c;
        };
        bool packages_ok = true;
        for (const Mgr& m : mg) packages_ok &= induced_count(m, m.ell) <= 2 * k + 1;
        for (const GeneralisedRun& g : gr) packages_ok &= induced_count(g, g.p) <= 2 * k + 1;
        led.record("induced_uniform_runs_at_most_2k+1", packages_ok, id, what_k);

        bool covered = true;
        for (const UniformKRun& u : ur) {
            if (u.ell < 4 * k) continue;
            bool by_run = false;
            for (const GeneralisedRun* g : gr_by_period[u.ell]) by_run |= induces(*g, u);
            if (by_run) continue;
            long long arms = 0;  // weights share the denominator ell
            for (const Mgr* m : mgr_by_period[u.ell])
                if (m->ell <= (2 * k + 2) * m->arm && induces(*m, u)) arms += m->arm;
            covered &= 4 * arms >= u.ell;
        }
        led.record("uniform_run_coverage", covered, id, what_k);

        bool alpha_ok = true;
        for (int alpha = 2; alpha <= 2 * k + 2; ++alpha) {
            long long c = 0;
            for (const Mgr& m : mg) c += m.ell <= static_cast<long long>(alpha) * m.arm;
            alpha_ok &= c == 0 || c < 13LL * n * alpha;
        }
        led.record("alpha_mgrs_below_13n_alpha", alpha_ok, id, what_k);
    }
}

IntervalSet as_interval_set(const std::vector<int>& starts)
{
    std::vector<Interval> v;
    for (int s : starts) v.push_back({s, s});
    return IntervalSet(std::move(v));
}

void check_relations(const Text& t, long long id, const VerifyConfig& cfg, Ledger& led)
{
    const int n = t.n();
    auto what = [&] { return describe(t, id); };
    const Text rev = t.reversed();

    for (Relation r : all_relations) {
        const Encoder fwd_enc(t, default_encoding(r));
        const Encoder mir_enc(rev, mirror_encoding(r));
        const ScerIndex fwd(fwd_enc), mir(mir_enc);

        const SquaresTable table = squares_table(t, r);
        std::map<int, IntervalSet> expected;
        for (const auto& [p, starts] : oracle::brute_squares_table(t, r, cfg.cap)) expected.emplace(p, as_interval_set(starts));
        led.record(rel_name("squares_table", r), table.per_p == expected, id, what);

        std::vector<std::pair<int, int>> pairs;
        for (const SquareStart& s : nonextendible_pairs(fwd)) pairs.emplace_back(s.i, s.p);
        led.record(rel_name("nonextendible_pairs", r), pairs == oracle::brute_nonextendible(t, r, cfg.cap), id, what);

        const NonShiftable ns = nonshiftable_squares(fwd, mir);
        const oracle::Shiftability bs = oracle::brute_nonshiftable(t, r, cfg.cap);
        led.record(rel_name("nonshiftable_squares", r), ns.left == bs.left && ns.right == bs.right, id, what);

        CountReport rep = count_squares(t, r);
        if (cfg.mutation == Mutation::counting && r == Relation::exact && n > 0) ++rep.nonequivalent;
        led.record(rel_name("count_nonequivalent", r), rep.nonequivalent == oracle::brute_count(t, r, cfg.cap), id, what);
        led.record(rel_name("count_distinct", r), rep.distinct == oracle::brute_count_distinct(t, r, cfg.cap), id, what);
        led.record(rel_name("lpf_oscillation_below_3n", r), n == 0 || rep.oscillation < 3LL * n, id, what);

        const Encoder exact_enc(t, Encoding::exact);
        const ScerIndex exact(exact_enc);
        bool sweep_ok = true;
        for (const Positional<int>& lpf_values : {lpf(fwd), lpf(exact)})
            sweep_ok &= sweep_count(table, lpf_values) == naive_range_count(table, lpf_values);
        led.record(rel_name("sweep_equals_range_count", r), sweep_ok, id, what);
    }

    const PSquareReport report = report_nonequivalent(t);
    led.record("report_nonequivalent/param", report.squares == oracle::brute_psquare_report(t, cfg.cap), id, what);
    led.record("psquare_classes_below_n_sigma",
               report.squares.empty() || static_cast<long long>(report.squares.size()) < static_cast<long long>(n) * t.sigma(), id,
               what);
}

void check_counting_structure(const VerifyConfig& cfg, Ledger& led)
{
    std::mt19937_64 rng(cfg.seed ^ 0x5eedc0de);
    const int n = std::uniform_int_distribution<int>(1, 64)(rng);
    CountingStructure cs(n);
    std::vector<char> y(static_cast<std::size_t>(n) + 1, 0);
    int cursor = 0;
    auto recount = [&] {
        long long c = 0;
        for (int x = cursor + 1; x <= n; ++x) c += y[static_cast<std::size_t>(x)];
        return c;
    };
    std::uniform_int_distribution<int> op(0, 3), elem(1, n);
    for (int step = 0; step < cfg.counting_ops; ++step) {
        long long got = -1;
        bool rejected = false;
        const int kind = op(rng);
        const int x = elem(rng);
        try {
            switch (kind) {
            case 0: got = cs.insert(x); y[static_cast<std::size_t>(x)] = 1; break;
            case 1: got = cs.erase(x); y[static_cast<std::size_t>(x)] = 0; break;
            case 2: got = cs.inc(); ++cursor; break;
            default: got = cs.dec(); --cursor; break;
            }
        } catch (const std::exception&) {
            rejected = true;
        }
        bool ok;
        if (rejected) {
            const bool should_reject = (kind == 0 && y[static_cast<std::size_t>(x)]) || (kind == 1 && !y[static_cast<std::size_t>(x)]) ||
                                       (kind == 2 && cursor == n) || (kind == 3 && cursor == 0);
            ok = should_reject && cs.count() == recount() && cs.cursor() == cursor;
        } else {
            ok = got == recount() && cs.cursor() == cursor;
        }
        led.record("counting_structure_ops", ok, 0, [&] { return "operation #" + std::to_string(step); });
    }
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& cfg)
{
    if (cfg.max_n > cfg.cap || cfg.exhaustive_n > cfg.cap)
        throw oracle::CapExceeded("verify: corpus length " + std::to_string(std::max(cfg.max_n, cfg.exhaustive_n)) +
                                  " exceeds oracle cap " + std::to_string(cfg.cap));
    const auto start = std::chrono::steady_clock::now();

    std::vector<Text> corpus = exhaustive_texts(cfg.exhaustive_n, cfg.exhaustive_sigma);
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.random_texts; ++i) {
        const int n = std::uniform_int_distribution<int>(1, std::max(cfg.max_n, 1))(rng);
        const int sigma = std::uniform_int_distribution<int>(2, 5)(rng);
        corpus.push_back(random_text(n, sigma, rng));
    }

    const auto names = suite_names();
    const int workers = std::clamp(cfg.threads, 1, static_cast<int>(std::max<std::size_t>(corpus.size(), 1)));
    std::vector<Ledger> ledgers(static_cast<std::size_t>(workers), Ledger(names));
    auto work = [&](int w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < corpus.size(); i += static_cast<std::size_t>(workers)) {
            check_repeats(corpus[i], static_cast<long long>(i), cfg, ledgers[static_cast<std::size_t>(w)]);
            check_relations(corpus[i], static_cast<long long>(i), cfg, ledgers[static_cast<std::size_t>(w)]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    Ledger total(names);
    for (const Ledger& l : ledgers) total.merge(l);
    check_counting_structure(cfg, total);

    VerifyReport report;
    report.suites = total.finish();
    report.texts = static_cast<long long>(corpus.size());
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

BoundsRow bounds_row(int n, int k, int sigma, std::uint64_t seed, int trial, int threads, bool extended)
{
    const auto start = std::chrono::steady_clock::now();
    std::seed_seq seq{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(sigma),
                      static_cast<std::uint64_t>(trial)};
    std::mt19937_64 rng(seq);
    const Text t = random_text(n, sigma, rng);

    BoundsRow row;
    row.n = n;
    row.k = k;
    row.sigma = sigma;
    row.trial = trial;
    EnumOptions opt;
    opt.threads = threads;
    row.uniform_runs = count_uniform_k_runs(t, k, opt);
    const double kk = std::max(k, 1);
    row.uniform_ratio = n > 0 ? static_cast<double>(row.uniform_runs) / (n * kk * (std::log(2.0 * k + 1) + 1)) : 0.0;
    row.table_intervals = static_cast<long long>(squares_table(t, Relation::param).interval_count());
    row.table_ratio = n > 1 ? static_cast<double>(row.table_intervals) / (n * std::log2(static_cast<double>(n))) : 0.0;

    if (extended && n > 0) {
        const auto mg = mgrs(t, std::nullopt, opt);
        double worst = 0;
        for (int alpha = 2; alpha <= 2 * k + 2; ++alpha) {
            long long c = 0;
            for (const Mgr& m : mg) c += m.ell <= static_cast<long long>(alpha) * m.arm;
            worst = std::max(worst, static_cast<double>(c) / (13.0 * n * alpha));
        }
        row.mgr_ratio = worst;
        row.gruns_ratio = static_cast<double>(generalised_runs(t, opt).size()) / (1.5 * n);
        row.psquare_ratio = static_cast<double>(report_nonequivalent(t).squares.size()) / (static_cast<double>(n) * t.sigma());
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace gensq
