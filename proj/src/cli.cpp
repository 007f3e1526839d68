#include "gensq/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gensq/counting.hpp"
#include "gensq/encodings.hpp"
#include "gensq/harness.hpp"
#include "gensq/psquares.hpp"
#include "gensq/repeats.hpp"
#include "gensq/text.hpp"

namespace gensq {

namespace {

using Row = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    // input
    std::string path;
    std::string text;
    int random_n = -1;
    int sigma = 4;
    bool ints = false;
    bool bytes = false;
    std::uint64_t seed = 1;
    // output
    std::string format = "tsv";
    bool header = false;
    bool timing = false;
    int threads = 1;
    // analyses
    int k = 1;
    std::string period;
    std::string alpha;
    std::string mode = "classes";
    std::string relation = "param";
    // bounds
    std::vector<int> sizes{1000, 10000, 100000};
    std::vector<int> bound_ks{2};
    std::vector<int> sigmas{4};
    int trials = 1;
    int extended_max = 20000;
    // verify
    VerifyConfig verify;
    std::string mutate = "none";
};

int default_threads()
{
    if (const char* env = std::getenv("GENSQ_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

Text load_text(const Config& c)
{
    const int sources = !c.path.empty() + !c.text.empty() + (c.random_n >= 0);
    if (sources > 1) throw UsageError("give at most one of INPUT, --text, --random");
    if (c.ints && c.bytes) throw UsageError("--bytes and --ints are exclusive");
    const InputMode mode = c.ints ? InputMode::ints : InputMode::bytes;
    if (!c.text.empty()) return parse_text(c.text, mode);
    if (c.random_n >= 0) {
        std::mt19937_64 rng(c.seed);
        return random_text(c.random_n, c.sigma, rng);
    }
    if (c.path.empty() || c.path == "-") {
        std::string all{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
        return parse_text(all, mode);
    }
    return read_text_file(c.path, mode);
}

PeriodRange parse_periods(const std::string& s)
{
    PeriodRange r;
    if (s.empty()) return r;
    const auto sep = s.find_first_of(":-");
    try {
        if (sep == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, sep));
            r.hi = std::stoi(s.substr(sep + 1));
        }
    } catch (const std::exception&) {
        throw UsageError("bad --period '" + s + "', expected P or LO:HI");
    }
    if (r.lo < 1 || r.hi < r.lo) throw UsageError("bad --period '" + s + "'");
    return r;
}

std::optional<Rational> parse_alpha(const std::string& s)
{
    if (s.empty()) return std::nullopt;
    Rational a;
    const auto slash = s.find('/');
    try {
        a.num = std::stoll(s.substr(0, slash));
        a.den = slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1));
    } catch (const std::exception&) {
        throw UsageError("bad --alpha '" + s + "', expected A or NUM/DEN");
    }
    if (a.num <= 0 || a.den <= 0) throw UsageError("--alpha must be positive");
    return a;
}

std::string fmt_double(double v)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

class Emitter {
public:
    Emitter(std::ostream& out, const std::string& format, bool header, char sep = '\t')
        : out_(out), jsonl_(format == "jsonl"), header_(header), sep_(sep)
    {
    }

    void emit(const Row& row)
    {
        if (jsonl_) {
            Row full{{"v", 1}};
            for (const auto& [key, value] : row.items()) full[key] = value;
            out_ << full.dump() << '\n';
            return;
        }
        if (header_) {
            bool first = true;
            for (const auto& [key, value] : row.items()) out_ << (first ? "" : std::string(1, sep_)) << key, first = false;
            out_ << '\n';
            header_ = false;
        }
        bool first = true;
        for (const auto& [key, value] : row.items()) {
            if (!first) out_ << sep_;
            first = false;
            if (value.is_string()) out_ << value.get<std::string>();
            else if (value.is_number_float()) out_ << fmt_double(value.get<double>());
            else if (value.is_null()) out_ << "NA";
            else out_ << value.dump();
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
    bool jsonl_;
    bool header_;
    char sep_;
};

Row repeat_row(const char* kind, int start, int end_exclusive, int period, const std::string& extra)
{
    return Row{{"kind", kind}, {"start", start}, {"end", end_exclusive - 1}, {"period", period}, {"extra", extra}};
}

EnumOptions enum_options(const Config& c) { return EnumOptions{parse_periods(c.period), c.threads}; }

int cmd_kruns(const Config& c, std::ostream& out)
{
    if (c.k < 0) throw UsageError("-k must be non-negative");
    const Text t = load_text(c);
    Emitter em(out, c.format, c.header);
    for (const KRun& r : k_runs(t, c.k, enum_options(c))) em.emit(repeat_row("krun", r.a, r.b, r.ell, std::to_string(r.k)));
    return exit_ok;
}

int cmd_uniform(const Config& c, std::ostream& out)
{
    if (c.k < 0) throw UsageError("-k must be non-negative");
    const Text t = load_text(c);
    Emitter em(out, c.format, c.header);
    for (const UniformKRun& r : uniform_k_runs(t, c.k, enum_options(c))) em.emit(repeat_row("uniform", r.a, r.b, r.ell, std::to_string(r.mismatches.size())));
    return exit_ok;
}

int cmd_mgr(const Config& c, std::ostream& out)
{
    const Text t = load_text(c);
    Emitter em(out, c.format, c.header);
    for (const Mgr& m : mgrs(t, parse_alpha(c.alpha), enum_options(c))) em.emit(repeat_row("mgr", m.x, m.y, m.ell, std::to_string(m.arm)));
    return exit_ok;
}

int cmd_gruns(const Config& c, std::ostream& out)
{
    const Text t = load_text(c);
    Emitter em(out, c.format, c.header);
    for (const GeneralisedRun& g : generalised_runs(t, enum_options(c))) em.emit(repeat_row("grun", g.x, g.y, g.p, "-"));
    return exit_ok;
}

// Distances to the previous occurrence inside T[i..i+len), 0 for first occurrences.
std::string prev_form(const Text& t, int i, int len)
{
    std::vector<int> codes;
    for (int j = i; j < i + len; ++j) {
        int d = 0;
        for (int q = j - 1; q >= i; --q)
            if (t[static_cast<std::size_t>(q)] == t[static_cast<std::size_t>(j)]) {
                d = j - q;
                break;
            }
        codes.push_back(d);
    }
    std::string s;
    for (std::size_t x = 0; x < codes.size(); ++x) s += (x ? "," : "") + std::to_string(codes[x]);
    return s;
}

int cmd_psquares(const Config& c, std::ostream& out)
{
    if (c.mode != "classes" && c.mode != "distinct") throw UsageError("--mode must be classes or distinct");
    const Text t = load_text(c);
    const bool classes = c.mode == "classes";
    const PSquareReport rep = classes ? report_nonequivalent(t) : report_distinct(t);
    Emitter em(out, c.format, c.header);
    for (const PSquare& s : rep.squares)
        em.emit(repeat_row("psquare", s.start, s.start + s.length, s.length / 2, classes ? prev_form(t, s.start, s.length / 2) : "-"));
    return exit_ok;
}

int cmd_count(const Config& c, std::ostream& out)
{
    std::vector<Relation> rels;
    if (c.relation == "all") {
        rels.assign(std::begin(all_relations), std::end(all_relations));
    } else if (auto r = parse_relation(c.relation)) {
        rels.push_back(*r);
    } else {
        throw UsageError("unknown relation '" + c.relation + "'");
    }
    const Text t = load_text(c);
    Emitter em(out, c.format, c.header);
    for (Relation r : rels) {
        const auto start = std::chrono::steady_clock::now();
        const CountReport rep = count_squares(t, r);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        Row row{{"relation", std::string(to_string(r))},
                {"nonequivalent", rep.nonequivalent},
                {"distinct", rep.distinct},
                {"intervals", rep.intervals},
                {"oscillation", rep.oscillation}};
        if (c.timing) row["wall_ms"] = ms;
        em.emit(row);
    }
    return exit_ok;
}

int cmd_bounds(const Config& c, std::ostream& out)
{
    for (int n : c.sizes)
        if (n < 1) throw UsageError("--sizes must be positive");
    for (int k : c.bound_ks)
        if (k < 0) throw UsageError("--k must be non-negative");
    for (int s : c.sigmas)
        if (s < 1) throw UsageError("--sigma must be positive");
    if (c.trials < 1) throw UsageError("--trials must be positive");

    Emitter em(out, c.format == "jsonl" ? "jsonl" : "csv", true, ',');
    for (int n : c.sizes)
        for (int k : c.bound_ks)
            for (int sigma : c.sigmas)
                for (int trial = 0; trial < c.trials; ++trial) {
                    const BoundsRow b = bounds_row(n, k, sigma, c.seed, trial, c.threads, n <= c.extended_max);
                    auto opt = [](const std::optional<double>& v) { return v ? Row(*v) : Row(nullptr); };
                    Row row{{"n", b.n},
                            {"k", b.k},
                            {"sigma", b.sigma},
                            {"trial", b.trial},
                            {"uniform_runs", b.uniform_runs},
                            {"uniform_ratio", b.uniform_ratio},
                            {"table_intervals", b.table_intervals},
                            {"table_ratio", b.table_ratio},
                            {"mgr_ratio", opt(b.mgr_ratio)},
                            {"gruns_ratio", opt(b.gruns_ratio)},
                            {"psquare_ratio", opt(b.psquare_ratio)}};
                    if (c.timing) row["seconds"] = b.seconds;
                    em.emit(row);
                }
    return exit_ok;
}

int cmd_verify(Config c, std::ostream& out, std::ostream& err)
{
    if (c.mutate == "none") c.verify.mutation = Mutation::none;
    else if (c.mutate == "windowing") c.verify.mutation = Mutation::windowing;
    else if (c.mutate == "counting") c.verify.mutation = Mutation::counting;
    else throw UsageError("unknown mutation '" + c.mutate + "'");
    c.verify.seed = c.seed;
    c.verify.threads = c.threads;

    const VerifyReport rep = run_verification(c.verify);
    Emitter em(out, c.format, c.header);
    for (const SuiteResult& s : rep.suites) {
        em.emit(Row{{"suite", s.name}, {"group", s.group}, {"cases", s.cases}, {"failures", s.failures}, {"status", s.ok() ? "PASS" : "FAIL"}});
        if (!s.ok()) err << s.name << ": first failure on " << s.first_failure << '\n';
    }
    Row summary{{"suite", "summary"}, {"texts", rep.texts}, {"status", rep.ok() ? "PASS" : "FAIL"}};
    if (c.timing) summary["seconds"] = rep.seconds;
    em.emit(summary);
    return rep.ok() ? exit_ok : exit_verify_failed;
}

void add_input(CLI::App* sub, Config& c)
{
    sub->add_option("input", c.path, "Input file ('-' or omitted: stdin)");
    sub->add_option("--text", c.text, "Inline input text");
    sub->add_option("--random", c.random_n, "Use a random text of this length");
    sub->add_option("--sigma", c.sigma, "Alphabet size for --random")->check(CLI::PositiveNumber);
    sub->add_flag("--bytes", c.bytes, "One symbol per byte (default)");
    sub->add_flag("--ints", c.ints, "Whitespace-separated non-negative integers");
}

void add_output(CLI::App* sub, Config& c)
{
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"tsv", "jsonl"}));
    sub->add_flag("--header", c.header, "Print a header line (tsv)");
    sub->add_option("--threads", c.threads, "Worker threads (default: $GENSQ_THREADS or 1)")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "Random seed");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    c.threads = default_threads();

    CLI::App app{"Generalized repetitions in strings: k-runs, gapped repeats, p-squares and square counting", "gensq"};
    app.require_subcommand(1);

    auto* kruns = app.add_subcommand("kruns", "Maximal k-mismatch runs");
    auto* uniform = app.add_subcommand("uniform", "Uniform k-mismatch runs");
    auto* mgr = app.add_subcommand("mgr", "Maximal gapped repeats");
    auto* gruns = app.add_subcommand("gruns", "Generalised runs");
    auto* psq = app.add_subcommand("psquares", "Parameterized squares");
    auto* count = app.add_subcommand("count", "Count squares under an equivalence relation");
    auto* bounds = app.add_subcommand("bounds", "Empirical count/bound ratios on random texts");
    auto* verify = app.add_subcommand("verify", "Compare every efficient path with brute force");

    for (auto* sub : {kruns, uniform, mgr, gruns, psq, count}) {
        add_input(sub, c);
        add_output(sub, c);
    }
    for (auto* sub : {kruns, uniform}) sub->add_option("-k", c.k, "Mismatch budget");
    for (auto* sub : {kruns, uniform, mgr, gruns}) sub->add_option("--period", c.period, "Period P or range LO:HI");
    mgr->add_option("--alpha", c.alpha, "Keep only alpha-gapped repeats (A or NUM/DEN)");
    psq->add_option("--mode", c.mode, "classes | distinct")->check(CLI::IsMember({"classes", "distinct"}));
    count->add_option("--relation", c.relation, "exact | param | op | ct | pal | all");
    count->add_flag("--timing", c.timing, "Append wall time in ms");

    bounds->add_option("--sizes", c.sizes, "Text lengths")->delimiter(',');
    bounds->add_option("--k", c.bound_ks, "Mismatch budgets")->delimiter(',');
    bounds->add_option("--sigma", c.sigmas, "Alphabet sizes")->delimiter(',');
    bounds->add_option("--trials", c.trials, "Random texts per setting");
    bounds->add_option("--extended-max", c.extended_max, "Largest n for the MGR, generalised-run and p-square ratios");
    bounds->add_option("--format", c.format, "csv | jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    bounds->add_option("--seed", c.seed, "Random seed");
    bounds->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
    bounds->add_flag("--timing", c.timing, "Append seconds per row");

    verify->add_option("--texts", c.verify.random_texts, "Random texts");
    verify->add_option("--max-n", c.verify.max_n, "Largest random text length");
    verify->add_option("--exhaustive-n", c.verify.exhaustive_n, "All texts up to this length");
    verify->add_option("--exhaustive-sigma", c.verify.exhaustive_sigma, "Alphabet of the exhaustive part");
    verify->add_option("--max-k", c.verify.max_k, "Largest mismatch budget");
    verify->add_option("--cap", c.verify.cap, "Oracle length cap");
    verify->add_option("--ops", c.verify.counting_ops, "Random counting-structure operations");
    verify->add_option("--mutate", c.mutate, "Fault injection")->group("");
    verify->add_flag("--timing", c.timing, "Print elapsed seconds");
    add_output(verify, c);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (kruns->parsed()) return cmd_kruns(c, out);
        if (uniform->parsed()) return cmd_uniform(c, out);
        if (mgr->parsed()) return cmd_mgr(c, out);
        if (gruns->parsed()) return cmd_gruns(c, out);
        if (psq->parsed()) return cmd_psquares(c, out);
        if (count->parsed()) return cmd_count(c, out);
        if (bounds->parsed()) return cmd_bounds(c, out);
        if (verify->parsed()) return cmd_verify(c, out, err);
    } catch (const UsageError& e) {
        err << "gensq: " << e.what() << '\n';
        return exit_usage;
    } catch (const oracle::CapExceeded& e) {
        err << "gensq: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "gensq: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "gensq: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace gensq
