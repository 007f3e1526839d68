#ifndef GENSQ_REPEATS_HPP
#define GENSQ_REPEATS_HPP

#include <optional>
#include <vector>

#include "gensq/text.hpp"

namespace gensq {

// Fragments use half-open 1-based coordinates: T[a..b) = T[a..b-1].

struct UniformKRun {
    int a = 0;
    int b = 0;
    int ell = 0;
    int k = 0;
    std::vector<int> mismatches;  // common ell-mismatching positions of every square

    friend bool operator==(const UniformKRun&, const UniformKRun&) = default;
};

struct KRun {
    int a = 0;
    int b = 0;
    int ell = 0;
    int k = 0;

    friend bool operator==(const KRun&, const KRun&) = default;
};

struct GeneralisedRun {
    int x = 0;
    int y = 0;
    int p = 0;

    int period() const { return p; }
    friend bool operator==(const GeneralisedRun&, const GeneralisedRun&) = default;
};

// Maximal gapped repeat UVU = T[x..y) with |UV| = ell and |U| = arm < ell.
struct Mgr {
    int x = 0;
    int y = 0;
    int ell = 0;
    int arm = 0;

    int period() const { return ell; }
    double gap_ratio() const { return static_cast<double>(ell) / arm; }
    double weight() const { return static_cast<double>(arm) / ell; }
    friend bool operator==(const Mgr&, const Mgr&) = default;
};

// Inclusive period range; hi <= 0 means "up to the natural maximum".
struct PeriodRange {
    int lo = 1;
    int hi = 0;
};

// alpha = num / den.
struct Rational {
    long long num = 1;
    long long den = 1;
};

struct EnumOptions {
    PeriodRange periods;
    int threads = 1;
};

std::vector<int> mismatch_positions(const Text& t, int ell);
bool is_k_mismatch_square(const Text& t, int i, int ell, int k);

// Results are sorted by (period, start).
std::vector<UniformKRun> uniform_k_runs(const Text& t, int k, const EnumOptions& opt = {});
std::vector<KRun> k_runs(const Text& t, int k, const EnumOptions& opt = {});
std::vector<GeneralisedRun> generalised_runs(const Text& t, const EnumOptions& opt = {});
std::vector<Mgr> mgrs(const Text& t, std::optional<Rational> alpha_max = std::nullopt,
                      const EnumOptions& opt = {});

// Counts only; same traversal as the enumerators without materialising runs.
long long count_uniform_k_runs(const Text& t, int k, const EnumOptions& opt = {});

// [x..y-ell) meets [a..b-ell). Throws on period mismatch.
bool induces(const Mgr& rep, const UniformKRun& run);
bool induces(const GeneralisedRun& rep, const UniformKRun& run);

}  // namespace gensq

#endif
