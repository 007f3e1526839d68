#ifndef GENSQ_HARNESS_HPP
#define GENSQ_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gensq/oracle.hpp"
#include "gensq/text.hpp"

namespace gensq {

Text random_text(int n, int sigma, std::mt19937_64& rng);

// Every string of length 0..max_n over [0..sigma), shortest first.
std::vector<Text> exhaustive_texts(int max_n, int sigma);

enum class Mutation { none, windowing, counting };

struct VerifyConfig {
    std::uint64_t seed = 1;
    int random_texts = 500;
    int max_n = 150;
    int exhaustive_n = 10;
    int exhaustive_sigma = 3;
    int max_k = 4;
    int cap = oracle::default_cap;
    int counting_ops = 10000;
    int threads = 1;
    Mutation mutation = Mutation::none;
};

// group: 4 oracle equivalence, 5 structural properties, 6 hard bounds,
// 8 sweep and counting-structure checks.
struct SuiteResult {
    std::string name;
    int group = 0;
    long long cases = 0;
    long long failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    long long texts = 0;
    double seconds = 0;

    bool ok() const;
    bool group_ok(int group) const;
};

// Throws oracle::CapExceeded when max_n exceeds the oracle cap.
VerifyReport run_verification(const VerifyConfig& cfg);

struct BoundsRow {
    int n = 0;
    int k = 0;
    int sigma = 0;
    int trial = 0;
    long long uniform_runs = 0;
    double uniform_ratio = 0;  // / (n k (ln(2k+1) + 1))
    long long table_intervals = 0;
    double table_ratio = 0;    // param Squares_p intervals / (n log2 n)
    std::optional<double> mgr_ratio;      // max over alpha in [2..2k+2] of count / (13 n alpha)
    std::optional<double> gruns_ratio;    // / (1.5 n)
    std::optional<double> psquare_ratio;  // classes / (n sigma)
    double seconds = 0;
};

// One random text of length n over sigma letters. The optional ratios are
// only computed when extended is set (they cost quadratic time with large
// constants).
BoundsRow bounds_row(int n, int k, int sigma, std::uint64_t seed, int trial, int threads, bool extended);

}  // namespace gensq

#endif
