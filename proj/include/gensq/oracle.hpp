#ifndef GENSQ_ORACLE_HPP
#define GENSQ_ORACLE_HPP

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "gensq/encodings.hpp"
#include "gensq/psquares.hpp"
#include "gensq/repeats.hpp"
#include "gensq/text.hpp"

// Brute-force reference implementations. Nothing here calls into the
// efficient code paths; only the data types are shared.

namespace gensq::oracle {

inline constexpr int default_cap = 200;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Definitional matchers. Throws std::invalid_argument on a length mismatch.
bool brute_match(Relation r, std::span<const Symbol> x, std::span<const Symbol> y);

// T[i..i+len) matches T[j..j+len) (1-based).
bool brute_match(Relation r, const Text& t, int i, int j, int len);

// T[i..i+2p) is a square under r.
bool brute_is_square(Relation r, const Text& t, int i, int p);

// Longest l with T[i..i+l) ~ T[j..j+l).
int brute_lcp(Relation r, const Text& t, int i, int j);

Positional<int> brute_lpf(const Text& t, Relation r, int cap = default_cap);

std::vector<UniformKRun> brute_uniform_k_runs(const Text& t, int k, int cap = default_cap);
std::vector<KRun> brute_k_runs(const Text& t, int k, int cap = default_cap);
std::vector<Mgr> brute_mgrs(const Text& t, int cap = default_cap);
std::vector<GeneralisedRun> brute_generalised_runs(const Text& t, int cap = default_cap);

// Per half period p, sorted starts of squares; only non-empty entries.
std::map<int, std::vector<int>> brute_squares_table(const Text& t, Relation r, int cap = default_cap);

// Non-extendible (i, p): square at i whose halves do not extend to the right.
std::vector<std::pair<int, int>> brute_nonextendible(const Text& t, Relation r, int cap = default_cap);

// Starts of squares that cannot be shifted one position left / right.
struct Shiftability {
    std::map<int, std::vector<int>> left;
    std::map<int, std::vector<int>> right;
};
Shiftability brute_nonshiftable(const Text& t, Relation r, int cap = default_cap);

// Number of square classes under r / number of distinct square strings.
long long brute_count(const Text& t, Relation r, int cap = default_cap);
long long brute_count_distinct(const Text& t, Relation r, int cap = default_cap);

long long brute_psquare_classes(const Text& t, int cap = default_cap);

// Leftmost occurrence of every p-square class, ordered by (length, start).
std::vector<PSquare> brute_psquare_report(const Text& t, int cap = default_cap);

}  // namespace gensq::oracle

#endif
