#ifndef GENSQ_ENCODINGS_HPP
#define GENSQ_ENCODINGS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "gensq/text.hpp"

namespace gensq {

using Code = std::int64_t;

// Substring consistent equivalence relations supported throughout.
enum class Relation { exact, param, op, ct, pal };

inline constexpr Relation all_relations[] = {Relation::exact, Relation::param, Relation::op,
                                             Relation::ct, Relation::pal};

// Per-prefix encoding functions. Each one characterises its relation: two
// equal-length strings are equivalent iff all their prefix codes agree.
enum class Encoding {
    exact,            // last symbol
    prev,             // distance to the previous occurrence of the last symbol
    order,            // alpha * |X| + beta
    parent_distance,  // distance to the nearest earlier symbol <= last
    parent_distance_strict,  // same with <, encodes ct on reversed strings
    lpal,             // longest suffix palindrome
    big_e,            // distinct letters since the previous occurrence of the last symbol
};

std::string_view to_string(Relation r);
std::string_view to_string(Encoding e);
std::optional<Relation> parse_relation(std::string_view s);

Relation relation_of(Encoding e);
Encoding default_encoding(Relation r);

// Encoding to use on the reversed text so that X ~ Y iff rev(X) ~' rev(Y).
// Every relation here is reversal closed except ct, whose tie-break flips.
Encoding mirror_encoding(Relation r);

// Maximal palindrome radii. odd[c] = r means T[c-r..c+r] is a maximal
// palindrome; even[c] = r means T[c-r+1..c+r] is one (c in [1..n-1]).
struct PalindromeRadii {
    Positional<int> odd;
    Positional<int> even;
};

PalindromeRadii maximal_palindromes(const Text& t);

// forward[i] = E(T[1..i]), backward[i] = E(rev(T[i..n])) for the big-E encoding.
struct Profiles {
    Positional<Symbol> forward;
    Positional<Symbol> backward;
};

Profiles profiles(const Text& t);

// Code oracle for substrings of a fixed text. The text must outlive it.
class Encoder {
public:
    Encoder(const Text& t, Encoding e);
    Encoder(Text&&, Encoding) = delete;
    ~Encoder();
    Encoder(Encoder&&) noexcept;
    Encoder& operator=(Encoder&&) noexcept;

    const Text& text() const { return *text_; }
    Encoding encoding() const { return encoding_; }
    Relation relation() const { return relation_of(encoding_); }

    // E(T[i..j]), 1 <= i <= j <= n. Always >= 0.
    Code code(int i, int j) const;

    // Unchecked variant for hot loops.
    Code code_unchecked(int i, int j) const;

private:
    struct Lpal;

    Code order_code(int i, int j) const;
    Code lpal_code(int i, int j) const;
    Code big_e_code(int i, int j) const;

    const Text* text_;
    Encoding encoding_;
    Positional<int> link_;  // prev[] or nearest-smaller link, by encoding
    std::unique_ptr<PrefixCounts> counts_;
    std::unique_ptr<Lpal> lpal_;
};

// Definitional check: equal lengths and pairwise equal prefix codes.
bool scer_match(const Encoder& enc, int i1, int j1, int i2, int j2);

// Longest l with T[i..i+l) ~ T[j..j+l), by direct prefix-code comparison.
int scan_lcp(const Encoder& enc, int i, int j);

}  // namespace gensq

#endif
