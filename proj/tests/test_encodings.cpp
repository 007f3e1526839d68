#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "gensq/encodings.hpp"
#include "gensq/oracle.hpp"

using namespace gensq;

namespace {

std::vector<Code> prefix_codes(const Encoder& enc, int i, int j)
{
    std::vector<Code> out;
    for (int e = i; e <= j; ++e) out.push_back(enc.code(i, e));
    return out;
}

// |alph(U)| for the longest suffix U of T[i..j) avoiding T[j].
int big_e_definition(const Text& t, int i, int j)
{
    std::set<Symbol> seen;
    for (int k = j - 1; k >= i && t[static_cast<std::size_t>(k)] != t[static_cast<std::size_t>(j)]; --k) seen.insert(t[static_cast<std::size_t>(k)]);
    return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("relation names round trip")
{
    for (Relation r : all_relations) CHECK(parse_relation(to_string(r)) == r);
    CHECK_FALSE(parse_relation("bogus").has_value());
    CHECK(relation_of(Encoding::big_e) == Relation::param);
    CHECK(relation_of(Encoding::parent_distance_strict) == Relation::ct);
    CHECK(mirror_encoding(Relation::ct) == Encoding::parent_distance_strict);
    CHECK(mirror_encoding(Relation::op) == default_encoding(Relation::op));
}

TEST_CASE("param code is the window-clipped previous distance")
{
    const Text t = fixtures::example_x();
    const Encoder enc(t, Encoding::prev);
    CHECK(enc.code(1, 3) == 2);
    CHECK(enc.code(2, 3) == 0);
    CHECK(prefix_codes(enc, 1, 9) == std::vector<Code>{0, 0, 2, 1, 3, 0, 2, 4, 0});
}

TEST_CASE("big E prefix codes of the worked example")
{
    const Text t = fixtures::example_x();
    const Encoder enc(t, Encoding::big_e);
    CHECK(prefix_codes(enc, 1, 9) == std::vector<Code>{0, 1, 1, 0, 1, 2, 1, 2, 3});
}

TEST_CASE("pal code of a full palindrome")
{
    const Text t = Text::from_string("aba");
    const Encoder enc(t, Encoding::lpal);
    CHECK(enc.code(1, 3) == 3);
    CHECK(enc.code(1, 2) == 1);
    CHECK(enc.code(2, 3) == 1);
}

TEST_CASE("single symbol codes")
{
    const Text t = Text::from_string("cab");
    for (int i = 1; i <= 3; ++i) {
        CHECK(Encoder(t, Encoding::exact).code(i, i) == t[static_cast<std::size_t>(i)]);
        CHECK(Encoder(t, Encoding::prev).code(i, i) == 0);
        CHECK(Encoder(t, Encoding::order).code(i, i) == 0);
        CHECK(Encoder(t, Encoding::parent_distance).code(i, i) == 0);
        CHECK(Encoder(t, Encoding::parent_distance_strict).code(i, i) == 0);
        CHECK(Encoder(t, Encoding::lpal).code(i, i) == 1);
        CHECK(Encoder(t, Encoding::big_e).code(i, i) == 0);
    }
}

TEST_CASE("code rejects invalid ranges")
{
    const Text t = Text::from_string("abc");
    const Encoder enc(t, Encoding::prev);
    CHECK_THROWS_AS(enc.code(0, 1), std::out_of_range);
    CHECK_THROWS_AS(enc.code(2, 1), std::out_of_range);
    CHECK_THROWS_AS(enc.code(1, 4), std::out_of_range);
    CHECK_THROWS_AS(scer_match(enc, 1, 2, 3, 4), std::out_of_range);
}

TEST_CASE("square kinds string")
{
    const Text s = fixtures::square_kinds_text();
    CHECK(scer_match(Encoder(s, Encoding::prev), 3, 6, 7, 10));
    CHECK(scer_match(Encoder(s, Encoding::big_e), 3, 6, 7, 10));
    CHECK(scer_match(Encoder(s, Encoding::order), 1, 3, 4, 6));
    CHECK_FALSE(scer_match(Encoder(s, Encoding::lpal), 8, 10, 11, 13));
    CHECK(scer_match(Encoder(s, Encoding::parent_distance), 8, 10, 11, 13));
    CHECK_FALSE(scer_match(Encoder(s, Encoding::prev), 3, 6, 7, 9));
}

TEST_CASE("maximal palindromes")
{
    const auto aaa = maximal_palindromes(Text::from_string("aaa"));
    CHECK(aaa.odd.to_vector() == std::vector<int>{0, 1, 0});
    const auto ab = maximal_palindromes(Text::from_string("ab"));
    CHECK(ab.even[1] == 0);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Text t = fixtures::random_text(rng, 100, 2 + trial % 3);
        const auto pr = maximal_palindromes(t);
        const int n = t.n();
        auto sym = [&](int i) { return t[static_cast<std::size_t>(i)]; };
        for (int c = 1; c <= n; ++c) {
            int r = 0;
            while (c - r - 1 >= 1 && c + r + 1 <= n && sym(c - r - 1) == sym(c + r + 1)) ++r;
            REQUIRE(pr.odd[static_cast<std::size_t>(c)] == r);
        }
        for (int c = 1; c < n; ++c) {
            int r = 0;
            while (c - r >= 1 && c + r + 1 <= n && sym(c - r) == sym(c + r + 1)) ++r;
            REQUIRE(pr.even[static_cast<std::size_t>(c)] == r);
        }
    }
}

TEST_CASE("profiles")
{
    CHECK(profiles(fixtures::example_x()).forward.to_vector() == std::vector<Symbol>{0, 1, 1, 0, 1, 2, 1, 2, 3});
    const auto unary = profiles(Text::from_values({7, 7, 7, 7}));
    CHECK(unary.forward.to_vector() == std::vector<Symbol>{0, 0, 0, 0});
    CHECK(unary.backward.to_vector() == std::vector<Symbol>{0, 0, 0, 0});

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Text t = fixtures::random_text(rng, 64, 4);
        const Text rev = t.reversed();
        const auto pr = profiles(t);
        const int n = t.n();
        for (int i = 1; i <= n; ++i) {
            CHECK(pr.forward[static_cast<std::size_t>(i)] == big_e_definition(t, 1, i));
            CHECK(pr.backward[static_cast<std::size_t>(i)] == big_e_definition(rev, 1, n + 1 - i));
            CHECK(pr.forward[static_cast<std::size_t>(i)] < t.sigma());
        }
    }
}

TEST_CASE("big E substring codes follow the definition")
{
    std::mt19937_64 rng(5);
    const Text t = fixtures::random_text(rng, 40, 4);
    const Encoder enc(t, Encoding::big_e);
    for (int i = 1; i <= t.n(); ++i)
        for (int j = i; j <= t.n(); ++j) REQUIRE(enc.code(i, j) == big_e_definition(t, i, j));
}

TEST_CASE("prefix-code agreement equals the definitional matchers")
{
    std::mt19937_64 rng(17);
    for (Encoding e : {Encoding::exact, Encoding::prev, Encoding::order, Encoding::parent_distance, Encoding::lpal, Encoding::big_e}) {
        CAPTURE(to_string(e));
        long long agree = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const Text t = fixtures::random_text(rng, 24, 2 + trial % 3);
            const Encoder enc(t, e);
            for (int i = 1; i <= t.n(); ++i)
                for (int j = 1; j <= t.n(); ++j)
                    for (int len = 1; std::max(i, j) + len - 1 <= t.n(); ++len) {
                        const bool fast = scer_match(enc, i, i + len - 1, j, j + len - 1);
                        REQUIRE(fast == oracle::brute_match(relation_of(e), t, i, j, len));
                        agree += fast;
                    }
        }
        CHECK(agree > 0);
    }
}

TEST_CASE("strict parent distance encodes ct on reversed strings")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Text t = fixtures::random_text(rng, 20, 3);
        const Text rev = t.reversed();
        const Encoder enc(rev, Encoding::parent_distance_strict);
        const int n = t.n();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int len = 1; std::max(i, j) + len - 1 <= n; ++len) {
                    // T[i..i+len) and T[j..j+len) sit reversed at n-i-len+2 and n-j-len+2.
                    const int ri = n - i - len + 2, rj = n - j - len + 2;
                    REQUIRE(scer_match(enc, ri, ri + len - 1, rj, rj + len - 1) == oracle::brute_match(Relation::ct, t, i, j, len));
                }
    }
}

TEST_CASE("scan_lcp matches the brute longest common prefix")
{
    std::mt19937_64 rng(29);
    const Text t = fixtures::random_text(rng, 30, 2);
    for (Relation r : all_relations) {
        const Encoder enc(t, default_encoding(r));
        for (int i = 1; i <= t.n(); ++i)
            for (int j = 1; j <= t.n(); ++j) REQUIRE(scan_lcp(enc, i, j) == oracle::brute_lcp(r, t, i, j));
    }
}

TEST_CASE("p-squares give sigma-mismatch squares of both profiles")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const Text t = fixtures::random_text(rng, 40, 2 + trial % 4);
        const auto pr = profiles(t);
        const int n = t.n(), sigma = t.sigma();
        auto mism = [&](const Positional<Symbol>& a, int i, int ell) {
            int c = 0;
            for (int j = i; j < i + ell; ++j) c += a[static_cast<std::size_t>(j)] != a[static_cast<std::size_t>(j + ell)];
            return c;
        };
        for (int ell = 1; 2 * ell <= n; ++ell)
            for (int i = 1; i + 2 * ell - 1 <= n; ++i) {
                if (!oracle::brute_is_square(Relation::param, t, i, ell)) continue;
                CHECK(mism(pr.forward, i, ell) <= sigma);
                CHECK(mism(pr.backward, i, ell) <= sigma);
                if (i + 2 * ell <= n && pr.forward[static_cast<std::size_t>(i + ell)] == pr.forward[static_cast<std::size_t>(i + 2 * ell)])
                    CHECK(oracle::brute_is_square(Relation::param, t, i + 1, ell));
                if (i > 1 && pr.backward[static_cast<std::size_t>(i - 1)] == pr.backward[static_cast<std::size_t>(i + ell - 1)])
                    CHECK(oracle::brute_is_square(Relation::param, t, i - 1, ell));
            }
    }
}
