#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gensq/oracle.hpp"
#include "gensq/repeats.hpp"

using namespace gensq;

namespace {

const Text kruns_text = Text::from_string(fixtures::kruns_string);
const Text grun_text = Text::from_string(fixtures::grun_string);

EnumOptions period(int ell) { return EnumOptions{{ell, ell}, 1}; }

// Closed 1-based spans [a..b-1].
std::vector<std::pair<int, int>> spans(const auto& runs)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& r : runs) out.emplace_back(r.a, r.b - 1);
    return out;
}

}  // namespace

TEST_CASE("mismatching positions")
{
    CHECK(mismatch_positions(kruns_text, 8) == std::vector<int>{4, 7, 11, 15, 17, 18});
    CHECK(mismatch_positions(Text::from_string("aaaaaa"), 2).empty());
    CHECK_THROWS_AS(mismatch_positions(kruns_text, 0), std::invalid_argument);
}

TEST_CASE("k-mismatch squares")
{
    for (int x : {4, 10, 11}) CHECK_FALSE(is_k_mismatch_square(kruns_text, x, 8, 2));
    CHECK(is_k_mismatch_square(kruns_text, 1, 8, 2));
    CHECK(is_k_mismatch_square(Text::from_string("aaaa"), 1, 2, 0));
    CHECK_THROWS_AS(is_k_mismatch_square(kruns_text, 20, 8, 2), std::out_of_range);
}

TEST_CASE("2-runs of period 8")
{
    CHECK(spans(k_runs(kruns_text, 2, period(8))) == std::vector<std::pair<int, int>>{{1, 18}, {5, 24}});
}

TEST_CASE("uniform 2-runs of period 8 and their mismatch sets")
{
    const auto runs = uniform_k_runs(kruns_text, 2, period(8));
    CHECK(spans(runs) == std::vector<std::pair<int, int>>{{1, 18}, {5, 22}, {8, 24}});
    REQUIRE(runs.size() == 3);
    CHECK(runs[0].mismatches == std::vector<int>{4, 7});
    CHECK(runs[1].mismatches == std::vector<int>{7, 11});
    CHECK(runs[2].mismatches == std::vector<int>{11, 15});
}

TEST_CASE("the 3-MGR of period 8 induces all three uniform runs")
{
    const auto all = mgrs(kruns_text, std::nullopt, period(8));
    const auto it = std::find_if(all.begin(), all.end(), [](const Mgr& m) { return m.x == 8; });
    REQUIRE(it != all.end());
    CHECK(it->ell == 8);
    CHECK(it->arm == 3);
    CHECK(it->y == 19);
    CHECK(it->gap_ratio() == doctest::Approx(8.0 / 3));
    CHECK(it->weight() == doctest::Approx(3.0 / 8));
    for (const UniformKRun& u : uniform_k_runs(kruns_text, 2, period(8))) CHECK(induces(*it, u));

    // The middle run has two further inducers.
    const auto runs = uniform_k_runs(kruns_text, 2, period(8));
    int inducers = 0;
    for (const Mgr& m : all) inducers += induces(m, runs[1]);
    CHECK(inducers == 3);
}

TEST_CASE("alpha filter")
{
    const auto all = mgrs(kruns_text, std::nullopt, period(8));
    const auto three = mgrs(kruns_text, Rational{3, 1}, period(8));
    CHECK(three.size() < all.size());
    for (const Mgr& m : three) CHECK(m.ell <= 3 * m.arm);
    CHECK(std::count_if(all.begin(), all.end(), [](const Mgr& m) { return m.ell <= 3 * m.arm; }) ==
          static_cast<long>(three.size()));
}

TEST_CASE("generalised run of period 6 induces five uniform 2-runs")
{
    const auto gr = generalised_runs(grun_text, period(6));
    const auto it = std::find(gr.begin(), gr.end(), GeneralisedRun{6, 22, 6});
    REQUIRE(it != gr.end());
    const auto runs = uniform_k_runs(grun_text, 2, period(6));
    CHECK(std::count_if(runs.begin(), runs.end(), [&](const UniformKRun& u) { return induces(*it, u); }) == 5);
}

TEST_CASE("generalised runs of small strings")
{
    CHECK(generalised_runs(Text::from_string("abab")) == std::vector<GeneralisedRun>{{1, 5, 2}});
    const auto unary = generalised_runs(Text::from_string("aaaa"));
    CHECK(unary == std::vector<GeneralisedRun>{{1, 5, 1}, {1, 5, 2}});
    CHECK(generalised_runs(Text{}).empty());
}

TEST_CASE("unary strings have one MGR per admissible period")
{
    CHECK(mgrs(Text::from_string("aaaaaaa")) == std::vector<Mgr>{{1, 8, 4, 3}, {1, 8, 5, 2}, {1, 8, 6, 1}});
    CHECK(mgrs(Text::from_string("aaa")) == std::vector<Mgr>{{1, 4, 2, 1}});
}

TEST_CASE("saturated budget gives one run per period")
{
    const Text t = Text::from_string("abcdefgh");
    for (int ell = 1; ell <= 4; ++ell) {
        const auto runs = k_runs(t, ell, period(ell));
        REQUIRE(runs.size() == 1);
        CHECK(runs[0].a == 1);
        CHECK(runs[0].b == 9);
    }
}

TEST_CASE("induces checks periods and intervals")
{
    const UniformKRun u{1, 9, 4, 0, {}};
    CHECK_FALSE(induces(Mgr{20, 26, 4, 2}, u));
    CHECK(induces(Mgr{2, 8, 4, 2}, u));
    CHECK_THROWS_AS(induces(Mgr{2, 8, 3, 2}, u), std::invalid_argument);
    CHECK_THROWS_AS(induces(GeneralisedRun{1, 9, 3}, u), std::invalid_argument);
}

TEST_CASE("period ranges and thread counts do not change output")
{
    std::mt19937_64 rng(59);
    const Text t = fixtures::random_text(rng, 150, 3);
    const auto base = uniform_k_runs(t, 2);
    CHECK(uniform_k_runs(t, 2, EnumOptions{{}, 4}) == base);
    CHECK(mgrs(t, std::nullopt, EnumOptions{{}, 3}) == mgrs(t));
    std::vector<UniformKRun> pieces;
    for (int ell = 1; ell <= t.n() / 2; ++ell) {
        auto part = uniform_k_runs(t, 2, period(ell));
        pieces.insert(pieces.end(), part.begin(), part.end());
    }
    CHECK(pieces == base);
    CHECK(count_uniform_k_runs(t, 2) == static_cast<long long>(base.size()));
    CHECK(count_uniform_k_runs(t, 2, EnumOptions{{3, 9}, 2}) == static_cast<long long>(uniform_k_runs(t, 2, EnumOptions{{3, 9}, 1}).size()));
}

TEST_CASE("enumerators agree with brute force")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 200);
        const Text t = fixtures::random_text(rng, n, 2 + trial % 4);
        CHECK(generalised_runs(t) == oracle::brute_generalised_runs(t));
        CHECK(static_cast<double>(generalised_runs(t).size()) < 1.5 * n);
        const auto mg = mgrs(t);
        auto sorted_brute = oracle::brute_mgrs(t);
        CHECK(mg == sorted_brute);
        for (int alpha = 2; alpha <= 10; ++alpha)
            CHECK(std::count_if(mg.begin(), mg.end(), [&](const Mgr& m) { return m.ell <= alpha * m.arm; }) < 13L * n * alpha);
        for (int k = 0; k <= 4; ++k) {
            const auto ur = uniform_k_runs(t, k);
            const auto kr = k_runs(t, k);
            CHECK(ur == oracle::brute_uniform_k_runs(t, k));
            CHECK(kr == oracle::brute_k_runs(t, k));
            CHECK(kr.size() <= ur.size());
            for (const KRun& r : kr)
                CHECK(std::any_of(ur.begin(), ur.end(), [&](const UniformKRun& u) { return u.ell == r.ell && u.a == r.a; }));
        }
    }
}

TEST_CASE("each MGR and generalised run induces at most 2k+1 uniform runs")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        const Text t = fixtures::random_text(rng, 120, 2 + trial % 3);
        const auto mg = mgrs(t);
        const auto gr = generalised_runs(t);
        for (int k = 0; k <= 3; ++k) {
            const auto ur = uniform_k_runs(t, k);
            for (const Mgr& m : mg) {
                int c = 0;
                for (const UniformKRun& u : ur) c += u.ell == m.ell && induces(m, u);
                CHECK(c <= 2 * k + 1);
            }
            for (const GeneralisedRun& g : gr) {
                int c = 0;
                for (const UniformKRun& u : ur) c += u.ell == g.p && induces(g, u);
                CHECK(c <= 2 * k + 1);
            }
        }
    }
}
