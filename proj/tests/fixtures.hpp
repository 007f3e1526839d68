#ifndef GENSQ_TEST_FIXTURES_HPP
#define GENSQ_TEST_FIXTURES_HPP

#include <random>
#include <vector>

#include "gensq/text.hpp"

namespace fixtures {

// 8-mismatching positions 4,7,11,15,17,18.
inline constexpr const char* kruns_string = "abacaabaababaacaabcbaabaca";
// Generalised run T[6..21] with period 6.
inline constexpr const char* grun_string = "bbdaaaabaabaabaabaabacbaac";
inline constexpr const char* square_kinds = "1322434412323";

inline gensq::Text example_x() { return gensq::Text::from_values({1, 2, 1, 1, 2, 3, 2, 1, 4}); }
inline gensq::Text square_kinds_text() { return gensq::parse_text("1 3 2 2 4 3 4 4 1 2 3 2 3", gensq::InputMode::ints); }

inline gensq::Text random_text(std::mt19937_64& rng, int n, int sigma)
{
    std::uniform_int_distribution<int> d(0, sigma - 1);
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = d(rng);
    return gensq::Text::from_values(v);
}

}  // namespace fixtures

#endif
