#include "gensq/text.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>

namespace gensq {

Text Text::from_values(std::span<const std::int64_t> raw)
{
    if (raw.size() >= static_cast<std::size_t>(std::numeric_limits<int>::max() / 2))
        throw ParseError("symbol count overflow: " + std::to_string(raw.size()));

    Text t;
    t.alphabet_.assign(raw.begin(), raw.end());
    std::sort(t.alphabet_.begin(), t.alphabet_.end());
    t.alphabet_.erase(std::unique(t.alphabet_.begin(), t.alphabet_.end()), t.alphabet_.end());

    t.sym_.resize(raw.size() + 1);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto it = std::lower_bound(t.alphabet_.begin(), t.alphabet_.end(), raw[i]);
        t.sym_[i + 1] = static_cast<Symbol>(it - t.alphabet_.begin());
    }
    return t;
}

Text Text::from_values(std::initializer_list<std::int64_t> raw)
{
    return from_values(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

Text Text::from_string(std::string_view s)
{
    std::vector<std::int64_t> v;
    v.reserve(s.size());
    for (unsigned char c : s) v.push_back(c);
    return from_values(v);
}

Text Text::reversed() const
{
    Text r = *this;
    std::reverse(r.sym_.begin() + 1, r.sym_.end());
    return r;
}

Text Text::substr(int pos, int len) const
{
    std::vector<std::int64_t> v;
    v.reserve(static_cast<std::size_t>(len));
    for (int i = pos; i < pos + len; ++i) v.push_back(original(sym_[static_cast<std::size_t>(i)]));
    return from_values(v);
}

Text parse_text(std::string_view raw, InputMode mode)
{
    if (mode == InputMode::bytes) {
        // A trailing line terminator is not part of the text.
        while (!raw.empty() && (raw.back() == '\n' || raw.back() == '\r')) raw.remove_suffix(1);
        return Text::from_string(raw);
    }

    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
    while (pos < raw.size()) {
        while (pos < raw.size() && is_space(raw[pos])) ++pos;
        if (pos == raw.size()) break;
        std::size_t end = pos;
        while (end < raw.size() && !is_space(raw[end])) ++end;
        std::string_view token = raw.substr(pos, end - pos);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
            throw ParseError("malformed integer token '" + std::string(token) + "' at offset " + std::to_string(pos));
        values.push_back(value);
        pos = end;
    }
    return Text::from_values(values);
}

Text read_text_file(const std::filesystem::path& path, InputMode mode)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_text(content, mode);
}

Positional<int> prev_array(const Text& t)
{
    Positional<int> prev(t.size());
    std::vector<int> last(static_cast<std::size_t>(t.sigma()), 0);
    for (int i = 1; i <= t.n(); ++i) {
        auto& l = last[static_cast<std::size_t>(t[i])];
        prev[i] = l;
        l = i;
    }
    return prev;
}

Positional<int> next_array(const Text& t)
{
    Positional<int> next(t.size());
    std::vector<int> first(static_cast<std::size_t>(t.sigma()), t.n() + 1);
    for (int i = t.n(); i >= 1; --i) {
        auto& f = first[static_cast<std::size_t>(t[i])];
        next[i] = f;
        f = i;
    }
    return next;
}

PrefixCounts::PrefixCounts(const Text& t)
    : sigma_(t.sigma()), stride_(t.size() + 1),
      counts_(static_cast<std::size_t>(t.sigma()) * (t.size() + 1), 0)
{
    for (int c = 0; c < sigma_; ++c) {
        int* row = counts_.data() + static_cast<std::size_t>(c) * stride_;
        for (int i = 1; i <= t.n(); ++i) row[i] = row[i - 1] + (t[i] == c ? 1 : 0);
    }
}

}  // namespace gensq
