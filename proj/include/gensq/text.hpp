#ifndef GENSQ_TEXT_HPP
#define GENSQ_TEXT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace gensq {

using Symbol = std::int32_t;

// Array indexed by text positions 1..n. Slot 0 exists but is never part of
// the logical content.
template <typename T>
class Positional {
public:
    Positional() : data_(1) {}
    explicit Positional(std::size_t n, T fill = T{}) : data_(n + 1, fill) {}

    std::size_t size() const { return data_.size() - 1; }
    bool empty() const { return size() == 0; }

    T& operator[](std::size_t pos) { return data_[pos]; }
    const T& operator[](std::size_t pos) const { return data_[pos]; }

    std::span<const T> values() const { return {data_.data() + 1, size()}; }
    std::vector<T> to_vector() const { return {data_.begin() + 1, data_.end()}; }

    auto begin() const { return data_.begin() + 1; }
    auto end() const { return data_.end(); }

    friend bool operator==(const Positional&, const Positional&) = default;

private:
    std::vector<T> data_;
};

enum class InputMode { bytes, ints };

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A string over the dense alphabet [0..sigma). The remap is order preserving,
// so order-sensitive relations see the same comparisons as on the raw input.
class Text {
public:
    Text() : sym_(1, 0) {}

    static Text from_values(std::span<const std::int64_t> raw);
    static Text from_values(std::initializer_list<std::int64_t> raw);
    static Text from_string(std::string_view s);

    std::size_t size() const { return sym_.size() - 1; }
    bool empty() const { return size() == 0; }
    int n() const { return static_cast<int>(size()); }
    int sigma() const { return static_cast<int>(alphabet_.size()); }

    // 1-based.
    Symbol operator[](std::size_t pos) const { return sym_[pos]; }
    std::span<const Symbol> symbols() const { return {sym_.data() + 1, size()}; }

    std::int64_t original(Symbol s) const { return alphabet_.at(static_cast<std::size_t>(s)); }

    Text reversed() const;
    Text substr(int pos, int len) const;

    friend bool operator==(const Text& a, const Text& b) { return a.sym_ == b.sym_; }

private:
    std::vector<Symbol> sym_;
    std::vector<std::int64_t> alphabet_;
};

// bytes: one symbol per byte, trailing CR/LF dropped. ints: whitespace-separated
// non-negative integers.
Text parse_text(std::string_view raw, InputMode mode);
Text read_text_file(const std::filesystem::path& path, InputMode mode);

// prev[i] is the last position j < i with T[j] = T[i], or 0.
Positional<int> prev_array(const Text& t);

// next[i] is the first position j > i with T[j] = T[i], or n + 1.
Positional<int> next_array(const Text& t);

class PrefixCounts {
public:
    explicit PrefixCounts(const Text& t);

    // Occurrences of c in T[1..i].
    int count(Symbol c, int i) const {
        return counts_[static_cast<std::size_t>(c) * stride_ + static_cast<std::size_t>(i)];
    }
    int sigma() const { return sigma_; }
    int n() const { return static_cast<int>(stride_) - 1; }

private:
    int sigma_;
    std::size_t stride_;
    std::vector<int> counts_;
};

}  // namespace gensq

#endif
