#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>

#include "mzv/index.hpp"

namespace mzvkit {

enum class Letter : std::uint8_t { e0 = 0, e1 = 1 };

// A word over {e0, e1}, packed as bits with e1 = 1 and the first letter most
// significant. Ordering is length first, then lexicographic on the letters.
class Word {
public:
    static constexpr unsigned max_length = 64;

    constexpr Word() = default;
    static Word from_letters(std::string_view zeros_and_ones);
    // e_k = e1 e0^{k-1}
    static Word block(unsigned k);

    unsigned length() const { return len_; }
    bool empty() const { return len_ == 0; }
    std::uint64_t bits() const { return bits_; }
    // 0-based from the left
    Letter letter(unsigned i) const;
    Letter first() const { return letter(0); }
    Letter last() const { return letter(len_ - 1); }

    bool in_h1() const { return empty() || first() == Letter::e1; }
    bool in_h0() const { return empty() || (first() == Letter::e1 && last() == Letter::e0); }
    unsigned trailing_e1() const;
    unsigned count(Letter l) const;

    Word concat(const Word &rhs) const;
    Word append(Letter l) const;
    // Split off the last letter; requires nonempty.
    Word drop_last() const;
    // Split w = v e_k on the last e1; requires nonempty and in_h1.
    std::pair<Word, unsigned> split_last_block() const;

    // "110"; the empty word prints as "".
    std::string to_string() const;

    auto operator<=>(const Word &rhs) const
    {
        if (auto c = len_ <=> rhs.len_; c != 0) return c;
        return bits_ <=> rhs.bits_;
    }
    bool operator==(const Word &) const = default;

private:
    constexpr Word(std::uint64_t bits, std::uint8_t len) : bits_(bits), len_(len) {}

    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
};

Word word_of_index(const Index &k);
// Requires in_h1(w); throws DomainError otherwise.
Index index_of_word(const Word &w);
// J(k) = {1, k_1+1, k_1+k_2+1, ...}, 1-based positions; requires nonempty k.
std::set<unsigned> jset(const Index &k);

struct WordHash {
    std::size_t operator()(const Word &w) const noexcept
    {
        return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ull ^ w.length());
    }
};

} // namespace mzvkit
