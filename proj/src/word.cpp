#include "mzv/word.hpp"

#include <bit>

#include "mzv/error.hpp"

namespace mzvkit {

namespace {

std::uint64_t low_mask(unsigned n)
{
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

} // namespace

Word Word::from_letters(std::string_view zeros_and_ones)
{
    if (zeros_and_ones.size() > max_length) {
        throw DomainError("word longer than 64 letters");
    }
    std::uint64_t bits = 0;
    for (char c : zeros_and_ones) {
        if (c != '0' && c != '1') {
            throw DomainError("malformed word: '" + std::string(zeros_and_ones) + "'");
        }
        bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return Word(bits, static_cast<std::uint8_t>(zeros_and_ones.size()));
}

Word Word::block(unsigned k)
{
    if (k == 0) {
        throw DomainError("block e_k needs k >= 1");
    }
    if (k > max_length) {
        throw DomainError("word longer than 64 letters");
    }
    return Word(std::uint64_t{1} << (k - 1), static_cast<std::uint8_t>(k));
}

Letter Word::letter(unsigned i) const
{
    return static_cast<Letter>((bits_ >> (len_ - 1 - i)) & 1u);
}

unsigned Word::trailing_e1() const
{
    return static_cast<unsigned>(std::countr_one(bits_ & low_mask(len_)));
}

unsigned Word::count(Letter l) const
{
    unsigned ones = static_cast<unsigned>(std::popcount(bits_));
    return l == Letter::e1 ? ones : len_ - ones;
}

Word Word::concat(const Word &rhs) const
{
    unsigned total = len_ + rhs.len_;
    if (total > max_length) {
        throw DomainError("word longer than 64 letters");
    }
    std::uint64_t shifted = rhs.len_ >= 64 ? 0 : (bits_ << rhs.len_);
    return Word(shifted | rhs.bits_, static_cast<std::uint8_t>(total));
}

Word Word::append(Letter l) const
{
    if (len_ + 1u > max_length) {
        throw DomainError("word longer than 64 letters");
    }
    return Word((bits_ << 1) | static_cast<std::uint64_t>(l), static_cast<std::uint8_t>(len_ + 1));
}

Word Word::drop_last() const
{
    return Word(bits_ >> 1, static_cast<std::uint8_t>(len_ - 1));
}

std::pair<Word, unsigned> Word::split_last_block() const
{
    if (empty() || !in_h1()) {
        throw DomainError("split_last_block needs a nonempty word in H^1");
    }
    unsigned k = static_cast<unsigned>(std::countr_zero(bits_)) + 1;
    std::uint64_t rest = k >= 64 ? 0 : bits_ >> k;
    return {Word(rest, static_cast<std::uint8_t>(len_ - k)), k};
}

std::string Word::to_string() const
{
    std::string out(len_, '0');
    for (unsigned i = 0; i < len_; ++i) {
        if (letter(i) == Letter::e1) out[i] = '1';
    }
    return out;
}

Word word_of_index(const Index &k)
{
    Word w;
    for (unsigned part : k.parts()) {
        w = w.concat(Word::block(part));
    }
    return w;
}

Index index_of_word(const Word &w)
{
    if (!w.in_h1()) {
        throw DomainError("word '" + w.to_string() + "' is not in H^1");
    }
    std::vector<unsigned> parts;
    for (unsigned i = 0; i < w.length(); ++i) {
        if (w.letter(i) == Letter::e1) {
            parts.push_back(1);
        } else {
            ++parts.back();
        }
    }
    return Index(std::move(parts));
}

std::set<unsigned> jset(const Index &k)
{
    if (k.empty()) {
        throw DomainError("J(k) is undefined for the empty index");
    }
    std::set<unsigned> out;
    unsigned pos = 1;
    for (unsigned part : k.parts()) {
        out.insert(pos);
        pos += part;
    }
    return out;
}

} // namespace mzvkit
