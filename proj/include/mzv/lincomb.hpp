#pragma once

#include <map>
#include <string>
#include <string_view>

#include "mzv/rational.hpp"
#include "mzv/word.hpp"

namespace mzvkit {

// Finite Q-linear combination of words. Zero coefficients are never stored,
// so structural equality is mathematical equality.
class LinComb {
public:
    using Terms = std::map<Word, Rational>;

    LinComb() = default;
    LinComb(const Word &w, Rational c = 1);
    static LinComb unit() { return LinComb(Word()); }
    static LinComb of_index(const Index &k, Rational c = 1);

    void add_term(const Word &w, const Rational &c);

    const Terms &terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word &w) const;

    bool in_h1() const;
    bool in_h0() const;
    unsigned max_length() const;
    unsigned max_trailing_e1() const;

    // Right-multiply every word by w.
    LinComb concat_right(const Word &w) const;

    LinComb &operator+=(const LinComb &rhs);
    LinComb &operator-=(const LinComb &rhs);
    LinComb &operator*=(const Rational &c);
    friend LinComb operator+(LinComb a, const LinComb &b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb &b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational &c) { return a *= c; }
    friend LinComb operator*(const Rational &c, LinComb a) { return a *= c; }
    LinComb operator-() const { return *this * Rational(-1); }

    bool operator==(const LinComb &) const = default;

    // [["p/q","word"], ...] in canonical word order.
    std::string serialize() const;
    // Human-readable: "2*e(1,1) + e(2)" for H^1 words, raw letters otherwise.
    std::string pretty() const;

private:
    Terms terms_;
};

} // namespace mzvkit
