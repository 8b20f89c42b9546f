#include "mzv/lincomb.hpp"

#include <algorithm>

namespace mzvkit {

LinComb::LinComb(const Word &w, Rational c)
{
    add_term(w, c);
}

LinComb LinComb::of_index(const Index &k, Rational c)
{
    return LinComb(word_of_index(k), std::move(c));
}

void LinComb::add_term(const Word &w, const Rational &c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LinComb::coefficient(const Word &w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LinComb::in_h1() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.first.in_h1(); });
}

bool LinComb::in_h0() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.first.in_h0(); });
}

unsigned LinComb::max_length() const
{
    unsigned m = 0;
    for (const auto &[w, c] : terms_) m = std::max(m, w.length());
    return m;
}

unsigned LinComb::max_trailing_e1() const
{
    unsigned m = 0;
    for (const auto &[w, c] : terms_) m = std::max(m, w.trailing_e1());
    return m;
}

LinComb LinComb::concat_right(const Word &w) const
{
    LinComb out;
    for (const auto &[v, c] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), v.concat(w), c);
    }
    return out;
}

LinComb &LinComb::operator+=(const LinComb &rhs)
{
    for (const auto &[w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

LinComb &LinComb::operator-=(const LinComb &rhs)
{
    for (const auto &[w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

LinComb &LinComb::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[w, coeff] : terms_) coeff *= c;
    return *this;
}

std::string LinComb::serialize() const
{
    std::string out = "[";
    bool first = true;
    for (const auto &[w, c] : terms_) {
        if (!first) out += ",";
        first = false;
        out += "[\"" + to_pq_string(c) + "\",\"" + w.to_string() + "\"]";
    }
    return out + "]";
}

std::string LinComb::pretty() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[w, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string name = w.empty() ? "1" : (w.in_h1() ? "e(" + index_of_word(w).to_string() + ")" : "[" + w.to_string() + "]");
        if (mag != 1) {
            out += mag.get_str() + "*" + name;
        } else {
            out += name;
        }
    }
    return out;
}

} // namespace mzvkit
