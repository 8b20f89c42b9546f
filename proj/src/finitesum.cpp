#include "mzv/finitesum.hpp"

#include <functional>

#include "mzv/chain_dp.hpp"
#include "mzv/error.hpp"

namespace mzvkit {

const char *to_string(Variant v)
{
    switch (v) {
    case Variant::plain: return "plain";
    case Variant::flat: return "flat";
    case Variant::natural: return "natural";
    }
    return "?";
}

Variant parse_variant(std::string_view text)
{
    if (text == "plain") return Variant::plain;
    if (text == "flat") return Variant::flat;
    if (text == "natural") return Variant::natural;
    throw DomainError("unknown sum variant '" + std::string(text) + "'");
}

RArgs::RArgs(std::vector<unsigned> a_in, std::vector<unsigned> b_in) : a(std::move(a_in)), b(std::move(b_in))
{
    if (a.size() != b.size()) throw DomainError("RArgs: a and b must have equal length");
    if (a.empty()) throw DomainError("RArgs: need k >= 1");
    if (a[0] < 1) throw DomainError("RArgs: need a_1 >= 1");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] + b[i] < 1) throw DomainError("RArgs: need a_i + b_i >= 1");
    }
}

std::string RArgs::to_string() const
{
    auto join = [](const std::vector<unsigned> &v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    };
    return join(a) + ";" + join(b);
}

RArgs RArgs::parse(std::string_view text)
{
    auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw DomainError("malformed RArgs (expected 'a1,..;b1,..'): '" + std::string(text) + "'");
    }
    auto parse_list = [&](std::string_view part) {
        std::vector<unsigned> out;
        std::size_t pos = 0;
        while (true) {
            auto comma = part.find(',', pos);
            std::string field(part.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
            if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
                throw DomainError("malformed RArgs: '" + std::string(text) + "'");
            }
            out.push_back(static_cast<unsigned>(std::stoul(field)));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return out;
    };
    return RArgs(parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1)));
}

bool RArgs::decays_by_clause_ii() const
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] >= 1 && a[i] + b[i] >= 2) return true;
    }
    return false;
}

bool RArgs::decays_by_clause_iii() const
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 2) continue;
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (b[j] >= 1) return true;
        }
    }
    return false;
}

namespace {

Rational letter_weight(Letter u, std::uint64_t n, std::uint64_t n_bound)
{
    return u == Letter::e1 ? Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(n_bound - n)))
                           : Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(n)));
}

Rational r_weight(unsigned a, unsigned b, std::uint64_t n, std::uint64_t n_bound)
{
    mpz_class left;
    mpz_class right;
    mpz_ui_pow_ui(left.get_mpz_t(), static_cast<unsigned long>(n_bound - n), a);
    mpz_ui_pow_ui(right.get_mpz_t(), static_cast<unsigned long>(n), b);
    return Rational(mpz_class(1), left * right);
}

Rational word_chain_sum(const Word &w, std::uint64_t n_bound, bool all_strict)
{
    return detail::chain_sum<Rational>(
        w.length(), n_bound,
        [&](std::size_t i) { return all_strict || w.letter(static_cast<unsigned>(i)) == Letter::e1; },
        [&](std::size_t i, std::uint64_t n) { return letter_weight(w.letter(static_cast<unsigned>(i)), n, n_bound); });
}

void require_n(std::uint64_t n)
{
    if (n < 1) throw DomainError("N must be a positive integer");
}

} // namespace

Rational zeta_lt(const Index &k, std::uint64_t n)
{
    require_n(n);
    return detail::chain_sum<Rational>(
        k.depth(), n, [](std::size_t) { return true; },
        [&](std::size_t i, std::uint64_t m) { return inverse_power(m, k[i]); });
}

Rational zeta_flat(const Word &w, std::uint64_t n)
{
    require_n(n);
    if (!w.in_h1()) throw DomainError("zeta_flat needs a word in H^1");
    return word_chain_sum(w, n, false);
}

Rational zeta_flat(const Index &k, std::uint64_t n)
{
    return zeta_flat(word_of_index(k), n);
}

Rational zeta_natural(const Word &w, std::uint64_t n)
{
    require_n(n);
    if (!w.in_h1()) throw DomainError("zeta_natural needs a word in H^1");
    return word_chain_sum(w, n, true);
}

Rational zeta_natural(const Index &k, std::uint64_t n)
{
    return zeta_natural(word_of_index(k), n);
}

Rational r_value(const RArgs &args, std::uint64_t n)
{
    RArgs checked(args.a, args.b);
    if (n < 2) throw DomainError("R_{<N} needs N >= 2");
    return detail::chain_sum<Rational>(
        checked.depth(), n, [](std::size_t) { return true; },
        [&](std::size_t i, std::uint64_t m) { return r_weight(checked.a[i], checked.b[i], m, n); });
}

Rational evaluate(Variant v, const Word &w, std::uint64_t n)
{
    switch (v) {
    case Variant::plain: return zeta_lt(index_of_word(w), n);
    case Variant::flat: return zeta_flat(w, n);
    case Variant::natural: return zeta_natural(w, n);
    }
    throw DomainError("unknown variant");
}

Rational zn_apply(const LinComb &x, std::uint64_t n, Variant v)
{
    if (!x.in_h1()) throw DomainError("Z_N is defined on H^1 only");
    Rational total(0);
    for (const auto &[w, c] : x) total += c * evaluate(v, w, n);
    return total;
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

namespace {

using Tuple = std::vector<std::uint64_t>;

// Visits every tuple 0 = n_0 ?_1 n_1 ... ?_k n_k < N by nested enumeration.
void enumerate_chain(std::size_t k, std::uint64_t n_bound, const std::function<bool(std::size_t)> &strict,
                     const std::function<void(const Tuple &)> &visit)
{
    Tuple tuple(k);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t prev) {
        if (i == k) {
            visit(tuple);
            return;
        }
        for (std::uint64_t n = strict(i) ? prev + 1 : prev; n < n_bound; ++n) {
            tuple[i] = n;
            rec(i + 1, n);
        }
    };
    rec(0, 0);
}

void check_caps(std::uint64_t n, unsigned weight, const BruteForceLimits &limits)
{
    if (n > limits.max_n || weight > limits.max_weight) {
        throw RefusalError("brute force refused: N=" + std::to_string(n) + ", weight=" + std::to_string(weight) +
                           " exceeds caps N<=" + std::to_string(limits.max_n) +
                           ", weight<=" + std::to_string(limits.max_weight));
    }
}

Rational natural_summand(const Word &w, const Tuple &t, std::uint64_t n_bound)
{
    Rational prod(1);
    for (unsigned i = 0; i < w.length(); ++i) prod *= letter_weight(w.letter(i), t[i], n_bound);
    return prod;
}

} // namespace

Rational brute_force(const Index &k, std::uint64_t n, Variant v, const BruteForceLimits &limits)
{
    require_n(n);
    check_caps(n, k.weight(), limits);
    if (k.empty()) return Rational(1);
    Rational total(0);
    if (v == Variant::plain) {
        enumerate_chain(k.depth(), n, [](std::size_t) { return true; }, [&](const Tuple &t) {
            Rational prod(1);
            for (std::size_t i = 0; i < t.size(); ++i) prod *= inverse_power(t[i], k[i]);
            total += prod;
        });
        return total;
    }
    Word w = word_of_index(k);
    std::set<unsigned> j = jset(k);
    // Position i (1-based) is strict iff i in J(k); the final n_k < N is always strict.
    auto strict = [&](std::size_t i) { return v == Variant::natural || j.count(static_cast<unsigned>(i + 1)) > 0; };
    enumerate_chain(w.length(), n, strict, [&](const Tuple &t) { total += natural_summand(w, t, n); });
    return total;
}

Rational brute_force(const RArgs &args, std::uint64_t n, const BruteForceLimits &limits)
{
    RArgs checked(args.a, args.b);
    if (n < 2) throw DomainError("R_{<N} needs N >= 2");
    check_caps(n, static_cast<unsigned>(checked.depth()), limits);
    Rational total(0);
    enumerate_chain(checked.depth(), n, [](std::size_t) { return true; }, [&](const Tuple &t) {
        Rational prod(1);
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (unsigned p = 0; p < checked.a[i]; ++p) prod /= static_cast<unsigned long>(n - t[i]);
            for (unsigned p = 0; p < checked.b[i]; ++p) prod /= static_cast<unsigned long>(t[i]);
        }
        total += prod;
    });
    return total;
}

Rational brute_force_boundary(const Word &w, std::uint64_t n, const BruteForceLimits &limits)
{
    require_n(n);
    if (!w.in_h1()) throw DomainError("brute_force_boundary needs a word in H^1");
    check_caps(n, w.length(), limits);
    Rational total(0);
    auto strict = [&](std::size_t i) { return w.letter(static_cast<unsigned>(i)) == Letter::e1; };
    enumerate_chain(w.length(), n, strict, [&](const Tuple &t) {
        bool has_equality = false;
        for (std::size_t i = 1; i < t.size(); ++i) has_equality |= (t[i] == t[i - 1]);
        if (has_equality) total += natural_summand(w, t, n);
    });
    return total;
}

Rational brute_force_collisions(const Word &w1, const Word &w0, std::uint64_t n, const BruteForceLimits &limits)
{
    require_n(n);
    if (!w1.in_h1() || !w0.in_h1()) throw DomainError("brute_force_collisions needs words in H^1");
    check_caps(n, w1.length() + w0.length(), limits);
    auto all_strict = [](std::size_t) { return true; };
    std::vector<Tuple> right;
    enumerate_chain(w0.length(), n, all_strict, [&](const Tuple &t) { right.push_back(t); });
    Rational total(0);
    enumerate_chain(w1.length(), n, all_strict, [&](const Tuple &left) {
        Rational left_value;
        bool left_ready = false;
        for (const Tuple &r : right) {
            bool collide = false;
            for (auto x : left) {
                for (auto y : r) collide |= (x == y);
            }
            if (!collide) continue;
            if (!left_ready) {
                left_value = natural_summand(w1, left, n);
                left_ready = true;
            }
            total += left_value * natural_summand(w0, r, n);
        }
    });
    return total;
}

} // namespace mzvkit
