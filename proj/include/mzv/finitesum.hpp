#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/rational.hpp"
#include "mzv/word.hpp"

namespace mzvkit {

// plain: the multiple harmonic sum; flat: sum over S_N(k) with weights 1/n, 1/(N-n);
// natural: the same weights over the strictly increasing chain T_N(k).
enum class Variant { plain, flat, natural };

const char *to_string(Variant v);
Variant parse_variant(std::string_view text);

// Arguments of R_{<N}(a_1..a_k; b_1..b_k) = sum over 0<n_1<...<n_k<N of prod 1/((N-n_i)^{a_i} n_i^{b_i}).
struct RArgs {
    std::vector<unsigned> a;
    std::vector<unsigned> b;

    RArgs() = default;
    // Throws DomainError unless lengths agree, k >= 1, a_1 >= 1 and a_i + b_i >= 1.
    RArgs(std::vector<unsigned> a_in, std::vector<unsigned> b_in);

    std::size_t depth() const { return a.size(); }
    // "2,1;0,0"
    std::string to_string() const;
    static RArgs parse(std::string_view text);

    // (ii): some i with b_i >= 1 and a_i + b_i >= 2
    bool decays_by_clause_ii() const;
    // (iii): some i < j with a_i >= 2 and b_j >= 1
    bool decays_by_clause_iii() const;

    bool operator==(const RArgs &) const = default;
};

// Exact evaluators. N >= 1; the empty index/word evaluates to 1, and N = 1 gives 0 otherwise.
Rational zeta_lt(const Index &k, std::uint64_t n);
Rational zeta_flat(const Word &w, std::uint64_t n);
Rational zeta_flat(const Index &k, std::uint64_t n);
Rational zeta_natural(const Word &w, std::uint64_t n);
Rational zeta_natural(const Index &k, std::uint64_t n);
Rational r_value(const RArgs &args, std::uint64_t n);

// Evaluates one H^1 word; throws DomainError for words outside H^1.
Rational evaluate(Variant v, const Word &w, std::uint64_t n);
// The linear maps Z_N, Z_N^flat, Z_N^natural.
Rational zn_apply(const LinComb &x, std::uint64_t n, Variant v);

// Brute-force enumeration oracles. Deliberately naive; refused beyond the caps.
struct BruteForceLimits {
    std::uint64_t max_n = 40;
    unsigned max_weight = 6;
};

Rational brute_force(const Index &k, std::uint64_t n, Variant v, const BruteForceLimits &limits = {});
Rational brute_force(const RArgs &args, std::uint64_t n, const BruteForceLimits &limits = {});
// Sum over S_N(w) \ T_N(w) of the flat summand: the tuples with at least one equality.
Rational brute_force_boundary(const Word &w, std::uint64_t n, const BruteForceLimits &limits = {});
// Sum over n in T_N(|w1|), m in T_N(|w0|) with n_i = m_j for some (i, j) of the
// product of both natural summands.
Rational brute_force_collisions(const Word &w1, const Word &w0, std::uint64_t n,
                                const BruteForceLimits &limits = {});

} // namespace mzvkit
