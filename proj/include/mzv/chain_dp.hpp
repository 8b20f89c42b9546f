#pragma once

#include <cstdint>
#include <vector>

namespace mzvkit::detail {

// Sum over chains 0 = n_0 ?_1 n_1 ?_2 ... ?_k n_k < N of prod_i weight(i, n_i),
// where ?_i is '<' when strict(i) and '<=' otherwise (i is 0-based here, so
// strict(0) relates n_1 to n_0 = 0 and must hold for weights singular at 0).
// One prefix-sum sweep per position: O(k N) arithmetic operations.
template <typename T, typename Strict, typename Weight>
T chain_sum(std::size_t k, std::uint64_t n_bound, Strict &&strict, Weight &&weight)
{
    if (k == 0) return T(1);
    if (n_bound < 2) return T(0);
    std::vector<T> cur(n_bound);
    std::uint64_t first = strict(std::size_t{0}) ? 1 : 0;
    for (std::uint64_t n = first; n < n_bound; ++n) cur[n] = weight(std::size_t{0}, n);
    std::vector<T> next(n_bound);
    for (std::size_t i = 1; i < k; ++i) {
        bool is_strict = strict(i);
        T prefix(0);
        for (std::uint64_t n = 0; n < n_bound; ++n) {
            if (!is_strict) prefix += cur[n];
            next[n] = (prefix == T(0)) ? T(0) : T(weight(i, n) * prefix);
            if (is_strict) prefix += cur[n];
        }
        std::swap(cur, next);
    }
    T total(0);
    for (std::uint64_t n = 0; n < n_bound; ++n) total += cur[n];
    return total;
}

} // namespace mzvkit::detail
