#pragma once

#include "mzv/lincomb.hpp"

namespace mzvkit {

enum class Product { harmonic, shuffle };

// Harmonic (stuffle) product on H^1; throws DomainError for operands outside H^1.
LinComb harmonic(const Word &a, const Word &b);
LinComb harmonic(const LinComb &x, const LinComb &y);

// Shuffle product on all of Q<e0,e1>.
LinComb shuffle(const Word &a, const Word &b);
LinComb shuffle(const LinComb &x, const LinComb &y);

LinComb multiply(Product kind, const LinComb &x, const LinComb &y);
// x^{n} under the chosen product; x^0 = 1.
LinComb power(Product kind, const LinComb &x, unsigned n);

const char *to_string(Product kind);

namespace detail {

// Both products memoize on ordered word pairs in a process-wide, mutex-guarded table.
void clear_product_caches();
std::size_t product_cache_size(Product kind);
// Overwrites a memo entry. Only used by mutation tests of the verifiers.
void override_product_entry(Product kind, const Word &a, const Word &b, LinComb value);

} // namespace detail

} // namespace mzvkit
