#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mzvkit {

// Exact rational in canonical form (reduced, positive denominator).
using Rational = mpq_class;

// Always "p/q", including integers ("2/1") and zero ("0/1").
std::string to_pq_string(const Rational &q);

// Accepts "p/q" or "p"; throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// 1 / n^k
Rational inverse_power(std::uint64_t n, unsigned k);

long double to_long_double(const Rational &q);

} // namespace mzvkit
