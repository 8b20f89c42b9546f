#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mzv/finitesum.hpp"

namespace mzvkit {

// Floating (long double) counterparts of the exact finite sums, used by the
// asymptotic campaigns where N reaches 10^4..10^6 and exact denominators explode.

enum class SumKind { plain, flat, natural, r };

struct SumRequest {
    SumKind kind = SumKind::plain;
    Word word;  // plain/flat/natural; must lie in H^1
    RArgs args; // r
    std::uint64_t n = 2;

    static SumRequest of(Variant v, const Word &w, std::uint64_t n);
    static SumRequest of(const RArgs &args, std::uint64_t n);
};

long double real_sum(const SumRequest &request);
long double real_zeta_lt(const Index &k, std::uint64_t n);
long double real_zeta_flat(const Word &w, std::uint64_t n);
long double real_zeta_natural(const Word &w, std::uint64_t n);
long double real_r_value(const RArgs &args, std::uint64_t n);
// Linear extension with rational coefficients rounded to long double.
long double real_zn_apply(const LinComb &x, std::uint64_t n, Variant v);

// Reference: evaluates requests one after another.
std::vector<long double> evaluate_batch_serial(std::span<const SumRequest> requests);
// OpenMP over requests with `workers` threads (0 = runtime default). Each request
// is evaluated by one thread, so results are bit-identical to the serial path.
std::vector<long double> evaluate_batch(std::span<const SumRequest> requests, int workers = 0);

} // namespace mzvkit
