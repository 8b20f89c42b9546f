#include "mzv/kernels.hpp"

#include <cmath>

#include <omp.h>

#include "mzv/chain_dp.hpp"
#include "mzv/error.hpp"

namespace mzvkit {

SumRequest SumRequest::of(Variant v, const Word &w, std::uint64_t n)
{
    SumRequest r;
    r.kind = v == Variant::plain ? SumKind::plain : (v == Variant::flat ? SumKind::flat : SumKind::natural);
    r.word = w;
    r.n = n;
    return r;
}

SumRequest SumRequest::of(const RArgs &args, std::uint64_t n)
{
    SumRequest r;
    r.kind = SumKind::r;
    r.args = args;
    r.n = n;
    return r;
}

namespace {

long double letter_weight(Letter u, std::uint64_t n, std::uint64_t n_bound)
{
    return u == Letter::e1 ? 1.0L / static_cast<long double>(n_bound - n) : 1.0L / static_cast<long double>(n);
}

long double word_sum(const Word &w, std::uint64_t n_bound, bool all_strict)
{
    if (n_bound < 1) throw DomainError("N must be a positive integer");
    if (!w.in_h1()) throw DomainError("finite sums need a word in H^1");
    return detail::chain_sum<long double>(
        w.length(), n_bound,
        [&](std::size_t i) { return all_strict || w.letter(static_cast<unsigned>(i)) == Letter::e1; },
        [&](std::size_t i, std::uint64_t n) { return letter_weight(w.letter(static_cast<unsigned>(i)), n, n_bound); });
}

} // namespace

long double real_zeta_lt(const Index &k, std::uint64_t n)
{
    if (n < 1) throw DomainError("N must be a positive integer");
    return detail::chain_sum<long double>(
        k.depth(), n, [](std::size_t) { return true; },
        [&](std::size_t i, std::uint64_t m) { return std::pow(static_cast<long double>(m), -static_cast<long double>(k[i])); });
}

long double real_zeta_flat(const Word &w, std::uint64_t n)
{
    return word_sum(w, n, false);
}

long double real_zeta_natural(const Word &w, std::uint64_t n)
{
    return word_sum(w, n, true);
}

long double real_r_value(const RArgs &args, std::uint64_t n)
{
    RArgs checked(args.a, args.b);
    if (n < 2) throw DomainError("R_{<N} needs N >= 2");
    return detail::chain_sum<long double>(
        checked.depth(), n, [](std::size_t) { return true; },
        [&](std::size_t i, std::uint64_t m) {
            long double left = std::pow(static_cast<long double>(n - m), -static_cast<long double>(checked.a[i]));
            long double right = std::pow(static_cast<long double>(m), -static_cast<long double>(checked.b[i]));
            return left * right;
        });
}

long double real_sum(const SumRequest &request)
{
    switch (request.kind) {
    case SumKind::plain: return real_zeta_lt(index_of_word(request.word), request.n);
    case SumKind::flat: return real_zeta_flat(request.word, request.n);
    case SumKind::natural: return real_zeta_natural(request.word, request.n);
    case SumKind::r: return real_r_value(request.args, request.n);
    }
    throw DomainError("unknown sum kind");
}

long double real_zn_apply(const LinComb &x, std::uint64_t n, Variant v)
{
    if (!x.in_h1()) throw DomainError("Z_N is defined on H^1 only");
    long double total = 0;
    for (const auto &[w, c] : x) {
        total += to_long_double(c) * real_sum(SumRequest::of(v, w, n));
    }
    return total;
}

std::vector<long double> evaluate_batch_serial(std::span<const SumRequest> requests)
{
    std::vector<long double> out(requests.size());
    for (std::size_t i = 0; i < requests.size(); ++i) out[i] = real_sum(requests[i]);
    return out;
}

std::vector<long double> evaluate_batch(std::span<const SumRequest> requests, int workers)
{
    std::vector<long double> out(requests.size());
    int threads = workers > 0 ? workers : omp_get_max_threads();
    const auto count = static_cast<std::int64_t>(requests.size());
    // Exceptions cannot cross the parallel region; capture the first and rethrow.
    std::exception_ptr failure;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = real_sum(requests[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical(mzv_batch_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace mzvkit
