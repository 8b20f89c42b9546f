#include "mzv/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "mzv/error.hpp"

namespace mzvkit {

std::string format_real(long double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.19Lg", x);
    return buf;
}

std::string Real::serialize() const
{
    return "{\"value\":\"" + format_real(value) + "\",\"errorBound\":\"" + format_real(error_bound) + "\"}";
}

namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();

struct KahanSum {
    long double sum = 0;
    long double carry = 0;
    void add(long double x)
    {
        long double y = x - carry;
        long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Streaming evaluation of the nested series. inner[i] holds zeta_{<n}(k_1..k_i)
// before step n; the outermost sum carries the weight z^n.
Real polylog_series(const Index &k, long double z, long double tol)
{
    const std::size_t r = k.depth();
    if (r == 0) return {1.0L, 0.0L};
    std::vector<long double> inner(r, 0.0L);
    inner[0] = 1.0L;
    const unsigned depth_below = static_cast<unsigned>(r - 1);
    const long double top = static_cast<long double>(k[r - 1]);
    long double d_fact = 1;
    for (unsigned i = 2; i <= depth_below; ++i) d_fact *= i;

    KahanSum total;
    long double z_pow = 1;
    long double tail = std::numeric_limits<long double>::infinity();
    std::uint64_t n = 0;
    const std::uint64_t max_terms = std::uint64_t{1} << 34;
    while (n < max_terms) {
        ++n;
        const auto nn = static_cast<long double>(n);
        z_pow *= z;
        total.add(z_pow * inner[r - 1] / std::pow(nn, top));
        for (std::size_t i = r - 1; i >= 1; --i) {
            inner[i] += inner[i - 1] / std::pow(nn, static_cast<long double>(k[i - 1]));
        }
        // For m > n, zeta_{<m}(k_1..k_{r-1}) <= H_{m-1}^{r-1}/(r-1)! <= (1+log m)^{r-1}/(r-1)!,
        // so the tail is dominated by a series whose term ratio is at most q below.
        const long double l1 = 1 + std::log(nn + 1);
        const long double l2 = 1 + std::log(nn + 2);
        const long double q = z * std::pow(l2 / l1, static_cast<long double>(depth_below));
        if (q < 1) {
            const long double next_term =
                z_pow * z * std::pow(l1, static_cast<long double>(depth_below)) / d_fact / std::pow(nn + 1, top);
            tail = next_term / (1 - q);
            if (tail < tol) break;
        }
    }
    if (!(tail < tol)) {
        throw RefusalError("polylogarithm series did not reach tolerance");
    }
    long double rounding = 4 * kEps * static_cast<long double>(r) * std::fabs(total.sum) * std::log2(static_cast<long double>(n) + 2);
    return {total.sum, tail + rounding};
}

Word swap_reverse(const Word &w, unsigned from)
{
    Word out;
    for (unsigned i = w.length(); i-- > from;) {
        out = out.append(w.letter(i) == Letter::e1 ? Letter::e0 : Letter::e1);
    }
    return out;
}

Word prefix(const Word &w, unsigned len)
{
    Word out;
    for (unsigned i = 0; i < len; ++i) out = out.append(w.letter(i));
    return out;
}

void check_tolerance(double tol)
{
    if (!(tol >= kMinMzvTolerance)) {
        throw DomainError("tolerance below supported precision (minimum 1e-12)");
    }
}

} // namespace

Real mzv(const Index &k, double tol)
{
    if (!k.admissible()) throw DomainError("mzv needs an admissible index, got (" + k.to_string() + ")");
    check_tolerance(tol);
    if (k.empty()) return {1.0L, 0.0L};

    const Word w = word_of_index(k);
    const unsigned len = w.length();
    const long double half = 0.5L;
    // Each factor is < 2^len in size; budget the tolerance across 2(len+1) factors.
    const long double piece_tol = static_cast<long double>(tol) / (8.0L * (len + 1) * std::ldexp(1.0L, static_cast<int>(len)));

    KahanSum total;
    long double err = 0;
    for (unsigned j = 0; j <= len; ++j) {
        Word lower = prefix(w, j);
        Word upper = swap_reverse(w, j);
        Real a = polylog_series(index_of_word(lower), half, std::max(piece_tol, 1e-19L));
        Real b = polylog_series(index_of_word(upper), half, std::max(piece_tol, 1e-19L));
        total.add(a.value * b.value);
        err += a.error_bound * std::fabs(b.value) + b.error_bound * std::fabs(a.value) + a.error_bound * b.error_bound;
    }
    err += 4 * kEps * std::fabs(total.sum) * (len + 1);
    return {total.sum, err};
}

Real mzv_by_truncation(const Index &k, double tol, std::uint64_t start_n, std::uint64_t max_n)
{
    if (!k.admissible()) throw DomainError("mzv needs an admissible index, got (" + k.to_string() + ")");
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    if (k.empty()) return {1.0L, 0.0L};
    const std::size_t r = k.depth();
    std::vector<long double> inner(r + 1, 0.0L);
    std::vector<long double> carry(r + 1, 0.0L);
    inner[0] = 1.0L;
    auto add = [&](std::size_t i, long double x) {
        long double y = x - carry[i];
        long double t = inner[i] + y;
        carry[i] = (t - inner[i]) - y;
        inner[i] = t;
    };
    long double previous = std::numeric_limits<long double>::quiet_NaN();
    std::uint64_t checkpoint = start_n;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        if (n == checkpoint) {
            long double current = inner[r];
            if (!std::isnan(previous) && std::fabs(current - previous) < tol / 2) {
                return {current, std::fabs(current - previous)};
            }
            previous = current;
            checkpoint *= 2;
        }
        const auto nn = static_cast<long double>(n);
        for (std::size_t i = r; i >= 1; --i) {
            add(i, inner[i - 1] / std::pow(nn, static_cast<long double>(k[i - 1])));
        }
    }
    throw RefusalError("truncated harmonic sums did not converge by N=" + std::to_string(max_n));
}

Real li_value(const Index &k, long double z, double tol)
{
    if (!(z > 0 && z < 1)) throw DomainError("li_value needs 0 < z < 1");
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    return polylog_series(k, z, static_cast<long double>(tol));
}

Real euler_gamma()
{
    return {0.577215664901532860606512090082402431L, 1e-19L};
}

Real MzvCache::get(const Index &k)
{
    {
        std::lock_guard lock(mutex_);
        auto it = table_.find(k);
        if (it != table_.end()) return it->second;
    }
    Real value = mzv(k, tol_);
    std::lock_guard lock(mutex_);
    table_.insert_or_assign(k, value);
    return value;
}

Real z_value(const LinComb &x, MzvCache &cache)
{
    if (!x.in_h0()) throw DomainError("Z is defined on H^0 only");
    Real out;
    for (const auto &[w, c] : x) {
        Real v = cache.get(index_of_word(w));
        long double coeff = to_long_double(c);
        out.value += coeff * v.value;
        out.error_bound += std::fabs(coeff) * v.error_bound;
    }
    out.error_bound += 4 * kEps * std::fabs(out.value) * static_cast<long double>(x.size());
    return out;
}

Real z_value(const LinComb &x, double tol)
{
    MzvCache cache(tol);
    return z_value(x, cache);
}

Real eval_reg_polynomial(const RegPolynomial &p, long double t, MzvCache &cache)
{
    Real out;
    long double t_pow = 1;
    for (unsigned i = 0; i <= p.degree(); ++i) {
        if (i > 0) t_pow *= t;
        if (p.coefficient(i).is_zero()) continue;
        Real c = z_value(p.coefficient(i), cache);
        out.value += c.value * t_pow;
        out.error_bound += c.error_bound * std::fabs(t_pow);
    }
    out.error_bound += 4 * kEps * std::fabs(out.value) * (p.degree() + 1);
    return out;
}

Real eval_reg_polynomial(const RegPolynomial &p, long double t, double tol)
{
    MzvCache cache(tol);
    return eval_reg_polynomial(p, t, cache);
}

} // namespace mzvkit
