#pragma once

#include <map>
#include <mutex>
#include <string>

#include "mzv/index.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/regularize.hpp"

namespace mzvkit {

// A floating value with an estimated absolute error. Not a rigorous enclosure.
struct Real {
    long double value = 0;
    long double error_bound = 0;

    // {"value":"...","errorBound":"..."}
    std::string serialize() const;
};

std::string format_real(long double x);

inline constexpr double kMinMzvTolerance = 1e-12;
inline constexpr double kDefaultMzvTolerance = 1e-7;
inline constexpr double kDefaultLiTolerance = 1e-9;

// zeta(k) for admissible k. The iterated integral over (0,1) is split at 1/2;
// both halves are multiple polylogarithms at 1/2 (the upper half after t -> 1-t,
// which swaps e0/e1 and reverses the word), so every series converges like 2^-n.
Real mzv(const Index &k, double tol = kDefaultMzvTolerance);

// zeta(k) as the limit of zeta_{<N}(k): sums at N, 2N, 4N, ... until successive
// values differ by less than tol/2. Only practical for low depth and modest tol;
// kept as an independent check of mzv(). Throws RefusalError past max_n.
Real mzv_by_truncation(const Index &k, double tol, std::uint64_t start_n = 1024,
                       std::uint64_t max_n = std::uint64_t{1} << 30);

// Li_k(z) = sum_{0<n_1<...<n_r} z^{n_r} / prod n_i^{k_i}, truncated once a
// geometric bound on the tail drops below tol. Requires 0 < z < 1.
Real li_value(const Index &k, long double z, double tol = kDefaultLiTolerance);

Real euler_gamma();

// Thread-safe memo of mzv values at one tolerance.
class MzvCache {
public:
    explicit MzvCache(double tol = kDefaultMzvTolerance) : tol_(tol) {}
    Real get(const Index &k);
    double tolerance() const { return tol_; }

private:
    double tol_;
    std::mutex mutex_;
    std::map<Index, Real> table_;
};

// Z on H^0: sum of c * zeta(index(w)). Throws DomainError outside H^0.
Real z_value(const LinComb &x, MzvCache &cache);
Real z_value(const LinComb &x, double tol = kDefaultMzvTolerance);

// sum_i Z(c_i) t^i with the error bounds propagated by the triangle inequality.
Real eval_reg_polynomial(const RegPolynomial &p, long double t, MzvCache &cache);
Real eval_reg_polynomial(const RegPolynomial &p, long double t, double tol = kDefaultMzvTolerance);

} // namespace mzvkit
