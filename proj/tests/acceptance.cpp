// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "mzv/error.hpp"
#include "mzv/finitesum.hpp"
#include "mzv/kernels.hpp"
#include "mzv/numeric.hpp"
#include "mzv/products.hpp"
#include "mzv/regularize.hpp"
#include "mzv/verify.hpp"
#include "test_support.hpp"

using namespace mzvkit;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int number;
    const char *title;
    double budget_s;
    std::function<Outcome()> check;
};

std::string fmt(const char *f, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome msw_exactness()
{
    std::size_t checked = 0;
    for (const Index &k : indices_up_to_weight(6)) {
        for (std::uint64_t n : {2, 5, 10, 25, 50}) {
            if (zeta_lt(k, n) != zeta_flat(k, n)) return {false, "mismatch at (" + k.to_string() + ")"};
            ++checked;
        }
    }
    CampaignConfig cfg;
    Report r = verify_msw(cfg);
    bool ok = checked == 315 && r.verdict == Verdict::pass && r.cases.size() == 315;
    return {ok, fmt("%zu exact equalities, campaign %s", checked, to_string(r.verdict))};
}

Outcome harmonic_exactness()
{
    CampaignConfig cfg;
    Report r = verify_harmonic(cfg);
    std::size_t sampled = 0;
    for (const CaseRecord &c : r.cases) sampled += c.key.starts_with("pair ") ? 1 : 0;
    bool ok = r.verdict == Verdict::pass && sampled == 100 && cfg.harmonic_n == 100;
    return {ok, fmt("%zu sampled pairs at N=100, %zu failed", sampled, r.failed_cases())};
}

std::vector<RArgs> rargs_up_to_weight(unsigned w)
{
    std::vector<RArgs> out;
    std::vector<unsigned> a, b;
    auto rec = [&](auto &&self, unsigned used) -> void {
        if (!a.empty()) out.emplace_back(a, b);
        for (unsigned ai = a.empty() ? 1 : 0; ai + used <= w; ++ai) {
            for (unsigned bi = 0; ai + bi + used <= w; ++bi) {
                if (ai + bi == 0) continue;
                a.push_back(ai);
                b.push_back(bi);
                self(self, used + ai + bi);
                a.pop_back();
                b.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

Outcome oracle_equivalence()
{
    std::size_t checked = 0;
    for (const Index &k : indices_up_to_weight(4)) {
        for (std::uint64_t n = 1; n <= 20; ++n) {
            for (Variant v : {Variant::plain, Variant::flat, Variant::natural}) {
                if (evaluate(v, word_of_index(k), n) != brute_force(k, n, v)) {
                    return {false, fmt("%s mismatch at N=%llu", to_string(v), (unsigned long long)n)};
                }
                ++checked;
            }
        }
    }
    std::vector<RArgs> all = rargs_up_to_weight(4);
    for (const RArgs &args : all) {
        for (std::uint64_t n = 2; n <= 20; ++n) {
            if (r_value(args, n) != brute_force(args, n)) return {false, "R(" + args.to_string() + ") mismatch"};
            ++checked;
        }
    }
    return {true, fmt("%zu exact comparisons (%zu R arguments)", checked, all.size())};
}

Outcome euler_relation()
{
    LinComb e1 = LinComb::of_index({1});
    LinComb e2 = LinComb::of_index({2});
    LinComb reg = reg_star(harmonic(e1, e2) - shuffle(e1, e2));
    bool shape = reg == test::lc({{1, {3}}, {-1, {1, 2}}});
    Real z = z_value(reg, 1e-7);
    double residual = std::fabs(static_cast<double>(z.value));
    // Independent value of zeta(3): direct series to M plus the Euler-Maclaurin tail 1/(2M^2) - 1/(2M^3) + O(M^-4).
    const long double m = 100000;
    long double direct = 0;
    for (long double n = m; n >= 1; n -= 1) direct += 1 / (n * n * n);
    direct += 1 / (2 * m * m) - 1 / (2 * m * m * m);
    double gap = std::fabs(static_cast<double>(mzv({1, 2}, 1e-7).value - direct));
    return {shape && residual < 1e-5 && gap < 1e-5,
            fmt("reg_* = e(3) - e(1,2): %s, residual %.3g, |zeta(1,2) - direct zeta(3)| = %.3g", shape ? "yes" : "no",
                residual, gap)};
}

Outcome edsr_sweep()
{
    CampaignConfig cfg;
    double worst = 0;
    std::size_t cases = 0;
    bool ok = true;
    for (RegKind kind : {RegKind::star, RegKind::sh}) {
        Report r = verify_edsr(cfg, kind);
        ok = ok && r.verdict == Verdict::pass;
        for (const CaseRecord &c : r.cases) {
            worst = std::max(worst, *c.residual);
            ++cases;
            ok = ok && *c.residual < 1e-5;
        }
    }
    return {ok && cases == 64, fmt("%zu pairs over both regularizations, worst residual %.3g", cases, worst)};
}

Outcome harmonic_sentinel()
{
    const long double gamma = euler_gamma().value;
    double worst_ratio = 0;
    for (std::uint64_t n = 10; n <= 1000000; n *= 10) {
        long double gap = std::fabs(real_zeta_lt({1}, n) - std::log(static_cast<long double>(n)) - gamma);
        worst_ratio = std::max(worst_ratio, static_cast<double>(gap * n));
        if (!(gap < 1.0L / n)) return {false, fmt("N=%llu gap %.3Lg", (unsigned long long)n, gap)};
    }
    return {true, fmt("max N*|gap| = %.4f over N = 10..10^6", worst_ratio)};
}

Outcome rate_fits()
{
    CampaignConfig cfg;
    bool ok = cfg.n_schedule == CampaignConfig::geometric_schedule(4, 14) && cfg.slack == 1.25;
    std::string detail;
    std::size_t fitted = 0;
    for (const char *id : {"prop-flat-natural", "prop-asymp-shuffle", "thm-main", "lemma-R-i", "lemma-R-ii",
                           "lemma-R-iii"}) {
        Report r = run_claim(id, cfg);
        if (r.verdict != Verdict::pass) {
            ok = false;
            detail += std::string(id) + " failed; ";
        }
        for (const CaseRecord &c : r.cases) fitted += c.fit ? 1 : 0;
    }
    return {ok, detail + fmt("%zu fitted residual sequences over 2^4..2^14", fitted)};
}

Outcome lemma_sentinels()
{
    long double value = real_r_value(RArgs({2, 1}, {0, 0}), 100000);
    long double z = mzv({1, 2}).value;
    double gap = std::fabs(static_cast<double>(value - z));
    bool increasing = true;
    long double prev = -1;
    for (std::uint64_t n : CampaignConfig().n_schedule) {
        long double v = real_r_value(RArgs({1, 2}, {0, 0}), n);
        increasing = increasing && v > prev;
        prev = v;
    }
    return {gap < 0.01 && increasing,
            fmt("|R(2,1;0,0) - zeta(1,2)| = %.3g at N=1e5; R(1,2;0,0) increasing: %s", gap, increasing ? "yes" : "no")};
}

Outcome regularization_algebra()
{
    test::Generator gen(20240917);
    std::vector<LinComb> xs;
    for (int i = 0; i < 50; ++i) xs.push_back(gen.h1_element(5));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const LinComb &x = xs[i];
        const LinComb &y = xs[(i + 1) % xs.size()];
        for (Product kind : {Product::harmonic, Product::shuffle}) {
            if (substitute_e1(kind, decompose(kind, x)) != x) return {false, "round trip failed"};
            if (decompose(kind, multiply(kind, x, y)) != multiply(kind, decompose(kind, x), decompose(kind, y))) {
                return {false, std::string("homomorphism failed for ") + to_string(kind)};
            }
        }
    }
    return {true, "50 elements, round trip and homomorphism for both products"};
}

Outcome determinism()
{
    CampaignConfig cfg;
    std::string runs[2];
    for (std::string &out : runs) {
        detail::clear_product_caches();
        detail::clear_decompose_caches();
        ReportBundle b = run_all(cfg);
        for (const Report &r : b.reports) out += r.to_json().dump(2) + r.to_csv();
        out += b.summary(cfg).dump(2);
    }
    return {runs[0] == runs[1], fmt("two full runs, %zu bytes each", runs[0].size())};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "MSW exactness", 60, msw_exactness},
        {2, "harmonic homomorphism exactness", 30, harmonic_exactness},
        {3, "oracle equivalence", 60, oracle_equivalence},
        {4, "Euler relation through the EDSR pipeline", 30, euler_relation},
        {5, "EDSR sweep", 300, edsr_sweep},
        {6, "harmonic number sentinel", 10, harmonic_sentinel},
        {7, "rate fits", 300, rate_fits},
        {8, "R sentinels", 60, lemma_sentinels},
        {9, "regularization algebra", 60, regularization_algebra},
        {10, "determinism of verify all", 600, determinism},
    };
    int failed = 0;
    for (const Criterion &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool within = s < c.budget_s;
        bool pass = o.pass && within;
        failed += pass ? 0 : 1;
        std::printf("%s  %2d  %-42s %8.2fs  %s%s\n", pass ? "PASS" : "FAIL", c.number, c.title, s, o.detail.c_str(),
                    within ? "" : " (over time budget)");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
