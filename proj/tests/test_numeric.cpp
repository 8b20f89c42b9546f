#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mzv/error.hpp"
#include "mzv/kernels.hpp"
#include "mzv/numeric.hpp"
#include "test_support.hpp"

using namespace mzvkit;

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
const long double kZeta2 = kPi * kPi / 6;
const long double kZeta4 = kPi * kPi * kPi * kPi / 90;
constexpr long double kZeta3 = 1.2020569031595942853997381615114499908L;

LinComb e(Index k) { return LinComb::of_index(k); }

} // namespace

TEST(Mzv, Zeta2MatchesPiSquaredOverSix)
{
    Real z = mzv({2});
    EXPECT_LT(std::fabs(z.value - kZeta2), 2 * kDefaultMzvTolerance);
    Real tight = mzv({2}, 1e-12);
    EXPECT_LT(std::fabs(tight.value - kZeta2), 1e-12L);
    EXPECT_LE(tight.error_bound, 1e-12L);
    EXPECT_GE(tight.error_bound, 0.0L);
}

TEST(Mzv, EulerRelation)
{
    Real a = mzv({1, 2});
    Real b = mzv({3});
    EXPECT_LT(std::fabs(a.value - b.value), 2 * kDefaultMzvTolerance);
    EXPECT_LT(std::fabs(mzv({3}, 1e-12).value - kZeta3), 1e-12L);
    EXPECT_LT(std::fabs(mzv({1, 2}, 1e-12).value - kZeta3), 1e-12L);
}

TEST(Mzv, ClosedFormsAtWeightFour)
{
    // (2,2) from e2*e2 = 2 e(2,2) + e(4)
    EXPECT_LT(std::fabs(mzv({2, 2}, 1e-12).value - (kZeta2 * kZeta2 - kZeta4) / 2), 1e-12L);
    EXPECT_LT(std::fabs(mzv({4}, 1e-12).value - kZeta4), 1e-12L);
    EXPECT_LT(std::fabs(mzv({1, 1, 2}, 1e-12).value - kZeta4), 1e-12L);
    EXPECT_LT(std::fabs(mzv({1, 3}, 1e-12).value - kZeta4 / 4), 1e-12L);
}

TEST(Mzv, DomainErrors)
{
    EXPECT_THROW(mzv({2, 1}), DomainError);
    EXPECT_THROW(mzv({1}), DomainError);
    EXPECT_THROW(mzv({2}, 1e-13), DomainError);
    EXPECT_EQ(mzv({}).value, 1.0L);
}

TEST(Mzv, AgreesWithTruncatedHarmonicSums)
{
    for (const Index &k : indices_up_to_weight(4)) {
        if (!k.admissible()) continue;
        Real slow = mzv_by_truncation(k, 1e-5);
        Real fast = mzv(k, 1e-10);
        // the doubling rule's error estimate is only heuristic for log tails
        EXPECT_LT(std::fabs(slow.value - fast.value), 4 * std::max(slow.error_bound, 1e-5L)) << k.to_string();
    }
    EXPECT_THROW(mzv_by_truncation({2}, 1e-9, 16, 1024), RefusalError);
}

TEST(LiValue, ClosedForms)
{
    for (int i = 1; i <= 9; ++i) {
        long double z = i / 10.0L;
        EXPECT_LT(std::fabs(li_value({1}, z).value + std::log1p(-z)), 1e-9L);
        long double l = std::log1p(-z);
        EXPECT_LT(std::fabs(li_value({1, 1}, z).value - l * l / 2), 1e-9L);
    }
    EXPECT_NEAR(static_cast<double>(li_value({1}, 0.5L, 1e-14).value), 0.6931471805599453, 1e-14);
}

TEST(LiValue, SmallZAndDomain)
{
    EXPECT_LT(li_value({2, 1}, 1e-6L).value, 1e-11L);
    EXPECT_LT(li_value({3}, 1e-9L).value, 1e-8L);
    EXPECT_THROW(li_value({2}, 0.0L), DomainError);
    EXPECT_THROW(li_value({2}, 1.0L), DomainError);
    EXPECT_THROW(li_value({2}, -0.5L), DomainError);
}

TEST(LiValue, TendsToMzvFromBelow)
{
    for (const Index &k : {Index{2}, Index{1, 2}, Index{3}, Index{1, 1, 2}}) {
        long double limit = mzv(k, 1e-12).value;
        long double prev = 0;
        for (int m = 1; m <= 14; ++m) {
            long double one_minus_z = std::ldexp(1.0L, -m);
            long double v = li_value(k, 1 - one_minus_z, 1e-12).value;
            EXPECT_GT(v, prev);
            EXPECT_LT(v, limit);
            prev = v;
        }
        // remaining gap at 1-z = 2^-14 is O((1-z) log^depth(1-z))
        long double eps = std::ldexp(1.0L, -14);
        EXPECT_LT(limit - prev, 4 * eps * std::pow(1 - std::log(eps), static_cast<long double>(k.depth())))
            << k.to_string();
    }
    // the (2) gap at z = 0.999 is of order (1-z)|log(1-z)|
    long double gap = mzv({2}).value - li_value({2}, 0.999L).value;
    long double scale = 0.001L * std::fabs(std::log(0.001L));
    EXPECT_GT(gap, 0.5L * scale);
    EXPECT_LT(gap, 2.0L * scale);
}

TEST(EulerGamma, MatchesEulerMaclaurin)
{
    const std::uint64_t n = 1000000;
    long double h = real_zeta_lt({1}, n + 1);
    long double nn = static_cast<long double>(n);
    long double estimate = h - std::log(nn) - 1 / (2 * nn) + 1 / (12 * nn * nn);
    EXPECT_LT(std::fabs(estimate - euler_gamma().value), 1e-12L);
    EXPECT_NEAR(static_cast<double>(euler_gamma().value), 0.5772156649015329, 1e-15);

    long double h10 = real_zeta_lt({1}, 11);
    long double gap = h10 - std::log(10.0L) - euler_gamma().value;
    // 1/20 - 1/1200 + 1/120000 - ...
    EXPECT_NEAR(static_cast<double>(gap), 0.049175, 1e-5);
    EXPECT_LT(gap, 1.0L / 20);
}

TEST(EvalRegPolynomial, Examples)
{
    RegPolynomial t = RegPolynomial::monomial(LinComb::unit(), 1);
    EXPECT_EQ(eval_reg_polynomial(t, 3.0L).value, 3.0L);
    RegPolynomial p = z_star_polynomial({1, 1});
    EXPECT_LT(std::fabs(eval_reg_polynomial(p, 0.0L).value + kZeta2 / 2), 1e-7L);
    RegPolynomial c = RegPolynomial::constant(e({2}));
    for (long double x : {-2.0L, 0.0L, 5.0L}) {
        EXPECT_LT(std::fabs(eval_reg_polynomial(c, x).value - kZeta2), 1e-7L);
    }
    EXPECT_THROW(z_value(e({2, 1})), DomainError);
}

TEST(EvalRegPolynomial, LinearAndExactAtZero)
{
    test::Generator gen(41);
    MzvCache cache(1e-10);
    for (int i = 0; i < 20; ++i) {
        RegPolynomial p = z_star_polynomial(gen.index(4));
        RegPolynomial q = z_sh_polynomial(gen.index(4));
        long double t = gen.uniform(0, 40) / 4.0L;
        long double lhs = eval_reg_polynomial(p * Rational(3) + q, t, cache).value;
        long double rhs = 3 * eval_reg_polynomial(p, t, cache).value + eval_reg_polynomial(q, t, cache).value;
        EXPECT_LT(std::fabs(lhs - rhs), 1e-8L * (1 + std::fabs(rhs)));
        EXPECT_EQ(eval_reg_polynomial(p, 0.0L, cache).value, z_value(p.coefficient(0), cache).value);
    }
}

TEST(Real, Serialization)
{
    Real r{0.5L, 0.25L};
    EXPECT_EQ(r.serialize(), R"({"value":"0.5","errorBound":"0.25"})");
}
