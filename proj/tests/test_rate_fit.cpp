#include <cmath>

#include <gtest/gtest.h>

#include "mzv/error.hpp"
#include "mzv/rate_fit.hpp"

using namespace mzvkit;

namespace {

std::vector<Observation> planted(double c, unsigned a, unsigned from = 1, unsigned to = 12)
{
    std::vector<Observation> obs;
    for (unsigned m = from; m <= to; ++m) {
        double n = std::ldexp(1.0, static_cast<int>(m));
        obs.push_back({n, c * std::pow(std::log(n), a) / n});
    }
    return obs;
}

} // namespace

TEST(RateFit, RecoversPlantedExponents)
{
    for (unsigned a = 0; a <= 3; ++a) {
        RateFit fit = fit_log_rate(planted(2.5, a), {.max_exponent = 4});
        ASSERT_TRUE(fit.ok());
        EXPECT_EQ(*fit.exponent, a);
    }
    RateFit fit = fit_log_rate(planted(2.5, 0));
    EXPECT_NEAR(fit.bounded_constant, 2.5, 1e-12);
}

TEST(RateFit, ConstantResidualFails)
{
    std::vector<Observation> obs;
    for (unsigned m = 4; m <= 14; ++m) obs.push_back({std::ldexp(1.0, static_cast<int>(m)), 0.3});
    RateFit fit = fit_log_rate(obs);
    EXPECT_FALSE(fit.ok());
}

TEST(RateFit, LogBoundWithoutNFactor)
{
    // R = log^2 N behaves like O(log^2 N) but not O(log N)
    std::vector<Observation> obs;
    for (unsigned m = 1; m <= 12; ++m) {
        double n = std::ldexp(1.0, static_cast<int>(m));
        obs.push_back({n, std::pow(std::log(n), 2)});
    }
    RateFit fit = fit_log_rate(obs, {.max_exponent = 3, .n_power = 0});
    ASSERT_TRUE(fit.ok());
    EXPECT_EQ(*fit.exponent, 2u);
}

TEST(RateFit, ZeroResidualsPass)
{
    std::vector<Observation> obs = planted(0.0, 0);
    RateFit fit = fit_log_rate(obs);
    ASSERT_TRUE(fit.ok());
    EXPECT_EQ(fit.bounded_constant, 0.0);
}

TEST(RateFit, Preconditions)
{
    EXPECT_THROW(fit_log_rate(planted(1, 0, 1, 4)), DomainError);
    auto obs = planted(1, 0);
    obs[3].n *= 1.5;
    EXPECT_THROW(fit_log_rate(obs), DomainError);
    obs = planted(1, 0);
    obs[2].residual = std::nan("");
    EXPECT_THROW(fit_log_rate(obs), DomainError);
}
