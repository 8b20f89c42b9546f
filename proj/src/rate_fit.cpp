#include "mzv/rate_fit.hpp"

#include <algorithm>
#include <cmath>

#include "mzv/error.hpp"

namespace mzvkit {

namespace {

void validate(const std::vector<Observation> &obs)
{
    if (obs.size() < 5) throw DomainError("fit_log_rate needs at least 5 observations");
    for (const auto &o : obs) {
        if (!(o.n >= 2)) throw DomainError("fit_log_rate needs N >= 2");
        if (!std::isfinite(o.residual)) throw DomainError("fit_log_rate needs finite residuals");
    }
    const double ratio = obs[1].n / obs[0].n;
    if (!(ratio > 1)) throw DomainError("fit_log_rate needs strictly increasing N");
    for (std::size_t i = 1; i < obs.size(); ++i) {
        double r = obs[i].n / obs[i - 1].n;
        if (std::fabs(r - ratio) > 1e-9 * ratio) {
            throw DomainError("fit_log_rate needs N growing by a fixed factor");
        }
    }
}

std::vector<double> normalized(const std::vector<Observation> &obs, unsigned a, int n_power)
{
    std::vector<double> s;
    s.reserve(obs.size());
    for (const auto &o : obs) {
        s.push_back(std::fabs(o.residual) * std::pow(o.n, n_power) / std::pow(std::log(o.n), static_cast<double>(a)));
    }
    return s;
}

bool non_increasing_within_slack(const std::vector<double> &s, std::size_t from, double slack)
{
    for (std::size_t i = from; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[j] > slack * s[i]) return false;
        }
    }
    return true;
}

} // namespace

RateFit fit_log_rate(std::vector<Observation> observations, const RateFitOptions &options)
{
    validate(observations);
    RateFit fit;
    const std::size_t tail_start = observations.size() / 2;
    for (unsigned a = 0; a <= options.max_exponent; ++a) {
        auto s = normalized(observations, a, options.n_power);
        fit.bounded_constant = *std::max_element(s.begin(), s.end());
        if (non_increasing_within_slack(s, tail_start, options.slack)) {
            fit.exponent = a;
            break;
        }
    }
    fit.observations = std::move(observations);
    return fit;
}

} // namespace mzvkit
