#pragma once

#include <optional>
#include <vector>

namespace mzvkit {

struct Observation {
    double n = 0;        // N, or 1/(1-z) for z -> 1 grids
    double residual = 0; // magnitude
};

struct RateFitOptions {
    unsigned max_exponent = 3;
    double slack = 1.25;
    // Normalize by N^n_power: 1 for O(N^-1 log^a N) claims, 0 for O(log^a N).
    int n_power = 1;
};

struct RateFit {
    std::vector<Observation> observations;
    // Smallest a with residual * N^p / (log N)^a non-increasing within slack over
    // the tail half; empty when no a <= max_exponent qualifies.
    std::optional<unsigned> exponent;
    double bounded_constant = 0;

    bool ok() const { return exponent.has_value(); }
};

// Requires >= 5 observations with N >= 2, strictly increasing by a fixed factor.
RateFit fit_log_rate(std::vector<Observation> observations, const RateFitOptions &options = {});

} // namespace mzvkit
