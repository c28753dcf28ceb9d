#pragma once

#include "sn/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sn {

struct fourth_moment_verdict {
    long long trials = 0;
    long long violations = 0;
    bool two_level_optimum_exact = false; // theta (1 - sqrt(eta/theta))^4 attained
    std::string first_violation;          // empty when none
};

/// Randomized check of the fourth-moment floor: for Boolean step functions F
/// of mean theta and perturbations h with E[(h-F)^2] <= eta <= C*theta,
///   E[h^4] >= theta - 4(1+C) sqrt(eta * theta),
/// compared exactly by squaring. Also verifies that the two-level function
/// with value 1 - sqrt(eta/theta) on the support and 0 elsewhere attains
/// theta (1 - sqrt(eta/theta))^4 with exact rational equality (eta is drawn
/// so that eta/theta is a perfect square).
fourth_moment_verdict fourth_moment_bound_check(long long trials,
                                                const std::pair<Rat, Rat>& theta_range,
                                                const std::pair<Rat, Rat>& eta_range,
                                                int grid_size, std::uint64_t seed);

/// Exact comparison helper: is value >= theta - 4 (1 + C) sqrt(eta theta)?
bool fourth_moment_floor_holds(const Rat& value, const Rat& theta, const Rat& eta, const Rat& c);

} // namespace sn
