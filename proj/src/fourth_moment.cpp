#include "sn/fourth_moment.hpp"

#include "sn/error.hpp"
#include "sn/rng.hpp"

#include <algorithm>
#include <sstream>

namespace sn {

bool fourth_moment_floor_holds(const Rat& value, const Rat& theta, const Rat& eta, const Rat& c) {
    // value >= theta - 4(1+C) sqrt(eta theta), decided without square roots:
    // when theta - value <= 0 the floor holds outright; otherwise both sides
    // of 4(1+C) sqrt(eta theta) >= theta - value are non-negative and can be
    // squared.
    Rat gap = theta - value;
    if (gap <= 0) return true;
    Rat lhs = 16 * (1 + c) * (1 + c) * eta * theta;
    return lhs >= gap * gap;
}

namespace {

Rat random_rat_in(rng& gen, const Rat& lo, const Rat& hi, long long den) {
    // Uniform on the den-grid of [lo, hi].
    Rat width = hi - lo;
    long long steps = static_cast<long long>(gen.below(static_cast<std::uint64_t>(den) + 1));
    return lo + width * Rat(steps, den);
}

} // namespace

fourth_moment_verdict fourth_moment_bound_check(long long trials,
                                                const std::pair<Rat, Rat>& theta_range,
                                                const std::pair<Rat, Rat>& eta_range,
                                                int grid_size, std::uint64_t seed) {
    if (grid_size < 2) throw domain_error("grid size must be at least 2");
    if (theta_range.first <= 0 || theta_range.second > 1 || theta_range.first > theta_range.second)
        throw domain_error("theta range must sit inside (0, 1]");
    if (eta_range.first < 0 || eta_range.second > 1 || eta_range.first > eta_range.second)
        throw domain_error("eta range must sit inside [0, 1]");

    fourth_moment_verdict verdict;
    verdict.trials = trials;
    verdict.two_level_optimum_exact = true;
    rng gen(seed);

    for (long long trial = 0; trial < trials; ++trial) {
        // Support size k on the grid fixes theta = k/grid exactly inside the
        // requested range; empty supports are re-drawn.
        Rat theta = random_rat_in(gen, theta_range.first, theta_range.second, grid_size);
        Rat scaled = theta * grid_size;
        long long k = (numerator(scaled) / denominator(scaled)).convert_to<long long>();
        if (k < 1) k = 1;
        theta = Rat(k, grid_size);

        // eta = theta * rho^2 keeps sqrt(eta/theta) rational for the optimum
        // clause; rho is drawn from a coarse grid so eta spans the range.
        Rat rho = random_rat_in(gen, Rat(0), Rat(1), 16);
        Rat eta = theta * rho * rho;
        if (eta > eta_range.second) {
            rho = Rat(1, 2);
            eta = theta * rho * rho;
        }
        Rat cap = eta <= theta ? Rat(1) : eta / theta; // eta <= C * theta

        // h = F + noise with E[(h-F)^2] <= eta: per-cell noise on the grid,
        // scaled down whenever the running budget would overflow.
        std::vector<Rat> h(static_cast<std::size_t>(grid_size), Rat(0));
        for (long long i = 0; i < k; ++i) h[static_cast<std::size_t>(i)] = 1;
        Rat budget = eta;
        for (int i = 0; i < grid_size; ++i) {
            Rat noise = random_rat_in(gen, Rat(-1), Rat(1), 8) * rho;
            Rat cost = noise * noise / grid_size;
            if (cost > budget) continue;
            budget -= cost;
            h[static_cast<std::size_t>(i)] += noise;
        }

        Rat fourth = 0;
        for (const Rat& v : h) fourth += v * v * v * v;
        fourth /= grid_size;

        if (!fourth_moment_floor_holds(fourth, theta, eta, cap)) {
            ++verdict.violations;
            if (verdict.first_violation.empty()) {
                std::ostringstream msg;
                msg << "trial " << trial << ": theta=" << to_string(theta)
                    << " eta=" << to_string(eta) << " E[h^4]=" << to_string(fourth);
                verdict.first_violation = msg.str();
            }
        }

        // Two-level optimum: value r = 1 - rho on the support, 0 elsewhere.
        // Built as a concrete grid function; its summed moments must hit the
        // closed forms with exact rational equality.
        Rat r = 1 - rho;
        std::vector<Rat> two(static_cast<std::size_t>(grid_size), Rat(0));
        for (long long i = 0; i < k; ++i) two[static_cast<std::size_t>(i)] = r;
        Rat two_fourth = 0, two_dist = 0;
        for (int i = 0; i < grid_size; ++i) {
            const Rat& v = two[static_cast<std::size_t>(i)];
            two_fourth += v * v * v * v;
            Rat d = v - (i < k ? Rat(1) : Rat(0));
            two_dist += d * d;
        }
        two_fourth /= grid_size;
        two_dist /= grid_size;
        if (two_fourth != theta * r * r * r * r || two_dist != eta)
            verdict.two_level_optimum_exact = false;
        if (!fourth_moment_floor_holds(two_fourth, theta, eta, cap)) {
            ++verdict.violations;
            if (verdict.first_violation.empty())
                verdict.first_violation = "two-level optimum fell below the floor";
        }
    }
    return verdict;
}

} // namespace sn
