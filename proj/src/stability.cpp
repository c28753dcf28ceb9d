#include "sn/stability.hpp"

#include "sn/coset_family.hpp"
#include "sn/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace sn {

namespace {

long long symdiff_of_union(const coset_family& family, const std::vector<int>& pick,
                           const permutation_set& a, std::vector<std::uint64_t>& scratch) {
    std::size_t words = family.words_per_coset();
    std::fill(scratch.begin(), scratch.end(), 0);
    for (int idx : pick) {
        const std::uint64_t* row = family.member_words(idx);
        for (std::size_t w = 0; w < words; ++w) scratch[w] |= row[w];
    }
    long long total = 0;
    for (std::size_t w = 0; w < words; ++w)
        total += std::popcount(scratch[w] ^ a.words()[w]);
    return total;
}

} // namespace

coset_union_result best_coset_union(const permutation_set& a, int t, int m) {
    int n = a.n();
    if (t < 0 || t > n) throw domain_error("need 0 <= t <= n");
    if (m < 0) throw domain_error("union size must be non-negative");
    coset_family family(n, t, true);
    if (m > family.count()) throw domain_error("more cosets requested than exist");

    coset_union_result res;
    std::vector<std::uint64_t> scratch(family.words_per_coset(), 0);

    if (m == 0) {
        res.members = permutation_set(n);
        res.symmetric_difference = a.size();
        res.exact = true;
        return res;
    }

    Int combos = 1;
    for (int i = 0; i < m; ++i) combos = combos * (family.count() - i) / (i + 1);
    res.exact = combos <= 10000000;

    std::vector<int> pick;
    if (res.exact) {
        std::vector<int> current(m);
        std::vector<int> best_pick;
        long long best = -1;
        auto rec = [&](auto&& self, int slot, int from) -> void {
            if (slot == m) {
                long long d = symdiff_of_union(family, current, a, scratch);
                if (best < 0 || d < best) {
                    best = d;
                    best_pick = current;
                }
                return;
            }
            for (int idx = from; idx <= family.count() - (m - slot); ++idx) {
                current[slot] = idx;
                self(self, slot + 1, idx + 1);
            }
        };
        rec(rec, 0, 0);
        pick = best_pick;
        res.symmetric_difference = best;
    } else {
        // Greedy seed: the m densest cosets (ties on canonical order), then
        // single-swap descent with incremental coverage counts until no
        // replacement improves the difference.
        std::vector<std::pair<long long, int>> density(family.count());
        for (int idx = 0; idx < family.count(); ++idx)
            density[idx] = {-family.intersection_count(idx, a), idx};
        std::sort(density.begin(), density.end());
        for (int i = 0; i < m; ++i) pick.push_back(density[i].second);
        std::sort(pick.begin(), pick.end());

        std::vector<std::uint16_t> cover(static_cast<std::size_t>(a.universe()), 0);
        auto for_members = [&](int idx, auto&& fn) {
            const std::uint64_t* row = family.member_words(idx);
            for (std::size_t w = 0; w < family.words_per_coset(); ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    long long r = static_cast<long long>(w) * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    fn(r);
                }
            }
        };
        for (int idx : pick) for_members(idx, [&](long long r) { ++cover[static_cast<std::size_t>(r)]; });

        long long current = symdiff_of_union(family, pick, a, scratch);
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t slot = 0; slot < pick.size(); ++slot) {
                int outgoing = pick[slot];
                long long remove_delta = 0;
                for_members(outgoing, [&](long long r) {
                    if (cover[static_cast<std::size_t>(r)] == 1)
                        remove_delta += a.contains(r) ? 1 : -1;
                    --cover[static_cast<std::size_t>(r)];
                });
                int best_candidate = outgoing;
                long long best_delta = 0; // delta of keeping the same coset
                for_members(outgoing, [&](long long r) {
                    if (cover[static_cast<std::size_t>(r)] == 0)
                        best_delta += a.contains(r) ? -1 : 1;
                });
                best_delta += remove_delta;
                for (int candidate = 0; candidate < family.count(); ++candidate) {
                    if (candidate == outgoing) continue;
                    if (std::find(pick.begin(), pick.end(), candidate) != pick.end()) continue;
                    long long add_delta = 0;
                    for_members(candidate, [&](long long r) {
                        if (cover[static_cast<std::size_t>(r)] == 0)
                            add_delta += a.contains(r) ? -1 : 1;
                    });
                    long long delta = remove_delta + add_delta;
                    if (delta < best_delta) {
                        best_delta = delta;
                        best_candidate = candidate;
                    }
                }
                pick[slot] = best_candidate;
                for_members(best_candidate, [&](long long r) { ++cover[static_cast<std::size_t>(r)]; });
                if (best_delta < 0) {
                    current += best_delta;
                    improved = true;
                }
            }
        }
        std::sort(pick.begin(), pick.end());
        res.symmetric_difference = symdiff_of_union(family, pick, a, scratch);
    }

    res.members = permutation_set(n);
    for (int idx : pick) {
        res.cosets.push_back(family.coset(idx));
        res.members = res.members | family.as_set(idx);
    }
    return res;
}

stability_report quasi_stability_report(const projection_engine& engine,
                                        const permutation_set& a, int t,
                                        std::optional<int> union_size_override) {
    int n = engine.n();
    if (a.n() != n) throw domain_error("degree mismatch");
    if (n > 8) throw capacity_error("stability pipeline limited to n <= 8");

    stability_report rep;
    rep.n = n;
    rep.t = t;
    projection_report proj = engine.report(a, t);
    rep.c = proj.density_scale;
    rep.epsilon = proj.epsilon.value_or(Rat(0));
    rep.rounded_c = round_half_up(rep.c);
    rep.rounding_gap = abs(rep.c - Rat(rep.rounded_c));

    int m = union_size_override.value_or(rep.rounded_c.convert_to<int>());
    rep.union_size = m;
    rep.best = best_coset_union(a, t, m);
    rep.symdiff_ratio = a.size() > 0 ? Rat(rep.best.symmetric_difference, a.size()) : Rat(0);
    rep.sqrt_epsilon = std::sqrt(rep.epsilon.convert_to<double>());
    rep.c_over_sqrt_n = rep.c.convert_to<double>() / std::sqrt(static_cast<double>(n));
    return rep;
}

} // namespace sn
