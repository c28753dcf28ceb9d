#include "sn/lexcheck.hpp"

#include "sn/boundary.hpp"
#include "sn/error.hpp"
#include "sn/rng.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace sn {

bool lex_minimality_table::conjecture_holds() const {
    for (const auto& row : rows)
        if (row.min_boundary < row.lex_boundary) return false;
    return true;
}

namespace {

/// Neighbor bitmasks of the transposition graph over lex ranks (n! <= 32).
std::vector<std::uint32_t> neighbor_masks(int n) {
    long long order = group_order(n);
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(order), 0);
    for (long long r = 0; r < order; ++r) {
        permutation sigma = lex_unrank(n, r);
        std::vector<int> im = sigma.images();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::swap(im[i], im[j]);
                nbr[static_cast<std::size_t>(r)] |=
                    1u << lex_rank(permutation(im));
                std::swap(im[i], im[j]);
            }
        }
    }
    return nbr;
}

long long mask_boundary(std::uint32_t mask, const std::vector<std::uint32_t>& nbr) {
    long long total = 0;
    std::uint32_t bits = mask;
    while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        total += std::popcount(nbr[static_cast<std::size_t>(v)] & ~mask);
    }
    return total;
}

} // namespace

lex_minimality_table exhaustive_lex_check(int n, int threads) {
    if (n > 4) throw capacity_error("exhaustive subset scan limited to n <= 4");
    long long order = group_order(n);
    auto nbr = neighbor_masks(n);

    lex_minimality_table table;
    table.n = n;
    table.exhaustive = true;
    table.sets_examined = 1ll << order;

    struct slot {
        long long best;
        std::uint32_t witness;
    };
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<slot> best(static_cast<std::size_t>(order + 1),
                               {static_cast<long long>(-1), 0});
        for (std::uint64_t m = lo; m < hi; ++m) {
            auto mask = static_cast<std::uint32_t>(m);
            long long b = mask_boundary(mask, nbr);
            slot& s = best[static_cast<std::size_t>(std::popcount(mask))];
            if (s.best < 0 || b < s.best || (b == s.best && mask < s.witness)) {
                s.best = b;
                s.witness = mask;
            }
        }
        return best;
    };

    std::vector<std::vector<slot>> partials;
    std::uint64_t total = 1ull << order;
    if (threads <= 1) {
        partials.push_back(scan(0, total));
    } else {
        std::uint64_t chunk = (total + threads - 1) / threads;
        std::vector<std::thread> pool;
        partials.resize(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, t, lo, hi] { partials[static_cast<std::size_t>(t)] = scan(lo, hi); });
        }
        for (auto& th : pool) th.join();
    }

    for (long long k = 0; k <= order; ++k) {
        lex_minimality_row row;
        row.k = k;
        std::uint32_t lex_mask = k == 32 ? 0xffffffffu : ((1u << k) - 1);
        row.lex_boundary = mask_boundary(lex_mask, nbr);
        slot merged{-1, 0};
        for (const auto& part : partials) {
            if (part.empty()) continue;
            const slot& s = part[static_cast<std::size_t>(k)];
            if (s.best < 0) continue;
            if (merged.best < 0 || s.best < merged.best ||
                (s.best == merged.best && s.witness < merged.witness))
                merged = s;
        }
        row.min_boundary = merged.best;
        if (row.min_boundary < row.lex_boundary) row.smaller_witness = merged.witness;
        table.rows.push_back(row);
    }
    return table;
}

lex_minimality_table sampled_lex_check(int n, long long samples, std::uint64_t seed) {
    if (n > 5) throw capacity_error("sampled scan limited to n <= 5");
    long long order = group_order(n);

    lex_minimality_table table;
    table.n = n;
    table.exhaustive = false;
    table.sets_examined = 0;
    rng gen(seed);

    for (long long k = 0; k <= order; ++k) {
        lex_minimality_row row;
        row.k = k;
        row.lex_boundary = edge_boundary(lex_initial_segment(n, k));
        row.min_boundary = row.lex_boundary; // the segment itself is examined
        for (long long s = 0; s < samples; ++s) {
            // Seeded size-k sample by partial shuffle of the rank universe.
            std::vector<long long> pool(static_cast<std::size_t>(order));
            for (long long i = 0; i < order; ++i) pool[static_cast<std::size_t>(i)] = i;
            permutation_set set(n);
            for (long long i = 0; i < k; ++i) {
                std::uint64_t j = i + gen.below(static_cast<std::uint64_t>(order - i));
                std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
                set.insert(pool[static_cast<std::size_t>(i)]);
            }
            ++table.sets_examined;
            long long b = edge_boundary(set);
            if (b < row.min_boundary) {
                row.min_boundary = b;
                // Witness masks only exist in the exhaustive regime.
            }
        }
        table.rows.push_back(row);
    }
    return table;
}

} // namespace sn
