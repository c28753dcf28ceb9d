#include "sn/coset_ops.hpp"

#include "sn/coset_family.hpp"
#include "sn/error.hpp"
#include "sn/perm_character.hpp"
#include "sn/rng.hpp"
#include "sn/tableaux.hpp"

#include <algorithm>
#include <cstdint>

namespace sn {

namespace {

partition star_content(int n, int t) {
    // (n-t, 1, 1, ..., 1), dropping the head when t = n.
    std::vector<int> parts;
    if (n - t > 0) parts.push_back(n - t);
    for (int i = 0; i < t; ++i) parts.push_back(1);
    return partition(std::move(parts));
}

} // namespace

std::map<tcoset, coset_stats> coset_statistics(const projection_engine& engine,
                                               const permutation_set& a, int t) {
    int n = engine.n();
    if (a.n() != n) throw domain_error("degree mismatch");
    if (t < 0 || t > n) throw domain_error("need 0 <= t <= n");

    coset_family family(n, t, false);
    std::vector<long long> counts(family.count(), 0);
    std::vector<Rat> level_sums(family.count(), Rat(0));

    group_function level = engine.degree(group_function::indicator(a), t, degree_space::exact_level);

    // One sweep over the group accumulates both statistics coset by coset.
    for (long long r = 0; r < a.universe(); ++r) {
        bool in_a = a.contains(r);
        const Rat& g = level[r];
        if (!in_a && g == 0) continue;
        for (int idx : family.cosets_containing(r)) {
            if (in_a) ++counts[idx];
            level_sums[idx] += g;
        }
    }

    Rat cofactor = Rat(falling_factorial(n, t)) / Rat(factorial(n));
    std::map<tcoset, coset_stats> out;
    for (int idx = 0; idx < family.count(); ++idx) {
        coset_stats s;
        s.density = Rat(counts[idx]) / Rat(factorial(n - t));
        s.level_mean = level_sums[idx] * cofactor;
        out.emplace(family.coset(idx), s);
    }
    return out;
}

group_function averaging_operator_apply(const group_function& g, int t) {
    int n = g.n();
    if (t < 0 || t > n) throw domain_error("need 0 <= t <= n");
    if (n > 8) throw capacity_error("averaging operator limited to n <= 8");

    coset_family family(n, t, false);
    std::vector<Rat> sums(family.count(), Rat(0));
    for (long long r = 0; r < g.length(); ++r) {
        if (g[r] == 0) continue;
        for (int idx : family.cosets_containing(r)) sums[idx] += g[r];
    }
    Rat scale = Rat(falling_factorial(n, t)) / Rat(factorial(n));
    group_function h(n);
    for (long long r = 0; r < g.length(); ++r) {
        Rat acc = 0;
        for (int idx : family.cosets_containing(r)) acc += sums[idx];
        h[r] = acc * scale;
    }
    return h;
}

std::map<partition, Rat, std::greater<partition>> averaging_operator_spectrum(int n, int t) {
    if (t < 0 || t > n) throw domain_error("need 0 <= t <= n");
    partition content = star_content(n, t);
    std::map<partition, Rat, std::greater<partition>> out;
    for (const partition& alpha : enumerate_partitions(n)) {
        Int k = kostka_number(alpha, content);
        out.emplace(alpha, Rat(binomial(n, t) * k, count_standard_tableaux(alpha)));
    }
    return out;
}

Rat averaging_operator_entry(int n, int t, const permutation& sigma, const permutation& pi) {
    if (sigma.n() != n || pi.n() != n) throw domain_error("degree mismatch");
    partition type = (sigma * pi.inverse()).cycle_type();
    return Rat(binomial(n, t) * permutation_character(star_content(n, t), type), factorial(n));
}

namespace {

constexpr std::uint64_t kModulus = 2147483647ull; // 2^31 - 1

/// Row-echelon rank over GF(p) with incremental row insertion.
class modular_eliminator {
public:
    explicit modular_eliminator(std::size_t cols) : cols_(cols) {}

    bool insert(std::vector<std::uint64_t> row) {
        for (const auto& [lead, pivot] : pivots_) {
            if (row[lead] == 0) continue;
            std::uint64_t factor = kModulus - row[lead]; // add factor * pivot
            for (std::size_t j = lead; j < cols_; ++j)
                row[j] = (row[j] + factor * pivot[j]) % kModulus;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            if (row[j] == 0) continue;
            std::uint64_t inv = mod_inverse(row[j]);
            for (std::size_t k = j; k < cols_; ++k) row[k] = row[k] * inv % kModulus;
            pivots_.emplace_back(j, std::move(row));
            std::sort(pivots_.begin(), pivots_.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            return true;
        }
        return false;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    static std::uint64_t mod_inverse(std::uint64_t a) {
        // Fermat: a^(p-2) mod p.
        std::uint64_t result = 1, base = a % kModulus, e = kModulus - 2;
        while (e) {
            if (e & 1) result = result * base % kModulus;
            base = base * base % kModulus;
            e >>= 1;
        }
        return result;
    }

    std::size_t cols_;
    std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> pivots_;
};

} // namespace

span_check_result span_check(const projection_engine& engine, int t) {
    int n = engine.n();
    if (n > 7) throw capacity_error("span verification limited to n <= 7");
    if (t < 0 || t > n) throw domain_error("need 0 <= t <= n");

    const character_table& chars = engine.table();
    span_check_result res;
    res.dimension = 0;
    for (int r = 0; r < chars.count(); ++r)
        if (chars.labels()[r].first() >= n - t)
            res.dimension += Int(chars.dimension(r)) * chars.dimension(r);

    // Upper bound: each indicator has exactly zero mass above degree t, so the
    // span sits inside the degree-t subspace.
    coset_family family(n, t, false);
    for (int idx = 0; idx < family.count(); ++idx) {
        permutation_set one = family.as_set(idx);
        if (engine.tail_norm(one, t) != 0)
            throw domain_error("coset indicator leaks outside its degree subspace");
    }

    long long order = group_order(n);
    if (t >= n - 1) {
        // Every singleton occurs as a coset, so the family spans everything.
        res.rank = order;
        res.equal = res.rank == res.dimension;
        return res;
    }

    // Lower bound: modular rank of the indicator family on a seeded random
    // column compression (rank can only drop, so reaching `dimension` is a
    // certificate). Column j of the compression for group rank r is drawn
    // from a stream seeded by r, so rows never need n! columns in memory.
    std::size_t compressed = static_cast<std::size_t>(
        std::min<Int>(res.dimension + 16, order).convert_to<long long>());
    double cost = static_cast<double>(family.count()) *
                  res.dimension.convert_to<double>() * static_cast<double>(compressed);
    if (cost > 2e9) throw capacity_error("span verification for this (n, t) exceeds the budget");

    modular_eliminator elim(compressed);
    for (int idx = 0; idx < family.count(); ++idx) {
        std::vector<std::uint64_t> row(compressed, 0);
        for (long long r : family.coset(idx).member_ranks()) {
            rng mix(0x5eed5eedULL ^ static_cast<std::uint64_t>(r) * 0x9e3779b97f4a7c15ull);
            for (std::size_t j = 0; j < compressed; ++j) row[j] = (row[j] + mix.below(kModulus)) % kModulus;
        }
        elim.insert(std::move(row));
        if (elim.rank() == res.dimension) break; // certificate reached
    }
    res.rank = elim.rank();
    res.equal = res.rank == res.dimension;
    return res;
}

bool is_union_of_t_cosets(const permutation_set& a, int t, long long* witness) {
    int n = a.n();
    if (t < 0 || t > n) throw domain_error("need 0 <= t <= n");
    coset_family family(n, t, true);
    for (long long r : a.ranks()) {
        bool covered = false;
        for (int idx : family.cosets_containing(r)) {
            if (family.subset_of(idx, a)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            if (witness) *witness = r;
            return false;
        }
    }
    return true;
}

} // namespace sn
