#include "sn/perm_character.hpp"

#include "sn/error.hpp"
#include "sn/tableaux.hpp"

#include <algorithm>
#include <numeric>

namespace sn {

namespace {

Int assign_cycles(std::size_t k, std::vector<int>& caps, const std::vector<int>& cycles,
                  std::map<std::pair<std::vector<int>, std::size_t>, Int>& memo) {
    if (k == cycles.size()) return 1; // capacities are exactly exhausted here
    std::sort(caps.begin(), caps.end(), std::greater<int>());
    auto key = std::make_pair(caps, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Int total = 0;
    int len = cycles[k];
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (i > 0 && caps[i] == caps[i - 1]) continue; // distinct values once
        if (caps[i] < len) break;
        int multiplicity = 0;
        for (int c : caps)
            if (c == caps[i]) ++multiplicity;
        std::vector<int> next = caps;
        next[i] -= len;
        total += multiplicity * assign_cycles(k + 1, next, cycles, memo);
    }
    memo[key] = total;
    return total;
}

} // namespace

Int permutation_character(const partition& mu, const partition& type) {
    if (mu.n() != type.n())
        throw domain_error("shape and cycle type must partition the same integer");
    std::vector<int> caps = mu.parts();
    std::map<std::pair<std::vector<int>, std::size_t>, Int> memo;
    return assign_cycles(0, caps, type.parts(), memo);
}

class_function permutation_character_row(const partition& mu) {
    auto types = enumerate_partitions(mu.n());
    std::vector<Rat> vals;
    vals.reserve(types.size());
    for (const partition& t : types) vals.emplace_back(Int(permutation_character(mu, t)));
    return class_function(mu.n(), std::move(vals));
}

class_function determinantal_character(const partition& alpha) {
    int l = alpha.rows();
    if (l > 8) throw capacity_error("signed tabloid-character sum limited to 8 rows");
    int n = alpha.n();
    class_function chi = class_function::zero(n);
    if (l == 0) return class_function::constant(0, 1);

    std::map<partition, class_function> xi_cache;
    std::vector<int> pi(l);
    std::iota(pi.begin(), pi.end(), 1);
    do {
        std::vector<int> adjusted(l);
        bool valid = true;
        for (int i = 0; i < l && valid; ++i) {
            adjusted[i] = alpha.parts()[i] - (i + 1) + pi[i];
            if (adjusted[i] < 0) valid = false;
        }
        if (!valid) continue;
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (pi[i] > pi[j]) ++inversions;
        std::sort(adjusted.begin(), adjusted.end(), std::greater<int>());
        while (!adjusted.empty() && adjusted.back() == 0) adjusted.pop_back();
        partition beta(adjusted);
        auto it = xi_cache.find(beta);
        if (it == xi_cache.end())
            it = xi_cache.emplace(beta, permutation_character_row(beta)).first;
        class_function term = it->second;
        if (inversions % 2) term *= Rat(-1);
        chi += term;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return chi;
}

std::map<partition, Int, std::greater<partition>> young_decomposition(const partition& mu) {
    std::map<partition, Int, std::greater<partition>> out;
    for (const partition& lambda : enumerate_partitions(mu.n())) {
        Int k = kostka_number(lambda, mu);
        if (k > 0) out.emplace(lambda, k);
    }
    return out;
}

} // namespace sn
