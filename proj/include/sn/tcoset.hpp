#pragma once

#include "sn/permutation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sn {

/// Coset of a t-point stabilizer: all sigma with sigma(domain[k]) = image[k].
/// Canonical form sorts the (domain, image) pairs by domain point, so equality
/// is insensitive to the order the constraints were given in.
class tcoset {
public:
    tcoset(int n, std::vector<int> domain_tuple, std::vector<int> image_tuple);

    int n() const { return n_; }
    int t() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    bool contains(const permutation& sigma) const;
    /// Members as lex ranks, ascending. Size (n-t)!.
    std::vector<long long> member_ranks() const;

    bool operator==(const tcoset& other) const = default;
    auto operator<=>(const tcoset& other) const = default;

    std::string str() const; // "T[(1->1)(2->2)]"

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> pairs_;
};

/// Every t-coset of S_n exactly once, canonical, sorted. Cardinality
/// ((n)_t)^2 / t!. Capacity error when that count exceeds 5e6.
std::vector<tcoset> enumerate_t_cosets(int n, int t);

} // namespace sn
