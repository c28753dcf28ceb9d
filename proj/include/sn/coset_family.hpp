#pragma once

#include "sn/permutation_set.hpp"
#include "sn/tcoset.hpp"

#include <cstdint>
#include <vector>

namespace sn {

/// All t-cosets of one S_n with optional membership bitsets, shared by the
/// coset statistics, span and union-search code.
class coset_family {
public:
    coset_family(int n, int t, bool with_membership);

    int n() const { return n_; }
    int t() const { return t_; }
    int count() const { return static_cast<int>(cosets_.size()); }
    const std::vector<tcoset>& cosets() const { return cosets_; }
    const tcoset& coset(int idx) const { return cosets_[idx]; }

    int index_of(const tcoset& coset) const;

    const std::uint64_t* member_words(int idx) const { return &members_[idx * words_per_]; }
    std::size_t words_per_coset() const { return words_per_; }

    long long intersection_count(int idx, const permutation_set& set) const;
    bool subset_of(int idx, const permutation_set& set) const;
    permutation_set as_set(int idx) const;

    /// Indices of the binomial(n,t) cosets containing the permutation at
    /// `rank`, in ascending index order.
    std::vector<int> cosets_containing(long long rank) const;

private:
    int n_, t_;
    std::vector<tcoset> cosets_;
    std::size_t words_per_ = 0;
    std::vector<std::uint64_t> members_;
};

} // namespace sn
