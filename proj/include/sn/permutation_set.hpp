#pragma once

#include "sn/permutation.hpp"
#include "sn/tcoset.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sn {

/// Subset of S_n as a dense bitset over lexicographic ranks.
class permutation_set {
public:
    permutation_set() = default;
    explicit permutation_set(int n);
    static permutation_set full(int n);
    static permutation_set from_ranks(int n, const std::vector<long long>& ranks);
    static permutation_set from_coset(const tcoset& coset);

    int n() const { return n_; }
    long long universe() const { return order_; } // n!
    long long size() const;
    bool empty() const { return size() == 0; }

    bool contains(long long rank) const {
        return (words_[static_cast<std::size_t>(rank >> 6)] >> (rank & 63)) & 1;
    }
    void insert(long long rank) { words_[static_cast<std::size_t>(rank >> 6)] |= 1ull << (rank & 63); }
    void erase(long long rank) { words_[static_cast<std::size_t>(rank >> 6)] &= ~(1ull << (rank & 63)); }

    std::vector<long long> ranks() const;

    permutation_set operator|(const permutation_set& other) const;
    permutation_set operator&(const permutation_set& other) const;
    permutation_set operator^(const permutation_set& other) const;
    permutation_set complement() const;
    bool operator==(const permutation_set& other) const = default;

    long long intersection_size(const permutation_set& other) const;
    long long symmetric_difference_size(const permutation_set& other) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// One permutation per line in one-line notation, after an "n=<degree>" line.
    void write(std::ostream& out) const;
    static permutation_set read(std::istream& in);
    static permutation_set read_file(const std::string& path);
    void write_file(const std::string& path) const;

private:
    int n_ = 0;
    long long order_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Permutations with lexicographic rank < k. Requires 0 <= k <= n!.
permutation_set lex_initial_segment(int n, long long k);

} // namespace sn
