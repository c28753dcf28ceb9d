#pragma once

#include "sn/partition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sn {

/// Element of S_n in one-line notation: images[i] = sigma(i+1), 1-based values.
class permutation {
public:
    permutation() = default;
    explicit permutation(std::vector<int> images);
    static permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point - 1]; } // 1-based
    const std::vector<int>& images() const { return images_; }

    bool operator==(const permutation& other) const = default;

    permutation inverse() const;
    /// Composition acting left-to-right as functions: (a*b)(x) = a(b(x)).
    permutation operator*(const permutation& other) const;

    partition cycle_type() const;
    bool is_identity() const;

    std::string str() const; // "3 1 2"

private:
    std::vector<int> images_;
};

long long group_order(int n); // n! for n <= 20

/// Rank of sigma in the lexicographic order of one-line words; rank 0 is the
/// identity and rank n!-1 the reversal.
long long lex_rank(const permutation& sigma);

/// Inverse of lex_rank. Throws domain_error when rank is out of [0, n!).
permutation lex_unrank(int n, long long rank);

/// Parse "3 1 2" (space-separated 1-based images).
permutation parse_permutation(const std::string& text);

/// All cycle types realized in S_n, in descending lex order (same order as
/// enumerate_partitions), plus O(1) index lookup.
class cycle_type_index {
public:
    explicit cycle_type_index(int n);

    int n() const { return n_; }
    int count() const { return static_cast<int>(types_.size()); }
    const partition& type(int id) const { return types_[id]; }
    const std::vector<partition>& types() const { return types_; }
    int id_of(const partition& type) const;
    /// Class id straight from a one-line image array (hot path).
    int id_of_images(const std::vector<int>& images) const;

private:
    int n_ = 0;
    std::vector<partition> types_;
    std::vector<int> key_to_id_; // perfect lookup keyed by cycle-count vector
    int key_of_counts(const int* count_by_len) const;
};

} // namespace sn
