#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sn {

/// Non-increasing sequence of positive integers. The empty partition is the
/// unique partition of 0.
class partition {
public:
    partition() = default;
    explicit partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < rows() ? parts_[i] : 0; } // zero-padded
    int first() const { return part(0); }

    bool operator==(const partition& other) const = default;

    /// Total order: descending lexicographic comparison of the part sequences
    /// (comparisons only meaningful between partitions of the same n).
    std::strong_ordering operator<=>(const partition& other) const;

    std::string str() const; // "(3,1,1)"

private:
    std::vector<int> parts_;
    int n_ = 0;
};

enum class partition_order { dominance, lex };
enum class partition_compare { less, equal, greater, incomparable };

/// All partitions of n in descending lexicographic order.
/// Capacity: n <= 30.
std::vector<partition> enumerate_partitions(int n);

/// Compare two partitions of the same n in dominance or lex order.
/// Dominance may return `incomparable`; lex is total.
partition_compare compare_partitions(const partition& a, const partition& b,
                                     partition_order order);

bool dominates(const partition& a, const partition& b);

/// Conjugate (transposed) partition.
partition conjugate(const partition& p);

/// Position of p within enumerate_partitions(p.n()).
int partition_index(const partition& p);

/// Parse "3,1,1" (or "()" / "" for the empty partition).
partition parse_partition(const std::string& text);

} // namespace sn
