#pragma once

#include "sn/class_function.hpp"
#include "sn/partition.hpp"
#include "sn/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sn {

/// Exact character table of S_n. Rows (irreducibles) and columns (cycle types)
/// are both indexed by partitions of n in descending lex order.
class character_table {
public:
    /// Compute by the border-strip recursion. Capacity: n <= 14.
    static character_table compute(int n);

    int n() const { return n_; }
    int count() const { return static_cast<int>(labels_.size()); }
    const std::vector<partition>& labels() const { return labels_; }
    const class_context& context() const { return ctx_; }

    long long value(int row, int class_id) const { return values_[row][class_id]; }
    long long value(const partition& row_label, const partition& type) const;
    long long dimension(int row) const; // value at the identity class
    class_function row(int row_index) const;
    int row_index(const partition& row_label) const;

    /// <chi_a, chi_b> under the class-size-weighted inner product.
    Rat row_inner(int row_a, int row_b) const;
    /// (1/n!) sum over the group of |chi(sigma)|.
    Rat l1_norm(int row) const;

    /// Versioned text cache. The trailing integrity line carries the sum of
    /// squared dimensions, which must equal n!.
    void save(std::ostream& out) const;
    static character_table load(std::istream& in);
    void save_file(const std::string& path) const;
    static character_table load_file(const std::string& path);
    /// Load from `<dir>/chartable-n<k>.txt`, else compute and write back.
    static character_table cached(int n, const std::string& cache_dir);

private:
    explicit character_table(int n);

    int n_;
    std::vector<partition> labels_;
    class_context ctx_;
    std::vector<std::vector<long long>> values_;
};

} // namespace sn
