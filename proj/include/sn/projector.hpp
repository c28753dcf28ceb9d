#pragma once

#include "sn/character_table.hpp"
#include "sn/class_function.hpp"
#include "sn/group_function.hpp"
#include "sn/partition.hpp"
#include "sn/permutation_set.hpp"
#include "sn/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace sn {

enum class degree_space { cumulative, exact_level }; // f_t vs f_t - f_{t-1}

/// Per-partition squared projection norms of a set indicator, with the
/// degree-t tail and the normalized closeness parameter.
struct projection_report {
    int n = 0;
    int t = 0;
    Rat set_size;                       // |A|
    Rat density_scale;                  // c = |A| / (n-t)!
    std::vector<partition> labels;      // descending lex
    std::vector<Rat> norms;             // ||f_alpha||^2 per label
    Rat tail;                           // sum over first row < n-t
    std::optional<Rat> epsilon;         // tail * (n)_t / c, absent when c = 0
};

/// Exact isotypic decomposition machinery for one degree n. Construction is
/// cheap; the first dense pass builds lookup tables (a full product-class
/// table when n <= 7). All public operations are pure; passes parallelize
/// over ranks when `threads` > 1 with results independent of the split.
class projection_engine {
public:
    explicit projection_engine(int n, int threads = 1);
    ~projection_engine();
    projection_engine(const projection_engine&) = delete;
    projection_engine& operator=(const projection_engine&) = delete;

    int n() const;
    int threads() const;
    const character_table& table() const;

    /// Orthogonal projection onto the isotypic component of `alpha`.
    group_function isotypic(const group_function& f, const partition& alpha) const;
    /// All isotypic projections in character-table row order (single pass).
    std::vector<group_function> all_isotypic(const group_function& f) const;
    /// Projection onto the span of components with first row >= n-t
    /// (cumulative) or == n-t (exact_level).
    group_function degree(const group_function& f, int t, degree_space space) const;
    /// Classwise convolution (Af)(s) = sum_p w(s p^{-1}) f(p).
    group_function convolve_class(const group_function& f, const class_function& w) const;

    /// #{(a,b) in A x B : a b^{-1} in class c}, per class.
    std::vector<long long> pair_class_histogram(const permutation_set& a,
                                                const permutation_set& b) const;
    /// Squared projection norms of the indicator of `a`, per table row.
    std::vector<Rat> set_norms(const permutation_set& a) const;
    /// Sum of set_norms over rows with first part < n-t.
    Rat tail_norm(const permutation_set& a, int t) const;

    projection_report report(const permutation_set& a, int t) const;

    /// Class id of sigma * pi^{-1} given lex ranks (exposed for spot checks).
    int product_class(long long sigma_rank, long long pi_rank) const;

private:
    struct impl;
    std::unique_ptr<impl> impl_;
};

} // namespace sn
