#pragma once

#include "sn/permutation_set.hpp"
#include "sn/projector.hpp"
#include "sn/rational.hpp"
#include "sn/tcoset.hpp"

#include <optional>
#include <vector>

namespace sn {

struct coset_union_result {
    std::vector<tcoset> cosets;
    permutation_set members;
    long long symmetric_difference = 0;
    bool exact = false; // exhaustive over all m-subsets vs greedy with swaps
};

/// Union of exactly m t-cosets minimizing |A symdiff C|. Exhaustive when
/// binomial(#cosets, m) <= 1e7, otherwise greedy by descending coset density
/// with pairwise swap improvement; ties break on canonical coset order.
coset_union_result best_coset_union(const permutation_set& a, int t, int m);

struct stability_report {
    int n = 0;
    int t = 0;
    Rat c;                    // |A| / (n-t)!
    Rat epsilon;              // degree-t closeness parameter of the indicator
    Int rounded_c;            // nearest integer, half rounds up
    Rat rounding_gap;         // |c - rounded_c|
    long long union_size = 0; // cosets in the returned union
    coset_union_result best;
    Rat symdiff_ratio;        // |A symdiff C| / |A|
    double sqrt_epsilon = 0;  // structural inputs, informational
    double c_over_sqrt_n = 0;
};

/// Full pipeline: measure the degree-t tail of the indicator, round the
/// density scale, search for the best union of that many t-cosets, and report
/// the symmetric difference against the structural inputs. Capacity: n <= 8.
stability_report quasi_stability_report(const projection_engine& engine,
                                        const permutation_set& a, int t,
                                        std::optional<int> union_size_override = std::nullopt);

} // namespace sn
