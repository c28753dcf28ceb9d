#pragma once

#include "sn/group_function.hpp"
#include "sn/partition.hpp"
#include "sn/permutation_set.hpp"
#include "sn/projector.hpp"
#include "sn/rational.hpp"
#include "sn/tcoset.hpp"

#include <map>
#include <vector>

namespace sn {

struct coset_stats {
    Rat density;    // |A ∩ T| / (n-t)!
    Rat level_mean; // mean over T of the exact-level-t projection of 1_A
};

/// Per-coset statistics of a set: the density of A on each t-coset and the
/// coset mean of the level-t projection. The level means satisfy exact linear
/// dependencies: summing over all extensions of any (t-1)-coset gives zero.
std::map<tcoset, coset_stats> coset_statistics(const projection_engine& engine,
                                               const permutation_set& a, int t);

/// The averaging operator g -> (n)_t * sum_T <g,1_T> 1_T over all t-cosets.
group_function averaging_operator_apply(const group_function& g, int t);

/// Its exact eigenvalues, one per irreducible: binom(n,t) * K / dim, where K
/// is the Kostka number of the shape against content (n-t,1,...,1).
std::map<partition, Rat, std::greater<partition>> averaging_operator_spectrum(int n, int t);

/// Dense matrix entry of the averaging operator: binom(n,t)/n! times the
/// number of tabloid fixings of sigma * pi^{-1} under shape (n-t,1^t).
Rat averaging_operator_entry(int n, int t, const permutation& sigma, const permutation& pi);

struct span_check_result {
    Int dimension; // sum of squared dimensions over first row >= n-t
    Int rank;      // exact rank of the t-coset indicator family
    bool equal;
};

/// Verify that the t-coset indicators span the whole degree-t subspace.
/// The rank is certified exactly: a modular elimination gives the lower
/// bound, and exact zero high-degree projection mass of every indicator
/// gives the matching upper bound. Capacity: n <= 7.
span_check_result span_check(const projection_engine& engine, int t);

/// True when every member of A lies in some t-coset entirely inside A
/// (equivalently, A is a union of t-cosets); otherwise the witness rank of a
/// member in no such coset is returned through `witness`.
bool is_union_of_t_cosets(const permutation_set& a, int t, long long* witness = nullptr);

} // namespace sn
