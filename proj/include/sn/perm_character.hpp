#pragma once

#include "sn/class_function.hpp"
#include "sn/partition.hpp"
#include "sn/rational.hpp"

#include <map>

namespace sn {

/// Value of the permutation character of the row-tabloid module of shape `mu`
/// at any element of cycle type `type`: the number of tabloids fixed, i.e. the
/// number of ways to split the cycles into the rows so that row i gets a total
/// of mu_i points.
Int permutation_character(const partition& mu, const partition& type);

/// The full permutation character as a class function.
class_function permutation_character_row(const partition& mu);

/// Irreducible character of shape `alpha` as a signed sum of permutation
/// characters over arrangements of the adjusted row lengths; sequences with a
/// negative entry contribute nothing. Capacity: at most 8 rows (8! terms).
class_function determinantal_character(const partition& alpha);

/// Multiplicities of the irreducibles in the tabloid module of shape `mu`:
/// {lambda -> K_{lambda,mu}} over lambda >= mu with K > 0.
std::map<partition, Int, std::greater<partition>> young_decomposition(const partition& mu);

} // namespace sn
