#pragma once

#include "sn/partition.hpp"
#include "sn/rational.hpp"

namespace sn {

/// Number of permutations of S_m all of whose cycles are longer than s,
/// by the recurrence N(m) = (m-1)(N(m-1) + (m-2)...(m-s) N(m-s-1)) with
/// N(0) = 1 and N(m) = 0 for 1 <= m <= s.
Int count_no_short_cycles(int m, int s);

/// Total size of the conjugacy classes whose cycle type is `beta` with its
/// first part replaced by any partition of it into parts all longer than s.
/// Requires beta_1 >= n - s.
Int count_head_refinements(const partition& beta, int s);

} // namespace sn
