#pragma once

#include "sn/partition.hpp"
#include "sn/rational.hpp"

namespace sn {

/// Number of standard Young tableaux of the given shape (the dimension of the
/// associated irreducible), by the hook-length product. Capacity: n <= 30.
Int count_standard_tableaux(const partition& shape);

/// Kostka number: semistandard tableaux of the given shape and content.
/// Counted by backtracking over horizontal strips (entries placed value by
/// value), memoized on the intermediate shapes. Capacity: n <= 20.
Int kostka_number(const partition& shape, const partition& content);

} // namespace sn
