#pragma once

#include "sn/permutation_set.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sn {

struct lex_minimality_row {
    long long k = 0;
    long long lex_boundary = 0;
    long long min_boundary = 0;                  // over the sets examined
    std::optional<std::uint32_t> smaller_witness; // subset mask beating the segment
};

struct lex_minimality_table {
    int n = 0;
    bool exhaustive = false;
    long long sets_examined = 0;
    std::vector<lex_minimality_row> rows; // one per size k = 0..n!
    bool conjecture_holds() const;
};

/// Scan every subset of S_n (bitmask order, n <= 4) and record, per size, the
/// minimum edge boundary in the transposition graph next to the boundary of
/// the lexicographic initial segment of that size.
lex_minimality_table exhaustive_lex_check(int n, int threads = 1);

/// Seeded sampling fallback for n = 5: `samples` random subsets per size.
lex_minimality_table sampled_lex_check(int n, long long samples, std::uint64_t seed);

} // namespace sn
