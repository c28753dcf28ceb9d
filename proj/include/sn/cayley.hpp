#pragma once

#include "sn/character_table.hpp"
#include "sn/class_function.hpp"
#include "sn/partition.hpp"
#include "sn/rational.hpp"

#include <string>
#include <vector>

namespace sn {

/// Normal Cayley graph (or class-function-weighted operator) on S_n: the
/// weight is a class function; an unweighted graph uses the indicator of a
/// union of non-identity classes.
struct cayley_spec {
    int n = 0;
    class_function weight;

    static cayley_spec from_classes(int n, const std::vector<partition>& generating_types);
    static cayley_spec transpositions(int n);
};

struct spectrum_report {
    int n = 0;
    std::string generators; // human-readable description
    std::vector<partition> labels;
    std::vector<Rat> adjacency;     // lambda per label
    std::vector<Rat> laplacian;     // mu = degree - lambda
    std::vector<Int> multiplicity;  // dim^2 per label
    Rat degree;                     // sum of class sizes of the generators

    const Rat& adjacency_of(const partition& label) const;
    const Rat& laplacian_of(const partition& label) const;
};

/// Exact eigenvalues of the weighted adjacency operator: one per irreducible,
/// lambda = (1/dim) sum over classes of size * weight * character.
spectrum_report normal_cayley_eigenvalues(const cayley_spec& spec,
                                          const character_table& table);
spectrum_report normal_cayley_eigenvalues(const cayley_spec& spec);

/// Closed-form transposition-graph eigenvalues
///   lambda = (1/2) sum_j ((a_j - j)(a_j - j + 1) - j(j - 1))  (rows 1-based),
/// valid for any n <= 30 without a character table.
Rat transposition_eigenvalue(const partition& alpha);
spectrum_report transposition_eigenvalues(int n);

struct dominance_violation {
    partition higher, lower;
    Rat lambda_higher, lambda_lower;
};

/// Check that dominance-comparable partitions have ordered transposition
/// eigenvalues; returns all violating pairs (expected: none). n <= 12.
std::vector<dominance_violation> dominance_monotonicity_check(int n);

} // namespace sn
