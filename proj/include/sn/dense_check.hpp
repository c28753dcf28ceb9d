#pragma once

#include "sn/cayley.hpp"
#include "sn/class_function.hpp"
#include "sn/rational.hpp"

#include <string>
#include <vector>

namespace sn {

struct dense_spectrum_check {
    bool matches = false;
    double max_deviation = 0; // worst |dense eigenvalue - formula eigenvalue|
    long long matrix_size = 0;
    std::string detail; // set when the check fails
};

/// Build the full n! x n! operator with entries w(sigma pi^{-1}), diagonalize
/// it numerically and compare the eigenvalue multiset (sorted) against the
/// expected per-partition values with multiplicity dim^2. Capacity: n <= 6.
dense_spectrum_check dense_class_operator_check(int n, const class_function& weight,
                                                const std::vector<partition>& labels,
                                                const std::vector<Rat>& expected,
                                                double tolerance);

/// Same check for a normal Cayley graph given by its spectrum report.
dense_spectrum_check dense_adjacency_check(const cayley_spec& spec,
                                           const spectrum_report& report,
                                           double tolerance);

} // namespace sn
