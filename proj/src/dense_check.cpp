#include "sn/dense_check.hpp"

#include "sn/error.hpp"
#include "sn/tableaux.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <sstream>

namespace sn {

dense_spectrum_check dense_class_operator_check(int n, const class_function& weight,
                                                const std::vector<partition>& labels,
                                                const std::vector<Rat>& expected,
                                                double tolerance) {
    if (n > 6) throw capacity_error("dense eigendecomposition limited to n <= 6");
    long long order = group_order(n);
    cycle_type_index types(n);

    std::vector<double> weight_by_class(types.count());
    for (int c = 0; c < types.count(); ++c)
        weight_by_class[c] = weight.value(c).convert_to<double>();

    // Entries depend only on the class of sigma * pi^{-1}.
    std::vector<permutation> elems;
    elems.reserve(static_cast<std::size_t>(order));
    for (long long r = 0; r < order; ++r) elems.push_back(lex_unrank(n, r));

    Eigen::MatrixXd mat(order, order);
    for (long long i = 0; i < order; ++i) {
        for (long long j = 0; j < order; ++j) {
            partition type = (elems[static_cast<std::size_t>(i)] *
                              elems[static_cast<std::size_t>(j)].inverse())
                                 .cycle_type();
            mat(i, j) = weight_by_class[types.id_of(type)];
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat, Eigen::EigenvaluesOnly);
    std::vector<double> dense(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + order);

    std::vector<double> predicted;
    predicted.reserve(static_cast<std::size_t>(order));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Int dim = count_standard_tableaux(labels[i]);
        long long mult = (dim * dim).convert_to<long long>();
        double value = expected[i].convert_to<double>();
        for (long long k = 0; k < mult; ++k) predicted.push_back(value);
    }
    std::sort(predicted.begin(), predicted.end());

    dense_spectrum_check out;
    out.matrix_size = order;
    if (static_cast<long long>(predicted.size()) != order) {
        out.detail = "multiplicities do not sum to n!";
        return out;
    }
    double worst = 0;
    for (long long i = 0; i < order; ++i)
        worst = std::max(worst, std::abs(dense[static_cast<std::size_t>(i)] -
                                         predicted[static_cast<std::size_t>(i)]));
    out.max_deviation = worst;
    out.matches = worst <= tolerance;
    if (!out.matches) {
        std::ostringstream msg;
        msg << "eigenvalue multiset deviates by " << worst;
        out.detail = msg.str();
    }
    return out;
}

dense_spectrum_check dense_adjacency_check(const cayley_spec& spec,
                                           const spectrum_report& report,
                                           double tolerance) {
    return dense_class_operator_check(spec.n, spec.weight, report.labels, report.adjacency,
                                      tolerance);
}

} // namespace sn
