#include "sn/cayley.hpp"

#include "sn/error.hpp"
#include "sn/tableaux.hpp"

#include <sstream>

namespace sn {

cayley_spec cayley_spec::from_classes(int n, const std::vector<partition>& generating_types) {
    for (const partition& p : generating_types) {
        if (p.n() != n) throw domain_error("generating class of wrong degree");
        if (p == partition(std::vector<int>(n, 1)))
            throw domain_error("generating set may not contain the identity");
    }
    cayley_spec spec;
    spec.n = n;
    spec.weight = class_function::class_indicator(n, generating_types);
    return spec;
}

cayley_spec cayley_spec::transpositions(int n) {
    std::vector<int> type{2};
    for (int i = 0; i < n - 2; ++i) type.push_back(1);
    return from_classes(n, {partition(std::move(type))});
}

const Rat& spectrum_report::adjacency_of(const partition& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return adjacency[i];
    throw domain_error("no eigenvalue for partition " + label.str());
}

const Rat& spectrum_report::laplacian_of(const partition& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return laplacian[i];
    throw domain_error("no eigenvalue for partition " + label.str());
}

spectrum_report normal_cayley_eigenvalues(const cayley_spec& spec,
                                          const character_table& table) {
    if (table.n() != spec.n) throw domain_error("character table of wrong degree");
    const class_context& ctx = table.context();

    spectrum_report rep;
    rep.n = spec.n;
    rep.labels = table.labels();
    rep.degree = 0;
    for (int c = 0; c < ctx.class_count(); ++c)
        rep.degree += spec.weight.value(c) * Rat(ctx.class_size(c));

    for (int r = 0; r < table.count(); ++r) {
        Rat sum = 0;
        for (int c = 0; c < ctx.class_count(); ++c)
            sum += spec.weight.value(c) * Rat(ctx.class_size(c) * table.value(r, c));
        Rat lambda = sum / Rat(table.dimension(r));
        rep.adjacency.push_back(lambda);
        rep.laplacian.push_back(rep.degree - lambda);
        rep.multiplicity.push_back(Int(table.dimension(r)) * table.dimension(r));
    }
    return rep;
}

spectrum_report normal_cayley_eigenvalues(const cayley_spec& spec) {
    return normal_cayley_eigenvalues(spec, character_table::compute(spec.n));
}

Rat transposition_eigenvalue(const partition& alpha) {
    Int twice = 0;
    for (int j = 1; j <= alpha.rows(); ++j) {
        Int a = alpha.parts()[j - 1];
        twice += (a - j) * (a - j + 1) - Int(j) * (j - 1);
    }
    return Rat(twice, 2);
}

spectrum_report transposition_eigenvalues(int n) {
    if (n > 30) throw capacity_error("limited to n <= 30");
    spectrum_report rep;
    rep.n = n;
    rep.generators = "transpositions";
    rep.degree = Rat(binomial(n, 2));
    for (const partition& alpha : enumerate_partitions(n)) {
        Rat lambda = transposition_eigenvalue(alpha);
        rep.labels.push_back(alpha);
        rep.adjacency.push_back(lambda);
        rep.laplacian.push_back(rep.degree - lambda);
        Int dim = count_standard_tableaux(alpha);
        rep.multiplicity.push_back(dim * dim);
    }
    return rep;
}

std::vector<dominance_violation> dominance_monotonicity_check(int n) {
    if (n > 12) throw capacity_error("limited to n <= 12");
    auto all = enumerate_partitions(n);
    std::vector<Rat> lambda;
    lambda.reserve(all.size());
    for (const partition& p : all) lambda.push_back(transposition_eigenvalue(p));

    std::vector<dominance_violation> violations;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i == j) continue;
            auto cmp = compare_partitions(all[i], all[j], partition_order::dominance);
            if (cmp != partition_compare::greater) continue;
            if (lambda[i] < lambda[j])
                violations.push_back({all[i], all[j], lambda[i], lambda[j]});
        }
    }
    return violations;
}

} // namespace sn
