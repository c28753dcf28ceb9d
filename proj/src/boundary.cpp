#include "sn/boundary.hpp"

#include "sn/cayley.hpp"
#include "sn/error.hpp"

#include <algorithm>

namespace sn {

namespace {

/// Apply all transposition neighbors of the permutation at `rank` to `visit`.
template <typename Fn>
void for_each_neighbor(int n, const permutation& sigma, Fn&& visit) {
    std::vector<int> im = sigma.images();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::swap(im[i], im[j]); // right multiplication by (i j)
            visit(im);
            std::swap(im[i], im[j]);
        }
    }
}

long long rank_of_images(const std::vector<int>& im) {
    int n = static_cast<int>(im.size());
    long long rank = 0;
    long long radix = group_order(n);
    for (int i = 0; i < n; ++i) {
        radix /= (n - i);
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (im[j] < im[i]) ++smaller;
        rank += smaller * radix;
    }
    return rank;
}

} // namespace

long long edge_boundary(const permutation_set& a) {
    int n = a.n();
    if (n > 9) throw capacity_error("boundary counting limited to n <= 9");
    long long crossing = 0;
    for (long long r : a.ranks()) {
        permutation sigma = lex_unrank(n, r);
        for_each_neighbor(n, sigma, [&](const std::vector<int>& im) {
            if (!a.contains(rank_of_images(im))) ++crossing;
        });
    }
    return crossing;
}

long long edges_between(const permutation_set& a, const permutation_set& b) {
    int n = a.n();
    if (b.n() != n) throw domain_error("degree mismatch");
    if (n > 9) throw capacity_error("boundary counting limited to n <= 9");
    // Count ordered pairs (x in A, y in B adjacent) then fix up the double
    // counting: edges with both endpoints in A ∩ B were counted twice.
    long long ordered = 0, both = 0;
    for (long long r : a.ranks()) {
        permutation sigma = lex_unrank(n, r);
        bool r_in_b = b.contains(r);
        for_each_neighbor(n, sigma, [&](const std::vector<int>& im) {
            long long nb = rank_of_images(im);
            if (b.contains(nb)) {
                ++ordered;
                if (r_in_b && a.contains(nb)) ++both;
            }
        });
    }
    return ordered - both / 2;
}

Rat t_coset_boundary_formula(int n, int t) {
    return Rat(t) * (Rat(n) - Rat(t + 1, 2)) * Rat(factorial(n - t));
}

Rat chain_boundary_formula(int n, int t, int m) {
    return (Rat(t) * (Rat(n) - Rat(t + 1, 2)) - m + 1) * Rat(m) * Rat(factorial(n - t));
}

boundary_report spectral_lower_bounds(const projection_engine& engine,
                                      const permutation_set& a, int t) {
    int n = engine.n();
    if (a.n() != n) throw domain_error("degree mismatch");
    if (n > 8) throw capacity_error("spectral bounds limited to n <= 8");
    if (t < 1 || t > n) throw domain_error("need 1 <= t <= n");

    boundary_report rep;
    rep.n = n;
    rep.set_size = a.size();
    rep.boundary = edge_boundary(a);
    Rat boundary(rep.boundary);

    Int order = factorial(n);
    Rat size(a.size());

    // Spectral gap (second Laplacian eigenvalue is n for the transposition
    // graph) and the point-stabilizer bound; on this graph the two formulas
    // coincide, and the latter carries the exact tightness criterion.
    Rat gap_bound = Rat(n) * size * (Rat(order) - size) / Rat(order);
    rep.bounds.push_back({"spectral_gap", gap_bound, boundary - gap_bound,
                          boundary == gap_bound});
    Rat ds_bound = size * (Rat(order) - size) / Rat(factorial(n - 1));
    rep.bounds.push_back({"point_stabilizer", ds_bound, boundary - ds_bound,
                          boundary == ds_bound});

    // Exact eigenvalue accounting: |bd A| = n! sum_alpha mu_alpha ||f_alpha||^2.
    auto norms = engine.set_norms(a);
    const auto& labels = engine.table().labels();
    Rat identity_sum = 0;
    Rat degree_tail_mass = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Rat mu = Rat(binomial(n, 2)) - transposition_eigenvalue(labels[i]);
        identity_sum += mu * norms[i];
        if (labels[i].first() <= n - t) degree_tail_mass += norms[i];
    }
    identity_sum *= Rat(order);
    rep.spectral_identity_holds = identity_sum == boundary;
    rep.bounds.push_back({"eigenvalue_identity", identity_sum, boundary - identity_sum,
                          identity_sum == boundary});

    // Certified degree-t bound: every component with first row <= n-t has
    // Laplacian eigenvalue at least t(n-t+1) by dominance monotonicity.
    if (2 * t <= n) {
        Rat certified = Rat(t) * Rat(n - t + 1) * Rat(order) * degree_tail_mass;
        rep.bounds.push_back({"degree_tail", certified, boundary - certified,
                              boundary == certified});
    }
    return rep;
}

bool is_disjoint_union_of_point_cosets(const permutation_set& a) {
    int n = a.n();
    if (a.size() == 0) return true;
    auto ranks = a.ranks();
    std::vector<permutation> members;
    members.reserve(ranks.size());
    for (long long r : ranks) members.push_back(lex_unrank(n, r));

    for (int i = 1; i <= n; ++i) {
        // Row form: membership depends only on sigma(i).
        std::vector<char> image_used(n + 1, 0);
        for (const permutation& sigma : members) image_used[sigma(i)] = 1;
        long long expected = 0;
        for (int v = 1; v <= n; ++v)
            if (image_used[v]) expected += factorial_ll(n - 1);
        if (expected == a.size()) return true;

        // Column form: membership depends only on sigma^{-1}(i).
        std::vector<char> source_used(n + 1, 0);
        for (const permutation& sigma : members) source_used[sigma.inverse()(i)] = 1;
        expected = 0;
        for (int v = 1; v <= n; ++v)
            if (source_used[v]) expected += factorial_ll(n - 1);
        if (expected == a.size()) return true;
    }
    return false;
}

} // namespace sn
