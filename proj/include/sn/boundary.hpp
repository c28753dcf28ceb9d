#pragma once

#include "sn/permutation_set.hpp"
#include "sn/projector.hpp"
#include "sn/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sn {

/// Edges of the transposition graph leaving A, by direct neighbor counting.
/// Capacity: n <= 9.
long long edge_boundary(const permutation_set& a);

/// Edges of the transposition graph with one endpoint in each set (the sets
/// need not be disjoint; an edge inside the intersection counts once).
long long edges_between(const permutation_set& a, const permutation_set& b);

struct named_bound {
    std::string name;
    Rat value;    // certified lower bound on |boundary|
    Rat slack;    // |boundary| - value
    bool tight = false;
};

struct boundary_report {
    int n = 0;
    long long set_size = 0;
    long long boundary = 0;
    std::vector<named_bound> bounds;
    bool spectral_identity_holds = false; // |bd A| = n! sum mu ||f_alpha||^2
};

/// Boundary size for the closed forms used by the structured families.
Rat t_coset_boundary_formula(int n, int t);       // t (n - (t+1)/2) (n-t)!
Rat chain_boundary_formula(int n, int t, int m);  // (t (n-(t+1)/2) - m + 1) m (n-t)!

/// Exact spectral accounting of the boundary: the eigenvalue identity (always
/// an equality), the spectral-gap bound, the point-stabilizer bound with its
/// tightness flag, and the certified degree-t bound. Capacity: n <= 8.
boundary_report spectral_lower_bounds(const projection_engine& engine,
                                      const permutation_set& a, int t);

/// True when A is a disjoint union of point cosets: membership determined by
/// the image of one fixed point, or by the preimage of one fixed value.
bool is_disjoint_union_of_point_cosets(const permutation_set& a);

} // namespace sn
