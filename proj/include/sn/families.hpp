#pragma once

#include "sn/permutation_set.hpp"
#include "sn/tcoset.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sn {

/// Structured test families over S_n.
struct family_spec {
    enum class kind {
        t_coset,            // one coset, given tuples
        dictatorship_chain, // sigma(i)=i for i<t, sigma(t) in {t..t+m-1}
        union_of_cosets,    // union of explicit cosets
        lex_segment,        // lexicographically first k permutations
        eq2,                // membership pattern on the first four points is monotone
        sec7,               // image of {1,2,3} meets {1,2,3} in 0 or 3 points
        perturbed,          // seeded add/remove noise applied to a base family
    };

    kind which;
    int n = 0;
    // t_coset / union_of_cosets
    std::vector<tcoset> cosets;
    // dictatorship_chain
    int t = 0;
    int m = 0;
    // lex_segment
    long long k = 0;
    // perturbed
    std::shared_ptr<family_spec> base;
    long long add_count = 0;
    long long remove_count = 0;
    std::uint64_t seed = 0;

    static family_spec coset(const tcoset& c);
    static family_spec chain(int n, int t, int m);
    static family_spec cosets_union(int n, std::vector<tcoset> cs);
    static family_spec segment(int n, long long k);
    static family_spec eq2_family(int n);
    static family_spec sec7_family(int n);
    static family_spec perturb(family_spec base, long long add, long long remove,
                               std::uint64_t seed);
};

permutation_set generate_family(const family_spec& spec);

/// Parse the CLI grammar: coset(I=1,2;J=1,2), chain(t=1,m=2), union(coset(..)+coset(..)),
/// segment(k=5), eq2, sec7, perturb(base=coset(...),swap=12,seed=7).
family_spec parse_family(const std::string& text, int n);

std::string family_to_string(const family_spec& spec);

} // namespace sn
