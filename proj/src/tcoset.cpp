#include "sn/tcoset.hpp"

#include "sn/error.hpp"
#include "sn/rational.hpp"

#include <algorithm>
#include <sstream>

namespace sn {

tcoset::tcoset(int n, std::vector<int> domain_tuple, std::vector<int> image_tuple)
    : n_(n) {
    if (domain_tuple.size() != image_tuple.size())
        throw domain_error("domain and image tuples differ in length");
    auto check_tuple = [n](const std::vector<int>& tup) {
        std::vector<char> seen(n + 1, 0);
        for (int v : tup) {
            if (v < 1 || v > n || seen[v]) throw domain_error("tuple entries must be distinct points of 1..n");
            seen[v] = 1;
        }
    };
    check_tuple(domain_tuple);
    check_tuple(image_tuple);
    pairs_.reserve(domain_tuple.size());
    for (std::size_t k = 0; k < domain_tuple.size(); ++k)
        pairs_.emplace_back(domain_tuple[k], image_tuple[k]);
    std::sort(pairs_.begin(), pairs_.end());
}

bool tcoset::contains(const permutation& sigma) const {
    if (sigma.n() != n_) return false;
    for (auto [i, j] : pairs_)
        if (sigma(i) != j) return false;
    return true;
}

std::vector<long long> tcoset::member_ranks() const {
    std::vector<char> dom(n_ + 1, 0), img(n_ + 1, 0);
    std::vector<int> base(n_, 0);
    for (auto [i, j] : pairs_) {
        dom[i] = 1;
        img[j] = 1;
        base[i - 1] = j;
    }
    std::vector<int> free_pos, free_val;
    for (int i = 1; i <= n_; ++i) {
        if (!dom[i]) free_pos.push_back(i);
        if (!img[i]) free_val.push_back(i);
    }
    std::vector<long long> ranks;
    ranks.reserve(static_cast<std::size_t>(group_order(n_ - t()) ));
    std::vector<int> perm = free_val; // ascending start -> all arrangements
    do {
        std::vector<int> im = base;
        for (std::size_t k = 0; k < free_pos.size(); ++k)
            im[free_pos[k] - 1] = perm[k];
        ranks.push_back(lex_rank(permutation(std::move(im))));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(ranks.begin(), ranks.end());
    return ranks;
}

std::string tcoset::str() const {
    std::ostringstream out;
    out << "T[";
    for (auto [i, j] : pairs_) out << '(' << i << "->" << j << ')';
    out << ']';
    return out.str();
}

std::vector<tcoset> enumerate_t_cosets(int n, int t) {
    if (t < 0 || t > n) throw domain_error("need 0 <= t <= n");
    Int count = falling_factorial(n, t) * falling_factorial(n, t) / factorial(t);
    if (count > 5000000) throw capacity_error("too many t-cosets to enumerate");

    std::vector<tcoset> out;
    out.reserve(static_cast<std::size_t>(count));
    // Canonical domains: ascending t-subsets; images: all distinct tuples.
    std::vector<int> domain(t);
    std::vector<int> image(t);
    std::vector<char> used(n + 1, 0);
    auto fill_images = [&](auto&& self, int k) -> void {
        if (k == t) {
            out.emplace_back(n, domain, image);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            image[k] = v;
            self(self, k + 1);
            used[v] = 0;
        }
    };
    auto fill_domain = [&](auto&& self, int k, int from) -> void {
        if (k == t) {
            fill_images(fill_images, 0);
            return;
        }
        for (int v = from; v <= n; ++v) {
            domain[k] = v;
            self(self, k + 1, v + 1);
        }
    };
    fill_domain(fill_domain, 0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sn
