#include "sn/coset_family.hpp"

#include "sn/error.hpp"

#include <algorithm>
#include <bit>

namespace sn {

coset_family::coset_family(int n, int t, bool with_membership)
    : n_(n), t_(t), cosets_(enumerate_t_cosets(n, t)) {
    if (!with_membership) return;
    long long order = group_order(n);
    words_per_ = static_cast<std::size_t>((order + 63) / 64);
    members_.assign(words_per_ * cosets_.size(), 0);
    for (std::size_t idx = 0; idx < cosets_.size(); ++idx) {
        std::uint64_t* row = &members_[idx * words_per_];
        for (long long r : cosets_[idx].member_ranks())
            row[static_cast<std::size_t>(r >> 6)] |= 1ull << (r & 63);
    }
}

int coset_family::index_of(const tcoset& coset) const {
    auto it = std::lower_bound(cosets_.begin(), cosets_.end(), coset);
    if (it == cosets_.end() || !(*it == coset)) throw domain_error("coset not in family");
    return static_cast<int>(it - cosets_.begin());
}

long long coset_family::intersection_count(int idx, const permutation_set& set) const {
    const std::uint64_t* row = member_words(idx);
    long long total = 0;
    for (std::size_t w = 0; w < words_per_; ++w)
        total += std::popcount(row[w] & set.words()[w]);
    return total;
}

bool coset_family::subset_of(int idx, const permutation_set& set) const {
    const std::uint64_t* row = member_words(idx);
    for (std::size_t w = 0; w < words_per_; ++w)
        if (row[w] & ~set.words()[w]) return false;
    return true;
}

permutation_set coset_family::as_set(int idx) const {
    return permutation_set::from_coset(cosets_[idx]);
}

std::vector<int> coset_family::cosets_containing(long long rank) const {
    permutation sigma = lex_unrank(n_, rank);
    std::vector<int> out;
    std::vector<int> domain(t_), image(t_);
    auto rec = [&](auto&& self, int k, int from) -> void {
        if (k == t_) {
            out.push_back(index_of(tcoset(n_, domain, image)));
            return;
        }
        for (int v = from; v <= n_; ++v) {
            domain[k] = v;
            image[k] = sigma(v);
            self(self, k + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sn
