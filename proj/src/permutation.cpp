#include "sn/permutation.hpp"

#include "sn/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sn {

permutation::permutation(std::vector<int> images) : images_(std::move(images)) {
    int n = static_cast<int>(images_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v]) throw domain_error("not a permutation of 1..n");
        seen[v] = 1;
    }
}

permutation permutation::identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    permutation p;
    p.images_ = std::move(im);
    return p;
}

permutation permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < n(); ++i) inv[images_[i] - 1] = i + 1;
    permutation p;
    p.images_ = std::move(inv);
    return p;
}

permutation permutation::operator*(const permutation& other) const {
    if (n() != other.n()) throw domain_error("degree mismatch in composition");
    std::vector<int> im(images_.size());
    for (int i = 0; i < n(); ++i) im[i] = images_[other.images_[i] - 1];
    permutation p;
    p.images_ = std::move(im);
    return p;
}

partition permutation::cycle_type() const {
    std::vector<char> seen(n() + 1, 0);
    std::vector<int> lens;
    for (int start = 1; start <= n(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (int x = start; !seen[x]; x = images_[x - 1]) {
            seen[x] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return partition(std::move(lens));
}

bool permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

std::string permutation::str() const {
    std::ostringstream out;
    for (int i = 0; i < n(); ++i) {
        if (i) out << ' ';
        out << images_[i];
    }
    return out.str();
}

long long group_order(int n) {
    if (n < 0 || n > 20) throw capacity_error("n! exceeds 64-bit range");
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

long long lex_rank(const permutation& sigma) {
    int n = sigma.n();
    long long rank = 0;
    long long radix = group_order(n);
    // Lehmer code: digit i counts later values smaller than images[i].
    for (int i = 0; i < n; ++i) {
        radix /= (n - i);
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (sigma.images()[j] < sigma.images()[i]) ++smaller;
        rank += smaller * radix;
    }
    return rank;
}

permutation lex_unrank(int n, long long rank) {
    long long order = group_order(n);
    if (rank < 0 || rank >= order) throw domain_error("rank out of range");
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<int> im;
    im.reserve(n);
    long long radix = order;
    for (int i = 0; i < n; ++i) {
        radix /= (n - i);
        int digit = static_cast<int>(rank / radix);
        rank %= radix;
        im.push_back(pool[digit]);
        pool.erase(pool.begin() + digit);
    }
    return permutation(std::move(im));
}

permutation parse_permutation(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> im;
    int v;
    while (in >> v) im.push_back(v);
    return permutation(std::move(im));
}

cycle_type_index::cycle_type_index(int n) : n_(n), types_(enumerate_partitions(n)) {
    // Mixed-radix key over cycle counts: count of length-l cycles is < n/l + 1.
    long long space = 1;
    for (int l = 1; l <= n && space <= 200000; ++l) space *= (n / l + 1);
    if (space <= 200000) {
        key_to_id_.assign(static_cast<std::size_t>(space), -1);
        std::vector<int> counts(n + 1);
        for (int id = 0; id < count(); ++id) {
            std::fill(counts.begin(), counts.end(), 0);
            for (int part : types_[id].parts()) ++counts[part];
            key_to_id_[key_of_counts(counts.data())] = id;
        }
    }
}

int cycle_type_index::key_of_counts(const int* count_by_len) const {
    int key = 0, stride = 1;
    for (int l = 1; l <= n_; ++l) {
        key += count_by_len[l] * stride;
        stride *= (n_ / l + 1);
    }
    return key;
}

int cycle_type_index::id_of(const partition& type) const {
    if (type.n() != n_) throw domain_error("cycle type of wrong degree");
    if (!key_to_id_.empty()) {
        std::vector<int> counts(n_ + 1, 0);
        for (int part : type.parts()) ++counts[part];
        return key_to_id_[key_of_counts(counts.data())];
    }
    for (int id = 0; id < count(); ++id)
        if (types_[id] == type) return id;
    throw domain_error("cycle type not found");
}

int cycle_type_index::id_of_images(const std::vector<int>& images) const {
    int counts[32] = {0};
    unsigned seen = 0; // bitmask, n <= 31 here
    int n = static_cast<int>(images.size());
    for (int start = 0; start < n; ++start) {
        if (seen & (1u << start)) continue;
        int len = 0;
        int x = start;
        while (!(seen & (1u << x))) {
            seen |= 1u << x;
            x = images[x] - 1;
            ++len;
        }
        ++counts[len];
    }
    if (!key_to_id_.empty()) return key_to_id_[key_of_counts(counts)];
    std::vector<int> lens;
    for (int l = n; l >= 1; --l)
        for (int c = 0; c < counts[l]; ++c) lens.push_back(l);
    return id_of(partition(std::move(lens)));
}

} // namespace sn
