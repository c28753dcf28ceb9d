#include "sn/permutation_set.hpp"

#include "sn/error.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sn {

permutation_set::permutation_set(int n) : n_(n), order_(group_order(n)) {
    if (n > 12) throw capacity_error("dense permutation sets limited to n <= 12");
    words_.assign(static_cast<std::size_t>((order_ + 63) / 64), 0);
}

permutation_set permutation_set::full(int n) {
    permutation_set s(n);
    for (long long r = 0; r < s.order_; ++r) s.insert(r);
    return s;
}

permutation_set permutation_set::from_ranks(int n, const std::vector<long long>& ranks) {
    permutation_set s(n);
    for (long long r : ranks) {
        if (r < 0 || r >= s.order_) throw domain_error("rank out of range");
        s.insert(r);
    }
    return s;
}

permutation_set permutation_set::from_coset(const tcoset& coset) {
    return from_ranks(coset.n(), coset.member_ranks());
}

long long permutation_set::size() const {
    long long total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::vector<long long> permutation_set::ranks() const {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<long long>(wi) * 64 + b);
            w &= w - 1;
        }
    }
    return out;
}

permutation_set permutation_set::operator|(const permutation_set& other) const {
    if (n_ != other.n_) throw domain_error("degree mismatch");
    permutation_set s = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] |= other.words_[i];
    return s;
}

permutation_set permutation_set::operator&(const permutation_set& other) const {
    if (n_ != other.n_) throw domain_error("degree mismatch");
    permutation_set s = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= other.words_[i];
    return s;
}

permutation_set permutation_set::operator^(const permutation_set& other) const {
    if (n_ != other.n_) throw domain_error("degree mismatch");
    permutation_set s = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] ^= other.words_[i];
    return s;
}

permutation_set permutation_set::complement() const {
    permutation_set s = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    // Clear padding bits past n!.
    int tail = static_cast<int>(order_ & 63);
    if (tail) s.words_.back() &= (1ull << tail) - 1;
    return s;
}

long long permutation_set::intersection_size(const permutation_set& other) const {
    if (n_ != other.n_) throw domain_error("degree mismatch");
    long long total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        total += std::popcount(words_[i] & other.words_[i]);
    return total;
}

long long permutation_set::symmetric_difference_size(const permutation_set& other) const {
    if (n_ != other.n_) throw domain_error("degree mismatch");
    long long total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        total += std::popcount(words_[i] ^ other.words_[i]);
    return total;
}

void permutation_set::write(std::ostream& out) const {
    out << "n=" << n_ << "\n";
    for (long long r : ranks()) out << lex_unrank(n_, r).str() << "\n";
}

permutation_set permutation_set::read(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
        throw domain_error("permutation set file must start with n=<degree>");
    int n = std::stoi(line.substr(2));
    permutation_set s(n);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        permutation p = parse_permutation(line);
        if (p.n() != n) throw domain_error("permutation of wrong degree in set file");
        s.insert(lex_rank(p));
    }
    return s;
}

permutation_set permutation_set::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open set file: " + path);
    return read(in);
}

void permutation_set::write_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot open set file for writing: " + path);
    write(out);
}

permutation_set lex_initial_segment(int n, long long k) {
    permutation_set s(n);
    if (k < 0 || k > s.universe()) throw domain_error("segment size out of range");
    for (long long r = 0; r < k; ++r) s.insert(r);
    return s;
}

} // namespace sn
