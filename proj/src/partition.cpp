#include "sn/partition.hpp"

#include "sn/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sn {

partition::partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw domain_error("partition parts must be non-increasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::strong_ordering partition::operator<=>(const partition& other) const {
    int rows_max = std::max(rows(), other.rows());
    for (int i = 0; i < rows_max; ++i) {
        if (part(i) != other.part(i))
            return part(i) > other.part(i) ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::string partition::str() const {
    std::ostringstream out;
    out << '(';
    for (int i = 0; i < rows(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& head,
                     std::vector<partition>& out) {
    if (remaining == 0) {
        out.emplace_back(head);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        head.push_back(p);
        emit_partitions(remaining - p, p, head, out);
        head.pop_back();
    }
}

} // namespace

std::vector<partition> enumerate_partitions(int n) {
    if (n < 0) throw domain_error("negative n");
    if (n > 30) throw capacity_error("partition enumeration limited to n <= 30");
    std::vector<partition> out;
    std::vector<int> head;
    emit_partitions(n, n == 0 ? 1 : n, head, out);
    return out;
}

partition_compare compare_partitions(const partition& a, const partition& b,
                                     partition_order order) {
    if (a.n() != b.n())
        throw domain_error("cannot compare partitions of different integers");
    if (order == partition_order::lex) {
        auto c = a <=> b;
        if (c == std::strong_ordering::equal) return partition_compare::equal;
        return c == std::strong_ordering::greater ? partition_compare::greater
                                                  : partition_compare::less;
    }
    // Dominance: compare all prefix sums (zero-padded).
    bool ge = true, le = true;
    int rows_max = std::max(a.rows(), b.rows());
    long long sum_a = 0, sum_b = 0;
    for (int i = 0; i < rows_max; ++i) {
        sum_a += a.part(i);
        sum_b += b.part(i);
        if (sum_a < sum_b) ge = false;
        if (sum_a > sum_b) le = false;
    }
    if (ge && le) return partition_compare::equal;
    if (ge) return partition_compare::greater;
    if (le) return partition_compare::less;
    return partition_compare::incomparable;
}

bool dominates(const partition& a, const partition& b) {
    auto c = compare_partitions(a, b, partition_order::dominance);
    return c == partition_compare::greater || c == partition_compare::equal;
}

partition conjugate(const partition& p) {
    std::vector<int> cols;
    cols.reserve(p.first());
    for (int j = 0; j < p.first(); ++j) {
        int count = 0;
        for (int i = 0; i < p.rows(); ++i)
            if (p.parts()[i] > j) ++count;
        cols.push_back(count);
    }
    return partition(std::move(cols));
}

int partition_index(const partition& p) {
    auto all = enumerate_partitions(p.n());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == p) return static_cast<int>(i);
    throw domain_error("partition not found");
}

partition parse_partition(const std::string& text) {
    std::string s = text;
    std::erase(s, '(');
    std::erase(s, ')');
    std::erase(s, ' ');
    if (s.empty()) return partition();
    std::vector<int> parts;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw domain_error("bad partition literal: " + text);
        parts.push_back(std::stoi(tok));
    }
    return partition(std::move(parts));
}

} // namespace sn
