#include "sn/tableaux.hpp"

#include "sn/error.hpp"

#include <map>
#include <vector>

namespace sn {

Int count_standard_tableaux(const partition& shape) {
    if (shape.n() > 30) throw capacity_error("tableau counting limited to n <= 30");
    partition conj = conjugate(shape);
    Int hooks = 1;
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = 0; j < shape.parts()[i]; ++j)
            hooks *= (shape.parts()[i] - j) + (conj.parts()[j] - i) - 1;
    return factorial(shape.n()) / hooks;
}

namespace {

using shape_key = std::vector<int>;

// Count chains of shapes growing by horizontal strips of the content sizes.
Int strip_count(const shape_key& shape, int next_value,
                const std::vector<int>& content,
                std::map<std::pair<shape_key, int>, Int>& memo) {
    if (next_value < 0) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, next_value);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // Remove a horizontal strip of size content[next_value]: the previous
    // shape q interleaves q_i <= p_i and q_i >= p_{i+1} (column strictness).
    Int total = 0;
    int strip = content[next_value];
    int rows = static_cast<int>(shape.size());
    shape_key prev(rows);
    // Enumerate row reductions recursively.
    struct walker {
        const shape_key& p;
        shape_key& q;
        int rows;
        Int& total;
        int next_value;
        const std::vector<int>& content;
        std::map<std::pair<shape_key, int>, Int>& memo;
        void go(int row, int remaining) {
            if (row == rows) {
                if (remaining != 0) return;
                shape_key trimmed = q;
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                total += strip_count(trimmed, next_value - 1, content, memo);
                return;
            }
            int hi = p[row];
            int lo = row + 1 < rows ? p[row + 1] : 0;
            for (int v = hi; v >= lo; --v) {
                int removed = p[row] - v;
                if (removed > remaining) break;
                q[row] = v;
                go(row + 1, remaining - removed);
            }
        }
    } w{shape, prev, rows, total, next_value, content, memo};
    w.go(0, strip);
    memo[key] = total;
    return total;
}

} // namespace

Int kostka_number(const partition& shape, const partition& content) {
    if (shape.n() != content.n())
        throw domain_error("shape and content must partition the same integer");
    if (shape.n() > 20) throw capacity_error("Kostka counting limited to n <= 20");
    if (shape.n() == 0) return 1;
    // Zero unless shape dominates content; cheap cutoff before searching.
    if (!dominates(shape, content)) return 0;
    std::map<std::pair<shape_key, int>, Int> memo;
    return strip_count(shape.parts(), content.rows() - 1, content.parts(), memo);
}

} // namespace sn
