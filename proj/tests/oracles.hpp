#pragma once

// Brute-force reference implementations used only by tests. Each one is an
// independent route to a quantity the library computes another way.

#include "sn/partition.hpp"
#include "sn/permutation.hpp"
#include "sn/rational.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

/// Partition count by the bounded-part table p(n, k) = p(n, k-1) + p(n-k, k).
inline long long partition_count(int n) {
    std::vector<std::vector<long long>> p(n + 1, std::vector<long long>(n + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
    return p[n][n];
}

/// Count standard fillings by placing 1..n cell by cell.
inline long long standard_tableaux_by_enumeration(const sn::partition& shape) {
    int rows = shape.rows();
    std::vector<int> filled(rows, 0); // filled cells per row
    std::function<long long()> place = [&]() -> long long {
        long long total = 0;
        bool any = false;
        for (int r = 0; r < rows; ++r) {
            if (filled[r] >= shape.parts()[r]) continue;
            int c = filled[r];
            if (r > 0 && filled[r - 1] <= c) continue; // the cell above must be filled
            any = true;
            ++filled[r];
            total += place();
            --filled[r];
        }
        if (!any) return 1; // all cells placed
        return total;
    };
    return place();
}

/// Count semistandard fillings of `shape` with content `content` directly.
inline long long kostka_by_enumeration(const sn::partition& shape, const sn::partition& content) {
    if (shape.n() != content.n()) return 0;
    int rows = shape.rows();
    std::vector<std::vector<int>> cells(rows);
    for (int r = 0; r < rows; ++r) cells[r].assign(shape.parts()[r], 0);
    std::vector<int> remaining(content.rows());
    for (int i = 0; i < content.rows(); ++i) remaining[i] = content.parts()[i];

    std::function<long long(int, int)> fill = [&](int r, int c) -> long long {
        if (r == rows) return 1;
        int nr = r, nc = c + 1;
        if (nc >= shape.parts()[r]) {
            nr = r + 1;
            nc = 0;
        }
        long long total = 0;
        for (int v = 1; v <= content.rows(); ++v) {
            if (remaining[v - 1] == 0) continue;
            if (c > 0 && cells[r][c - 1] > v) continue;                       // weak rows
            if (r > 0 && static_cast<int>(cells[r - 1].size()) > c && cells[r - 1][c] >= v)
                continue;                                                     // strict columns
            cells[r][c] = v;
            --remaining[v - 1];
            total += fill(nr, nc);
            ++remaining[v - 1];
            cells[r][c] = 0;
        }
        return total;
    };
    return rows == 0 ? 1 : fill(0, 0);
}

/// All permutations of S_n as image vectors in lexicographic order.
inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

/// Permutations of S_m whose cycles are all longer than s, by direct scan.
inline long long no_short_cycles_by_enumeration(int m, int s) {
    long long count = 0;
    for (const auto& im : all_permutations(m)) {
        sn::partition type = sn::permutation(im).cycle_type();
        bool good = true;
        for (int part : type.parts())
            if (part <= s) good = false;
        if (good) ++count;
    }
    return m == 0 ? 1 : count;
}

} // namespace oracle
