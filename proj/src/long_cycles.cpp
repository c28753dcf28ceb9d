#include "sn/long_cycles.hpp"

#include "sn/class_function.hpp"
#include "sn/error.hpp"

#include <algorithm>
#include <vector>

namespace sn {

Int count_no_short_cycles(int m, int s) {
    if (m < 0 || s < 1) throw domain_error("need m >= 0 and s >= 1");
    std::vector<Int> table(m + 1);
    for (int k = 0; k <= m; ++k) {
        if (k == 0) {
            table[k] = 1;
        } else if (k <= s) {
            table[k] = 0;
        } else {
            Int tail = 1;
            for (int i = 2; i <= s; ++i) tail *= (k - i);
            table[k] = (k - 1) * (table[k - 1] + tail * table[k - s - 1]);
        }
    }
    return table[m];
}

Int count_head_refinements(const partition& beta, int s) {
    int n = beta.n();
    if (beta.first() < n - s) throw domain_error("first part must be at least n - s");
    int head = beta.first();
    std::vector<int> tail(beta.parts().begin() + (beta.rows() > 0 ? 1 : 0), beta.parts().end());

    Int total = 0;
    for (const partition& lambda : enumerate_partitions(head)) {
        if (lambda.rows() > 0 && lambda.parts().back() <= s) continue;
        std::vector<int> type = lambda.parts();
        type.insert(type.end(), tail.begin(), tail.end());
        std::sort(type.begin(), type.end(), std::greater<int>());
        total += conjugacy_class_size(partition(std::move(type)));
    }
    return total;
}

} // namespace sn
