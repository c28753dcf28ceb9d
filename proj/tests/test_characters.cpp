#include "sn/character_table.hpp"
#include "sn/class_function.hpp"
#include "sn/error.hpp"
#include "sn/long_cycles.hpp"
#include "sn/perm_character.hpp"
#include "sn/tableaux.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <sstream>

using namespace sn;

TEST_CASE("class sizes") {
    CHECK(conjugacy_class_size(partition({1, 1, 1})) == 1);
    CHECK(conjugacy_class_size(partition({2, 1})) == 3);
    CHECK(conjugacy_class_size(partition({3})) == 2);
    CHECK(conjugacy_class_size(partition({2, 1, 1})) == 6);

    // sizes add up to the group order, against a direct scan
    for (int n = 1; n <= 6; ++n) {
        class_context ctx(n);
        Int total = 0;
        std::map<partition, long long> seen;
        for (const auto& im : oracle::all_permutations(n)) ++seen[permutation(im).cycle_type()];
        for (int c = 0; c < ctx.class_count(); ++c) {
            total += ctx.class_size(c);
            CHECK(ctx.class_size(c) == Int(seen[ctx.types().type(c)]));
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("character table basics") {
    auto table = character_table::compute(3);
    partition row21({2, 1});
    CHECK(table.value(row21, partition({1, 1, 1})) == 2);
    CHECK(table.value(row21, partition({2, 1})) == 0);
    CHECK(table.value(row21, partition({3})) == -1);

    for (int n = 1; n <= 8; ++n) {
        auto tab = character_table::compute(n);
        for (int r = 0; r < tab.count(); ++r) {
            // trivial and sign rows; dimension at the identity
            CHECK(tab.dimension(r) == count_standard_tableaux(tab.labels()[r]).convert_to<long long>());
            if (tab.labels()[r] == partition(std::vector<int>{n})) {
                for (int c = 0; c < tab.count(); ++c) CHECK(tab.value(r, c) == 1);
            }
            if (tab.labels()[r] == partition(std::vector<int>(n, 1))) {
                for (int c = 0; c < tab.count(); ++c) {
                    const partition& type = tab.context().types().type(c);
                    int transpositions = 0;
                    for (int part : type.parts()) transpositions += part - 1;
                    CHECK(tab.value(r, c) == (transpositions % 2 ? -1 : 1));
                }
            }
        }
    }
}

TEST_CASE("orthogonality") {
    for (int n = 1; n <= 8; ++n) {
        auto table = character_table::compute(n);
        for (int a = 0; a < table.count(); ++a)
            for (int b = a; b < table.count(); ++b)
                CHECK(table.row_inner(a, b) == (a == b ? Rat(1) : Rat(0)));

        // column orthogonality
        const auto& ctx = table.context();
        for (int c1 = 0; c1 < table.count(); ++c1) {
            for (int c2 = c1; c2 < table.count(); ++c2) {
                Int sum = 0;
                for (int r = 0; r < table.count(); ++r)
                    sum += Int(table.value(r, c1)) * table.value(r, c2);
                Rat expected = c1 == c2 ? Rat(factorial(n), ctx.class_size(c1)) : Rat(0);
                CHECK(Rat(sum) == expected);
            }
        }
    }
}

TEST_CASE("permutation characters count fixed tabloids") {
    // identity fixes every tabloid
    CHECK(permutation_character(partition({2, 2}), partition({1, 1, 1, 1})) == 6);
    CHECK(permutation_character(partition({2, 2}), partition({2, 1, 1})) == 2);
    // one long row: a single tabloid, always fixed
    CHECK(permutation_character(partition({5}), partition({3, 2})) == 1);

    // fixed points of the action on points
    for (int n = 2; n <= 7; ++n) {
        partition mu({n - 1, 1});
        for (const auto& type : enumerate_partitions(n)) {
            long long fixed = 0;
            for (int part : type.parts())
                if (part == 1) ++fixed;
            CHECK(permutation_character(mu, type) == Int(fixed));
        }
    }

    // direct tabloid-orbit scan for n <= 5: count row-set-preserving images
    for (int n = 1; n <= 5; ++n) {
        for (const auto& mu : enumerate_partitions(n)) {
            for (const auto& im : oracle::all_permutations(n)) {
                permutation sigma(im);
                // enumerate all tabloids as ordered set partitions with row sizes mu
                std::vector<int> assignment(n, -1);
                long long fixed = 0;
                std::vector<int> capacity = mu.parts();
                std::function<void(int)> place = [&](int point) {
                    if (point == n) {
                        // check sigma maps each row onto itself
                        for (int p = 0; p < n; ++p)
                            if (assignment[sigma(p + 1) - 1] != assignment[p]) return;
                        ++fixed;
                        return;
                    }
                    for (int row = 0; row < mu.rows(); ++row) {
                        if (capacity[row] == 0) continue;
                        --capacity[row];
                        assignment[point] = row;
                        place(point + 1);
                        ++capacity[row];
                        assignment[point] = -1;
                    }
                };
                place(0);
                CHECK(permutation_character(mu, sigma.cycle_type()) == Int(fixed));
            }
        }
    }
}

TEST_CASE("signed tabloid sum reproduces irreducible characters") {
    // two-term example: shape (2,1)
    class_function chi = determinantal_character(partition({2, 1}));
    CHECK(chi.at(partition({1, 1, 1})) == 2);
    CHECK(chi.at(partition({2, 1})) == 0);
    CHECK(chi.at(partition({3})) == -1);

    for (int n = 1; n <= 8; ++n) {
        auto table = character_table::compute(n);
        for (int r = 0; r < table.count(); ++r) {
            class_function via_sum = determinantal_character(table.labels()[r]);
            CHECK(via_sum == table.row(r));
        }
    }
}

TEST_CASE("tabloid module decomposition") {
    for (int n = 2; n <= 8; ++n) {
        auto table = character_table::compute(n);

        // hook content: multiplicity 1 for the two top shapes
        auto hook = young_decomposition(partition({n - 1, 1}));
        CHECK(hook.size() == 2);
        CHECK(hook.at(partition(std::vector<int>{n})) == 1);
        CHECK(hook.at(partition({n - 1, 1})) == 1);

        auto trivial = young_decomposition(partition(std::vector<int>{n}));
        CHECK(trivial.size() == 1);

        // the identity xi_mu = sum K chi_lambda holds classwise, exactly
        for (const auto& mu : enumerate_partitions(n)) {
            class_function xi = permutation_character_row(mu);
            class_function sum = class_function::zero(n);
            for (const auto& [lambda, mult] : young_decomposition(mu)) {
                class_function term = table.row(table.row_index(lambda));
                term *= Rat(mult);
                sum += term;
            }
            CHECK(xi == sum);
        }
    }
}

TEST_CASE("character l1 norms") {
    auto t3 = character_table::compute(3);
    CHECK(t3.l1_norm(t3.row_index(partition({3}))) == Rat(1));
    CHECK(t3.l1_norm(t3.row_index(partition({1, 1, 1}))) == Rat(1));
    CHECK(t3.l1_norm(t3.row_index(partition({2, 1}))) == Rat(2, 3));
}

TEST_CASE("no-short-cycle counts") {
    CHECK(count_no_short_cycles(3, 1) == 2);
    CHECK(count_no_short_cycles(4, 1) == 9);
    CHECK(count_no_short_cycles(5, 2) == 24);
    CHECK(count_no_short_cycles(0, 1) == 1);
    CHECK(count_no_short_cycles(2, 3) == 0);

    for (int s = 1; s <= 3; ++s)
        for (int m = 0; m <= 7; ++m)
            CHECK(count_no_short_cycles(m, s) == Int(oracle::no_short_cycles_by_enumeration(m, s)));

    // quantitative floor m!/(2s+1) above the diagonal
    for (int s = 1; s <= 3; ++s)
        for (int m = s + 1; m <= 12; ++m)
            CHECK(count_no_short_cycles(m, s) * (2 * s + 1) >= factorial(m));
}

TEST_CASE("head-refined class totals") {
    // head (2), tail (1): only the 3-cycle-free option lambda=(2)
    CHECK(count_head_refinements(partition({2, 1}), 1) == 3);
    // choose the fixed point, 3-cycle on the rest
    CHECK(count_head_refinements(partition({3, 1}), 1) == 8);

    // n-head case coincides with the plain no-short-cycle count
    for (int n = 2; n <= 8; ++n)
        CHECK(count_head_refinements(partition(std::vector<int>{n}), 1) ==
              count_no_short_cycles(n, 1));

    // direct enumeration oracle for n <= 6
    for (int n = 2; n <= 6; ++n) {
        for (int s = 1; s <= 2; ++s) {
            for (const auto& beta : enumerate_partitions(n)) {
                if (beta.first() < n - s) continue;
                long long direct = 0;
                for (const auto& im : oracle::all_permutations(n)) {
                    partition type = permutation(im).cycle_type();
                    // type must be beta with its head refined into parts > s
                    std::vector<int> tail(beta.parts().begin() + 1, beta.parts().end());
                    std::vector<int> remaining = type.parts();
                    bool ok = true;
                    for (int part : tail) {
                        auto it = std::find(remaining.begin(), remaining.end(), part);
                        if (it == remaining.end()) {
                            ok = false;
                            break;
                        }
                        remaining.erase(it);
                    }
                    if (!ok) continue;
                    int head_total = 0;
                    for (int part : remaining) {
                        if (part <= s) ok = false;
                        head_total += part;
                    }
                    if (ok && head_total == beta.first()) ++direct;
                }
                CHECK(count_head_refinements(beta, s) == Int(direct));
            }
        }
    }

    CHECK_THROWS_AS(count_head_refinements(partition({2, 2}), 1), domain_error);
}

TEST_CASE("characters constant on head-refined families") {
    // all permutations in the family share the character value of the base type
    for (int n = 5; n <= 7; ++n) {
        int s = 2;
        auto table = character_table::compute(n);
        for (const auto& beta : enumerate_partitions(n)) {
            if (beta.first() < n - s) continue;
            for (const auto& alpha : enumerate_partitions(n)) {
                if (alpha.first() < n - s) continue;
                long long base = table.value(alpha, beta);
                for (const auto& lambda : enumerate_partitions(beta.first())) {
                    if (!lambda.parts().empty() && lambda.parts().back() <= s) continue;
                    if (lambda.parts().empty()) continue;
                    std::vector<int> type = lambda.parts();
                    type.insert(type.end(), beta.parts().begin() + 1, beta.parts().end());
                    std::sort(type.begin(), type.end(), std::greater<int>());
                    CHECK(table.value(alpha, partition(type)) == base);
                }
            }
        }
    }
}

TEST_CASE("table cache round trip and integrity") {
    auto table = character_table::compute(6);
    std::stringstream buf;
    table.save(buf);
    auto loaded = character_table::load(buf);
    CHECK(loaded.n() == 6);
    for (int r = 0; r < table.count(); ++r)
        for (int c = 0; c < table.count(); ++c)
            CHECK(loaded.value(r, c) == table.value(r, c));

    // corrupt one value: the integrity line no longer matches
    std::stringstream good;
    table.save(good);
    std::string text = good.str();
    auto pos = text.find("sum_dim_sq=");
    std::string tampered = text.substr(0, pos) + "sum_dim_sq=999\n";
    std::stringstream bad(tampered);
    CHECK_THROWS_AS(character_table::load(bad), domain_error);

    CHECK_THROWS_AS(character_table::compute(15), capacity_error);
}

TEST_CASE("dimension and kostka bounds for near-full first rows") {
    // dim <= (n)_s when the first row misses s boxes; sandwich around the
    // kostka multiplicity; head-strip identity K = dim of the leftover shape
    for (int n = 4; n <= 12; ++n) {
        for (int s = 0; s <= 4 && s < n; ++s) {
            std::vector<int> star{n - s};
            for (int i = 0; i < s; ++i) star.push_back(1);
            partition content(star);
            for (const auto& alpha : enumerate_partitions(n)) {
                if (alpha.first() != n - s) continue;
                Int dim = count_standard_tableaux(alpha);
                CHECK(dim <= falling_factorial(n, s));

                if (alpha.rows() == 0) continue;
                std::vector<int> rest(alpha.parts().begin() + 1, alpha.parts().end());
                partition gamma(rest);
                Int k = kostka_number(alpha, content);
                CHECK(k == count_standard_tableaux(gamma));
                CHECK(binomial(n - s, s) * k <= dim);
                CHECK(dim <= binomial(n, s) * k);
            }
        }
    }
}

TEST_CASE("l1 norm floor for near-full first rows") {
    for (int s = 1; s <= 3; ++s) {
        for (int n = 2 * s + 1; n <= 12; ++n) {
            auto table = character_table::compute(n);
            Rat floor(1, factorial(s).convert_to<long long>() * (2 * s + 1));
            for (int r = 0; r < table.count(); ++r) {
                if (table.labels()[r].first() < n - s) continue;
                CHECK(table.l1_norm(r) >= floor);
            }
        }
    }
}
