#include "sn/error.hpp"
#include "sn/partition.hpp"
#include "sn/permutation.hpp"
#include "sn/permutation_set.hpp"
#include "sn/tableaux.hpp"
#include "sn/tcoset.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace sn;

TEST_CASE("partition enumeration order and count") {
    auto p4 = enumerate_partitions(4);
    std::vector<partition> expected{partition({4}), partition({3, 1}), partition({2, 2}),
                                    partition({2, 1, 1}), partition({1, 1, 1, 1})};
    CHECK(p4 == expected);

    CHECK(enumerate_partitions(0) == std::vector<partition>{partition()});
    CHECK(enumerate_partitions(1) == std::vector<partition>{partition({1})});

    for (int n = 0; n <= 12; ++n) {
        auto all = enumerate_partitions(n);
        CHECK(static_cast<long long>(all.size()) == oracle::partition_count(n));
        // descending lex, no duplicates
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);
    }
    CHECK_THROWS_AS(enumerate_partitions(31), capacity_error);
}

TEST_CASE("partition comparisons") {
    CHECK(compare_partitions(partition({3, 1}), partition({2, 2}), partition_order::dominance) ==
          partition_compare::greater);
    CHECK(compare_partitions(partition({3, 1, 1, 1}), partition({2, 2, 2}),
                             partition_order::dominance) == partition_compare::incomparable);
    CHECK(compare_partitions(partition({3, 1}), partition({2, 2}), partition_order::lex) ==
          partition_compare::greater);
    CHECK_THROWS_AS(compare_partitions(partition({2}), partition({1, 1, 1}), partition_order::lex),
                    domain_error);

    // lex extends dominance
    for (int n = 1; n <= 9; ++n) {
        auto all = enumerate_partitions(n);
        for (const auto& a : all) {
            for (const auto& b : all) {
                auto dom = compare_partitions(a, b, partition_order::dominance);
                auto lex = compare_partitions(a, b, partition_order::lex);
                if (dom == partition_compare::greater) CHECK(lex == partition_compare::greater);
                if (dom == partition_compare::less) CHECK(lex == partition_compare::less);
                if (dom == partition_compare::equal) CHECK(lex == partition_compare::equal);
            }
        }
    }
}

TEST_CASE("cycle types") {
    CHECK(permutation::identity(5).cycle_type() == partition({1, 1, 1, 1, 1}));
    CHECK(permutation({2, 1, 4, 5, 3}).cycle_type() == partition({3, 2}));
    CHECK(permutation({2, 3, 4, 5, 6, 1}).cycle_type() == partition({6}));
}

TEST_CASE("lex rank / unrank") {
    CHECK(lex_unrank(3, 0) == permutation({1, 2, 3}));
    CHECK(lex_unrank(3, 2) == permutation({2, 1, 3}));
    CHECK(lex_rank(permutation({3, 2, 1})) == 5);
    CHECK_THROWS_AS(lex_unrank(3, 6), domain_error);
    CHECK_THROWS_AS(lex_unrank(3, -1), domain_error);

    for (int n = 1; n <= 6; ++n) {
        auto words = oracle::all_permutations(n);
        for (long long r = 0; r < static_cast<long long>(words.size()); ++r) {
            CHECK(lex_unrank(n, r).images() == words[static_cast<std::size_t>(r)]);
            CHECK(lex_rank(permutation(words[static_cast<std::size_t>(r)])) == r);
        }
    }
}

TEST_CASE("standard tableaux counts") {
    CHECK(count_standard_tableaux(partition({7})) == 1);
    CHECK(count_standard_tableaux(partition({2, 2})) == 2);
    CHECK(count_standard_tableaux(partition({5, 2})) == 14);

    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : enumerate_partitions(n))
            CHECK(count_standard_tableaux(shape) == oracle::standard_tableaux_by_enumeration(shape));

    // dimension identity: sum over shapes of dim^2 = n!
    for (int n = 1; n <= 10; ++n) {
        Int total = 0;
        for (const auto& shape : enumerate_partitions(n)) {
            Int d = count_standard_tableaux(shape);
            total += d * d;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("kostka numbers") {
    CHECK(kostka_number(partition({3, 2}), partition({3, 1, 1})) == 1);
    CHECK(kostka_number(partition({6, 1}), partition({5, 1, 1})) == 2);

    for (int n = 1; n <= 7; ++n) {
        auto all = enumerate_partitions(n);
        partition ones(std::vector<int>(n, 1));
        for (const auto& shape : all) {
            CHECK(kostka_number(shape, ones) == count_standard_tableaux(shape));
            for (const auto& content : all) {
                Int k = kostka_number(shape, content);
                CHECK(k == oracle::kostka_by_enumeration(shape, content));
                if (compare_partitions(shape, content, partition_order::lex) ==
                    partition_compare::less)
                    CHECK(k == 0);
            }
        }
    }
}

TEST_CASE("t-coset enumeration and canonical form") {
    CHECK(enumerate_t_cosets(5, 1).size() == 25);
    CHECK(enumerate_t_cosets(4, 2).size() == 72);
    CHECK(enumerate_t_cosets(4, 0).size() == 1);

    // canonicalization: constraint order does not matter
    tcoset a(5, {1, 3}, {2, 4});
    tcoset b(5, {3, 1}, {4, 2});
    CHECK(a == b);
    CHECK(a.str() == b.str());

    // members of the point stabilizer in S_3
    tcoset stab(3, {1}, {1});
    auto members = stab.member_ranks();
    CHECK(members == std::vector<long long>{0, 1});

    for (int t = 0; t <= 4; ++t) {
        auto cosets = enumerate_t_cosets(4, t);
        Int expected = falling_factorial(4, t) * falling_factorial(4, t) / factorial(t);
        CHECK(Int(cosets.size()) == expected);
        std::set<tcoset> dedup(cosets.begin(), cosets.end());
        CHECK(dedup.size() == cosets.size());
        for (const auto& coset : cosets) {
            auto ranks = coset.member_ranks();
            CHECK(static_cast<long long>(ranks.size()) == group_order(4 - t));
            for (long long r : ranks) CHECK(coset.contains(lex_unrank(4, r)));
        }
    }
}

TEST_CASE("lex initial segments") {
    auto sml = lex_initial_segment(3, 2);
    CHECK(sml.size() == 2);
    CHECK(sml.contains(0));
    CHECK(sml.contains(1));

    // the first (n-1)! permutations form the stabilizer of 1
    for (int n = 3; n <= 6; ++n) {
        auto segment = lex_initial_segment(n, group_order(n - 1));
        auto stab = permutation_set::from_coset(tcoset(n, {1}, {1}));
        CHECK(segment == stab);
    }
    CHECK(lex_initial_segment(4, 0).size() == 0);
    CHECK_THROWS_AS(lex_initial_segment(3, 7), domain_error);
}

TEST_CASE("permutation set file round trip") {
    permutation_set set(4);
    set.insert(0);
    set.insert(5);
    set.insert(23);
    std::stringstream buf;
    set.write(buf);
    CHECK(buf.str().substr(0, 4) == "n=4\n");
    permutation_set back = permutation_set::read(buf);
    CHECK(back == set);

    std::stringstream bad("k=4\n1 2 3 4\n");
    CHECK_THROWS_AS(permutation_set::read(bad), domain_error);
}

TEST_CASE("set algebra") {
    auto a = lex_initial_segment(4, 10);
    auto b = lex_initial_segment(4, 4);
    CHECK((a & b) == b);
    CHECK((a | b) == a);
    CHECK((a ^ b).size() == 6);
    CHECK(a.complement().size() == 14);
    CHECK(a.intersection_size(b) == 4);
    CHECK(a.symmetric_difference_size(b) == 6);
}
