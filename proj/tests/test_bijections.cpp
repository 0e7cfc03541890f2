#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "osp/bijections.hpp"
#include "osp/enumerate.hpp"
#include "osp/patterns.hpp"
#include "osp/stats.hpp"

using namespace osp;

TEST_CASE("reverse and complement") {
    OrderedSetPartition d = OrderedSetPartition::parse("57/134/268");
    CHECK(reverse_complement(d).str() == "137/568/24");
    CHECK(complement(OrderedSetPartition::parse("1/2/3")).str() == "3/2/1");
    for (int n = 0; n <= 5; ++n) {
        for_each_osp(n, [&](const OrderedSetPartition& p) {
            REQUIRE(reverse(reverse(p)) == p);
            REQUIRE(complement(complement(p)) == p);
            REQUIRE(reverse_complement(reverse_complement(p)) == p);
        });
    }
}

TEST_CASE("phi on the worked example") {
    CHECK(phi(OrderedSetPartition::parse("3/24/15")).str() == "5/34/12");
    CHECK(phi(OrderedSetPartition::parse("1")).str() == "1");
    CHECK(phi(OrderedSetPartition::parse("2/1")).str() == "2/1");
    CHECK(phi(OrderedSetPartition{}) == OrderedSetPartition{});
    CHECK_THROWS_AS(phi(OrderedSetPartition::parse("3/1/2")), std::domain_error);
}

TEST_CASE("phi contract") {
    Permutation p312({3, 1, 2}), p213({2, 1, 3});
    for (int n = 0; n <= 6; ++n) {
        std::set<std::string> images;
        auto domain = gen_word_avoiding(n, p312);
        for (const auto& p : domain) {
            OrderedSetPartition img = phi(p);
            images.insert(img.str());
            REQUIRE(word_avoids(img, p213));
            REQUIRE(des_set(p.word()) == des_set(img.word()));
            REQUIRE(stat(p, StatName::Mindes) == stat(img, StatName::Mindes));
            REQUIRE(p.block_count() == img.block_count());
            for (int b = 0; b < p.block_count(); ++b) {
                REQUIRE(p.block(b).size() == img.block(b).size());
            }
            if (n >= 1) {
                Word wp = p.word(), wi = img.word();
                REQUIRE(std::find(wp.begin(), wp.end(), 1) - wp.begin() ==
                        std::find(wi.begin(), wi.end(), 1) - wi.begin());
            }
        }
        std::set<std::string> codomain;
        for (const auto& p : gen_word_avoiding(n, p213)) codomain.insert(p.str());
        REQUIRE(images == codomain);
    }
}

TEST_CASE("phi does not preserve part-descents") {
    int counterexamples = 0;
    for (const auto& p : gen_word_avoiding(5, Permutation({3, 1, 2}))) {
        if (stat(p, StatName::Pdes) != stat(phi(p), StatName::Pdes)) ++counterexamples;
    }
    CHECK(counterexamples > 0);
}

TEST_CASE("psi on the worked pair") {
    CHECK(psi(Permutation::parse("869743251")).steps == "DDRDDRRRDDRDRDRRDR");
    CHECK(psi_inv(DyckPath("DDRDDRRRDDRDRDRRDR")) == Permutation::parse("869743251"));
    CHECK(psi(Permutation({1})).steps == "DR");
    CHECK(psi(Permutation({3, 2, 1})).steps == "DRDRDR");
    CHECK(psi_inv(DyckPath("DRDRDR")) == Permutation({3, 2, 1}));
    CHECK_THROWS_AS(psi(Permutation({1, 2, 3})), std::domain_error);
}

TEST_CASE("psi round trip") {
    for (int n = 0; n <= 7; ++n) {
        for (const Word& w : avoiding_permutations(n, Permutation({1, 2, 3}))) {
            Permutation sigma(w);
            REQUIRE(psi_inv(psi(sigma)) == sigma);
        }
    }
}

TEST_CASE("lift") {
    CHECK(lift(DyckPath("DR")).steps == "DDRR");
    Permutation sigma({8, 6, 9, 7, 4, 3, 2, 5, 1});
    Permutation lifted = lift_perm(sigma);
    CHECK(lifted == Permutation({8, 6, 10, 9, 4, 3, 2, 7, 1, 5}));

    auto ds = des_set(sigma.letters);
    auto dl = des_set(lifted.letters);
    std::vector<int> ds8(ds.begin(), ds.end()), dl8;
    for (int d : dl) {
        if (d <= 8) dl8.push_back(d);
    }
    CHECK(ds8 == dl8);

    for (int n = 1; n <= 6; ++n) {
        for (const Word& w : avoiding_permutations(n, Permutation({1, 2, 3}))) {
            Permutation s(w);
            REQUIRE(peaks(lift_perm(s)) == peaks(s));
        }
    }
}

TEST_CASE("tree on the worked example") {
    PlaneTree t = to_tree(OrderedSetPartition::parse("45/2/13"));
    CHECK(t.str() == "(()(()())(()()()))");
    CHECK(from_tree(t).str() == "45/2/13");
    CHECK(to_tree(OrderedSetPartition::parse("1")).str() == "(()())");
    CHECK(to_tree(OrderedSetPartition{}).str() == "()");
    CHECK_THROWS_AS(to_tree(OrderedSetPartition::parse("13/2")), std::domain_error);  // word 132
    CHECK_THROWS_AS(from_tree(PlaneTree::parse("((()))")), std::domain_error);
}

TEST_CASE("tree round trip and counts") {
    for (int n = 0; n <= 6; ++n) {
        std::set<std::string> trees;
        auto fam = gen_word_avoiding(n, Permutation({1, 3, 2}));
        for (const auto& p : fam) {
            PlaneTree t = to_tree(p);
            REQUIRE(from_tree(t) == p);
            REQUIRE(t.leaf_count() == n + 1);
            REQUIRE(t.internal_count() == p.block_count());
            if (n >= 1) {
                REQUIRE(static_cast<int>(t.children.size()) ==
                        static_cast<int>(p.blocks().back().size()) + 1);
            }
            trees.insert(t.str());
        }
        REQUIRE(trees.size() == fam.size());
    }
}

TEST_CASE("adjacent size swap") {
    CHECK(swap_adjacent_sizes_123(OrderedSetPartition::parse("3/12"), 0).str() == "13/2");
    CHECK(swap_adjacent_sizes_123(OrderedSetPartition::parse("2/13"), 0).str() == "23/1");
    CHECK(swap_adjacent_sizes_123(OrderedSetPartition::parse("45/3/12"), 1).str() == "45/13/2");
    CHECK(swap_adjacent_sizes_123(OrderedSetPartition::parse("1/2"), 0).str() == "1/2");
    CHECK_THROWS_AS(swap_adjacent_sizes_123(OrderedSetPartition::parse("12/3"), 0),
                    std::domain_error);  // word 123
    CHECK_THROWS_AS(swap_adjacent_sizes_123(OrderedSetPartition::parse("2/1"), 5),
                    std::domain_error);
}

TEST_CASE("swap is an involution and preserves avoidance") {
    Permutation p123({1, 2, 3});
    for (int n = 2; n <= 6; ++n) {
        for (const auto& p : gen_word_avoiding(n, p123)) {
            for (int i = 0; i + 1 < p.block_count(); ++i) {
                OrderedSetPartition img = swap_adjacent_sizes_123(p, i);
                REQUIRE(word_avoids(img, p123));
                REQUIRE(swap_adjacent_sizes_123(img, i) == p);
            }
        }
    }
}
