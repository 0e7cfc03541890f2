#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osp/core.hpp"
#include "osp/numeric.hpp"

using namespace osp;

TEST_CASE("reduce") {
    CHECK(reduce({4, 5, 9, 2}).letters == Word{2, 3, 4, 1});
    CHECK(reduce({7}).letters == Word{1});
    CHECK(reduce({5, 1, 8}).letters == Word{2, 1, 3});
    CHECK_THROWS_AS(reduce({3, 3}), std::invalid_argument);
}

TEST_CASE("reduce is idempotent on permutations") {
    // all words over {1..6} of length 4 with distinct letters
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int c = 1; c <= 6; ++c)
                for (int d = 1; d <= 6; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    Word w{a, b, c, d};
                    Permutation r = reduce(w);
                    CHECK(reduce(r.letters) == r);
                }
}

TEST_CASE("word of a partition") {
    OrderedSetPartition pi = OrderedSetPartition::parse("57/134/268");
    CHECK(pi.word() == Word{5, 7, 1, 3, 4, 2, 6, 8});
    CHECK(OrderedSetPartition({{1, 2, 3}}).word() == Word{1, 2, 3});
    CHECK(OrderedSetPartition::parse("3/2/1").word() == Word{3, 2, 1});
}

TEST_CASE("decreasing-block word") {
    CHECK(OrderedSetPartition::parse("13/2").word_decreasing() == Word{3, 1, 2});
    CHECK(OrderedSetPartition({{1, 2}}).word_decreasing() == Word{2, 1});
    CHECK(OrderedSetPartition::parse("57/134/268").word_decreasing() ==
          Word{7, 5, 4, 3, 1, 8, 6, 2});
}

TEST_CASE("validation") {
    OrderedSetPartition ok({{5, 7}, {1, 3, 4}, {2, 6, 8}});
    CHECK(ok.size() == 8);
    CHECK(ok.block_count() == 3);
    CHECK_THROWS_AS(OrderedSetPartition({{1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedSetPartition({{2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedSetPartition({{1}, {}}), std::invalid_argument);
    // canonical storage sorts block contents
    CHECK(OrderedSetPartition({{7, 5}, {4, 1, 3}, {8, 6, 2}}) == ok);
}

TEST_CASE("words use the same letters") {
    OrderedSetPartition pi = OrderedSetPartition::parse("57/134/268");
    Word a = pi.word(), b = pi.word_decreasing();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(a == Word{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("text form") {
    CHECK(OrderedSetPartition::parse("57/134/268").str() == "57/134/268");
    OrderedSetPartition big({{1, 10}, {2, 3}, {4, 5, 6, 7, 8, 9}});
    CHECK(big.str() == "1,10/2,3/4,5,6,7,8,9");
    CHECK(OrderedSetPartition::parse(big.str()) == big);
    CHECK(OrderedSetPartition::parse("").size() == 0);
    CHECK(OrderedSetPartition{}.str() == "");
    CHECK_THROWS_AS(OrderedSetPartition::parse("1/0"), std::invalid_argument);
}

TEST_CASE("permutation text") {
    CHECK(Permutation::parse("132").letters == Word{1, 3, 2});
    CHECK(Permutation({10, 1, 2, 3, 4, 5, 6, 7, 8, 9}).str() == "10,1,2,3,4,5,6,7,8,9");
    CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").letters ==
          Word{10, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
}

TEST_CASE("dyck path validation and returns") {
    CHECK_THROWS_AS(DyckPath("RD"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath("DDR"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath("DX"), std::invalid_argument);
    DyckPath p("DDRDDRRRDDRDRDRRDR");
    CHECK(p.semilength() == 9);
    CHECK(p.return_positions() == std::vector<int>{4, 8});
    CHECK(DyckPath("DR").return_positions().empty());
    CHECK(DyckPath("").semilength() == 0);
}

TEST_CASE("plane tree") {
    PlaneTree t = PlaneTree::parse("(()(()())(()()()))");
    CHECK(t.leaf_count() == 6);
    CHECK(t.internal_count() == 3);
    CHECK(!t.has_outdegree_one());
    CHECK(t.str() == "(()(()())(()()()))");
    CHECK(PlaneTree::parse("((()))").has_outdegree_one());
    CHECK(PlaneTree{}.is_leaf());
    CHECK_THROWS_AS(PlaneTree::parse("(()"), std::invalid_argument);
}

TEST_CASE("exact arithmetic helpers") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(0, 1) == 0);
    CHECK(binomial(2, 3) == 0);  // C(v-1, v) with v >= 1
    CHECK(multinomial(4, {1, 1, 2}) == 12);
    CHECK(catalan(3) == 5);
    CHECK_THROWS_AS(exact_div(Int(5), Int(2)), std::domain_error);
    CHECK(to_string(Rat(3, 6)) == "1/2");
}
