#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osp/enumerate.hpp"
#include "osp/stats.hpp"

using namespace osp;

TEST_CASE("statistic values") {
    // word 57134268 has descents after 7 and after 4
    OrderedSetPartition d = OrderedSetPartition::parse("57/134/268");
    AllStats a = all_stats(d);
    CHECK(a.des == 2);
    CHECK(a.pdes == 1);
    CHECK(a.mindes == 1);
    CHECK(a.maxdes == 1);

    OrderedSetPartition dec = OrderedSetPartition::parse("3/2/1");
    AllStats b = all_stats(dec);
    CHECK(b.des == 2);
    CHECK(b.pdes == 2);
    CHECK(b.mindes == 2);
    CHECK(b.maxdes == 2);

    OrderedSetPartition one({{1, 2, 3, 4}});
    AllStats c = all_stats(one);
    CHECK(c.des == 0);
    CHECK(c.pdes == 0);
    CHECK(c.mindes == 0);
    CHECK(c.maxdes == 0);
}

TEST_CASE("des counts word descents") {
    for (int n = 0; n <= 6; ++n) {
        for_each_osp(n, [&](const OrderedSetPartition& pi) {
            REQUIRE(stat(pi, StatName::Des) == static_cast<int>(des_set(pi.word()).size()));
        });
    }
}

TEST_CASE("descent set positions") {
    CHECK(des_set({3, 2, 4, 1, 5}) == std::vector<int>{1, 3});
    CHECK(des_set({1, 2, 3}).empty());
    CHECK(des_set({5, 3, 4, 1, 2}) == std::vector<int>{1, 3});
}

TEST_CASE("distributions") {
    SUBCASE("des over the 2-block 132-word-avoiders of [3]") {
        auto fam = gen_word_avoiding(3, Permutation({1, 3, 2}), BlockSizeSpec{SizeBound{3, 2}});
        DistributionPolynomial d = distribution(fam, StatName::Des);
        DistributionPolynomial want;
        want.add(2, 0, 2);
        want.add(2, 1, 3);
        CHECK(d == want);
    }
    SUBCASE("mindes over the 2-block 213-word-avoiders of [3]") {
        auto fam = gen_word_avoiding(3, Permutation({2, 1, 3}), BlockSizeSpec{SizeBound{3, 2}});
        DistributionPolynomial d = distribution(fam, StatName::Mindes);
        DistributionPolynomial want;
        want.add(2, 0, 3);
        want.add(2, 1, 2);
        CHECK(d == want);
    }
    SUBCASE("des over the singleton-block 132-word-avoiders of [3]") {
        auto fam = gen_word_avoiding(3, Permutation({1, 3, 2}), BlockSizeSpec{SizeBound{3, 3}});
        DistributionPolynomial d = distribution(fam, StatName::Des);
        DistributionPolynomial want;
        want.add(3, 0, 1);
        want.add(3, 1, 3);
        want.add(3, 2, 1);
        CHECK(d == want);
    }
}

TEST_CASE("statistics stay below the block count") {
    for (int n = 0; n <= 5; ++n) {
        for_each_osp(n, [&](const OrderedSetPartition& pi) {
            AllStats a = all_stats(pi);
            int bound = std::max(0, pi.block_count() - 1);
            REQUIRE(a.des <= bound);
            REQUIRE(a.pdes <= bound);
            REQUIRE(a.mindes <= bound);
            REQUIRE(a.maxdes <= bound);
            REQUIRE(a.pdes <= a.mindes);  // all-greater implies min-greater
            REQUIRE(a.pdes <= a.maxdes);
        });
    }
}

TEST_CASE("merge is cell-wise") {
    DistributionPolynomial a, b;
    a.add(1, 0, 2);
    b.add(1, 0, 3);
    b.add(2, 1, 1);
    a.merge(b);
    CHECK(a.total() == 6);
    CHECK(a.cells.at({1, 0}) == 5);
}

TEST_CASE("histogram JSON") {
    DistributionPolynomial d;
    d.add(2, 1, 3);
    std::string js = distribution_json(d, 3, "132", StatName::Des);
    CHECK(js.find("\"n\":3") != std::string::npos);
    CHECK(js.find("\"pattern\":\"132\"") != std::string::npos);
    CHECK(js.find("\"stat\":\"des\"") != std::string::npos);
    CHECK(js.find("\"count\":\"3\"") != std::string::npos);
}
