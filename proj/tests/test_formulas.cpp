#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osp/enumerate.hpp"
#include "osp/formulas.hpp"
#include "osp/stats.hpp"

using namespace osp;

namespace {

YPoly brute_stat_poly(int n, int k, const char* pattern, StatName s) {
    YPoly h;
    for (const auto& p : gen_word_avoiding(n, Permutation::parse(pattern),
                                           BlockSizeSpec{SizeBound{n, k}})) {
        ++h[stat(p, s)];
    }
    return h;
}

}  // namespace

TEST_CASE("length-2 pattern count") {
    CHECK(wop_nk_21(3, 2) == 2);
    CHECK(wop_nk_21(7, 1) == 1);
    CHECK(wop_nk_21(5, 3) == 6);
}

TEST_CASE("132 count") {
    CHECK(wop_nk_132(3, 3) == 5);
    CHECK(wop_nk_132(1, 1) == 1);
    CHECK(wop_nk_132(4, 2) == 9);
}

TEST_CASE("132 descent polynomial") {
    CHECK(despoly_nk_132(3, 2) == YPoly{{0, 2}, {1, 3}});
    CHECK(despoly_nk_132(3, 3) == YPoly{{0, 1}, {1, 3}, {2, 1}});
    CHECK(despoly_nk_132(6, 1) == YPoly{{0, 1}});
}

TEST_CASE("132 formulas match enumeration") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            YPoly brute = brute_stat_poly(n, k, "132", StatName::Des);
            REQUIRE(despoly_nk_132(n, k) == brute);
            REQUIRE(wop_nk_132(n, k) == ypoly_at_one(brute));
        }
    }
}

TEST_CASE("multiset 132 formulas") {
    Multiset m12;
    m12.parts = {{1, 1}, {2, 1}};
    CHECK(wop_multiset_132(m12) == 5);
    CHECK(despoly_multiset_132(m12) == YPoly{{0, 2}, {1, 3}});

    Multiset single;
    single.parts = {{4, 1}};
    CHECK(wop_multiset_132(single) == 1);

    Multiset ones;
    ones.parts = {{1, 3}};
    CHECK(wop_multiset_132(ones) == wop_nk_132(3, 3));

    Multiset bad;
    bad.parts = {{2, 1}, {2, 1}};
    CHECK_THROWS_AS(wop_multiset_132(bad), std::invalid_argument);
}

TEST_CASE("multiset 132 matches enumeration") {
    // every multiset of block sizes with n <= 6
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::pair<int, int>> parts;
        std::function<void(int, int)> rec = [&](int rem, int mx) {
            if (rem == 0) {
                Multiset ms;
                ms.parts = parts;
                std::sort(ms.parts.begin(), ms.parts.end());
                YPoly h;
                for (const auto& p :
                     gen_word_avoiding(n, Permutation({1, 3, 2}), BlockSizeSpec{ms})) {
                    ++h[stat(p, StatName::Des)];
                }
                REQUIRE(despoly_multiset_132(ms) == h);
                return;
            }
            for (int b = std::min(rem, mx); b >= 1; --b) {
                for (int m = 1; m * b <= rem; ++m) {
                    parts.push_back({b, m});
                    rec(rem - m * b, b - 1);
                    parts.pop_back();
                }
            }
        };
        rec(n, n);
    }
}

TEST_CASE("123 counts") {
    CHECK(wop_nk_123(3, 2) == 4);
    CHECK(wop_nk_123(4, 2) == 2);
    CHECK(wop_nk_123(7, 3) == 0);  // needs n <= 2k
    CHECK(wop_multiset_123(2, 1) == wop_nk_123(4, 3));
    CHECK(wop_composition_123(Composition{{1, 2}}) == 2);
    CHECK(wop_composition_123(Composition{{2, 1}}) == 2);
    CHECK(wop_composition_123(Composition{{1, 1, 1}}) == 5);
    CHECK(wop_composition_123(Composition{{3, 1}}) == 0);
}

TEST_CASE("123 count matches enumeration") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            REQUIRE(wop_nk_123(n, k) ==
                    Int(gen_word_avoiding(n, Permutation({1, 2, 3}), BlockSizeSpec{SizeBound{n, k}})
                            .size()));
        }
    }
}

TEST_CASE("three-block and (n-1)-block specials") {
    CHECK(op_n3_123(3) == 5);
    CHECK(op_n3_123(4) == 27);
    CHECK(op_n3_123(5) == 99);
    CHECK(op_n_nm1_123(3) == 6);
    CHECK(op_n_nm1_123(2) == 1);
    for (int n = 3; n <= 6; ++n) {
        Int brute3 = 0, brutem = 0;
        for (const auto& p : gen_word_avoiding(n, Permutation({3, 2, 1}))) {
            if (p.block_count() == 3) ++brute3;
            if (p.block_count() == n - 1) ++brutem;
        }
        REQUIRE(op_n3_123(n) == brute3);
        REQUIRE(op_n_nm1_123(n) == brutem);
    }
}

TEST_CASE("213 min-descent polynomial") {
    CHECK(mindespoly_nk_213(3, 2) == YPoly{{0, 3}, {1, 2}});
    CHECK(mindespoly_nk_213(5, 1) == YPoly{{0, 1}});
    CHECK(mindespoly_nk_213(3, 3) == YPoly{{0, 1}, {1, 3}, {2, 1}});
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            REQUIRE(mindespoly_nk_213(n, k) == brute_stat_poly(n, k, "213", StatName::Mindes));
            REQUIRE(ypoly_at_one(mindespoly_nk_213(n, k)) == wop_nk_132(n, k));
        }
    }
}

TEST_CASE("narayana") {
    CHECK(narayana(3, 2) == 3);
    CHECK(narayana(6, 1) == 1);
    CHECK(narayana(4, 2) == 6);
    // row sums are Catalan
    for (int n = 1; n <= 8; ++n) {
        Int row = 0;
        for (int k = 1; k <= n; ++k) row += narayana(n, k);
        REQUIRE(row == catalan(n));
    }
}

TEST_CASE("ypoly printing") {
    CHECK(ypoly_str(YPoly{{0, 2}, {1, 3}}) == "2 + 3y");
    CHECK(ypoly_str(YPoly{}) == "0");
    CHECK(ypoly_str(YPoly{{2, 1}}) == "y^2");
}
