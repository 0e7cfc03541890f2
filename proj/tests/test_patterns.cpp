#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "osp/enumerate.hpp"
#include "osp/patterns.hpp"

using namespace osp;

namespace {

// independent oracle: test every subsequence
bool occurs_naive(const Word& w, const Word& alpha) {
    size_t j = alpha.size(), n = w.size();
    if (j > n) return false;
    std::vector<size_t> idx(j);
    std::function<bool(size_t, size_t)> rec = [&](size_t ai, size_t start) {
        if (ai == j) {
            Word sub;
            for (size_t i : idx) sub.push_back(w[i]);
            return reduce(sub).letters == alpha;
        }
        for (size_t i = start; i < n; ++i) {
            idx[ai] = i;
            if (rec(ai + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

const std::vector<Word> kPatterns3 = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                      {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};

}  // namespace

TEST_CASE("word occurrence examples") {
    CHECK(word_occurs({5, 7, 1, 3, 4, 2, 6, 8}, Permutation({1, 2, 3})));
    CHECK(!word_occurs({3, 2, 1}, Permutation({1, 2, 3})));
    CHECK(word_occurs({1}, Permutation({1})));
    CHECK(!word_avoids(OrderedSetPartition::parse("57/134/268"), Permutation({1, 2, 3})));
    // letters 1,3,4,6 form an increasing subsequence of length four
    CHECK(!word_avoids(OrderedSetPartition::parse("57/134/268"), Permutation({1, 2, 3, 4})));
    CHECK(word_avoids(OrderedSetPartition::parse("57/134/268"), Permutation({4, 3, 2, 1})));
    CHECK(word_avoids(OrderedSetPartition{}, Permutation({2, 1})));
}

TEST_CASE("fast testers agree with the subsequence oracle") {
    for (int n = 0; n <= 7; ++n) {
        Word p(n);
        for (int i = 0; i < n; ++i) p[i] = i + 1;
        do {
            for (const Word& a : kPatterns3) {
                CAPTURE(p);
                CAPTURE(a);
                REQUIRE(word_occurs(p, Permutation(a)) == occurs_naive(p, a));
            }
            REQUIRE(word_occurs(p, Permutation({1, 2})) == occurs_naive(p, {1, 2}));
            REQUIRE(word_occurs(p, Permutation({2, 1})) == occurs_naive(p, {2, 1}));
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST_CASE("fast testers on words with gaps in the letter set") {
    Word w{9, 2, 14, 5, 11};
    for (const Word& a : kPatterns3) {
        CHECK(word_occurs(w, Permutation(a)) == occurs_naive(w, a));
    }
}

TEST_CASE("distinct-blocks occurrence") {
    OrderedSetPartition d = OrderedSetPartition::parse("57/134/268");
    CHECK(gghp_occurs(d, Permutation({2, 1, 3})));
    CHECK(!gghp_occurs(d, Permutation({1, 2, 3})));
    OrderedSetPartition one({{1, 2, 3, 4}});
    CHECK(!gghp_occurs(one, Permutation({1, 2})));
    CHECK(!gghp_occurs(one, Permutation({2, 1, 3})));
}

TEST_CASE("321 word-avoidance equals distinct-blocks avoidance") {
    Permutation p321({3, 2, 1});
    for (int n = 0; n <= 7; ++n) {
        for_each_osp(n, [&](const OrderedSetPartition& pi) {
            REQUIRE(word_avoids(pi, p321) == gghp_avoids(pi, p321));
        });
    }
}

TEST_CASE("word avoidance implies distinct-blocks avoidance") {
    for (int n = 0; n <= 6; ++n) {
        for_each_osp(n, [&](const OrderedSetPartition& pi) {
            for (const Word& a : kPatterns3) {
                Permutation alpha(a);
                if (word_avoids(pi, alpha)) REQUIRE(gghp_avoids(pi, alpha));
            }
        });
    }
}

TEST_CASE("occurrence is monotone under extension") {
    Word p{1, 2, 3, 4, 5, 6};
    do {
        for (const Word& a : kPatterns3) {
            Permutation alpha(a);
            bool prefix_occurs = false;
            for (size_t len = 1; len <= p.size(); ++len) {
                Word pre(p.begin(), p.begin() + len);
                bool now = word_occurs(pre, alpha);
                if (prefix_occurs) REQUIRE(now);
                prefix_occurs = now;
            }
        }
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("witness extraction") {
    // smallest index tuple: (1,2,8) picks letters 5,7,8
    auto w = find_word_occurrence({5, 7, 1, 3, 4, 2, 6, 8}, Permutation({1, 2, 3}));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{1, 2, 8});
    CHECK(!find_word_occurrence({3, 2, 1}, Permutation({1, 2, 3})).has_value());
    auto v = find_word_occurrence({2, 1, 3}, Permutation({2, 1, 3}));
    REQUIRE(v.has_value());
    CHECK(*v == std::vector<int>{1, 2, 3});
}
