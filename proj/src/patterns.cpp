#include "osp/patterns.hpp"

#include <algorithm>
#include <limits>

namespace osp {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Increasing subsequence of length 2 / decreasing of length 2.
bool has_rise(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] < w[i + 1]) return true;  // adjacent suffices: any rise implies an adjacent one
    }
    return false;
}

bool has_descent(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) return true;
    }
    return false;
}

// Exists i<j<k with w_i < w_j < w_k.
bool has_incr3(const Word& w) {
    int lo = kInf;          // min so far
    int mid = kInf;         // smallest middle value with a smaller element before it
    for (int v : w) {
        if (v > mid) return true;
        if (v > lo) mid = std::min(mid, v);
        lo = std::min(lo, v);
    }
    return false;
}

// Exists i<j<k with w_i < w_k < w_j (pattern 132). Right-to-left stack scan.
bool has_132(const Word& w) {
    std::vector<int> stack;
    int third = 0;  // largest value popped; 0 = none (letters are positive)
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int v = *it;
        if (third != 0 && v < third) return true;
        while (!stack.empty() && stack.back() < v) {
            third = std::max(third, stack.back());
            stack.pop_back();
        }
        stack.push_back(v);
    }
    return false;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

// Order-complement: i-th smallest letter becomes i-th largest rank.
Word complemented(const Word& w) {
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    int m = static_cast<int>(w.size());
    Word out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w[i]) - sorted.begin());
        out[i] = m - rank;
    }
    return out;
}

// Generic subsequence test, used for |alpha| >= 4.
bool occurs_generic(const Word& w, const Word& alpha, size_t ai, size_t wi,
                    std::vector<int>& chosen) {
    if (ai == alpha.size()) return true;
    for (size_t i = wi; i + (alpha.size() - ai) <= w.size(); ++i) {
        bool ok = true;
        for (size_t j = 0; j < ai && ok; ++j) {
            bool want = alpha[j] < alpha[ai];
            bool have = chosen[j] < w[i];
            if (want != have) ok = false;
        }
        if (!ok) continue;
        chosen.push_back(w[i]);
        if (occurs_generic(w, alpha, ai + 1, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool word_occurs(const Word& w, const Permutation& alpha) {
    const Word& a = alpha.letters;
    if (a.empty()) throw std::invalid_argument("empty pattern");
    if (w.size() < a.size()) return false;
    if (a.size() == 1) return !w.empty();
    if (a.size() == 2) return a[0] == 1 ? has_rise(w) : has_descent(w);
    if (a.size() == 3) {
        if (a == Word{1, 2, 3}) return has_incr3(w);
        if (a == Word{3, 2, 1}) return has_incr3(reversed(w));
        if (a == Word{1, 3, 2}) return has_132(w);
        if (a == Word{2, 3, 1}) return has_132(reversed(w));
        if (a == Word{3, 1, 2}) return has_132(complemented(w));
        // 213 = reverse of 312 = reverse of complement of 132
        return has_132(reversed(complemented(w)));
    }
    std::vector<int> chosen;
    return occurs_generic(w, a, 0, 0, chosen);
}

bool word_avoids(const OrderedSetPartition& pi, const Permutation& alpha) {
    return !word_occurs(pi.word(), alpha);
}

namespace {

bool gghp_search(const OrderedSetPartition& pi, const Word& alpha, size_t ai,
                 int block, std::vector<int>& chosen) {
    if (ai == alpha.size()) return true;
    int k = pi.block_count();
    int remaining = static_cast<int>(alpha.size() - ai);
    for (int b = block; b <= k - remaining; ++b) {
        for (int v : pi.block(b)) {
            bool ok = true;
            for (size_t j = 0; j < ai && ok; ++j) {
                if ((alpha[j] < alpha[ai]) != (chosen[j] < v)) ok = false;
            }
            if (!ok) continue;
            chosen.push_back(v);
            if (gghp_search(pi, alpha, ai + 1, b + 1, chosen)) return true;
            chosen.pop_back();
        }
    }
    return false;
}

}  // namespace

bool gghp_occurs(const OrderedSetPartition& pi, const Permutation& alpha) {
    if (alpha.letters.empty()) throw std::invalid_argument("empty pattern");
    if (pi.block_count() < alpha.size()) return false;
    std::vector<int> chosen;
    return gghp_search(pi, alpha.letters, 0, 0, chosen);
}

bool gghp_avoids(const OrderedSetPartition& pi, const Permutation& alpha) {
    return !gghp_occurs(pi, alpha);
}

namespace {

bool witness_search(const Word& w, const Word& alpha, size_t ai, size_t wi,
                    std::vector<int>& idx) {
    if (ai == alpha.size()) return true;
    for (size_t i = wi; i + (alpha.size() - ai) <= w.size(); ++i) {
        bool ok = true;
        for (size_t j = 0; j < ai && ok; ++j) {
            if ((alpha[j] < alpha[ai]) != (w[idx[j] - 1] < w[i])) ok = false;
        }
        if (!ok) continue;
        idx.push_back(static_cast<int>(i) + 1);
        if (witness_search(w, alpha, ai + 1, i + 1, idx)) return true;
        idx.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_word_occurrence(const Word& w, const Permutation& alpha) {
    std::vector<int> idx;
    if (witness_search(w, alpha.letters, 0, 0, idx)) return idx;
    return std::nullopt;
}

}  // namespace osp
