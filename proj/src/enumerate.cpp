#include "osp/enumerate.hpp"

#include <algorithm>

#include "osp/patterns.hpp"

namespace osp {

namespace {

// Extend a partial word letter by letter, pruning as soon as the prefix
// contains the pattern (occurrence is monotone under extension).
void extend_avoiding(int n, const Permutation& alpha, Word& prefix,
                     std::vector<bool>& used, const WordVisitor& visit) {
    if (static_cast<int>(prefix.size()) == n) {
        visit(prefix);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        prefix.push_back(v);
        if (!word_occurs(prefix, alpha)) {
            used[v] = true;
            extend_avoiding(n, alpha, prefix, used, visit);
            used[v] = false;
        }
        prefix.pop_back();
    }
}

void emit_slashings(const Word& w, const OspVisitor& visit) {
    int n = static_cast<int>(w.size());
    if (n == 0) {
        visit(OrderedSetPartition{});
        return;
    }
    std::vector<int> ascents;
    for (int i = 0; i + 1 < n; ++i) {
        if (w[i] < w[i + 1]) ascents.push_back(i);
    }
    int a = static_cast<int>(ascents.size());
    for (unsigned long mask = 0; mask < (1ul << a); ++mask) {
        std::vector<bool> cut(n, false);
        for (int i = 0; i + 1 < n; ++i) {
            if (w[i] > w[i + 1]) cut[i] = true;
        }
        for (int j = 0; j < a; ++j) {
            if (mask & (1ul << j)) cut[ascents[j]] = true;
        }
        std::vector<std::vector<int>> blocks(1);
        for (int i = 0; i < n; ++i) {
            blocks.back().push_back(w[i]);
            if (i + 1 < n && cut[i]) blocks.emplace_back();
        }
        visit(OrderedSetPartition(std::move(blocks)));
    }
}

// Insert elements 1..n one at a time; element `next` joins an existing block
// or opens a singleton block at any position. Restricting a final partition
// to {1,...,i} recovers each step, so every partition appears exactly once.
void osp_backtrack(int n, std::vector<std::vector<int>>& blocks,
                   int next, const OspVisitor& visit) {
    if (next > n) {
        visit(OrderedSetPartition(blocks));  // copy: ctor re-validates
        return;
    }
    // index-based: recursion below resizes the vector
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        blocks[bi].push_back(next);
        osp_backtrack(n, blocks, next + 1, visit);
        blocks[bi].pop_back();
    }
    for (size_t p = 0; p <= blocks.size(); ++p) {
        blocks.insert(blocks.begin() + p, std::vector<int>{next});
        osp_backtrack(n, blocks, next + 1, visit);
        blocks.erase(blocks.begin() + p);
    }
}

void choose_blocks_for_composition(const std::vector<int>& sizes, size_t bi,
                                   std::vector<int>& pool,
                                   std::vector<std::vector<int>>& acc,
                                   const OspVisitor& visit) {
    if (bi == sizes.size()) {
        visit(OrderedSetPartition(acc));
        return;
    }
    int need = sizes[bi];
    // choose `need` elements of pool (which is kept sorted)
    std::vector<int> idx(need);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == need) {
            std::vector<int> blk, rest;
            std::vector<bool> take(pool.size(), false);
            for (int j = 0; j < need; ++j) take[idx[j]] = true;
            for (size_t p = 0; p < pool.size(); ++p) {
                (take[p] ? blk : rest).push_back(pool[p]);
            }
            acc.push_back(blk);
            std::vector<int> saved = pool;
            pool = rest;
            choose_blocks_for_composition(sizes, bi + 1, pool, acc, visit);
            pool = saved;
            acc.pop_back();
            return;
        }
        for (int i = start; i <= static_cast<int>(pool.size()) - (need - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

void for_each_osp(int n, const OspVisitor& visit) {
    if (n < 0) throw std::invalid_argument("negative n");
    if (n == 0) {
        visit(OrderedSetPartition{});
        return;
    }
    std::vector<std::vector<int>> blocks;
    osp_backtrack(n, blocks, 1, visit);
}

void for_each_avoiding_permutation(int n, const Permutation& alpha, const WordVisitor& visit) {
    if (n < 0) throw std::invalid_argument("negative n");
    Word prefix;
    std::vector<bool> used(n + 1, false);
    extend_avoiding(n, alpha, prefix, used, visit);
}

void for_each_word_avoiding(int n, const Permutation& alpha, const OspVisitor& visit) {
    if (n < 0) throw std::invalid_argument("negative n");
    if (n == 0) {
        visit(OrderedSetPartition{});
        return;
    }
    for_each_avoiding_permutation(n, alpha, [&](const Word& w) { emit_slashings(w, visit); });
}

std::vector<Word> avoiding_permutations(int n, const Permutation& alpha) {
    std::vector<Word> out;
    for_each_avoiding_permutation(n, alpha, [&](const Word& w) { out.push_back(w); });
    return out;
}

void sort_family(std::vector<OrderedSetPartition>& family) {
    // precompute the text keys; formatting inside the comparator is quadratic
    std::vector<std::pair<std::pair<int, std::string>, size_t>> keys;
    keys.reserve(family.size());
    for (size_t i = 0; i < family.size(); ++i) {
        keys.push_back({{family[i].block_count(), family[i].str()}, i});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<OrderedSetPartition> out;
    out.reserve(family.size());
    for (const auto& [key, i] : keys) out.push_back(std::move(family[i]));
    family = std::move(out);
}

std::vector<OrderedSetPartition> gen_all(int n) {
    std::vector<OrderedSetPartition> out;
    for_each_osp(n, [&](const OrderedSetPartition& p) { out.push_back(p); });
    sort_family(out);
    return out;
}

bool matches_spec(const OrderedSetPartition& pi, const BlockSizeSpec& spec) {
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Composition>) {
                if (pi.block_count() != static_cast<int>(s.sizes.size())) return false;
                for (int i = 0; i < pi.block_count(); ++i) {
                    if (static_cast<int>(pi.block(i).size()) != s.sizes[i]) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, Multiset>) {
                if (pi.size() != spec_size(BlockSizeSpec{s})) return false;
                std::vector<int> have, want;
                for (int i = 0; i < pi.block_count(); ++i) have.push_back(static_cast<int>(pi.block(i).size()));
                for (auto [b, m] : s.parts) want.insert(want.end(), m, b);
                std::sort(have.begin(), have.end());
                std::sort(want.begin(), want.end());
                return have == want;
            } else if constexpr (std::is_same_v<T, SizeBound>) {
                return pi.size() == s.n && pi.block_count() == s.k;
            } else {
                return pi.size() == s.n;
            }
        },
        spec);
}

void for_each_by_spec(const BlockSizeSpec& spec, const OspVisitor& visit) {
    validate_spec(spec);
    int n = spec_size(spec);
    if (const auto* comp = std::get_if<Composition>(&spec)) {
        // direct construction: choose each block's contents in order
        if (n == 0) {
            visit(OrderedSetPartition{});
            return;
        }
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i + 1;
        std::vector<std::vector<int>> acc;
        choose_blocks_for_composition(comp->sizes, 0, pool, acc, visit);
        return;
    }
    for_each_osp(n, [&](const OrderedSetPartition& p) {
        if (matches_spec(p, spec)) visit(p);
    });
}

std::vector<OrderedSetPartition> gen_by_spec(const BlockSizeSpec& spec) {
    std::vector<OrderedSetPartition> out;
    for_each_by_spec(spec, [&](const OrderedSetPartition& p) { out.push_back(p); });
    sort_family(out);
    return out;
}

std::vector<OrderedSetPartition> gen_word_avoiding(int n, const Permutation& alpha,
                                                   const std::optional<BlockSizeSpec>& spec) {
    std::vector<OrderedSetPartition> out;
    for_each_word_avoiding(n, alpha, [&](const OrderedSetPartition& p) {
        if (!spec || matches_spec(p, *spec)) out.push_back(p);
    });
    sort_family(out);
    return out;
}

}  // namespace osp
