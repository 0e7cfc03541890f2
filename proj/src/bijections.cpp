#include "osp/bijections.hpp"

#include <algorithm>

#include "osp/patterns.hpp"

namespace osp {

namespace {

std::vector<std::vector<int>> shifted(const std::vector<std::vector<int>>& blocks, int delta) {
    std::vector<std::vector<int>> out = blocks;
    for (auto& b : out) {
        for (int& v : b) v += delta;
    }
    return out;
}

const Permutation& pat312() {
    static const Permutation p(Word{3, 1, 2});
    return p;
}

}  // namespace

OrderedSetPartition reverse(const OrderedSetPartition& pi) {
    std::vector<std::vector<int>> blocks(pi.blocks().rbegin(), pi.blocks().rend());
    return OrderedSetPartition(std::move(blocks));
}

OrderedSetPartition complement(const OrderedSetPartition& pi) {
    int n = pi.size();
    std::vector<std::vector<int>> blocks = pi.blocks();
    for (auto& b : blocks) {
        for (int& v : b) v = n + 1 - v;
    }
    return OrderedSetPartition(std::move(blocks));
}

OrderedSetPartition reverse_complement(const OrderedSetPartition& pi) {
    return reverse(complement(pi));
}

OrderedSetPartition phi(const OrderedSetPartition& pi) {
    int n = pi.size();
    if (n <= 2) {
        if (!word_avoids(pi, pat312())) throw std::domain_error("phi: input word contains 312");
        return pi;
    }
    if (!word_avoids(pi, pat312())) throw std::domain_error("phi: input word contains 312");

    const auto& blocks = pi.blocks();
    Word w = pi.word();
    int r = static_cast<int>(std::find(w.begin(), w.end(), 1) - w.begin()) + 1;

    if (r == 1) {
        if (blocks[0].size() == 1) {
            // 1/B_2/.../B_k: peel 1 and recurse on the reduction.
            std::vector<std::vector<int>> rest(blocks.begin() + 1, blocks.end());
            OrderedSetPartition img = phi(OrderedSetPartition(shifted(rest, -1)));
            std::vector<std::vector<int>> out = shifted(img.blocks(), 1);
            out.insert(out.begin(), {1});
            return OrderedSetPartition(std::move(out));
        }
        // 1 shares B_1: remove it, recurse, reinsert into the first block.
        std::vector<std::vector<int>> rest = blocks;
        rest[0].erase(rest[0].begin());
        OrderedSetPartition img = phi(OrderedSetPartition(shifted(rest, -1)));
        std::vector<std::vector<int>> out = shifted(img.blocks(), 1);
        out[0].insert(out[0].begin(), 1);
        return OrderedSetPartition(std::move(out));
    }

    // 1 is the first element of block j (0-based); the blocks before it must
    // cover exactly {2,...,r} because the word avoids 312.
    int j = 0;
    while (blocks[j][0] != 1) ++j;
    int head_size = 0;
    for (int b = 0; b < j; ++b) head_size += static_cast<int>(blocks[b].size());
    if (head_size != r - 1) throw std::domain_error("phi: malformed input");
    for (int b = 0; b < j; ++b) {
        for (int v : blocks[b]) {
            if (v < 2 || v > r) {
                throw std::domain_error("phi: leading blocks straddle the value split");
            }
        }
    }

    std::vector<std::vector<int>> head(blocks.begin(), blocks.begin() + j);
    std::vector<std::vector<int>> tail(blocks.begin() + j, blocks.end());
    for (auto& b : tail) {
        for (int& v : b) {
            if (v != 1) v -= r - 1;
        }
    }
    OrderedSetPartition head_img = phi(OrderedSetPartition(shifted(head, -1)));
    OrderedSetPartition tail_img = phi(OrderedSetPartition(std::move(tail)));

    std::vector<std::vector<int>> out = shifted(head_img.blocks(), n - r + 1);
    for (const auto& b : tail_img.blocks()) out.push_back(b);
    return OrderedSetPartition(std::move(out));
}

DyckPath psi(const Permutation& sigma) {
    if (word_occurs(sigma.letters, Permutation(Word{1, 2, 3}))) {
        throw std::domain_error("psi: permutation contains 123");
    }
    int n = sigma.size();
    std::string steps;
    steps.reserve(2 * n);
    int prev = n;  // current height of the path's bottom edge
    int m = n + 1;
    for (int c = 0; c < n; ++c) {
        m = std::min(m, sigma.letters[c]);
        int bottom = m - 1;
        steps.append(prev - bottom, 'D');
        steps.push_back('R');
        prev = bottom;
    }
    return DyckPath(std::move(steps));
}

Permutation psi_inv(const DyckPath& path) {
    int n = path.semilength();
    std::vector<int> value_at_col(n + 1, 0);
    std::vector<bool> row_used(n + 1, false);
    int x = 0, y = n;
    const std::string& s = path.steps;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'D') {
            --y;
            if (i + 1 < s.size() && s[i + 1] == 'R') {
                value_at_col[x + 1] = y + 1;  // outer corner
                row_used[y + 1] = true;
            }
        } else {
            ++x;
        }
    }
    // Pair the i-th empty column (left to right) with the i-th empty row
    // (top to bottom).
    std::vector<int> free_rows;
    for (int r = n; r >= 1; --r) {
        if (!row_used[r]) free_rows.push_back(r);
    }
    size_t next = 0;
    Word out;
    out.reserve(n);
    for (int c = 1; c <= n; ++c) {
        if (value_at_col[c] == 0) value_at_col[c] = free_rows[next++];
        out.push_back(value_at_col[c]);
    }
    return Permutation(std::move(out));
}

DyckPath lift(const DyckPath& path) {
    return DyckPath("D" + path.steps + "R");
}

Permutation lift_perm(const Permutation& sigma) {
    return psi_inv(lift(psi(sigma)));
}

std::vector<int> peaks(const Permutation& sigma) {
    std::vector<int> out;
    int m = sigma.size() + 1;
    for (int v : sigma.letters) {
        if (v < m) {
            out.push_back(v);
            m = v;
        }
    }
    return out;
}

PlaneTree to_tree(const OrderedSetPartition& pi) {
    if (!word_avoids(pi, Permutation(Word{1, 3, 2}))) {
        throw std::domain_error("to_tree: input word contains 132");
    }
    int n = pi.size();
    if (n == 0) return PlaneTree{};

    const auto& blocks = pi.blocks();
    const auto& last = blocks.back();
    int r = static_cast<int>(last.size());
    std::vector<int> bounds;
    bounds.push_back(0);
    bounds.insert(bounds.end(), last.begin(), last.end());
    bounds.push_back(n + 1);

    // Slot each earlier block into the value interval (a_{i-1}, a_i) it
    // occupies; a block straddling two intervals cannot happen for a
    // 132-avoiding word.
    std::vector<std::vector<std::vector<int>>> groups(r + 1);
    std::vector<int> group_of_block;
    for (size_t b = 0; b + 1 < blocks.size(); ++b) {
        int v0 = blocks[b][0];
        int g = static_cast<int>(std::upper_bound(bounds.begin(), bounds.end(), v0) - bounds.begin()) - 1;
        for (int v : blocks[b]) {
            if (!(bounds[g] < v && v < bounds[g + 1])) {
                throw std::domain_error("to_tree: block straddles the last-block value gaps");
            }
        }
        groups[g].push_back(blocks[b]);
        group_of_block.push_back(g);
    }
    // Blocks must appear grouped as A_{r+1}, A_r, ..., A_1.
    for (size_t b = 0; b + 1 < group_of_block.size(); ++b) {
        if (group_of_block[b] < group_of_block[b + 1]) {
            throw std::domain_error("to_tree: interval blocks out of order");
        }
    }

    PlaneTree root;
    for (int g = 0; g <= r; ++g) {
        // Reduce the group to a partition of its own size.
        std::vector<int> vals;
        for (const auto& b : groups[g]) vals.insert(vals.end(), b.begin(), b.end());
        std::sort(vals.begin(), vals.end());
        std::vector<std::vector<int>> sub = groups[g];
        for (auto& b : sub) {
            for (int& v : b) {
                v = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin()) + 1;
            }
        }
        root.children.push_back(to_tree(OrderedSetPartition(std::move(sub))));
    }
    return root;
}

OrderedSetPartition from_tree(const PlaneTree& tree) {
    if (tree.has_outdegree_one()) {
        throw std::domain_error("from_tree: tree has an outdegree-1 node");
    }
    if (tree.is_leaf()) return OrderedSetPartition{};

    int r = static_cast<int>(tree.children.size()) - 1;
    std::vector<OrderedSetPartition> subs;
    std::vector<int> sizes;
    for (const auto& ch : tree.children) {
        subs.push_back(from_tree(ch));
        sizes.push_back(subs.back().size());
    }
    // a_i = i + n_1 + ... + n_i for the last block
    std::vector<int> last;
    int acc = 0;
    for (int i = 1; i <= r; ++i) {
        acc += sizes[i - 1];
        last.push_back(acc + i);
    }
    std::vector<std::vector<int>> out;
    for (int g = r; g >= 0; --g) {
        int offset = (g == 0) ? 0 : last[g - 1];
        for (const auto& b : subs[g].blocks()) {
            std::vector<int> nb = b;
            for (int& v : nb) v += offset;
            out.push_back(std::move(nb));
        }
    }
    out.push_back(last);
    return OrderedSetPartition(std::move(out));
}

OrderedSetPartition swap_adjacent_sizes_123(const OrderedSetPartition& pi, int i) {
    if (i < 0 || i + 1 >= pi.block_count()) throw std::domain_error("swap: position out of range");
    if (!word_avoids(pi, Permutation(Word{1, 2, 3}))) {
        throw std::domain_error("swap: input word contains 123");
    }
    const auto& b1 = pi.block(i);
    const auto& b2 = pi.block(i + 1);
    if (b1.size() == b2.size()) {
        if (b1.size() > 2) throw std::domain_error("swap: block sizes not in {1,2}");
        return pi;
    }
    if (b1.size() + b2.size() != 3) throw std::domain_error("swap: block sizes not in {1,2}");

    std::vector<int> vals = b1;
    vals.insert(vals.end(), b2.begin(), b2.end());
    std::sort(vals.begin(), vals.end());
    int a1 = vals[0], a2 = vals[1], a3 = vals[2];

    std::vector<std::vector<int>> nb;
    if (b1.size() == 1) {
        // a3/a1a2 -> a1a3/a2 ; a2/a1a3 -> a2a3/a1
        if (b1[0] == a3) {
            nb = {{a1, a3}, {a2}};
        } else if (b1[0] == a2) {
            nb = {{a2, a3}, {a1}};
        } else {
            throw std::domain_error("swap: filling not 123-avoiding");
        }
    } else {
        // a1a3/a2 -> a3/a1a2 ; a2a3/a1 -> a2/a1a3
        if (b1 == std::vector<int>{a1, a3}) {
            nb = {{a3}, {a1, a2}};
        } else if (b1 == std::vector<int>{a2, a3}) {
            nb = {{a2}, {a1, a3}};
        } else {
            throw std::domain_error("swap: filling not 123-avoiding");
        }
    }
    std::vector<std::vector<int>> blocks = pi.blocks();
    blocks[i] = nb[0];
    blocks[i + 1] = nb[1];
    return OrderedSetPartition(std::move(blocks));
}

}  // namespace osp
