#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace osp {

// A word is a sequence of distinct positive integers.
using Word = std::vector<int>;

// Permutation of {1,...,m} stored as its one-line word.
struct Permutation {
    Word letters;

    Permutation() = default;
    explicit Permutation(Word w);  // validates

    int size() const { return static_cast<int>(letters.size()); }
    bool operator==(const Permutation&) const = default;

    std::string str() const;
    static Permutation parse(std::string_view text);
};

// Replace the i-th smallest letter of w by i.
Permutation reduce(const Word& w);

// Ordered set partition of [n]: ordered blocks, each stored ascending.
class OrderedSetPartition {
public:
    OrderedSetPartition() = default;   // the empty partition (n = 0)

    // Canonicalizes (sorts each block) and validates: nonempty disjoint blocks
    // whose union is exactly {1,...,n}. Throws std::invalid_argument otherwise.
    explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_[i]; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int size() const { return n_; }

    int block_min(int i) const { return blocks_[i].front(); }
    int block_max(int i) const { return blocks_[i].back(); }

    Word word() const;              // blocks ascending, slashes removed
    Word word_decreasing() const;   // each block written descending

    // "57/134/268"; comma-separated elements iff n >= 10 ("1,10/2,3").
    std::string str() const;
    static OrderedSetPartition parse(std::string_view text);

    bool operator==(const OrderedSetPartition&) const = default;
    bool operator<(const OrderedSetPartition& o) const {
        return blocks_ < o.blocks_;
    }

private:
    std::vector<std::vector<int>> blocks_;
    int n_ = 0;
};

// Lattice path from (0,n) to (n,0) over steps D (down) and R (right) staying
// weakly below the antidiagonal: every prefix has #D >= #R.
struct DyckPath {
    std::string steps;

    DyckPath() = default;
    explicit DyckPath(std::string s);  // validates

    int semilength() const { return static_cast<int>(steps.size()) / 2; }

    // Interior antidiagonal touch points i (path passes through (i, n-i)).
    std::vector<int> return_positions() const;

    bool operator==(const DyckPath&) const = default;
};

// Rooted plane tree; a leaf has no children.
struct PlaneTree {
    std::vector<PlaneTree> children;

    bool is_leaf() const { return children.empty(); }
    int leaf_count() const;
    int internal_count() const;
    bool has_outdegree_one() const;

    std::string str() const;  // balanced parentheses, leaf = "()"
    static PlaneTree parse(std::string_view text);

    bool operator==(const PlaneTree&) const = default;
};

// Families of ordered set partitions selected by block sizes.
struct Composition {
    std::vector<int> sizes;  // ordered, each >= 1
};
struct Multiset {
    // (base size, multiplicity) with strictly increasing base sizes.
    std::vector<std::pair<int, int>> parts;
};
struct SizeBound {
    int n = 0, k = 0;
};
struct SizeOnly {
    int n = 0;
};
using BlockSizeSpec = std::variant<Composition, Multiset, SizeBound, SizeOnly>;

// Total element count the spec describes (n).
int spec_size(const BlockSizeSpec& spec);
void validate_spec(const BlockSizeSpec& spec);

}  // namespace osp
