#include "osp/core.hpp"

#include <algorithm>
#include <charconv>

namespace osp {

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(sep, pos);
        if (end == std::string_view::npos) end = text.size();
        int v = 0;
        auto piece = text.substr(pos, end - pos);
        auto res = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (res.ec != std::errc{} || res.ptr != piece.data() + piece.size()) {
            throw std::invalid_argument("bad integer in '" + std::string(text) + "'");
        }
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

// One block: "134" digit-per-element, or "1,10,12" comma form.
std::vector<int> parse_block(std::string_view text) {
    if (text.find(',') != std::string_view::npos) return parse_int_list(text, ',');
    std::vector<int> out;
    for (char c : text) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad digit in block '" + std::string(text) + "'");
        out.push_back(c - '0');
    }
    return out;
}

std::string format_letters(const std::vector<int>& vals, bool commas) {
    std::string out;
    for (size_t i = 0; i < vals.size(); ++i) {
        if (commas && i) out += ',';
        out += std::to_string(vals[i]);
    }
    return out;
}

}  // namespace

Permutation::Permutation(Word w) : letters(std::move(w)) {
    int m = static_cast<int>(letters.size());
    std::vector<bool> seen(m + 1, false);
    for (int v : letters) {
        if (v < 1 || v > m || seen[v]) {
            throw std::invalid_argument("not a permutation of [" + std::to_string(m) + "]");
        }
        seen[v] = true;
    }
}

std::string Permutation::str() const {
    bool commas = size() >= 10;
    return format_letters(letters, commas);
}

Permutation Permutation::parse(std::string_view text) {
    return Permutation(parse_block(text));
}

Permutation reduce(const Word& w) {
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("reduce: duplicate letters");
    }
    Word out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w[i]) - sorted.begin()) + 1;
    }
    return Permutation(std::move(out));
}

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    int n = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("empty block");
        std::sort(b.begin(), b.end());
        n += static_cast<int>(b.size());
    }
    std::vector<bool> seen(n + 1, false);
    for (const auto& b : blocks_) {
        for (int v : b) {
            if (v < 1 || v > n) {
                throw std::invalid_argument("union is not {1,...,n}: element " + std::to_string(v));
            }
            if (seen[v]) throw std::invalid_argument("duplicate element " + std::to_string(v));
            seen[v] = true;
        }
    }
    n_ = n;
}

Word OrderedSetPartition::word() const {
    Word w;
    w.reserve(n_);
    for (const auto& b : blocks_) w.insert(w.end(), b.begin(), b.end());
    return w;
}

Word OrderedSetPartition::word_decreasing() const {
    Word w;
    w.reserve(n_);
    for (const auto& b : blocks_) w.insert(w.end(), b.rbegin(), b.rend());
    return w;
}

std::string OrderedSetPartition::str() const {
    bool commas = n_ >= 10;
    std::string out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += '/';
        out += format_letters(blocks_[i], commas);
    }
    return out;
}

OrderedSetPartition OrderedSetPartition::parse(std::string_view text) {
    if (text.empty()) return OrderedSetPartition{};
    std::vector<std::vector<int>> blocks;
    size_t pos = 0;
    while (true) {
        size_t end = text.find('/', pos);
        if (end == std::string_view::npos) {
            blocks.push_back(parse_block(text.substr(pos)));
            break;
        }
        blocks.push_back(parse_block(text.substr(pos, end - pos)));
        pos = end + 1;
    }
    return OrderedSetPartition(std::move(blocks));
}

DyckPath::DyckPath(std::string s) : steps(std::move(s)) {
    int depth = 0;
    for (char c : steps) {
        if (c == 'D') {
            ++depth;
        } else if (c == 'R') {
            --depth;
            if (depth < 0) throw std::invalid_argument("path rises above the antidiagonal");
        } else {
            throw std::invalid_argument(std::string("bad step '") + c + "'");
        }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced D/R counts");
}

std::vector<int> DyckPath::return_positions() const {
    std::vector<int> out;
    int n = semilength();
    int x = 0, y = n;
    for (char c : steps) {
        if (c == 'D') --y; else ++x;
        if (x + y == n && x >= 1 && x <= n - 1) out.push_back(x);
    }
    return out;
}

int PlaneTree::leaf_count() const {
    if (is_leaf()) return 1;
    int c = 0;
    for (const auto& ch : children) c += ch.leaf_count();
    return c;
}

int PlaneTree::internal_count() const {
    if (is_leaf()) return 0;
    int c = 1;
    for (const auto& ch : children) c += ch.internal_count();
    return c;
}

bool PlaneTree::has_outdegree_one() const {
    if (children.size() == 1) return true;
    for (const auto& ch : children) {
        if (ch.has_outdegree_one()) return true;
    }
    return false;
}

std::string PlaneTree::str() const {
    std::string out = "(";
    for (const auto& ch : children) out += ch.str();
    return out + ")";
}

namespace {
PlaneTree parse_tree(std::string_view text, size_t& pos) {
    if (pos >= text.size() || text[pos] != '(') throw std::invalid_argument("expected '('");
    ++pos;
    PlaneTree t;
    while (pos < text.size() && text[pos] == '(') {
        t.children.push_back(parse_tree(text, pos));
    }
    if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("expected ')'");
    ++pos;
    return t;
}
}  // namespace

PlaneTree PlaneTree::parse(std::string_view text) {
    size_t pos = 0;
    PlaneTree t = parse_tree(text, pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters after tree");
    return t;
}

int spec_size(const BlockSizeSpec& spec) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Composition>) {
                int n = 0;
                for (int b : s.sizes) n += b;
                return n;
            } else if constexpr (std::is_same_v<T, Multiset>) {
                int n = 0;
                for (auto [b, m] : s.parts) n += b * m;
                return n;
            } else if constexpr (std::is_same_v<T, SizeBound>) {
                return s.n;
            } else {
                return s.n;
            }
        },
        spec);
}

void validate_spec(const BlockSizeSpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Composition>) {
                for (int b : s.sizes) {
                    if (b < 1) throw std::invalid_argument("composition sizes must be >= 1");
                }
            } else if constexpr (std::is_same_v<T, Multiset>) {
                int prev = 0;
                for (auto [b, m] : s.parts) {
                    if (b <= prev) throw std::invalid_argument("multiset base sizes must be strictly increasing");
                    if (m < 0) throw std::invalid_argument("multiset counts must be nonnegative");
                    prev = b;
                }
            } else if constexpr (std::is_same_v<T, SizeBound>) {
                if (s.n < 0 || s.k < 0) throw std::invalid_argument("negative size bound");
            } else {
                if (s.n < 0) throw std::invalid_argument("negative size");
            }
        },
        spec);
}

}  // namespace osp
