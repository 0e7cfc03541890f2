#pragma once

#include <optional>
#include <vector>

#include "osp/core.hpp"

namespace osp {

// Classical occurrence: some subsequence of w reduces to alpha.
bool word_occurs(const Word& w, const Permutation& alpha);

bool word_avoids(const OrderedSetPartition& pi, const Permutation& alpha);

// Occurrence with letters drawn from distinct blocks in increasing block order.
bool gghp_occurs(const OrderedSetPartition& pi, const Permutation& alpha);
bool gghp_avoids(const OrderedSetPartition& pi, const Permutation& alpha);

// Lexicographically smallest witness index tuple (1-based), if any.
std::optional<std::vector<int>> find_word_occurrence(const Word& w, const Permutation& alpha);

}  // namespace osp
