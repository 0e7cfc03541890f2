#pragma once

#include "osp/core.hpp"

namespace osp {

// Block-order reversal, element-wise complement i -> n+1-i, and their composite.
OrderedSetPartition reverse(const OrderedSetPartition& pi);
OrderedSetPartition complement(const OrderedSetPartition& pi);
OrderedSetPartition reverse_complement(const OrderedSetPartition& pi);

// Size-, Des-, mindes- and position-of-1-preserving bijection from the
// 312-word-avoiding partitions onto the 213-word-avoiding ones. Recursive on
// the position of the letter 1 in the word. Throws std::domain_error if the
// input word contains 312.
OrderedSetPartition phi(const OrderedSetPartition& pi);

// 123-avoiding permutations <-> Dyck paths on the n x n board: the path hugs
// the south-west boundary of the cells weakly north-east of a plotted point.
DyckPath psi(const Permutation& sigma);
Permutation psi_inv(const DyckPath& path);

// lift(P) = D P R; on permutations, conjugate by psi.
DyckPath lift(const DyckPath& path);
Permutation lift_perm(const Permutation& sigma);

// Values at the path's outer corners (the left-to-right minima of sigma).
std::vector<int> peaks(const Permutation& sigma);

// 132-word-avoiding partitions <-> plane trees with no outdegree-1 node.
// The last block of size r becomes a root of outdegree r+1.
PlaneTree to_tree(const OrderedSetPartition& pi);
OrderedSetPartition from_tree(const PlaneTree& tree);

// Exchange of two adjacent block sizes {1,2} inside a 123-word-avoiding
// partition (identity when the sizes are equal). `i` is 0-based.
OrderedSetPartition swap_adjacent_sizes_123(const OrderedSetPartition& pi, int i);

}  // namespace osp
