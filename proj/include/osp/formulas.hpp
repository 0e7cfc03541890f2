#pragma once

#include <map>

#include "osp/core.hpp"
#include "osp/numeric.hpp"

namespace osp {

// Polynomial in y with integer coefficients, degree -> coefficient, sparse.
using YPoly = std::map<int, Int>;

Int ypoly_at_one(const YPoly& p);
std::string ypoly_str(const YPoly& p);

// Counts of word-avoiding ordered set partitions of [n] with k blocks.
Int wop_nk_21(int n, int k);    // C(n-1, k-1)
Int wop_nk_132(int n, int k);   // (1/k) C(n-1,k-1) C(n+k,k-1)
Int wop_nk_123(int n, int k);   // (1/(k+1)) C(2k,k) C(k,n-k); 0 outside k<=n<=2k

// Joint distribution of the word-descent number over the k-block
// 132-word-avoiding partitions of [n].
YPoly despoly_nk_132(int n, int k);

// Multiset refinements: distinct base sizes b_1<...<b_s with multiplicities.
Int wop_multiset_132(const Multiset& sizes);
YPoly despoly_multiset_132(const Multiset& sizes);

// alpha1 singleton blocks and alpha2 blocks of size 2.
Int wop_multiset_123(int alpha1, int alpha2);

// C_k for any composition into {1,2}-sizes; 0 if some size is outside {1,2}.
Int wop_composition_123(const Composition& comp);

// Three-block and (n-1)-block counts of the pattern-avoiding partitions in
// the distinct-blocks (GGHP) sense; equal to wop_{n,k}(321) at those k.
Int op_n3_123(int n);
Int op_n_nm1_123(int n);

// Min-descent distribution over the k-block 213-word-avoiding partitions:
// double sum with the (y-1)^{k-a} kernel, divided exactly by k*y.
YPoly mindespoly_nk_213(int n, int k);

Int narayana(int n, int k);  // (1/k) C(n,k-1) C(n-1,k-1)

}  // namespace osp
