#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "osp/core.hpp"

namespace osp {

using OspVisitor = std::function<void(const OrderedSetPartition&)>;
using WordVisitor = std::function<void(const Word&)>;

// Visit every ordered set partition of [n] (unspecified order).
void for_each_osp(int n, const OspVisitor& visit);

// Visit every permutation of [n] whose word avoids alpha.
void for_each_avoiding_permutation(int n, const Permutation& alpha, const WordVisitor& visit);

// Visit every member of WOP_n(alpha): each avoiding word, then every slash
// placement whose blocks are ascending runs (slashes mandatory at descents,
// optional at ascents).
void for_each_word_avoiding(int n, const Permutation& alpha, const OspVisitor& visit);

// Visit every member of the family described by the spec.
void for_each_by_spec(const BlockSizeSpec& spec, const OspVisitor& visit);

// Materialized, in the deterministic contract order: block count ascending,
// then lexicographic on the canonical text form.
std::vector<OrderedSetPartition> gen_all(int n);
std::vector<OrderedSetPartition> gen_by_spec(const BlockSizeSpec& spec);
std::vector<OrderedSetPartition> gen_word_avoiding(
    int n, const Permutation& alpha, const std::optional<BlockSizeSpec>& spec = std::nullopt);

std::vector<Word> avoiding_permutations(int n, const Permutation& alpha);

// Sorts into the contract order (in place).
void sort_family(std::vector<OrderedSetPartition>& family);

bool matches_spec(const OrderedSetPartition& pi, const BlockSizeSpec& spec);

}  // namespace osp
