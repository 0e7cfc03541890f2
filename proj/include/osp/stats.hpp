#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "osp/core.hpp"
#include "osp/numeric.hpp"

namespace osp {

enum class StatName { Des, Pdes, Mindes, Maxdes };

StatName stat_from_string(std::string_view name);
std::string stat_to_string(StatName s);

// des: descents of the word; pdes: min(B_i) > max(B_{i+1});
// mindes: min(B_i) > min(B_{i+1}); maxdes: max(B_i) > max(B_{i+1}).
int stat(const OrderedSetPartition& pi, StatName s);

struct AllStats {
    int des = 0, pdes = 0, mindes = 0, maxdes = 0;
};
AllStats all_stats(const OrderedSetPartition& pi);  // one pass over block summaries

// 1-based descent positions of a word.
std::vector<int> des_set(const Word& w);

// Sparse joint (block count, statistic value) histogram.
struct DistributionPolynomial {
    std::map<std::pair<int, int>, Int> cells;  // (k, d) -> count
    Int total() const;
    void add(int k, int d, const Int& c = 1);
    void merge(const DistributionPolynomial& other);  // cell-wise sum
    bool operator==(const DistributionPolynomial&) const = default;
    std::string str() const;  // human-readable polynomial in x (blocks), y (stat)
};

DistributionPolynomial distribution(const std::vector<OrderedSetPartition>& family, StatName s);

// {"n":..., "pattern":..., "stat":..., "cells":[{"k":..,"d":..,"count":"..."}]}
std::string distribution_json(const DistributionPolynomial& d, int n,
                              const std::string& pattern, StatName s);

}  // namespace osp
