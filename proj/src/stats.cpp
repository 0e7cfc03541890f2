#include "osp/stats.hpp"

#include <json.hpp>

namespace osp {

StatName stat_from_string(std::string_view name) {
    if (name == "des") return StatName::Des;
    if (name == "pdes") return StatName::Pdes;
    if (name == "mindes") return StatName::Mindes;
    if (name == "maxdes") return StatName::Maxdes;
    throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

std::string stat_to_string(StatName s) {
    switch (s) {
        case StatName::Des: return "des";
        case StatName::Pdes: return "pdes";
        case StatName::Mindes: return "mindes";
        case StatName::Maxdes: return "maxdes";
    }
    return "?";
}

AllStats all_stats(const OrderedSetPartition& pi) {
    AllStats r;
    for (int i = 0; i + 1 < pi.block_count(); ++i) {
        if (pi.block_max(i) > pi.block_min(i + 1)) ++r.des;
        if (pi.block_min(i) > pi.block_max(i + 1)) ++r.pdes;
        if (pi.block_min(i) > pi.block_min(i + 1)) ++r.mindes;
        if (pi.block_max(i) > pi.block_max(i + 1)) ++r.maxdes;
    }
    return r;
}

int stat(const OrderedSetPartition& pi, StatName s) {
    AllStats a = all_stats(pi);
    switch (s) {
        case StatName::Des: return a.des;
        case StatName::Pdes: return a.pdes;
        case StatName::Mindes: return a.mindes;
        case StatName::Maxdes: return a.maxdes;
    }
    return 0;
}

std::vector<int> des_set(const Word& w) {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

Int DistributionPolynomial::total() const {
    Int t = 0;
    for (const auto& [key, c] : cells) t += c;
    return t;
}

void DistributionPolynomial::add(int k, int d, const Int& c) {
    Int& slot = cells[{k, d}];
    slot += c;
    if (slot == 0) cells.erase({k, d});
}

void DistributionPolynomial::merge(const DistributionPolynomial& other) {
    for (const auto& [key, c] : other.cells) add(key.first, key.second, c);
}

std::string DistributionPolynomial::str() const {
    if (cells.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : cells) {
        auto [k, d] = key;
        if (!out.empty()) out += " + ";
        if (c != 1 || (k == 0 && d == 0)) out += c.str();
        if (k > 0) out += "x" + (k > 1 ? "^" + std::to_string(k) : "");
        if (d > 0) out += "y" + (d > 1 ? "^" + std::to_string(d) : "");
    }
    return out;
}

DistributionPolynomial distribution(const std::vector<OrderedSetPartition>& family, StatName s) {
    DistributionPolynomial d;
    for (const auto& pi : family) {
        d.add(pi.block_count(), stat(pi, s));
    }
    return d;
}

std::string distribution_json(const DistributionPolynomial& d, int n,
                              const std::string& pattern, StatName s) {
    nlohmann::json j;
    j["n"] = n;
    j["pattern"] = pattern;
    j["stat"] = stat_to_string(s);
    j["cells"] = nlohmann::json::array();
    for (const auto& [key, c] : d.cells) {
        j["cells"].push_back({{"k", key.first}, {"d", key.second}, {"count", c.str()}});
    }
    return j.dump();
}

}  // namespace osp
