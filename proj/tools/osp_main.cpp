#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>

#include "osp/bijections.hpp"
#include "osp/enumerate.hpp"
#include "osp/formulas.hpp"
#include "osp/patterns.hpp"
#include "osp/stats.hpp"
#include "osp/systems.hpp"
#include "osp/verify.hpp"

namespace {

using namespace osp;

std::optional<BlockSizeSpec> parse_spec_flags(const std::string& composition,
                                              const std::string& multiset, int n, int k) {
    if (!composition.empty()) {
        Composition c;
        size_t pos = 0;
        while (pos < composition.size()) {
            size_t end = composition.find(',', pos);
            if (end == std::string::npos) end = composition.size();
            c.sizes.push_back(std::stoi(composition.substr(pos, end - pos)));
            pos = end + 1;
        }
        return BlockSizeSpec{c};
    }
    if (!multiset.empty()) {
        // "1:2,2:1" means two size-1 blocks and one size-2 block
        Multiset m;
        size_t pos = 0;
        while (pos < multiset.size()) {
            size_t end = multiset.find(',', pos);
            if (end == std::string::npos) end = multiset.size();
            std::string piece = multiset.substr(pos, end - pos);
            size_t colon = piece.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("multiset wants size:count pairs");
            m.parts.push_back({std::stoi(piece.substr(0, colon)), std::stoi(piece.substr(colon + 1))});
            pos = end + 1;
        }
        return BlockSizeSpec{m};
    }
    if (k > 0) return BlockSizeSpec{SizeBound{n, k}};
    return std::nullopt;
}

// Formula column for patterns with a known product form, if any.
std::optional<Int> formula_count(const std::string& pattern, int n, int k) {
    if (pattern == "21") return wop_nk_21(n, k);
    if (pattern == "12") return Int(k == n ? 1 : 0);
    if (pattern == "132" || pattern == "213" || pattern == "231" || pattern == "312") {
        return wop_nk_132(n, k);
    }
    if (pattern == "123") return wop_nk_123(n, k);
    return std::nullopt;
}

int cmd_count(const std::string& pattern, int n, const std::string& composition,
              const std::string& multiset, int k, const std::string& notion,
              const std::string& format) {
    Permutation alpha = Permutation::parse(pattern);
    auto spec = parse_spec_flags(composition, multiset, n, k);
    if (spec) n = spec_size(*spec);

    std::map<int, Int> byk;
    if (notion == "word") {
        for_each_word_avoiding(n, alpha, [&](const OrderedSetPartition& p) {
            if (!spec || matches_spec(p, *spec)) ++byk[p.block_count()];
        });
    } else if (notion == "gghp") {
        for_each_osp(n, [&](const OrderedSetPartition& p) {
            if ((!spec || matches_spec(p, *spec)) && gghp_avoids(p, alpha)) ++byk[p.block_count()];
        });
    } else {
        throw std::invalid_argument("notion must be word or gghp");
    }

    std::vector<int> kvalues;
    if (!spec) {
        for (int kk = 1; kk <= n; ++kk) kvalues.push_back(kk);
    } else if (const auto* c = std::get_if<Composition>(&*spec)) {
        kvalues.push_back(static_cast<int>(c->sizes.size()));
    } else if (const auto* m = std::get_if<Multiset>(&*spec)) {
        int kk = 0;
        for (auto [b, mult] : m->parts) kk += mult;
        kvalues.push_back(kk);
    } else if (const auto* sb = std::get_if<SizeBound>(&*spec)) {
        kvalues.push_back(sb->k);
    } else {
        for (int kk = 1; kk <= n; ++kk) kvalues.push_back(kk);
    }

    bool mismatch = false;
    nlohmann::json rows = nlohmann::json::array();
    std::string csv = "n,k,count,formula\n";
    std::string table;
    for (int kk : kvalues) {
        Int brute = byk.count(kk) ? byk[kk] : Int(0);
        std::optional<Int> formula;
        if (notion == "word") {
            if (!spec || std::holds_alternative<SizeBound>(*spec)) {
                formula = formula_count(pattern, n, kk);
            } else if (std::holds_alternative<Composition>(*spec) && pattern == "123") {
                formula = wop_composition_123(std::get<Composition>(*spec));
            } else if (std::holds_alternative<Multiset>(*spec)) {
                const auto& m = std::get<Multiset>(*spec);
                if (pattern == "132" || pattern == "213" || pattern == "231" ||
                    pattern == "312") {
                    formula = wop_multiset_132(m);
                } else if (pattern == "123") {
                    int a1 = 0, a2 = 0;
                    bool small = true;
                    for (auto [b, mult] : m.parts) {
                        if (b == 1) a1 = mult;
                        else if (b == 2) a2 = mult;
                        else if (mult > 0) small = false;
                    }
                    formula = small ? wop_multiset_123(a1, a2) : Int(0);
                }
            }
        }
        if (formula && *formula != brute) mismatch = true;
        nlohmann::json row = {{"n", n}, {"k", kk}, {"count", brute.str()}};
        if (formula) row["formula"] = formula->str();
        rows.push_back(row);
        csv += std::to_string(n) + "," + std::to_string(kk) + "," + brute.str() + "," +
               (formula ? formula->str() : "") + "\n";
        table += "n=" + std::to_string(n) + " k=" + std::to_string(kk) + " count=" + brute.str() +
                 (formula ? " formula=" + formula->str() : "") + "\n";
    }
    if (format == "json") {
        std::cout << rows.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << csv;
    } else {
        std::cout << table;
    }
    if (mismatch) {
        std::cerr << "count: formula/brute-force mismatch\n";
        return 2;
    }
    return 0;
}

int cmd_stats(const std::string& pattern, int n, const std::string& statname,
              const std::string& composition, const std::string& multiset, int k) {
    Permutation alpha = Permutation::parse(pattern);
    StatName s = stat_from_string(statname);
    auto spec = parse_spec_flags(composition, multiset, n, k);
    if (spec) n = spec_size(*spec);
    DistributionPolynomial d;
    for_each_word_avoiding(n, alpha, [&](const OrderedSetPartition& p) {
        if (!spec || matches_spec(p, *spec)) d.add(p.block_count(), stat(p, s));
    });
    std::cout << distribution_json(d, n, pattern, s) << "\n";
    return 0;
}

int cmd_bijection(const std::string& name, const std::string& input, int at) {
    if (name == "phi") {
        std::cout << phi(OrderedSetPartition::parse(input)).str() << "\n";
    } else if (name == "rc") {
        std::cout << reverse_complement(OrderedSetPartition::parse(input)).str() << "\n";
    } else if (name == "psi") {
        std::cout << psi(Permutation::parse(input)).steps << "\n";
    } else if (name == "psi-inv") {
        std::cout << psi_inv(DyckPath(input)).str() << "\n";
    } else if (name == "lift") {
        if (!input.empty() && (input[0] == 'D' || input[0] == 'R')) {
            std::cout << lift(DyckPath(input)).steps << "\n";
        } else {
            std::cout << lift_perm(Permutation::parse(input)).str() << "\n";
        }
    } else if (name == "tree") {
        if (!input.empty() && input[0] == '(') {
            std::cout << from_tree(PlaneTree::parse(input)).str() << "\n";
        } else {
            std::cout << to_tree(OrderedSetPartition::parse(input)).str() << "\n";
        }
    } else if (name == "swap123") {
        std::cout << swap_adjacent_sizes_123(OrderedSetPartition::parse(input), at - 1).str()
                  << "\n";
    } else {
        throw std::invalid_argument("unknown bijection '" + name + "'");
    }
    return 0;
}

int cmd_series(const std::string& name, int order, const std::string& coeff) {
    Series s = named_series(name, order);
    if (coeff.empty()) {
        std::cout << series_dump_json(s) << "\n";
        return 0;
    }
    // --coeff t=3,x=3,y=1,q1=0,q2=0
    int et = 0;
    Exponents m;
    size_t pos = 0;
    while (pos < coeff.size()) {
        size_t end = coeff.find(',', pos);
        if (end == std::string::npos) end = coeff.size();
        std::string piece = coeff.substr(pos, end - pos);
        size_t eq = piece.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("coeff wants var=exp pairs");
        std::string var = piece.substr(0, eq);
        int e = std::stoi(piece.substr(eq + 1));
        if (var == "t") et = e;
        else if (var == "x") m.e[kVarX] = e;
        else if (var == "y") m.e[kVarY] = e;
        else if (var == "q1") m.e[kVarQ1] = e;
        else if (var == "q2") m.e[kVarQ2] = e;
        else throw std::invalid_argument("unknown variable '" + var + "'");
        pos = end + 1;
    }
    if (et > order) throw std::invalid_argument("t exponent exceeds --N");
    std::cout << to_string(s.coeff(et).coeff(m)) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, int order, const std::string& format) {
    VerifyOptions opt;
    opt.max_n = max_n;
    opt.order = order;
    auto results = run_suite(suite, opt);
    if (format == "json") {
        std::cout << results_json(results) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
        }
    }
    int failures = count_failures(results);
    if (failures) std::cerr << failures << " check(s) failed\n";
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordered set partition word-pattern toolkit"};
    app.require_subcommand(1);

    std::string pattern, statname, composition, multiset, notion = "word", format = "table";
    std::string name, input, coeff, suite = "all";
    int n = 0, k = 0, at = 1, order = 7, max_n = 7;

    auto* count = app.add_subcommand("count", "count avoiders, with formula cross-checks");
    count->add_option("pattern", pattern)->required();
    count->add_option("--n", n);
    count->add_option("--k", k);
    count->add_option("--composition", composition, "block sizes, e.g. 1,2");
    count->add_option("--multiset", multiset, "size:count pairs, e.g. 1:2,2:1");
    count->add_option("--notion", notion)->check(CLI::IsMember({"word", "gghp"}));
    count->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* stats = app.add_subcommand("stats", "joint (blocks, statistic) histogram as JSON");
    stats->add_option("pattern", pattern)->required();
    stats->add_option("--n", n);
    stats->add_option("--k", k);
    stats->add_option("--stat", statname)->required()
        ->check(CLI::IsMember({"des", "pdes", "mindes", "maxdes"}));
    stats->add_option("--composition", composition);
    stats->add_option("--multiset", multiset);

    auto* bij = app.add_subcommand("bijection", "apply a named map to one input");
    bij->add_option("name", name)->required()
        ->check(CLI::IsMember({"phi", "rc", "psi", "psi-inv", "lift", "tree", "swap123"}));
    bij->add_option("input", input)->required();
    bij->add_option("--at", at, "1-based block position for swap123");

    auto* ser = app.add_subcommand("series", "dump a named series or one coefficient");
    ser->add_option("name", name)->required();
    ser->add_option("--N", order, "truncation order");
    ser->add_option("--coeff", coeff, "t=..,x=..,y=..,q1=..,q2=..");

    auto* ver = app.add_subcommand("verify", "run the verification harness");
    ver->add_option("suite", suite)->check(CLI::IsMember(osp::suite_names()));
    ver->add_option("--max-n", max_n);
    ver->add_option("--order", order);
    ver->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return cmd_count(pattern, n, composition, multiset, k, notion, format);
        if (stats->parsed()) return cmd_stats(pattern, n, statname, composition, multiset, k);
        if (bij->parsed()) return cmd_bijection(name, input, at);
        if (ser->parsed()) return cmd_series(name, order, coeff);
        if (ver->parsed()) return cmd_verify(suite, max_n, order, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
