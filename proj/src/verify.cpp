#include "osp/verify.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "osp/bijections.hpp"
#include "osp/enumerate.hpp"
#include "osp/formulas.hpp"
#include "osp/patterns.hpp"
#include "osp/stats.hpp"
#include "osp/systems.hpp"

namespace osp {

namespace {

Permutation pat(std::string_view digits) { return Permutation::parse(digits); }

using Hist = std::map<std::pair<int, int>, Int>;          // (k, stat) -> count
using HistQ = std::map<std::array<int, 4>, Int>;          // (k, stat, ones, twos)

Hist brute_hist(int n, const Permutation& alpha, StatName s) {
    Hist h;
    for_each_word_avoiding(n, alpha, [&](const OrderedSetPartition& p) {
        ++h[{p.block_count(), stat(p, s)}];
    });
    return h;
}

HistQ brute_hist_q(int n, const Permutation& alpha, StatName s) {
    HistQ h;
    for_each_word_avoiding(n, alpha, [&](const OrderedSetPartition& p) {
        int ones = 0, twos = 0;
        for (const auto& b : p.blocks()) {
            if (b.size() == 1) ++ones;
            if (b.size() == 2) ++twos;
        }
        ++h[{p.block_count(), stat(p, s), ones, twos}];
    });
    return h;
}

Int int_coeff(const Rat& c) {
    if (denominator(c) != 1) throw std::domain_error("expected integral coefficient");
    return Int(numerator(c));
}

Hist hist_from_poly(const Poly& p) {
    Hist h;
    for (const auto& [m, c] : p.terms()) {
        h[{m.e[kVarX], m.e[kVarY]}] = int_coeff(c);
    }
    return h;
}

HistQ hist_q_from_poly(const Poly& p) {
    HistQ h;
    for (const auto& [m, c] : p.terms()) {
        h[{m.e[kVarX], m.e[kVarY], m.e[kVarQ1], m.e[kVarQ2]}] = int_coeff(c);
    }
    return h;
}

std::string hist_str(const Hist& h) {
    std::string out = "{";
    for (const auto& [k, c] : h) {
        out += "(" + std::to_string(k.first) + "," + std::to_string(k.second) + "):" + c.str() + " ";
    }
    return out + "}";
}

CheckResult series_oracle_check(const std::string& name, const Series& s,
                                const Permutation& alpha, StatName st, int max_n) {
    for (int n = 0; n <= std::min(max_n, s.order()); ++n) {
        Hist brute = n == 0 ? Hist{{{0, 0}, 1}} : brute_hist(n, alpha, st);
        Hist got = hist_from_poly(s.coeff(n));
        if (brute != got) {
            return {name, false,
                    "n=" + std::to_string(n) + " brute=" + hist_str(brute) + " series=" + hist_str(got)};
        }
    }
    return {name, true, ""};
}

CheckResult series_oracle_check_q(const std::string& name, const Series& s,
                                  const Permutation& alpha, StatName st, int max_n) {
    for (int n = 0; n <= std::min(max_n, s.order()); ++n) {
        HistQ brute = n == 0 ? HistQ{{{0, 0, 0, 0}, 1}} : brute_hist_q(n, alpha, st);
        HistQ got = hist_q_from_poly(s.coeff(n));
        if (brute != got) {
            return {name, false, "q-refined histogram mismatch at n=" + std::to_string(n)};
        }
    }
    return {name, true, ""};
}

// ---- printed expansions (terms copied from the stated t^2..t^5 rows) ----

struct TermXY {
    int ex, ey;
    long long c;
};
Poly poly_xy(const std::vector<TermXY>& terms) {
    Poly p;
    for (auto [ex, ey, c] : terms) p += Poly::monomial(c, ex, ey);
    return p;
}
struct TermQ {
    int ex, ey, e1, e2;
    long long c;
};
Poly poly_q(const std::vector<TermQ>& terms) {
    Poly p;
    for (auto [ex, ey, e1, e2, c] : terms) p += Poly::monomial(c, ex, ey, e1, e2);
    return p;
}

// Min-descent 123 expansion rows (t^1..t^5).
std::vector<Poly> printed_mindes123() {
    return {
        poly_q({{1, 0, 1, 0, 1}}),
        poly_q({{1, 0, 0, 1, 1}, {2, 0, 2, 0, 1}, {2, 1, 2, 0, 1}}),
        poly_q({{2, 0, 1, 1, 1}, {2, 1, 1, 1, 3}, {3, 1, 3, 0, 4}, {3, 2, 3, 0, 1}}),
        poly_q({{2, 1, 0, 2, 2}, {3, 1, 2, 1, 9}, {4, 1, 4, 0, 2},
                {3, 2, 2, 1, 6}, {4, 2, 4, 0, 11}, {4, 3, 4, 0, 1}}),
        poly_q({{3, 1, 1, 2, 5}, {4, 1, 3, 1, 5}, {3, 2, 1, 2, 10}, {4, 2, 3, 1, 41},
                {5, 2, 5, 0, 15}, {4, 3, 3, 1, 10}, {5, 3, 5, 0, 26}, {5, 4, 5, 0, 1}}),
    };
}

// Min-descent 321 expansion rows as printed (t^1..t^5).
std::vector<Poly> printed_mindes321() {
    return {
        poly_xy({{1, 0, 1}}),
        poly_xy({{2, 1, 1}, {2, 0, 1}, {1, 0, 1}}),
        poly_xy({{3, 1, 4}, {3, 0, 1}, {2, 1, 2}, {2, 0, 5}, {1, 0, 2}}),
        poly_xy({{4, 2, 2}, {4, 1, 11}, {4, 0, 1}, {3, 1, 17}, {3, 0, 17},
                 {2, 1, 4}, {2, 0, 22}, {1, 0, 6}}),
        poly_xy({{5, 2, 15}, {5, 1, 26}, {5, 0, 1}, {4, 2, 10}, {4, 1, 90}, {4, 0, 49},
                 {3, 1, 65}, {3, 0, 123}, {2, 1, 10}, {2, 0, 88}, {1, 0, 18}}),
    };
}

// Part-descent 312 expansion rows (t^1..t^5).
std::vector<Poly> printed_pdes312() {
    return {
        poly_xy({{1, 0, 1}}),
        poly_xy({{2, 1, 1}, {2, 0, 1}, {1, 0, 1}}),
        poly_xy({{3, 2, 1}, {3, 1, 3}, {3, 0, 1}, {2, 1, 1}, {2, 0, 4}, {1, 0, 1}}),
        poly_xy({{4, 3, 1}, {4, 2, 6}, {4, 1, 6}, {4, 0, 1}, {3, 2, 1}, {3, 1, 11},
                 {3, 0, 9}, {2, 1, 1}, {2, 0, 8}, {1, 0, 1}}),
        poly_xy({{5, 4, 1}, {5, 3, 10}, {5, 2, 20}, {5, 1, 10}, {5, 0, 1},
                 {4, 3, 1}, {4, 2, 21}, {4, 1, 46}, {4, 0, 16},
                 {3, 2, 1}, {3, 1, 23}, {3, 0, 32}, {2, 1, 1}, {2, 0, 13}, {1, 0, 1}}),
    };
}

// Part-descent 321 expansion rows (t^1..t^5).
std::vector<Poly> printed_pdes321() {
    return {
        poly_xy({{1, 0, 1}}),
        poly_xy({{2, 1, 1}, {2, 0, 1}, {1, 0, 1}}),
        poly_xy({{3, 1, 4}, {3, 0, 1}, {2, 1, 1}, {2, 0, 5}, {1, 0, 1}}),
        poly_xy({{4, 2, 2}, {4, 1, 11}, {4, 0, 1}, {3, 1, 11}, {3, 0, 16},
                 {2, 1, 1}, {2, 0, 13}, {1, 0, 1}}),
        poly_xy({{5, 2, 15}, {5, 1, 26}, {5, 0, 1}, {4, 2, 5}, {4, 1, 65}, {4, 0, 42},
                 {3, 1, 23}, {3, 0, 76}, {2, 1, 1}, {2, 0, 29}, {1, 0, 1}}),
    };
}

CheckResult expansion_check(const std::string& name, const Series& s,
                            const std::vector<Poly>& rows) {
    for (size_t i = 0; i < rows.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        if (!(s.coeff(n) == rows[i])) {
            return {name, false,
                    "t^" + std::to_string(n) + ": solved=" + s.coeff(n).str() +
                        " vs printed=" + rows[i].str()};
        }
    }
    return {name, true, ""};
}

// ---------------- criterion implementations ----------------

std::vector<CheckResult> criterion1(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    int top = std::max(opt.max_n, 8);
    for (auto [name, alpha, fn] :
         std::initializer_list<std::tuple<const char*, const char*, Int (*)(int, int)>>{
             {"counts.132", "132", &wop_nk_132}, {"counts.123", "123", &wop_nk_123}}) {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= top && ok; ++n) {
            std::map<int, Int> byk;
            for_each_word_avoiding(n, pat(alpha), [&](const OrderedSetPartition& p) {
                ++byk[p.block_count()];
            });
            for (int k = 1; k <= n; ++k) {
                Int want = fn(n, k);
                Int got = byk.count(k) ? byk[k] : Int(0);
                if (want != got) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             " formula=" + want.str() + " brute=" + got.str();
                    break;
                }
            }
        }
        out.push_back({std::string("1.") + name, ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 10 && ok; ++n) {
            std::map<int, Int> byk;
            for_each_word_avoiding(n, pat("21"), [&](const OrderedSetPartition& p) {
                ++byk[p.block_count()];
            });
            for (int k = 1; k <= n; ++k) {
                Int got = byk.count(k) ? byk[k] : Int(0);
                if (wop_nk_21(n, k) != got) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    break;
                }
            }
        }
        out.push_back({"1.counts.21", ok, detail});
    }
    return out;
}

YPoly brute_ypoly(int n, int k, const Permutation& alpha, StatName s) {
    YPoly h;
    for_each_word_avoiding(n, alpha, [&](const OrderedSetPartition& p) {
        if (p.block_count() == k) ++h[stat(p, s)];
    });
    return h;
}

void each_multiset(int n, const std::function<void(const Multiset&)>& fn) {
    // all partitions of n as multisets of block sizes
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int rem, int mx) {
        if (rem == 0) {
            std::map<int, int> mult;
            for (int p : parts) ++mult[p];
            Multiset ms;
            for (auto [b, m] : mult) ms.parts.push_back({b, m});
            fn(ms);
            return;
        }
        for (int p = std::min(rem, mx); p >= 1; --p) {
            parts.push_back(p);
            rec(rem - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
}

std::vector<CheckResult> criterion2(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= opt.max_n && ok; ++n) {
            for (int k = 1; k <= n; ++k) {
                if (despoly_nk_132(n, k) != brute_ypoly(n, k, pat("132"), StatName::Des)) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    break;
                }
            }
        }
        out.push_back({"2.despoly132", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= opt.max_n && ok; ++n) {
            for (int k = 1; k <= n; ++k) {
                if (mindespoly_nk_213(n, k) != brute_ypoly(n, k, pat("213"), StatName::Mindes)) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    break;
                }
            }
        }
        out.push_back({"2.mindespoly213", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= opt.max_n && ok; ++n) {
            each_multiset(n, [&](const Multiset& ms) {
                if (!ok) return;
                YPoly h;
                for_each_word_avoiding(n, pat("132"), [&](const OrderedSetPartition& p) {
                    if (matches_spec(p, BlockSizeSpec{ms})) ++h[stat(p, StatName::Des)];
                });
                if (despoly_multiset_132(ms) != h) {
                    ok = false;
                    detail = "n=" + std::to_string(n);
                }
            });
        }
        out.push_back({"2.despoly-multiset-132", ok, detail});
    }
    return out;
}

std::vector<CheckResult> criterion3(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    int N = std::max(opt.order, opt.max_n);
    out.push_back(series_oracle_check("3.system.des132", des132_series(N), pat("132"),
                                      StatName::Des, opt.max_n));
    out.push_back(series_oracle_check_q("3.system.des123-q", des123_12_series(N), pat("123"),
                                        StatName::Des, opt.max_n));
    out.push_back(series_oracle_check("3.system.des321", des321_series(N), pat("321"),
                                      StatName::Des, opt.max_n));
    out.push_back(series_oracle_check("3.system.mindes321", mindes321_series(N).main, pat("321"),
                                      StatName::Mindes, opt.max_n));
    out.push_back(series_oracle_check("3.system.pdes312", pdes312_series(N).main, pat("312"),
                                      StatName::Pdes, opt.max_n));
    {
        CheckResult r = series_oracle_check("3.system.pdes321", pdes321_series(N).main, pat("321"),
                                            StatName::Pdes, opt.max_n);
        if (!r.pass) {
            r.detail += "  [the stated four-equation system reproduces its printed expansion"
                        " and sextic, but provably not the (blocks,pdes) histogram; see ledger]";
        }
        out.push_back(r);
    }
    out.push_back(series_oracle_check("3.system.mindes231", mindes231_series(N), pat("231"),
                                      StatName::Mindes, opt.max_n));
    out.push_back(series_oracle_check_q("3.system.mindes123-q", mindes123_12_series(N), pat("123"),
                                        StatName::Mindes, opt.max_n));
    return out;
}

std::vector<CheckResult> criterion4(const VerifyOptions& opt) {
    int N = std::max(5, opt.order);
    std::vector<CheckResult> out;
    out.push_back(expansion_check("4.expansion.mindes123", mindes123_12_series(N), printed_mindes123()));
    {
        CheckResult r = expansion_check("4.expansion.mindes321", mindes321_series(N).main,
                                        printed_mindes321());
        if (!r.pass) {
            r.detail += "  [printed t^3 row sums to 14 but the family has 12 members; see ledger]";
        }
        out.push_back(r);
    }
    out.push_back(expansion_check("4.expansion.pdes312", pdes312_series(N).main, printed_pdes312()));
    out.push_back(expansion_check("4.expansion.pdes321", pdes321_series(N).main, printed_pdes321()));
    return out;
}

std::vector<CheckResult> criterion5(const VerifyOptions& opt) {
    int N = opt.order;
    std::vector<CheckResult> out;
    {
        bool ok = verify_algebraic(pdes312_cubic_relation(N), pdes312_series(N).main);
        out.push_back({"5.relation.deg3-pdes312", ok, ok ? "" : "nonzero residue"});
    }
    {
        Series c = mindes321_series(N).main;
        bool ok = verify_algebraic(mindes321_quartic_relation(N), c);
        std::string detail;
        if (!ok) {
            bool cubic = verify_algebraic(mindes321_cubic_relation(N), c);
            detail = "printed quartic does not annihilate the solved series";
            detail += cubic ? "; the eliminant cubic of the summed system does (see ledger)"
                            : "; eliminant cubic also fails";
        }
        out.push_back({"5.relation.deg4-mindes321", ok, detail});
    }
    {
        auto [f1, f2] = pdes321_sextic_factors(N);
        Series d = pdes321_series(N).main;
        Series r1 = eval_polynomial_relation(f1, d);
        Series r2 = eval_polynomial_relation(f2, d);
        Series prod = r1 * r2;
        bool ok = prod.is_zero();
        std::string which = r1.is_zero() ? "factor 1 vanishes" : (r2.is_zero() ? "factor 2 vanishes" : "");
        out.push_back({"5.relation.deg6-pdes321", ok, ok ? which : "nonzero residue"});
    }
    return out;
}

std::vector<CheckResult> criterion6(const VerifyOptions& opt) {
    int N = opt.order;
    std::vector<CheckResult> out;
    for (const char* name : {"W132des", "W123des12", "W321des", "Wmindes231", "Wmaxdes132", "CDZ"}) {
        bool ok = quadratic_closed_form_check(closed_form_from_string(name), N);
        out.push_back({std::string("6.residual.") + name, ok, ok ? "" : "residual nonzero"});
    }
    {
        // counting coefficients of the 321 descent series at y=1 match both
        // avoidance notions
        Series w = des321_series(std::max(N, opt.max_n)).with_y_one();
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= opt.max_n && ok; ++n) {
            std::map<int, Int> wordk, gghpk;
            for_each_word_avoiding(n, pat("321"), [&](const OrderedSetPartition& p) {
                ++wordk[p.block_count()];
            });
            for_each_osp(n, [&](const OrderedSetPartition& p) {
                if (gghp_avoids(p, pat("321"))) ++gghpk[p.block_count()];
            });
            std::map<int, Int> got;
            for (const auto& [m, c] : w.coeff(n).terms()) got[m.e[kVarX]] = int_coeff(c);
            if (got != wordk || got != gghpk) {
                ok = false;
                detail = "n=" + std::to_string(n);
            }
        }
        out.push_back({"6.cdz-coefficients", ok, detail});
    }
    return out;
}

std::vector<CheckResult> criterion7(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    int top = std::max(opt.max_n, 8);
    {
        bool ok = true;
        std::string detail;
        for (int n = 3; n <= top && ok; ++n) {
            Int brute = 0;
            for_each_word_avoiding(n, pat("321"), [&](const OrderedSetPartition& p) {
                if (p.block_count() == 3) ++brute;
            });
            if (op_n3_123(n) != brute) {
                ok = false;
                detail = "n=" + std::to_string(n) + " formula=" + op_n3_123(n).str() +
                         " brute=" + brute.str();
            }
        }
        out.push_back({"7.op-n3", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= top && ok; ++n) {
            Int brute = 0;
            for_each_word_avoiding(n, pat("321"), [&](const OrderedSetPartition& p) {
                if (p.block_count() == n - 1) ++brute;
            });
            if (op_n_nm1_123(n) != brute) {
                ok = false;
                detail = "n=" + std::to_string(n);
            }
        }
        out.push_back({"7.op-n-nm1", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        // every composition of n into {1,2} parts counts C_k
        std::function<void(int, std::vector<int>&)> rec = [&](int rem, std::vector<int>& comp) {
            if (!ok) return;
            if (rem == 0) {
                Int brute = 0;
                int n = 0;
                for (int b : comp) n += b;
                Composition c{comp};
                for_each_word_avoiding(n, pat("123"), [&](const OrderedSetPartition& p) {
                    if (matches_spec(p, BlockSizeSpec{c})) ++brute;
                });
                if (wop_composition_123(c) != brute) {
                    ok = false;
                    detail = "composition mismatch at n=" + std::to_string(n);
                }
                return;
            }
            for (int b = 1; b <= std::min(2, rem); ++b) {
                comp.push_back(b);
                rec(rem - b, comp);
                comp.pop_back();
            }
        };
        for (int n = 1; n <= top && ok; ++n) {
            std::vector<int> comp;
            rec(n, comp);
        }
        out.push_back({"7.composition-catalan", ok, detail});
    }
    return out;
}

std::vector<CheckResult> criterion8(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= opt.max_n && ok; ++n) {
            std::set<std::string> images, codomain;
            for_each_word_avoiding(n, pat("213"), [&](const OrderedSetPartition& p) {
                codomain.insert(p.str());
            });
            std::vector<OrderedSetPartition> domain;
            for_each_word_avoiding(n, pat("312"), [&](const OrderedSetPartition& p) {
                domain.push_back(p);
            });
            for (const auto& p : domain) {
                OrderedSetPartition img = phi(p);
                images.insert(img.str());
                Word wp = p.word(), wi = img.word();
                bool good = word_avoids(img, pat("213")) && des_set(wp) == des_set(wi) &&
                            stat(p, StatName::Mindes) == stat(img, StatName::Mindes);
                if (good) {
                    for (int b = 0; b < p.block_count(); ++b) {
                        if (p.block(b).size() != img.block(b).size()) good = false;
                    }
                }
                if (good && n >= 1) {
                    good = std::find(wp.begin(), wp.end(), 1) - wp.begin() ==
                           std::find(wi.begin(), wi.end(), 1) - wi.begin();
                }
                if (!good) {
                    ok = false;
                    detail = "contract fails on " + p.str();
                    break;
                }
            }
            if (ok && images != codomain) {
                ok = false;
                detail = "image set differs at n=" + std::to_string(n);
            }
        }
        if (ok) {
            // the worked example and the part-descent non-preservation witness
            ok = phi(OrderedSetPartition::parse("3/24/15")).str() == "5/34/12";
            if (!ok) detail = "worked example";
        }
        if (ok) {
            bool found = false;
            for_each_word_avoiding(5, pat("312"), [&](const OrderedSetPartition& p) {
                if (stat(p, StatName::Pdes) != stat(phi(p), StatName::Pdes)) found = true;
            });
            ok = found;
            if (!ok) detail = "expected a part-descent counterexample at n=5";
        }
        out.push_back({"8.phi", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= 9 && ok; ++n) {
            for (const Word& w : avoiding_permutations(n, pat("123"))) {
                Permutation sigma(w);
                if (!(psi_inv(psi(sigma)) == sigma)) {
                    ok = false;
                    detail = "roundtrip fails on " + sigma.str();
                    break;
                }
            }
        }
        if (ok) {
            ok = psi(Permutation::parse("869743251")).steps == "DDRDDRRRDDRDRDRRDR" &&
                 psi_inv(DyckPath("DDRDDRRRDDRDRDRRDR")) == Permutation::parse("869743251");
            if (!ok) detail = "worked pair";
        }
        out.push_back({"8.psi", ok, detail});
    }
    {
        bool ok = lift_perm(Permutation({8, 6, 9, 7, 4, 3, 2, 5, 1})) ==
                  Permutation({8, 6, 10, 9, 4, 3, 2, 7, 1, 5});
        out.push_back({"8.lift", ok, ok ? "" : "worked pair mismatch"});
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= opt.max_n && ok; ++n) {
            std::set<std::string> trees;
            Int count = 0;
            for_each_word_avoiding(n, pat("132"), [&](const OrderedSetPartition& p) {
                ++count;
                PlaneTree tr = to_tree(p);
                trees.insert(tr.str());
                if (!(from_tree(tr) == p) || tr.leaf_count() != n + 1 ||
                    tr.internal_count() != p.block_count() || tr.has_outdegree_one()) {
                    ok = false;
                }
            });
            if (!ok) {
                detail = "roundtrip/shape fails at n=" + std::to_string(n);
            } else if (Int(trees.size()) != count) {
                ok = false;
                detail = "tree images collide at n=" + std::to_string(n);
            }
        }
        out.push_back({"8.tree", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= opt.max_n && ok; ++n) {
            std::map<std::vector<int>, std::set<std::string>> families;
            for_each_word_avoiding(n, pat("123"), [&](const OrderedSetPartition& p) {
                std::vector<int> comp;
                for (const auto& b : p.blocks()) comp.push_back(static_cast<int>(b.size()));
                families[comp].insert(p.str());
            });
            for (const auto& [comp, members] : families) {
                bool sizes12 = std::all_of(comp.begin(), comp.end(),
                                           [](int b) { return b == 1 || b == 2; });
                if (!sizes12) continue;
                for (size_t i = 0; i + 1 < comp.size() && ok; ++i) {
                    if (comp[i] == comp[i + 1]) continue;
                    std::vector<int> target = comp;
                    std::swap(target[i], target[i + 1]);
                    std::set<std::string> images;
                    for (const auto& text : members) {
                        OrderedSetPartition img = swap_adjacent_sizes_123(
                            OrderedSetPartition::parse(text), static_cast<int>(i));
                        if (!word_avoids(img, pat("123"))) ok = false;
                        images.insert(img.str());
                    }
                    if (images != families[target]) ok = false;
                    if (!ok) detail = "swap family mismatch at n=" + std::to_string(n);
                }
            }
        }
        out.push_back({"8.swap", ok, detail});
    }
    return out;
}

std::vector<CheckResult> criterion9(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= opt.max_n && ok; ++n) {
            Hist hmax, hmin;
            bool transport = true;
            for_each_osp(n, [&](const OrderedSetPartition& p) {
                AllStats a = all_stats(p);
                ++hmax[{p.block_count(), a.maxdes}];
                ++hmin[{p.block_count(), a.mindes}];
                OrderedSetPartition rcp = reverse_complement(p);
                AllStats b = all_stats(rcp);
                if (a.des != b.des || a.pdes != b.pdes || a.maxdes != b.mindes) transport = false;
            });
            if (hmax != hmin) {
                ok = false;
                detail = "equidistribution fails at n=" + std::to_string(n);
            }
            if (!transport) {
                ok = false;
                detail = "reverse-complement transport fails at n=" + std::to_string(n);
            }
        }
        out.push_back({"9.maxdes-mindes", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= opt.max_n && ok; ++n) {
            for_each_word_avoiding(n, pat("132"), [&](const OrderedSetPartition& p) {
                AllStats a = all_stats(p);
                if (a.des != a.mindes || a.pdes != a.maxdes) ok = false;
            });
            if (!ok) detail = "pointwise equality fails at n=" + std::to_string(n);
        }
        out.push_back({"9.132-pointwise", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        int top = std::max(opt.max_n, 8);
        for (int n = 0; n <= top && ok; ++n) {
            std::map<std::string, Int> counts;
            for (const char* a : {"123", "132", "231", "312", "213", "321"}) {
                Int c = 0;
                for_each_word_avoiding(n, pat(a), [&](const OrderedSetPartition&) { ++c; });
                counts[a] = c;
            }
            if (!(counts["132"] == counts["231"] && counts["231"] == counts["312"] &&
                  counts["312"] == counts["213"])) {
                ok = false;
                detail = "middle class splits at n=" + std::to_string(n);
            }
            if (ok && n >= 3 &&
                (counts["123"] == counts["132"] || counts["321"] == counts["132"] ||
                 counts["123"] == counts["321"])) {
                ok = false;
                detail = "classes collide at n=" + std::to_string(n);
            }
        }
        out.push_back({"9.wilf-classes", ok, detail});
    }
    {
        // the three statistics are genuinely different at n = 3
        Hist hd, hp, hm;
        for_each_osp(3, [&](const OrderedSetPartition& p) {
            AllStats a = all_stats(p);
            ++hd[{p.block_count(), a.des}];
            ++hp[{p.block_count(), a.pdes}];
            ++hm[{p.block_count(), a.mindes}];
        });
        bool ok = hd != hp && hd != hm && hp != hm;
        out.push_back({"9.not-equidistributed-n3", ok, ok ? "" : "histograms coincide"});
    }
    return out;
}

std::vector<CheckResult> criterion10(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    {
        const std::vector<Int> want = {1, 1, 2, 5, 13, 34, 89, 233, 610};
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= 8 && ok; ++n) {
            Int c = 0;
            if (n == 0) {
                c = 1;
            } else {
                for_each_word_avoiding(n, pat("213"), [&](const OrderedSetPartition& p) {
                    if (stat(p, StatName::Mindes) == 0) ++c;
                });
            }
            if (c != want[n]) {
                ok = false;
                detail = "n=" + std::to_string(n) + " got " + c.str();
            }
        }
        if (ok) {
            // a_n = 3 a_{n-1} - a_{n-2} on the series out to order 12
            Series s = maxdes132_series(12);
            std::vector<Int> a(13, 0);
            for (int n = 0; n <= 12; ++n) {
                Rat sum = 0;
                for (const auto& [m, c] : s.coeff(n).terms()) {
                    if (m.e[kVarY] == 0) sum += c;  // no min-descents, any block count
                }
                a[n] = int_coeff(sum);
            }
            for (int n = 3; n <= 12; ++n) {
                if (a[n] != 3 * a[n - 1] - a[n - 2]) {
                    ok = false;
                    detail = "recurrence fails at n=" + std::to_string(n);
                }
            }
        }
        out.push_back({"10.fibonacci-bisection", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 9 && ok; ++n) {
            YPoly h;
            for (const Word& w : avoiding_permutations(n, pat("132"))) {
                ++h[static_cast<int>(des_set(w).size())];
            }
            for (int k = 1; k <= n; ++k) {
                Int want = narayana(n, k);
                Int got = h.count(k - 1) ? h[k - 1] : Int(0);
                if (want != got) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
            }
        }
        out.push_back({"10.narayana", ok, detail});
    }
    return out;
}

}  // namespace

std::vector<CheckResult> run_criterion(int number, const VerifyOptions& opt) {
    switch (number) {
        case 1: return criterion1(opt);
        case 2: return criterion2(opt);
        case 3: return criterion3(opt);
        case 4: return criterion4(opt);
        case 5: return criterion5(opt);
        case 6: return criterion6(opt);
        case 7: return criterion7(opt);
        case 8: return criterion8(opt);
        case 9: return criterion9(opt);
        case 10: return criterion10(opt);
        default: throw std::invalid_argument("criterion number must be 1..10");
    }
}

std::vector<std::string> suite_names() { return {"all", "formulas", "series", "bijections", "symmetries"}; }

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    std::vector<int> nums;
    if (suite == "all") {
        nums = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    } else if (suite == "formulas") {
        nums = {1, 2, 7};
    } else if (suite == "series") {
        nums = {3, 4, 5, 6, 10};
    } else if (suite == "bijections") {
        nums = {8};
    } else if (suite == "symmetries") {
        nums = {9};
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    std::vector<CheckResult> out;
    for (int k : nums) {
        auto r = run_criterion(k, opt);
        out.insert(out.end(), r.begin(), r.end());
    }
    std::sort(out.begin(), out.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return out;
}

std::string results_json(const std::vector<CheckResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        arr.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    return arr.dump(2);
}

int count_failures(const std::vector<CheckResult>& results) {
    int c = 0;
    for (const auto& r : results) {
        if (!r.pass) ++c;
    }
    return c;
}

}  // namespace osp
