#include "osp/formulas.hpp"

#include <algorithm>

namespace osp {

Int ypoly_at_one(const YPoly& p) {
    Int t = 0;
    for (const auto& [d, c] : p) t += c;
    return t;
}

std::string ypoly_str(const YPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : p) {
        if (!out.empty()) out += " + ";
        if (c != 1 || d == 0) out += c.str();
        if (d >= 1) out += "y";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

Int wop_nk_21(int n, int k) {
    if (k < 1 || k > n) return 0;
    return binomial(n - 1, k - 1);
}

Int wop_nk_132(int n, int k) {
    if (k < 1 || k > n) return 0;
    return exact_div(binomial(n - 1, k - 1) * binomial(n + k, k - 1), Int(k));
}

Int wop_nk_123(int n, int k) {
    if (k < 1 || k > n || n > 2 * k) return 0;
    return exact_div(binomial(2 * k, k) * binomial(k, n - k), Int(k + 1));
}

YPoly despoly_nk_132(int n, int k) {
    YPoly out;
    if (k < 1 || k > n) return out;
    Int lead = binomial(n - 1, k - 1);
    for (int j = 0; j <= k - 1; ++j) {
        Int c = exact_div(lead * binomial(k, j) * binomial(n, k - 1 - j), Int(k));
        if (c != 0) out[k - 1 - j] += c;
    }
    return out;
}

namespace {

void check_multiset(const Multiset& sizes, long long& n, long long& k) {
    validate_spec(BlockSizeSpec{sizes});
    n = 0;
    k = 0;
    for (auto [b, m] : sizes.parts) {
        n += static_cast<long long>(b) * m;
        k += m;
    }
    if (k < 1) throw std::domain_error("multiset: needs at least one block");
}

Int multiset_multinomial(const Multiset& sizes, long long k) {
    std::vector<long long> alphas;
    for (auto [b, m] : sizes.parts) alphas.push_back(m);
    return multinomial(k, alphas);
}

}  // namespace

Int wop_multiset_132(const Multiset& sizes) {
    long long n, k;
    check_multiset(sizes, n, k);
    return exact_div(binomial(n + k, k - 1) * multiset_multinomial(sizes, k), Int(k));
}

YPoly despoly_multiset_132(const Multiset& sizes) {
    long long n, k;
    check_multiset(sizes, n, k);
    Int mn = multiset_multinomial(sizes, k);
    YPoly out;
    for (long long j = 0; j <= k - 1; ++j) {
        Int c = exact_div(mn * binomial(k, j) * binomial(n, k - 1 - j), Int(k));
        if (c != 0) out[static_cast<int>(k - 1 - j)] += c;
    }
    return out;
}

Int wop_multiset_123(int alpha1, int alpha2) {
    if (alpha1 < 0 || alpha2 < 0) return 0;
    long long k = alpha1 + alpha2;
    if (k == 0) return 1;
    return exact_div(binomial(2 * k, k) * binomial(k, alpha1), Int(k + 1));
}

Int wop_composition_123(const Composition& comp) {
    validate_spec(BlockSizeSpec{comp});
    long long k = static_cast<long long>(comp.sizes.size());
    for (int b : comp.sizes) {
        if (b != 1 && b != 2) return 0;  // such a family has no 123-word-avoider
    }
    return catalan(k);
}

Int op_n3_123(int n) {
    if (n < 3) throw std::domain_error("op_n3_123: needs n >= 3");
    // (n^2/8 + 3n/8 - 2) 2^n + 3, evaluated exactly
    Int v = (Int(n) * n + 3 * Int(n) - 16) * (Int(1) << n);
    return exact_div(v, Int(8)) + 3;
}

Int op_n_nm1_123(int n) {
    if (n < 2) throw std::domain_error("op_n_nm1_123: needs n >= 2");
    return exact_div(Int(3) * (n - 1) * (n - 1) * binomial(2 * n - 2, n - 1),
                     Int(n) * (n + 1));
}

YPoly mindespoly_nk_213(int n, int k) {
    YPoly out;
    if (k < 1 || k > n) return out;
    // Accumulate the sum as a polynomial in y, then divide by k*y.
    std::map<int, Int> acc;  // y-degree -> coefficient
    for (int a = 0; a <= k; ++a) {
        for (int v = 0; v <= n - k; ++v) {
            Int c = binomial(k, a) * binomial(a + v - 1, v) *
                    binomial(k - a + (n - k - v) - 1, n - k - v) *
                    binomial(k + a + v, k - 1);
            if (c == 0) continue;
            // times (y-1)^{k-a}
            for (int j = 0; j <= k - a; ++j) {
                Int term = c * binomial(k - a, j);
                if ((k - a - j) % 2 != 0) term = -term;
                acc[j] += term;
            }
        }
    }
    if (acc.count(0) && acc[0] != 0) {
        throw std::domain_error("mindespoly_nk_213: sum not divisible by y");
    }
    for (const auto& [d, c] : acc) {
        if (d == 0 || c == 0) continue;
        out[d - 1] = exact_div(c, Int(k));
    }
    return out;
}

Int narayana(int n, int k) {
    if (k < 1 || k > n) return 0;
    return exact_div(binomial(n, k - 1) * binomial(n - 1, k - 1), Int(k));
}

}  // namespace osp
