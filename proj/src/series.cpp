#include "osp/series.hpp"

#include <stdexcept>

namespace osp {

Series Series::constant(const Rat& v, int order) {
    Series s(order);
    s.c_[0] = Poly(v);
    return s;
}

Series Series::monomial(const Rat& c, int order, int et, int ex, int ey, int eq1, int eq2) {
    Series s(order);
    if (et <= order) s.c_[et] = Poly::monomial(c, ex, ey, eq1, eq2);
    return s;
}

bool Series::is_zero() const {
    for (const auto& p : c_) {
        if (!p.is_zero()) return false;
    }
    return true;
}

Series Series::truncated(int order) const {
    Series out(order);
    for (int i = 0; i <= std::min(order, this->order()); ++i) out.c_[i] = c_[i];
    return out;
}

Series operator+(const Series& a, const Series& b) {
    int N = std::min(a.order(), b.order());
    Series out(N);
    for (int i = 0; i <= N; ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
}

Series operator-(const Series& a, const Series& b) {
    int N = std::min(a.order(), b.order());
    Series out(N);
    for (int i = 0; i <= N; ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
}

Series operator*(const Series& a, const Series& b) {
    int N = std::min(a.order(), b.order());
    Series out(N);
    for (int i = 0; i <= N; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (b.c_[j].is_zero()) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

Series Series::operator-() const {
    Series out(order());
    for (int i = 0; i <= order(); ++i) out.c_[i] = -c_[i];
    return out;
}

Series operator*(const Rat& a, const Series& b) {
    Series out(b.order());
    for (int i = 0; i <= b.order(); ++i) out.c_[i] = b.c_[i].scaled(a);
    return out;
}

bool Series::operator==(const Series& o) const {
    int N = std::min(order(), o.order());
    for (int i = 0; i <= N; ++i) {
        if (!(c_[i] == o.c_[i])) return false;
    }
    return true;
}

Series Series::divided_by_unit(const Series& den) const {
    if (!(den.c_[0] == Poly(Rat(1)))) {
        throw std::domain_error("series division requires unit constant term");
    }
    int N = std::min(order(), den.order());
    Series out(N);
    for (int n = 0; n <= N; ++n) {
        Poly acc = c_[n];
        for (int j = 1; j <= n; ++j) {
            if (den.c_[j].is_zero() || out.c_[n - j].is_zero()) continue;
            acc -= den.c_[j] * out.c_[n - j];
        }
        out.c_[n] = std::move(acc);
    }
    return out;
}

Series Series::divided_by_x() const {
    Series out(order());
    for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i].divided_by_var(kVarX);
    return out;
}

Series Series::divided_by_y() const {
    Series out(order());
    for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i].divided_by_var(kVarY);
    return out;
}

Series Series::divided_by_1mt() const {
    Series out(order());
    Poly acc;
    for (int i = 0; i <= order(); ++i) {
        acc += c_[i];
        out.c_[i] = acc;
    }
    return out;
}

Series Series::with_y_one() const {
    Series out(order());
    for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i].with_var_one(kVarY);
    return out;
}

Series Series::with_q_one() const {
    Series out(order());
    for (int i = 0; i <= order(); ++i) {
        out.c_[i] = c_[i].with_var_one(kVarQ1).with_var_one(kVarQ2);
    }
    return out;
}

Series Series::with_x_one() const {
    Series out(order());
    for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i].with_var_one(kVarX);
    return out;
}

Series Series::q2_free_part() const {
    Series out(order());
    for (int i = 0; i <= order(); ++i) {
        for (const auto& [m, c] : c_[i].terms()) {
            if (m.e[kVarQ2] == 0) out.c_[i] += Poly::monomial(c, m.e[0], m.e[1], m.e[2], m.e[3]);
        }
    }
    return out;
}

Series Series::diagonal_x_part() const {
    Series out(order());
    for (int i = 0; i <= order(); ++i) {
        for (const auto& [m, c] : c_[i].terms()) {
            if (m.e[kVarX] == i) out.c_[i] += Poly::monomial(c, m.e[0], m.e[1], m.e[2], m.e[3]);
        }
    }
    return out;
}

std::vector<Series> fixed_point_solve(
    const std::function<std::vector<Series>(const std::vector<Series>&)>& update,
    int unknowns, int order) {
    std::vector<Series> cur(unknowns, Series::constant(Rat(1), order));
    for (int round = 0; round <= order; ++round) {
        cur = update(cur);
        for (const auto& s : cur) {
            if (!(s.coeff(0) == Poly(Rat(1)))) {
                throw std::domain_error("fixed point solve: update lost the unit constant term");
            }
        }
    }
    std::vector<Series> next = update(cur);
    for (int i = 0; i < unknowns; ++i) {
        if (!(next[i] == cur[i])) {
            throw std::domain_error("fixed point solve: system is not t-contracting");
        }
    }
    return cur;
}

Series eval_polynomial_relation(const std::vector<Series>& coeffs, const Series& s) {
    if (coeffs.empty()) return Series(s.order());
    Series acc = coeffs.back();
    for (int d = static_cast<int>(coeffs.size()) - 2; d >= 0; --d) {
        acc = acc * s + coeffs[d];
    }
    return acc;
}

}  // namespace osp
