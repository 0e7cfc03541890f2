#include "osp/poly.hpp"

#include <vector>

namespace osp {

Poly Poly::monomial(const Rat& c, int ex, int ey, int eq1, int eq2) {
    Poly p;
    if (c != 0) p.terms_[Exponents{{ex, ey, eq1, eq2}}] = c;
    return p;
}

Rat Poly::coeff(const Exponents& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exponents& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Exponents m;
            for (int i = 0; i < 4; ++i) m.e[i] = ma.e[i] + mb.e[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

Poly Poly::scaled(const Rat& c) const {
    Poly out;
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

Poly Poly::divided_by_var(int var) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        if (m.e[var] < 1) {
            throw std::domain_error("polynomial not divisible by variable " + std::to_string(var));
        }
        Exponents nm = m;
        --nm.e[var];
        out.terms_[nm] = c;
    }
    return out;
}

Poly Poly::with_var_one(int var) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Exponents nm = m;
        nm.e[var] = 0;
        out.add_term(nm, c);
    }
    return out;
}

int Poly::max_exponent(int var) const {
    int mx = 0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, m.e[var]);
    return mx;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[4] = {"x", "y", "q1", "q2"};
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::vector<std::string> factors;
        if (c != 1 || m == Exponents{}) factors.push_back(to_string(c));
        for (int i = 0; i < 4; ++i) {
            if (m.e[i] == 0) continue;
            std::string f = names[i];
            if (m.e[i] > 1) f += "^" + std::to_string(m.e[i]);
            factors.push_back(std::move(f));
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "*";
            out += factors[i];
        }
    }
    return out;
}

}  // namespace osp
