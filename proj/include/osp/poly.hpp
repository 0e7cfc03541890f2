#pragma once

#include <array>
#include <map>
#include <string>

#include "osp/numeric.hpp"

namespace osp {

// Exponent vector over the variables (x, y, q1, q2).
struct Exponents {
    std::array<int, 4> e{0, 0, 0, 0};
    auto operator<=>(const Exponents&) const = default;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) terms_[Exponents{}] = c;
    }
    static Poly monomial(const Rat& c, int ex, int ey = 0, int eq1 = 0, int eq2 = 0);

    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Exponents& m) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    bool operator==(const Poly&) const = default;

    Poly scaled(const Rat& c) const;

    // Exact division by a variable; throws if some term lacks it.
    Poly divided_by_var(int var) const;

    // Substitute 1 for a variable (collapses its exponent).
    Poly with_var_one(int var) const;

    int max_exponent(int var) const;

    std::string str() const;

private:
    void add_term(const Exponents& m, const Rat& c);
    std::map<Exponents, Rat> terms_;
};

inline constexpr int kVarX = 0, kVarY = 1, kVarQ1 = 2, kVarQ2 = 3;

}  // namespace osp
