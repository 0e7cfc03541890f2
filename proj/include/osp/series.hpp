#pragma once

#include <functional>
#include <vector>

#include "osp/poly.hpp"

namespace osp {

// Power series in t truncated at order N: coefficients c[0..N] are Poly values
// in (x, y, q1, q2). Arithmetic results carry the minimum operand truncation.
class Series {
public:
    Series() = default;
    explicit Series(int order) : c_(order + 1) {}
    static Series constant(const Rat& v, int order);
    // c * t^et * x^ex * y^ey * q1^eq1 * q2^eq2
    static Series monomial(const Rat& c, int order, int et, int ex = 0, int ey = 0,
                           int eq1 = 0, int eq2 = 0);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Poly& coeff(int n) const { return c_[n]; }
    Poly& coeff(int n) { return c_[n]; }
    bool is_zero() const;

    Series truncated(int order) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series operator-() const;
    bool operator==(const Series& o) const;

    friend Series operator+(const Rat& a, const Series& b) { return Series::constant(a, b.order()) + b; }
    friend Series operator-(const Rat& a, const Series& b) { return Series::constant(a, b.order()) - b; }
    friend Series operator*(const Rat& a, const Series& b);
    friend Series operator+(const Series& a, const Rat& b) { return a + Series::constant(b, a.order()); }
    friend Series operator-(const Series& a, const Rat& b) { return a - Series::constant(b, a.order()); }
    friend Series operator*(const Series& a, const Rat& b) { return b * a; }

    // Exact division by a series whose constant coefficient is the polynomial 1.
    Series divided_by_unit(const Series& den) const;
    // Exact division by x or y (every coefficient divisible); throws otherwise.
    Series divided_by_x() const;
    Series divided_by_y() const;
    // Division by (1 - t): cumulative sums of coefficients.
    Series divided_by_1mt() const;

    Series with_y_one() const;
    Series with_q_one() const;
    Series with_x_one() const;
    // Keep only terms whose q2-exponent is zero.
    Series q2_free_part() const;
    // Keep only terms with x-exponent equal to the t-power.
    Series diagonal_x_part() const;

private:
    std::vector<Poly> c_;
};

// Iterates `update` from the all-ones vector; every unknown must be
// t-contracting so coefficient t^n stabilizes after n rounds. Runs order+1
// rounds and verifies one extra round is a fixed point.
std::vector<Series> fixed_point_solve(
    const std::function<std::vector<Series>(const std::vector<Series>&)>& update,
    int unknowns, int order);

// Evaluates sum_d coeffs[d] * s^d.
Series eval_polynomial_relation(const std::vector<Series>& coeffs, const Series& s);

}  // namespace osp
