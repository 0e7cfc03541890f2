#include "osp/systems.hpp"

#include <json.hpp>

namespace osp {

namespace {

Series X(int N) { return Series::monomial(1, N, 0, 1); }
Series Y(int N) { return Series::monomial(1, N, 0, 0, 1); }
Series T(int N) { return Series::monomial(1, N, 1); }
Series Q1(int N) { return Series::monomial(1, N, 0, 0, 0, 1); }
Series Q2(int N) { return Series::monomial(1, N, 0, 0, 0, 0, 1); }
Series one(int N) { return Series::constant(1, N); }

}  // namespace

Series des132_series(int N) {
    Series x = X(N), y = Y(N), t = T(N);
    auto update = [&](const std::vector<Series>& v) {
        const Series& B = v[0];
        Series u = 1 + y * (B - 1);
        return std::vector<Series>{1 + (x * t * B * u).divided_by_unit(1 - t * u)};
    };
    return fixed_point_solve(update, 1, N)[0];
}

Series des123_12_series(int N) {
    Series x = X(N), y = Y(N), t = T(N), q1 = Q1(N), q2 = Q2(N);
    auto update = [&](const std::vector<Series>& v) {
        const Series& A = v[0];
        Series u = 1 + y * (A - 1);
        Series c1 = x * t * q1 * u;
        Series c2 = (x * x * t * t * q1 * q1 + x * t * t * q2) * u;
        Series c3 = y * (A - 1) * (x * t * t * q2 + x * x * t * t * q1 * q1) * u;
        Series c4 = x * y * t * q1 * (A - 1 - x * t * q1 - x * y * t * q1 * (A - 1)) * u;
        return std::vector<Series>{1 + c1 + c2 + c3 + c4};
    };
    return fixed_point_solve(update, 1, N)[0];
}

Series nr321_of(const Series& w) {
    int N = w.order();
    Series x = X(N), y = Y(N), t = T(N);
    return x * y * t * (x * t * w + t * (w - 1)) +
           (x * t + t) * (w - 1 - x * t * w - t * (w - 1));
}

Series des321_series(int N) {
    Series x = X(N), t = T(N);
    auto update = [&](const std::vector<Series>& v) {
        const Series& W = v[0];
        Series nr = nr321_of(W);
        return std::vector<Series>{1 + x * t * W + t * (W - 1) + nr +
                                   (1 + x) * nr.divided_by_x() * (W - 1)};
    };
    return fixed_point_solve(update, 1, N)[0];
}

Series mindes231_series(int N) {
    Series x = X(N), y = Y(N), t = T(N);
    auto update = [&](const std::vector<Series>& v) {
        const Series& M = v[0];
        return std::vector<Series>{1 + x * t + (1 + x + x * y) * t * (M - 1) +
                                   (1 + x * y) * t * (M - 1) * (M - 1)};
    };
    return fixed_point_solve(update, 1, N)[0];
}

Series maxdes132_series(int N) {
    Series x = X(N), y = Y(N), t = T(N);
    // The stated update carries a (...)/y factor; the bracket vanishes at
    // y = 0, which cancels it:
    //   C = 1 + t x u (C - t u) / ((1-t)(1-t u)),  u = 1 + y(C-1).
    auto update = [&](const std::vector<Series>& v) {
        const Series& C = v[0];
        Series u = 1 + y * (C - 1);
        Series num = t * x * u * (C - t * u);
        return std::vector<Series>{1 + num.divided_by_1mt().divided_by_unit(1 - t * u)};
    };
    return fixed_point_solve(update, 1, N)[0];
}

Series mindes123_12_series(int N) {
    Series x = X(N), y = Y(N), t = T(N), q1 = Q1(N), q2 = Q2(N);
    auto update = [&](const std::vector<Series>& v) {
        const Series& A = v[0];
        Series u = 1 + y * (A - 1);
        return std::vector<Series>{
            1 + t * x * q1 * u + (t * t * x * q2 + t * t * x * x * q1 * q1) * u * u +
            t * t * t * x * x * q1 * q2 * u * u * u +
            t * x * y * q1 * u * (A - 1 - t * x * q1 * u - t * t * x * q2 * u * u)};
    };
    return fixed_point_solve(update, 1, N)[0];
}

PairSolution mindes321_series(int N) {
    Series x = X(N), y = Y(N), t = T(N);
    auto update = [&](const std::vector<Series>& v) {
        const Series& C = v[0];
        const Series& Cl = v[1];
        Series W = C + (Cl - 1).divided_by_x();
        Series Cn = 1 + (y - 1) * t * t * x * x * C * W +
                    t * x * C * (C + (C - 1).divided_by_x()) +
                    t * C * (C - 1 - t * x * W) +
                    t * (C - 1).divided_by_x() * (Cl - 1 - t * x * W);
        // companion equation as the sum of its seven case contributions
        Series c1 = t * t * x * x * y * W * (Cl - 1);
        Series c2 = t * t * x * x * W * (Cl - 1).divided_by_x();
        Series c3 = t * x * (Cl - 1 + (Cl - 1).divided_by_x()) * (C - t * x * W);
        Series c4 = t * (Cl - 1) * (C - 1 - t * x * W);
        Series c5 = t * (Cl - 1).divided_by_x() * (Cl - 1 - t * x * W);
        Series c6 = t * x * C;
        Series c7 = t * (Cl - 1 - t * x * W);
        return std::vector<Series>{Cn, 1 + c1 + c2 + c3 + c4 + c5 + c6 + c7};
    };
    auto sol = fixed_point_solve(update, 2, N);
    return {sol[0], sol[1]};
}

QuadSolution pdes312_series(int N) {
    Series x = X(N), y = Y(N), t = T(N);
    auto update = [&](const std::vector<Series>& v) {
        const Series& D = v[0];
        const Series& Dl = v[1];
        const Series& Df = v[2];
        const Series& Dlf = v[3];
        Series g = (t * x).divided_by_1mt();  // tx/(1-t)
        Series core = (t * x * (D * D + ((Dl - 1) * (Df - 1)).divided_by_x())).divided_by_1mt();
        Series Dn = 1 + core +
                    (y - 1) * t * x *
                        (D * (D - 1) + ((Dl - 1) * (Df - g - 1)).divided_by_x());
        Series Dln = 1 + core;
        Series coref =
            (t * x * ((Df - 1) * D + Df + ((Dlf - 1) * (Df - 1)).divided_by_x())).divided_by_1mt();
        Series Dfn = 1 + coref +
                     (y - 1) * t * x *
                         ((Df - 1) * D - g + ((Dlf - 1) * (Df - g - 1)).divided_by_x());
        Series Dlfn = 1 + coref;
        return std::vector<Series>{Dn, Dln, Dfn, Dlfn};
    };
    auto sol = fixed_point_solve(update, 4, N);
    return {sol[0], sol[1], sol[2], sol[3]};
}

QuadSolution pdes321_series(int N) {
    Series x = X(N), y = Y(N), t = T(N);
    auto update = [&](const std::vector<Series>& v) {
        const Series& D = v[0];
        const Series& Dl = v[1];
        const Series& Df = v[2];
        const Series& Dlf = v[3];
        Series W = D + (Dl - 1).divided_by_x();
        Series Wf = Df + (Dlf - 1).divided_by_x();
        Series Dn = 1 + t * t * x * x * (y - 1) * D * D +
                    t * x * D * (D + (Df - 1).divided_by_x()) +
                    t * D * (D - 1 - x * t * W) +
                    t * (Df - 1).divided_by_x() * (Dl - 1 - x * t * W);
        Series Dln = 1 + t * x * D + t * t * x * x * (y - 1) * D * (Dl - 1) +
                     t * x * D * (Dl - 1 + (Dlf - 1).divided_by_x()) +
                     t * (Dl - 1) * (D - 1 - x * t * W) +
                     t * (Dlf - 1).divided_by_x() * (Dl - 1 - x * t * W) +
                     t * (Dl - 1 - t * x * W);
        Series Dfn = 1 + t * t * x * x * (y - 1) * (Df - 1) * D +
                     t * x * Df * (D + (Df - 1).divided_by_x()) +
                     t * D * (Df - 1 - x * t * Wf) +
                     t * (Df - 1).divided_by_x() * (Dlf - 1 - x * t * Wf);
        Series Dlfn = 1 + t * x * Df + t * t * x * x * (y - 1) * (Df - 1) * (Dl - 1) +
                      t * x * Df * (Dl - 1 + (Dlf - 1).divided_by_x()) +
                      t * (Dl - 1) * (Df - 1 - x * t * Wf) +
                      t * (Dlf - 1).divided_by_x() * (Dlf - 1 - x * t * Wf) +
                      t * (Dlf - 1 - t * x * Wf);
        return std::vector<Series>{Dn, Dln, Dfn, Dlfn};
    };
    auto sol = fixed_point_solve(update, 4, N);
    return {sol[0], sol[1], sol[2], sol[3]};
}

Series s123des_series(int N) {
    return des123_12_series(N).q2_free_part().with_q_one().with_x_one();
}

Series snar_series(int N) {
    return des132_series(N).diagonal_x_part().with_x_one();
}

ClosedForm closed_form_from_string(std::string_view name) {
    if (name == "W132des") return ClosedForm::W132des;
    if (name == "W123des12") return ClosedForm::W123des12;
    if (name == "W321des") return ClosedForm::W321des;
    if (name == "Wmindes231") return ClosedForm::Wmindes231;
    if (name == "Wmaxdes132") return ClosedForm::Wmaxdes132;
    if (name == "CDZ") return ClosedForm::CDZ;
    if (name == "S123des") return ClosedForm::S123des;
    if (name == "Snar") return ClosedForm::Snar;
    throw std::invalid_argument("unknown closed form '" + std::string(name) + "'");
}

std::vector<std::string> closed_form_names() {
    return {"W132des", "W123des12", "W321des", "Wmindes231",
            "Wmaxdes132", "CDZ", "S123des", "Snar"};
}

bool quadratic_closed_form_check(ClosedForm which, int N) {
    Series x = X(N), y = Y(N), t = T(N), q1 = Q1(N), q2 = Q2(N);
    Series S(N), P(N), Q(N), R(N);
    switch (which) {
        case ClosedForm::W132des: {
            S = des132_series(N);
            P = 1 + 2 * y * t + x * y * t - t - t * x;
            Q = P * P - 4 * (1 - t + t * y) * (t * (y + x * y));
            R = 2 * t * (y + x * y);
            break;
        }
        case ClosedForm::W123des12: {
            S = des123_12_series(N);
            P = 1 + 2 * y * (y - 1) * q1 * x * t + 2 * y * (y - 1) * q2 * x * t * t -
                2 * y * (y - 1) * (y - 1) * q1 * q1 * x * x * t * t;
            Q = 1 - 4 * y * q1 * x * t - 4 * y * q2 * x * t * t +
                4 * y * (y - 1) * q1 * q1 * x * x * t * t;
            R = 2 * y * y * q1 * x * t + 2 * y * y * q2 * x * t * t -
                2 * y * y * (y - 1) * q1 * q1 * x * x * t * t;
            break;
        }
        case ClosedForm::W321des: {
            S = des321_series(N);
            P = x + 2 * t * (x + 1) + 2 * t * t * (x + 1) * (x * y - x - 1);
            Q = x * x * (1 - 4 * t * (x + 1) * (t * (x * (y - 1) - 1) + 1));
            R = 2 * t * (x + 1) * (x + 1) * (t * (x * (y - 1) - 1) + 1);
            break;
        }
        case ClosedForm::Wmindes231: {
            S = mindes231_series(N);
            P = 1 + t - t * x + t * x * y;
            Q = P * P - 4 * (t + t * x * y);
            R = 2 * (t + t * x * y);
            break;
        }
        case ClosedForm::Wmaxdes132: {
            S = maxdes132_series(N);
            P = 1 - 2 * t + t * t - t * x + 2 * t * y - 2 * t * t * y + t * x * y +
                2 * t * t * x * y - 2 * t * t * x * y * y;
            Q = 1 - 4 * t + 6 * t * t - 4 * t * t * t + t * t * t * t - 2 * t * x +
                4 * t * t * x - 2 * t * t * t * x + t * t * x * x - 2 * t * x * y +
                4 * t * t * x * y - 2 * t * t * t * x * y - 2 * t * t * x * x * y +
                t * t * x * x * y * y;
            R = 2 * (t * y - t * t * y + t * x * y - t * t * x * y * y);
            break;
        }
        case ClosedForm::CDZ: {
            S = des321_series(N).with_y_one();
            P = -(x + 2 * x * t + 2 * t - 2 * t * t * x - 2 * t * t);
            Q = x * x * (1 - 4 * x * t - 4 * t + 4 * t * t * x + 4 * t * t);
            R = 2 * t * (x + 1) * (x + 1) * (t - 1);
            break;
        }
        case ClosedForm::S123des: {
            S = s123des_series(N);
            P = -(1 + 2 * t * y * (y - 1) - 2 * t * t * y * (y - 1) * (y - 1));
            Q = 1 - 4 * t * y + 4 * t * t * y * (y - 1);
            R = 2 * t * y * y * (t * (y - 1) - 1);
            break;
        }
        case ClosedForm::Snar: {
            S = snar_series(N);
            P = 1 + t * (y - 1);
            Q = 1 + t * t * (y - 1) * (y - 1) - 2 * t * (y + 1);
            R = 2 * y * t;
            break;
        }
    }
    Series resid = (R * S - P) * (R * S - P) - Q;
    return resid.is_zero();
}

Relation pdes312_cubic_relation(int N) {
    Series x = X(N), y = Y(N), t = T(N);
    Relation rel;
    rel.push_back(1 - t);
    rel.push_back((t - 1) * (1 + t * (1 + 2 * x * (y - 1))));
    rel.push_back((1 - t) * t *
                  (1 + t * x * x * (y - 1) * (y - 1) + x * (-1 + t * (y - 1) + 2 * y)));
    rel.push_back(t * t * x * (y - 1) * (-1 + t * (1 + x * (y - 1)) - x * y));
    return rel;
}

Relation mindes321_quartic_relation(int N) {
    Series x = X(N), y = Y(N), t = T(N);
    Relation rel;
    rel.push_back(1 + t * (-1 + 2 * x + 2 * x * x - x * x * y) + t * t - t * t * t);
    rel.push_back(Series::constant(-2, N) + t * (-3 - 5 * x - 3 * x * x + x * x * y) +
                  t * t * (3 - 4 * x - 6 * x * x + 3 * x * x * y) +
                  t * t * t * (2 + 3 * x + 3 * x * x - 2 * x * x * y));
    rel.push_back(1 + t * (9 + 6 * x + x * x) + t * t * (-3 + 5 * x + 8 * x * x + 2 * x * x * x) +
                  t * t * t *
                      (-10 - 6 * x - 3 * x * x - 4 * x * x * x - 2 * x * x * x * x + x * x * y +
                       3 * x * x * x * y + 3 * x * x * x * x * y - x * x * x * x * y * y) +
                  t * t * t * t * (3 - x * x));
    rel.push_back(t * (-5 - 3 * x) +
                  t * t * (-7 - 8 * x - 3 * x * x - x * x * x - 3 * x * x * y - x * x * x * y) +
                  t * t * t *
                      (18 + 17 * x + 6 * x * x + 2 * x * x * x + x * x * x * x - 6 * x * x * y -
                       4 * x * x * x * y - x * x * x * x * y) +
                  t * t * t * t *
                      (-6 - 6 * x - 3 * x * x + x * x * x + x * x * x * x + 5 * x * x * y +
                       x * x * x * y - x * x * x * x * y));
    rel.push_back(t * t * (2 - t + x - t * x - t * x * x + t * x * x * y) *
                  (3 - 3 * t + 2 * x - 3 * t * x - t * x * x + 2 * t * x * x * y +
                   t * x * x * x * y));
    return rel;
}

std::pair<Relation, Relation> pdes321_sextic_factors(int N) {
    Series x = X(N), y = Y(N), t = T(N);
    Relation f1, f2;
    // factor 1, collected by powers of the unknown D:
    // (D-1)x + t(-1 - D^2(1+x)^2 + 2D(1+x+x^2(y-1)) - 2x^2(y-1))
    // + D^3 t^5 x^5 (y-1)^3 + D^2 t^4 x^3 (y-1)^2 (-2 + 2D(1+x) + x(1+x-xy))
    // + t^2 (1 + x + D(-2 + x(2(y-2) + x(4 + x(y-1))(y-1))) - x(x^2(y-1)^2 + y)
    //        - D^2 (1+x)(-1 + x(-2 + 3x(y-1) + y)))
    // + D t^3 x (y-1) (1 + D^2(1+x)^2 + 2x(-1 + x(y-1))
    //                  + D(-2 + x^2(4 + 3x - 2y - 3xy)))
    Series d0 = -x + t * (-1 - 2 * x * x * (y - 1)) +
                t * t * (1 + x - x * (x * x * (y - 1) * (y - 1) + y));
    Series d1 = x + 2 * t * (1 + x + x * x * (y - 1)) +
                t * t * (-2 + x * (2 * (y - 2) + x * (4 + x * (y - 1)) * (y - 1))) +
                t * t * t * x * (y - 1) * (1 + 2 * x * (-1 + x * (y - 1)));
    Series d2 = -t * (1 + x) * (1 + x) +
                t * t * (-(1 + x) * (-1 + x * (-2 + 3 * x * (y - 1) + y))) +
                t * t * t * x * (y - 1) * (-2 + x * x * (4 + 3 * x - 2 * y - 3 * x * y)) +
                t * t * t * t * x * x * x * (y - 1) * (y - 1) * (-2 + x * (1 + x - x * y));
    Series d3 = t * t * t * x * (y - 1) * (1 + x) * (1 + x) +
                t * t * t * t * x * x * x * (y - 1) * (y - 1) * 2 * (1 + x) +
                t * t * t * t * t * x * x * x * x * x * (y - 1) * (y - 1) * (y - 1);
    f1 = {d0, d1, d2, d3};
    // factor 2: 1 + D(-2 + D(1 + t(1 + x - t(1+x+x^2)
    //                             + D(t-1)(1 + x + t x^2 (y-1)) + t x^2 y)))
    Series e0 = one(N);
    Series e1 = Series::constant(-2, N);
    Series e2 = 1 + t * (1 + x + t * x * x * y) - t * t * (1 + x + x * x);
    Series e3 = t * (t - 1) * (1 + x + t * x * x * (y - 1));
    f2 = {e0, e1, e2, e3};
    return {f1, f2};
}

Relation mindes321_cubic_relation(int N) {
    Series x = X(N), y = Y(N), t = T(N);
    Relation rel;
    rel.push_back(t * t - t + x * x * (y - 1) - x);
    rel.push_back(t * t * (2 * x * x * (y - 1) - 2 * x - 3) -
                  t * (3 * x * x * (y - 1) - 2 * x - 3) - x * x * (y - 1) + 2 * x);
    rel.push_back(t * t *
                      (x * x * x * x * (y - 1) * (y - 1) - 2 * x * x * x * (y - 1) +
                       x * x * (3 - 2 * y) + 4 * x + 3) +
                  t * (x * x * x * (y - 1) + x * x * (3 * y - 4) - 4 * x - 3) - x);
    rel.push_back(t * (x + 1) * (x + 1) * (1 - t));
    return rel;
}

bool verify_algebraic(const Relation& relation, const Series& s) {
    return eval_polynomial_relation(relation, s).is_zero();
}

namespace {

// (1+yx)^b as a series-valued polynomial helper
Series pow_series(const Series& base, int e) {
    Series out = Series::constant(1, base.order());
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

Series lagrange_extract(const Series& delta, int k, int N) {
    Series dk = pow_series(delta, k);
    Series out(N);
    for (int n = 0; n <= N; ++n) {
        for (const auto& [m, c] : dk.coeff(n).terms()) {
            if (m.e[kVarX] == k - 1) {
                out.coeff(n) += Poly::monomial(c / k, 0, m.e[1], m.e[2], m.e[3]);
            }
        }
        // coefficient extraction counts objects, so the 1/k must cancel
        for (const auto& [m, c] : out.coeff(n).terms()) {
            if (denominator(c) != 1) {
                throw std::domain_error("lagrange: non-integral coefficient after 1/k");
            }
        }
    }
    return out;
}

}  // namespace

Series lagrange_132des(int k, int N) {
    if (k < 1) throw std::domain_error("lagrange: k >= 1 required");
    Series x = X(N), y = Y(N), t = T(N);
    Series delta = (t * (x + 1) * (1 + y * x)).divided_by_unit(1 - t * (1 + y * x));
    return lagrange_extract(delta, k, N);
}

Series lagrange_des_sizes(const std::vector<int>& bases, int k, int N) {
    if (k < 1) throw std::domain_error("lagrange: k >= 1 required");
    if (bases.empty() || bases.size() > 2) {
        throw std::domain_error("lagrange: one or two base sizes supported");
    }
    Series x = X(N), y = Y(N);
    Series delta(N);
    for (size_t i = 0; i < bases.size(); ++i) {
        Series qi = (i == 0) ? Q1(N) : Q2(N);
        delta = delta + qi * Series::monomial(1, N, bases[i]) * pow_series(1 + y * x, bases[i]);
    }
    delta = (x + 1) * delta;
    return lagrange_extract(delta, k, N);
}

Series lagrange_mindes213_sizes(const std::vector<int>& bases, int k, int N) {
    if (k < 1) throw std::domain_error("lagrange: k >= 1 required");
    if (bases.empty() || bases.size() > 2) {
        throw std::domain_error("lagrange: one or two base sizes supported");
    }
    Series x = X(N), y = Y(N);
    Series delta(N);
    for (size_t i = 0; i < bases.size(); ++i) {
        Series qi = (i == 0) ? Q1(N) : Q2(N);
        Series u = 1 + y * x;
        Series inner = 1 + (pow_series(u, bases[i]) - 1).divided_by_y();
        delta = delta + qi * Series::monomial(1, N, bases[i]) * u * inner;
    }
    return lagrange_extract(delta, k, N);
}

std::vector<std::string> series_names() {
    return {"des132",   "des123_12", "des321",  "mindes231", "maxdes132",
            "mindes213", "mindes312", "pdes132", "mindes123_12", "mindes321",
            "pdes312",  "pdes321",   "s123des", "snar",      "w123des"};
}

Series named_series(std::string_view name, int order) {
    if (name == "des132") return des132_series(order);
    if (name == "des123_12" || name == "w123des") return des123_12_series(order);
    if (name == "des321") return des321_series(order);
    if (name == "mindes231") return mindes231_series(order);
    if (name == "maxdes132" || name == "mindes213" || name == "mindes312" || name == "pdes132") {
        return maxdes132_series(order);
    }
    if (name == "mindes123_12") return mindes123_12_series(order);
    if (name == "mindes321") return mindes321_series(order).main;
    if (name == "pdes312") return pdes312_series(order).main;
    if (name == "pdes321") return pdes321_series(order).main;
    if (name == "s123des") return s123des_series(order);
    if (name == "snar") return snar_series(order);
    throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

std::string series_dump_json(const Series& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [m, c] : s.coeff(n).terms()) {
            terms.push_back({{"exponents", {m.e[0], m.e[1], m.e[2], m.e[3]}},
                             {"coeff", to_string(c)}});
        }
        arr.push_back(terms);
    }
    return arr.dump();
}

}  // namespace osp
