#pragma once

#include <string>
#include <vector>

#include "osp/series.hpp"

namespace osp {

// ---- generating-function series, each solved to truncation `order` ----

// Word-descent series over the 132-word-avoiders (last-block recursion).
Series des132_series(int order);
// Word-descent series over the 123-word-avoiders, refined by the number of
// size-1 (q1) and size-2 (q2) blocks (first-return case sum).
Series des123_12_series(int order);
// Word-descent series over the 321-word-avoiders (last-return recursion).
Series des321_series(int order);
// The no-return contribution entering the 321 recursion, as a function of W.
Series nr321_of(const Series& w);

// Min-descent series over the 231-word-avoiders (position-of-n recursion).
Series mindes231_series(int order);
// Max-descent series over the 132-word-avoiders; also the min-descent series
// of the 213- and 312-word-avoiders and the part-descent series of the 132-
// and 213-word-avoiders.
Series maxdes132_series(int order);
// Min-descent series over the 123-word-avoiders, q-refined (single cubic update).
Series mindes123_12_series(int order);

struct PairSolution {
    Series main;  // the generating function
    Series aux;   // companion unknown (statistic blind to the last two blocks)
};
// Min-descent series over the 321-word-avoiders via the reversed-block view;
// two unknowns C and C_l.
PairSolution mindes321_series(int order);

struct QuadSolution {
    Series main, last_blind, first_blind, both_blind;
};
// Part-descent series over the 312-word-avoiders; unknowns D, D_l, D_f, D_lf.
QuadSolution pdes312_series(int order);
// The four-unknown system printed for the part-descent series over the
// 321-word-avoiders. Note: its solution reproduces the printed expansion and
// satisfies the printed sextic, but does not enumerate (blocks, pdes) on the
// actual family; see the acceptance suite output.
QuadSolution pdes321_series(int order);

// Descent polynomial series over the 123-avoiding permutations (q2-free part
// of the refined 123 series at q1 = x = 1).
Series s123des_series(int order);
// Descent polynomial series over the 132-avoiding permutations (diagonal of
// the 132 series at x = 1); coefficients are the Narayana triangle.
Series snar_series(int order);

// ---- closed forms verified by quadratic residuals ----

enum class ClosedForm {
    W132des,      // radical form of the 132 descent series
    W123des12,    // radical form of the refined 123 descent series
    W321des,      // radical form of the 321 descent series
    Wmindes231,   // radical form of the 231 min-descent series
    Wmaxdes132,   // radical form of the 132 max-descent series
    CDZ,          // counting series of the 321-avoiders (descent-free form)
    S123des,      // descent series over 123-avoiding permutations
    Snar,         // descent series over 132-avoiding permutations
};
ClosedForm closed_form_from_string(std::string_view name);
std::vector<std::string> closed_form_names();

// Builds the defining system's solution and checks (R*S - P)^2 - Q == 0 for
// the (P - sqrt(Q))/R closed form. Exact; returns false on any mismatch.
bool quadratic_closed_form_check(ClosedForm which, int order);

// ---- polynomial relations in one series unknown ----

// Coefficient list by power of the unknown; index d multiplies S^d.
using Relation = std::vector<Series>;

Relation pdes312_cubic_relation(int order);     // printed degree-3 relation
Relation mindes321_quartic_relation(int order); // printed degree-4 relation
// The two printed factors whose product is the degree-6 relation.
std::pair<Relation, Relation> pdes321_sextic_factors(int order);
// Cubic obtained by eliminating the companion unknown from the summed
// two-equation min-descent-321 system; annihilates mindes321_series().main.
Relation mindes321_cubic_relation(int order);

bool verify_algebraic(const Relation& relation, const Series& s);

// ---- Lagrange coefficient extraction ----

// x^k-coefficient of the solution with kernel delta(x), computed as
// (1/k) [x^{k-1}] delta(x)^k. Returned series has no x dependence.
Series lagrange_132des(int k, int order);
// Kernel (x+1) sum_i q_i t^{b_i} (1+yx)^{b_i}; at most two base sizes (q1,q2).
Series lagrange_des_sizes(const std::vector<int>& bases, int k, int order);
// Kernel sum_i q_i t^{b_i} (1+yx) (1 + ((1+yx)^{b_i}-1)/y).
Series lagrange_mindes213_sizes(const std::vector<int>& bases, int k, int order);

// ---- registry for the CLI ----
std::vector<std::string> series_names();
Series named_series(std::string_view name, int order);

// JSON: array indexed by n of [{"exponents":[ex,ey,eq1,eq2],"coeff":"..."}].
std::string series_dump_json(const Series& s);

}  // namespace osp
