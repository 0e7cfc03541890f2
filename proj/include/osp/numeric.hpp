#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace osp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Generalized binomial coefficient: product formula, valid for negative upper
// index (C(-1,0) = 1, C(v-1,v) = 0 for v >= 1). Lower index < 0 gives 0.
Int binomial(long long n, long long k);

// n! / (a_1! ... a_s!) with sum(a_i) == n required.
Int multinomial(long long n, const std::vector<long long>& parts);

Int factorial(long long n);
Int catalan(long long k);

// Exact integer division; throws std::domain_error on nonzero remainder.
Int exact_div(const Int& num, const Int& den);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace osp
