#include "osp/numeric.hpp"

namespace osp {

Int binomial(long long n, long long k) {
    if (k < 0) return 0;
    Int num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return exact_div(num, den);
}

Int multinomial(long long n, const std::vector<long long>& parts) {
    long long total = 0;
    for (long long p : parts) {
        if (p < 0) throw std::domain_error("multinomial: negative part");
        total += p;
    }
    if (total != n) throw std::domain_error("multinomial: parts do not sum to n");
    Int r = 1;
    long long rem = n;
    for (long long p : parts) {
        r *= binomial(rem, p);
        rem -= p;
    }
    return r;
}

Int factorial(long long n) {
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int catalan(long long k) {
    return exact_div(binomial(2 * k, k), Int(k + 1));
}

Int exact_div(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("exact_div: zero divisor");
    Int q = num / den;
    if (q * den != num) {
        throw std::domain_error("exact_div: " + num.str() + " not divisible by " + den.str());
    }
    return q;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace osp
