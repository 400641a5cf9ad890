#ifndef PUREFIELD_DISCRIMINANT_HPP
#define PUREFIELD_DISCRIMINANT_HPP

#include <map>

#include "purefield/field.hpp"

namespace purefield {

// d_K in factored form: sign * prod p^e.  Exponents are stored for the
// primes that actually occur (query absent primes via exponent_of).
struct DiscriminantFactorization {
    int sign = 1;
    std::map<Int, unsigned long> exponents;

    unsigned long exponent_of(const Int& p) const;
    Int value() const; // expands the product; grows like n^n
};

// Field discriminant of Q(theta), theta^n = a:
//   sign = (-1)^{(n-1)(n-2)/2} * sgn(a^{n-1}),
//   exponent of p | n: n s_i - 2 n_i sum_{j=1}^{min(r_i,s_i)} p_i^{s_i-j}
//                      when r_i >= 1, else n s_i,
//   exponent of q | a: n - gcd(t_q, n)  (added on top for shared primes).
DiscriminantFactorization d_K_formula(const PureField& field);

} // namespace purefield

#endif
