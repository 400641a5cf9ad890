#ifndef PUREFIELD_ARITH_HPP
#define PUREFIELD_ARITH_HPP

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "purefield/errors.hpp"

namespace purefield {

using Int = mpz_class;
using Rat = mpq_class;

// Prime factorization of a nonzero integer: sign * prod p_i^e_i with the
// primes strictly increasing and every exponent >= 1.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned long>> factors;

    Int value() const;
    unsigned long exponent_of(const Int& p) const; // 0 when p absent
};

// |a| = prod_j a_j^j with the a_j squarefree and pairwise coprime.
// Entries with a_j = 1 are omitted from `parts`.
struct SquarefreeDecomposition {
    int sign = 1;
    std::map<unsigned long, Int> parts;

    Int part(unsigned long j) const; // 1 when absent
};

struct BezoutResult {
    Int g;
    std::vector<Int> coefficients;
};

bool is_prime(const Int& n);

Factorization factorize(const Int& m);

unsigned long p_adic_valuation(const Int& p, const Int& m);

SquarefreeDecomposition squarefree_decompose(const Int& a, unsigned long n);

// sum_{m=1}^{n-1} floor(t*m/n) via the closed form
// [(n-1)(t-1) + gcd(t,n) - 1] / 2.
Int floor_sum(const Int& t, const Int& n);

// g = gcd(a, b) >= 0 together with x, y such that a*x + b*y = g,
// produced by the iterative extended Euclidean algorithm.
std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b);

// Left fold of ext_gcd over the values, so the coefficient vector is
// deterministic in the input order.
BezoutResult bezout(const std::vector<Int>& values);

// Minimal positive y with x*y == 1 (mod m); requires gcd(x, m) = 1.
Int mod_inverse(const Int& x, const Int& m);

Int pow_ui(const Int& base, unsigned long exp);
Int powmod(const Int& base, const Int& exp, const Int& mod);

// v_p(x^e - 1) for x with gcd(x, p) = 1 and x^e != 1, computed with
// modular powers of progressively raised precision instead of the full
// power.  Exact.
unsigned long valuation_of_power_minus_one(const Int& x, unsigned long e, const Int& p);

} // namespace purefield

#endif
