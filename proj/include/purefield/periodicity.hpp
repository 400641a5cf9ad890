#ifndef PUREFIELD_PERIODICITY_HPP
#define PUREFIELD_PERIODICITY_HPP

#include <vector>

#include "purefield/basis.hpp"
#include "purefield/field.hpp"

namespace purefield {

// n * p_1 * ... * p_k for the distinct primes dividing n.
Int period_modulus(unsigned long n);

struct TransferElementResult {
    unsigned long m = 0;
    bool forward = false;  // gamma_m of the a-field is integral over theta'
    bool backward = false; // gamma_m of the a'-field is integral over theta
    bool den_equal = false;
};

// Finite certificate for the coefficient-wise transfer between congruent
// squarefree radicands: both constructed bases transfer element-by-element,
// their pairwise products' coefficient vectors transfer as well, the
// denominator sequences agree, and min(r, s) matches prime by prime.
struct TransferReport {
    unsigned long n = 0;
    Int a;
    Int a_prime;
    Int modulus;
    std::vector<TransferElementResult> elements;
    std::size_t products_checked = 0;
    bool products_ok = true;
    bool den_sequence_equal = true;
    bool min_rs_equal = true;
    bool pass = false;
    std::vector<Int> denominators_a;
    std::vector<Int> denominators_a_prime;
};

// Requires squarefree a and a' with a == a' (mod period_modulus(n)).
TransferReport transfer_check(const FieldPtr& field, const Int& a_prime);

} // namespace purefield

#endif
