#ifndef PUREFIELD_BASIS_HPP
#define PUREFIELD_BASIS_HPP

#include <map>
#include <vector>

#include "purefield/field.hpp"
#include "purefield/profile.hpp"

namespace purefield {

// Checked construction of Q(theta), theta^n = a.  Throws ValidationError
// with a distinct code per violated hypothesis.
FieldPtr validate_field(unsigned long n, const Int& a);

// C_m = prod_j a_j^{floor(j m / n)} for m = 0..n-1; C_0 = 1 and each
// theta^m / C_m is an algebraic integer.
std::vector<Int> c_sequence(const PureField& field);

ExponentProfile exponent_profile(const PureField& field);

struct Adjuster {
    Int a_prime; // minimal positive residue of (a^{p-2})^{p^{s-1-k}} mod p^{k+1}
    Int w;       // minimal positive solution of w C_m a'^{p^k - 1} == 1 mod p^k
};

// Adjusters for every pair (p in S_m, m); each satisfies
// a * a'^{p^k} == 1 (mod p^{k+1}), which is asserted on construction.
using AdjusterTable = std::map<Int, std::map<unsigned long, Adjuster>>;

AdjusterTable unit_adjusters(const PureField& field, const ExponentProfile& profile,
                             const std::vector<Int>& c);

// eta_k / p^k where eta_k = sum_{j<p^k} (a' theta^{n/p^k})^j; an algebraic
// integer whenever 1 <= k <= min(r, s) and a' is a valid adjuster.
FieldElement eta_element(const FieldPtr& field, const Int& p, unsigned long k,
                         const Int& a_prime);

// delta_{i,m} = w C_m theta^{j} sum_{r<p^k-1} (a' theta^{n_im})^r as an
// integer coefficient vector of length n; requires k_{i,m} >= 1.
std::vector<Int> delta_element(const PureField& field, const Int& c_m, unsigned long m,
                               const Int& p, const ExponentProfile& profile,
                               const Int& a_prime, const Int& w);

// Bezout combination sum u_i z_i delta_i over S_m (0 when S_m is empty,
// the single delta when S_m is a singleton).  Keys of `deltas` must be
// exactly S_m.  Degree < m.
std::vector<Int> beta_combine(const PureField& field, unsigned long m,
                              const std::map<Int, std::vector<Int>>& deltas,
                              const ExponentProfile& profile);

struct ChoiceRecord {
    Int p;
    unsigned long k = 0;
    unsigned long j = 0;
    Int a_prime;
    Int w;
    Int z;
    Int u;
};

struct BasisElement {
    unsigned long m = 0;
    std::vector<Int> numerator; // length n; coefficient of theta^m is 1
    Int denominator;            // C_m * prod_{i in S} p_i^{k_{i,m}}
    Int c_m;
    std::vector<ChoiceRecord> choices; // one per prime of S_m, ascending
};

struct IntegralBasis {
    FieldPtr field;
    bool s_empty = true;
    std::vector<BasisElement> records;  // m = 0..n-1
    std::vector<FieldElement> elements; // gamma_0 = 1, gamma_1, ...
};

IntegralBasis integral_basis(const FieldPtr& field);

// HNF-reduced presentation of the same Z-module: triangular numerators
// over the common denominator, unique for the field.
IntegralBasis canonicalize(const IntegralBasis& basis);

} // namespace purefield

#endif
