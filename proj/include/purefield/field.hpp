#ifndef PUREFIELD_FIELD_HPP
#define PUREFIELD_FIELD_HPP

#include <memory>
#include <vector>

#include "purefield/arith.hpp"
#include "purefield/matrix.hpp"
#include "purefield/profile.hpp"

namespace purefield {

// K = Q(theta) with theta^n = a.  Construction enforces the hypotheses:
// |a| > 1 and n-th power free, for every p | n either p does not divide a
// or v_p(a) is coprime to p, and x^n - a irreducible (Capelli criterion:
// a is no p-th power for any p | n, and if 4 | n then a != -4 b^4).
class PureField {
  public:
    static std::shared_ptr<const PureField> validate(unsigned long n, const Int& a);

    unsigned long degree() const { return n_; }
    const Int& radicand() const { return a_; }
    const Factorization& n_factorization() const { return n_fact_; }
    const Factorization& a_factorization() const { return a_fact_; }
    const SquarefreeDecomposition& squarefree_parts() const { return sq_; }

    // r_p = v_p(a^{p-1} - 1) - 1 for p | n; equals -1 exactly when p | a.
    long r_of(const Int& p) const;
    const std::map<Int, long>& r_values() const { return r_; }

    // Primes p | n with r_p >= 1, ascending.
    std::vector<Int> s_primes() const;

    bool same_field(const PureField& o) const { return n_ == o.n_ && a_ == o.a_; }

  private:
    PureField() = default;

    unsigned long n_ = 0;
    Int a_;
    Factorization n_fact_;
    Factorization a_fact_;
    SquarefreeDecomposition sq_;
    std::map<Int, long> r_; // only primes p | n with p not dividing a
};

using FieldPtr = std::shared_ptr<const PureField>;

// (1/den) * sum_i num[i] theta^i, kept in lowest terms with den > 0.
class FieldElement {
  public:
    FieldElement(FieldPtr field, Int den, std::vector<Int> num);

    static FieldElement zero(FieldPtr field);
    static FieldElement one(FieldPtr field);
    static FieldElement theta_power(FieldPtr field, unsigned long m);

    const FieldPtr& field() const { return field_; }
    const Int& den() const { return den_; }
    const std::vector<Int>& num() const { return num_; }
    bool is_zero() const;

    bool operator==(const FieldElement& o) const;

  private:
    FieldPtr field_;
    Int den_;
    std::vector<Int> num_;
};

FieldElement operator+(const FieldElement& x, const FieldElement& y);
FieldElement operator-(const FieldElement& x, const FieldElement& y);
FieldElement operator-(const FieldElement& x);
FieldElement operator*(const FieldElement& x, const FieldElement& y);
FieldElement operator*(const Int& c, const FieldElement& x);

FieldElement element_mul(const FieldElement& x, const FieldElement& y);

// Column j holds the power-basis coordinates of x * theta^j.
RatMatrix multiplication_matrix(const FieldElement& x);

// Monic characteristic polynomial of the multiplication map, ascending
// degree, exact.  Computed division-free on the denominator-cleared
// integer matrix and rescaled.
std::vector<Rat> char_poly(const FieldElement& x);

// True iff char_poly(x) lies in Z[x].  Decided prime-by-prime on the
// denominator with modular arithmetic; agrees with char_poly exactly.
bool is_algebraic_integer(const FieldElement& x);

// det of the trace form matrix Tr(x_i x_j); exact rational.
Rat disc_of_elements(const std::vector<FieldElement>& xs);

// Determinant of the transition matrix from the constructed basis to the
// power basis: prod_m C_m * prod_{i in S} p_i^{sum_m k_{i,m}}.  The p-part
// is cross-checked against the closed form n_i * sum_{j<=d_i} p_i^{s_i-j}.
Int transition_determinant(const PureField& field, const ExponentProfile& profile);

// True iff the Z-spans coincide; decided by comparing HNFs after clearing
// to a common denominator.  Throws RankError on a dependent list.
bool module_span_equal(const std::vector<FieldElement>& xs,
                       const std::vector<FieldElement>& ys);

} // namespace purefield

#endif
