#include "purefield/periodicity.hpp"

#include <algorithm>

namespace purefield {

Int period_modulus(unsigned long n) {
    if (n < 2)
        throw DomainError("period_modulus: n must be >= 2");
    Int m = n;
    for (const auto& [p, s] : factorize(Int(n)).factors)
        m *= p;
    return m;
}

namespace {

bool is_squarefree(const Int& a) {
    if (a == 0)
        return false;
    for (const auto& [p, e] : factorize(abs(a)).factors)
        if (e > 1)
            return false;
    return true;
}

FieldElement reinterpret(const FieldElement& x, const FieldPtr& target) {
    return FieldElement(target, x.den(), x.num());
}

} // namespace

TransferReport transfer_check(const FieldPtr& field, const Int& a_prime) {
    const unsigned long n = field->degree();
    const Int& a = field->radicand();
    TransferReport rep;
    rep.n = n;
    rep.a = a;
    rep.a_prime = a_prime;
    rep.modulus = period_modulus(n);

    for (const auto& [q, t] : field->a_factorization().factors)
        if (t > 1)
            throw ValidationError(ValidationCode::NotSquarefree,
                                  "a = " + a.get_str() + " is not squarefree");
    if (!is_squarefree(a_prime))
        throw ValidationError(ValidationCode::NotSquarefree,
                              "a' = " + a_prime.get_str() + " is not squarefree");
    if ((a - a_prime) % rep.modulus != 0)
        throw ValidationError(ValidationCode::NotCongruent,
                              "a and a' are not congruent mod " + rep.modulus.get_str());

    FieldPtr other = PureField::validate(n, a_prime);
    IntegralBasis ba = integral_basis(field);
    IntegralBasis bb = integral_basis(other);

    for (unsigned long m = 0; m < n; ++m) {
        TransferElementResult r;
        r.m = m;
        r.forward = is_algebraic_integer(reinterpret(ba.elements[m], other));
        r.backward = is_algebraic_integer(reinterpret(bb.elements[m], field));
        r.den_equal = ba.records[m].denominator == bb.records[m].denominator;
        rep.denominators_a.push_back(ba.records[m].denominator);
        rep.denominators_a_prime.push_back(bb.records[m].denominator);
        rep.den_sequence_equal = rep.den_sequence_equal && r.den_equal;
        rep.elements.push_back(r);
    }

    // Pairwise products sample coefficient vectors beyond the basis itself:
    // the products of one field, reinterpreted over the other root, must
    // still be integral (their reductions differ, a vs a').
    for (unsigned long i = 0; i < n; ++i)
        for (unsigned long j = i; j < n; ++j) {
            FieldElement pa = ba.elements[i] * ba.elements[j];
            FieldElement pb = bb.elements[i] * bb.elements[j];
            bool ok = is_algebraic_integer(reinterpret(pa, other)) &&
                      is_algebraic_integer(reinterpret(pb, field));
            rep.products_ok = rep.products_ok && ok;
            ++rep.products_checked;
        }

    for (const auto& [p, s] : field->n_factorization().factors) {
        long ra = field->r_of(p);
        long rb = other->r_of(p);
        long sa = static_cast<long>(s);
        if (std::min(ra, sa) != std::min(rb, sa))
            rep.min_rs_equal = false;
    }

    bool elements_ok = std::all_of(rep.elements.begin(), rep.elements.end(),
                                   [](const TransferElementResult& r) {
                                       return r.forward && r.backward;
                                   });
    rep.pass = elements_ok && rep.products_ok && rep.den_sequence_equal &&
               rep.min_rs_equal;
    return rep;
}

} // namespace purefield
