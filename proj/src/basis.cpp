#include "purefield/basis.hpp"

#include <algorithm>

namespace purefield {

FieldPtr validate_field(unsigned long n, const Int& a) {
    return PureField::validate(n, a);
}

std::vector<Int> c_sequence(const PureField& field) {
    const unsigned long n = field.degree();
    std::vector<Int> c(n, Int(1));
    for (unsigned long m = 1; m < n; ++m)
        for (const auto& [j, aj] : field.squarefree_parts().parts)
            c[m] *= pow_ui(aj, j * m / n);
    return c;
}

ExponentProfile exponent_profile(const PureField& field) {
    const unsigned long n = field.degree();
    ExponentProfile prof;
    prof.s_primes = field.s_primes();
    for (const Int& p : prof.s_primes) {
        unsigned long s = field.n_factorization().exponent_of(p);
        long r = field.r_of(p);
        unsigned long d = std::min<unsigned long>(static_cast<unsigned long>(r), s);
        prof.d[p] = d;
        std::vector<ProfileEntry> row(n);
        for (unsigned long m = 0; m < n; ++m) {
            unsigned long k = 0;
            for (unsigned long t = d;; --t) {
                unsigned long nt = n / pow_ui(p, t).get_ui();
                if (m >= n - nt) {
                    k = t;
                    break;
                }
                if (t == 0)
                    break;
            }
            unsigned long npk = n / pow_ui(p, k).get_ui();
            row[m] = ProfileEntry{k, m - (n - npk), npk};
        }
        prof.rows[p] = std::move(row);
    }
    return prof;
}

AdjusterTable unit_adjusters(const PureField& field, const ExponentProfile& profile,
                             const std::vector<Int>& c) {
    const Int& a = field.radicand();
    AdjusterTable table;
    for (const Int& p : profile.s_primes) {
        unsigned long s = field.n_factorization().exponent_of(p);
        const auto& row = profile.rows.at(p);
        for (unsigned long m = 0; m < field.degree(); ++m) {
            unsigned long k = row[m].k;
            if (k == 0)
                continue;
            Int pk1 = pow_ui(p, k + 1);
            Int bprime = powmod(a, p - 2, pk1);
            Int aprime = k < s ? powmod(bprime, pow_ui(p, s - 1 - k), pk1) : bprime;
            // Lemma hypothesis a * a'^{p^k} == 1 (mod p^{k+1}); guaranteed by
            // the canonical choice, asserted to catch construction bugs.
            Int pk = pow_ui(p, k);
            if (powmod(a * powmod(aprime, pk, pk1), 1, pk1) != 1)
                throw Error("unit_adjusters: adjuster congruence failed for p = " +
                            p.get_str() + ", m = " + std::to_string(m));
            Int lhs = c[m] % pk * powmod(aprime, pk - 1, pk) % pk;
            table[p][m] = Adjuster{aprime, mod_inverse(lhs, pk)};
        }
    }
    return table;
}

FieldElement eta_element(const FieldPtr& field, const Int& p, unsigned long k,
                         const Int& a_prime) {
    const unsigned long n = field->degree();
    unsigned long s = field->n_factorization().exponent_of(p);
    long r = field->r_of(p);
    if (s == 0 || r < 1)
        throw DomainError("eta_element: p must divide n with r >= 1");
    if (k < 1 || k > std::min<unsigned long>(static_cast<unsigned long>(r), s))
        throw DomainError("eta_element: k out of range");
    unsigned long pk = pow_ui(p, k).get_ui();
    unsigned long nprime = n / pk;
    std::vector<Int> num(n, Int(0));
    Int power = 1;
    for (unsigned long j = 0; j < pk; ++j) {
        num[nprime * j] += power;
        power *= a_prime;
    }
    return FieldElement(field, pow_ui(p, k), std::move(num));
}

std::vector<Int> delta_element(const PureField& field, const Int& c_m, unsigned long m,
                               const Int& p, const ExponentProfile& profile,
                               const Int& a_prime, const Int& w) {
    const ProfileEntry& e = profile.entry(p, m);
    if (e.k == 0)
        throw DomainError("delta_element: k_{i,m} = 0 (delta is 0 by convention)");
    const unsigned long n = field.degree();
    unsigned long pk = pow_ui(p, e.k).get_ui();
    std::vector<Int> delta(n, Int(0));
    Int lead = w * c_m;
    Int power = 1;
    for (unsigned long t = 0; t + 2 <= pk; ++t) { // t = 0 .. p^k - 2
        delta[e.j + e.n_im * t] += lead * power;
        power *= a_prime;
    }
    return delta;
}

std::vector<Int> beta_combine(const PureField& field, unsigned long m,
                              const std::map<Int, std::vector<Int>>& deltas,
                              const ExponentProfile& profile) {
    const unsigned long n = field.degree();
    std::vector<Int> s_m = profile.s_m(m);
    {
        std::vector<Int> keys;
        for (const auto& [p, d] : deltas)
            keys.push_back(p);
        if (keys != s_m)
            throw DomainError("beta_combine: deltas must cover exactly S_m");
    }
    std::vector<Int> beta(n, Int(0));
    if (s_m.empty())
        return beta;
    std::vector<Int> z(s_m.size(), Int(1));
    for (std::size_t i = 0; i < s_m.size(); ++i)
        for (std::size_t j = 0; j < s_m.size(); ++j)
            if (j != i)
                z[i] *= pow_ui(s_m[j], profile.entry(s_m[j], m).k);
    BezoutResult bz = bezout(z);
    if (bz.g != 1)
        throw Error("beta_combine: z_{i,m} are not coprime"); // cannot happen
    for (std::size_t i = 0; i < s_m.size(); ++i) {
        Int factor = bz.coefficients[i] * z[i];
        const std::vector<Int>& d = deltas.at(s_m[i]);
        for (unsigned long t = 0; t < n; ++t)
            beta[t] += factor * d[t];
    }
    for (unsigned long t = m; t < n; ++t)
        if (beta[t] != 0)
            throw Error("beta_combine: degree bound violated at m = " +
                        std::to_string(m));
    return beta;
}

IntegralBasis integral_basis(const FieldPtr& field) {
    const unsigned long n = field->degree();
    IntegralBasis out;
    out.field = field;
    std::vector<Int> c = c_sequence(*field);
    ExponentProfile profile = exponent_profile(*field);
    out.s_empty = profile.s_primes.empty();
    AdjusterTable adj = out.s_empty
                            ? AdjusterTable{}
                            : unit_adjusters(*field, profile, c);
    for (unsigned long m = 0; m < n; ++m) {
        BasisElement rec;
        rec.m = m;
        rec.c_m = c[m];
        rec.denominator = c[m];
        rec.numerator.assign(n, Int(0));
        rec.numerator[m] = 1;
        if (!out.s_empty) {
            std::map<Int, std::vector<Int>> deltas;
            for (const Int& p : profile.s_m(m)) {
                const Adjuster& ad = adj.at(p).at(m);
                deltas[p] = delta_element(*field, c[m], m, p, profile, ad.a_prime, ad.w);
            }
            std::vector<Int> beta = beta_combine(*field, m, deltas, profile);
            for (unsigned long t = 0; t < m; ++t)
                rec.numerator[t] += beta[t];
            std::vector<Int> s_m = profile.s_m(m);
            std::vector<Int> z(s_m.size(), Int(1));
            for (std::size_t i = 0; i < s_m.size(); ++i)
                for (std::size_t j = 0; j < s_m.size(); ++j)
                    if (j != i)
                        z[i] *= pow_ui(s_m[j], profile.entry(s_m[j], m).k);
            BezoutResult bz = s_m.empty() ? BezoutResult{Int(1), {}} : bezout(z);
            for (std::size_t i = 0; i < s_m.size(); ++i) {
                const Int& p = s_m[i];
                const ProfileEntry& e = profile.entry(p, m);
                const Adjuster& ad = adj.at(p).at(m);
                rec.denominator *= pow_ui(p, e.k);
                rec.choices.push_back(
                    ChoiceRecord{p, e.k, e.j, ad.a_prime, ad.w, z[i], bz.coefficients[i]});
            }
        }
        out.records.push_back(rec);
        out.elements.emplace_back(field, rec.denominator, rec.numerator);
    }
    return out;
}

IntegralBasis canonicalize(const IntegralBasis& basis) {
    const unsigned long n = basis.field->degree();
    Int l = 1;
    for (const auto& e : basis.elements)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.den().get_mpz_t());
    // HNF with the column order reversed, so pivots land on the highest
    // power of theta and element m keeps the shape (theta^m + lower)/den.
    std::vector<std::vector<Int>> rows;
    for (const auto& e : basis.elements) {
        Int f = l / e.den();
        std::vector<Int> row(n);
        for (unsigned long i = 0; i < n; ++i)
            row[i] = f * e.num()[n - 1 - i];
        rows.push_back(std::move(row));
    }
    IntMatrix h = hnf(rows);
    if (h.rows() != n)
        throw Error("canonicalize: basis is not full rank");
    IntegralBasis out;
    out.field = basis.field;
    out.s_empty = basis.s_empty;
    for (unsigned long m = 0; m < n; ++m) {
        std::vector<Int> num(n);
        for (unsigned long i = 0; i < n; ++i)
            num[i] = h.at(n - 1 - m, n - 1 - i);
        FieldElement e(basis.field, l, std::move(num));
        BasisElement rec;
        rec.m = m;
        rec.denominator = e.den();
        rec.c_m = basis.records[m].c_m;
        rec.numerator = e.num();
        out.records.push_back(std::move(rec));
        out.elements.push_back(std::move(e));
    }
    return out;
}

} // namespace purefield
