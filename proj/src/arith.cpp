#include "purefield/arith.hpp"

#include <algorithm>
#include <cstdint>

namespace purefield {

const char* code_string(ValidationCode code) {
    switch (code) {
    case ValidationCode::BadInput: return "bad-input";
    case ValidationCode::UnitRadicand: return "unit-radicand";
    case ValidationCode::ExcludedPrime: return "excluded-prime";
    case ValidationCode::Reducible: return "reducible";
    case ValidationCode::NotNthPowerFree: return "n-th-power";
    case ValidationCode::NotSquarefree: return "not-squarefree";
    case ValidationCode::NotCongruent: return "not-congruent";
    }
    return "unknown";
}

Int Factorization::value() const {
    Int v = sign;
    for (const auto& [p, e] : factors)
        v *= pow_ui(p, e);
    return v;
}

unsigned long Factorization::exponent_of(const Int& p) const {
    for (const auto& [q, e] : factors)
        if (q == p)
            return e;
    return 0;
}

Int SquarefreeDecomposition::part(unsigned long j) const {
    auto it = parts.find(j);
    return it == parts.end() ? Int(1) : it->second;
}

Int pow_ui(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& base, const Int& d, unsigned long s) {
    Int x = powmod(base, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1)
            return false;
    }
    return true; // base witnesses compositeness
}

// Pollard rho, Brent cycle detection.  Deterministic: the polynomial
// increment c and the starting point walk a fixed schedule, so repeated
// runs factor identically.
Int pollard_rho(const Int& n) {
    if (n % 2 == 0)
        return 2;
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1, ys = 0;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                Int diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n)
            return d;
        // cycle degenerated for this c; retry with the next increment
    }
}

void factor_into(const Int& n, std::map<Int, unsigned long>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    static const unsigned long small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                                 23, 29, 31, 37, 41, 43, 47};
    for (unsigned long p : small_primes) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    Int d = n - 1;
    unsigned long s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // Deterministic for n < 3.3e24; for larger inputs this fixed base set is
    // a very strong primality test (no random state either way).
    static const unsigned long bases[] = {2,  3,  5,  7,  11, 13, 17,
                                          19, 23, 29, 31, 37, 41};
    for (unsigned long b : bases) {
        if (Int(b) >= n)
            continue;
        if (miller_rabin_witness(n, Int(b), d, s))
            return false;
    }
    return true;
}

Factorization factorize(const Int& m) {
    if (m == 0)
        throw DomainError("factorize: argument must be nonzero");
    Factorization f;
    f.sign = m < 0 ? -1 : 1;
    Int n = abs(m);
    std::map<Int, unsigned long> acc;
    for (unsigned long p = 2; p <= 1000000ul; p += (p == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            acc[Int(p)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1)
        factor_into(n, acc);
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

unsigned long p_adic_valuation(const Int& p, const Int& m) {
    if (m == 0)
        throw DomainError("p_adic_valuation: valuation of 0 is infinite");
    Int n = abs(m);
    unsigned long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

SquarefreeDecomposition squarefree_decompose(const Int& a, unsigned long n) {
    if (a == 0 || n < 2)
        throw DomainError("squarefree_decompose: need a != 0 and n >= 2");
    SquarefreeDecomposition d;
    d.sign = a < 0 ? -1 : 1;
    Factorization f = factorize(abs(a));
    for (const auto& [q, e] : f.factors) {
        if (e >= n)
            throw ValidationError(ValidationCode::NotNthPowerFree,
                                  "|a| is not " + std::to_string(n) +
                                      "-th power free: " + q.get_str() + "^" +
                                      std::to_string(e) + " divides it");
        Int& part = d.parts.emplace(e, 1).first->second;
        part *= q;
    }
    return d;
}

Int floor_sum(const Int& t, const Int& n) {
    if (t < 1 || n < 1)
        throw DomainError("floor_sum: arguments must be positive");
    Int g;
    mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return ((n - 1) * (t - 1) + g - 1) / 2;
}

std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r; // truncated division; standard iterative scheme
        Int tmp;
        tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

BezoutResult bezout(const std::vector<Int>& values) {
    if (values.empty() || std::all_of(values.begin(), values.end(),
                                      [](const Int& v) { return v == 0; }))
        throw DomainError("bezout: need at least one nonzero value");
    BezoutResult res;
    res.g = values[0];
    res.coefficients = {Int(1)};
    for (std::size_t i = 1; i < values.size(); ++i) {
        auto [g, x, y] = ext_gcd(res.g, values[i]);
        for (Int& c : res.coefficients)
            c *= x;
        res.coefficients.push_back(y);
        res.g = g;
    }
    if (res.g < 0) {
        res.g = -res.g;
        for (Int& c : res.coefficients)
            c = -c;
    }
    return res;
}

Int mod_inverse(const Int& x, const Int& m) {
    if (m < 2)
        throw DomainError("mod_inverse: modulus must be >= 2");
    auto [g, u, v] = ext_gcd(x, m);
    if (g != 1)
        throw DomainError("mod_inverse: " + x.get_str() + " is not invertible mod " +
                          m.get_str());
    Int r = u % m;
    if (r < 0)
        r += m;
    return r;
}

unsigned long valuation_of_power_minus_one(const Int& x, unsigned long e, const Int& p) {
    if (x == 1 || (x == -1 && e % 2 == 0) || e == 0)
        throw DomainError("valuation_of_power_minus_one: x^e - 1 vanishes");
    // Compute v_p(x^e - 1) from x^e mod p^prec, doubling prec while the
    // residue collapses to 1.  Terminates because x^e != 1 for |x| >= 2.
    for (unsigned long prec = 8;; prec *= 2) {
        Int mod = pow_ui(p, prec);
        Int r = powmod(x, Int(e), mod);
        if (r != 1)
            return p_adic_valuation(p, r - 1);
    }
}

} // namespace purefield
