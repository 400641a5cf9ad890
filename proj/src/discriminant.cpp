#include "purefield/discriminant.hpp"

#include <numeric>

namespace purefield {

unsigned long DiscriminantFactorization::exponent_of(const Int& p) const {
    auto it = exponents.find(p);
    return it == exponents.end() ? 0 : it->second;
}

Int DiscriminantFactorization::value() const {
    Int v = sign;
    for (const auto& [p, e] : exponents)
        v *= pow_ui(p, e);
    return v;
}

DiscriminantFactorization d_K_formula(const PureField& field) {
    const unsigned long n = field.degree();
    DiscriminantFactorization d;
    d.sign = ((n - 1) * (n - 2) / 2) % 2 == 0 ? 1 : -1;
    if (field.radicand() < 0 && (n - 1) % 2 == 1)
        d.sign = -d.sign;

    std::map<Int, unsigned long> exps;
    for (const auto& [p, s] : field.n_factorization().factors) {
        long r = field.r_of(p);
        unsigned long v;
        if (r >= 1) {
            unsigned long di = std::min<unsigned long>(static_cast<unsigned long>(r), s);
            Int sum = 0;
            for (unsigned long j = 1; j <= di; ++j)
                sum += pow_ui(p, s - j);
            unsigned long ni = n / pow_ui(p, s).get_ui();
            Int vi = Int(n) * s - 2 * ni * sum;
            if (vi < 0)
                throw Error("d_K_formula: negative exponent for p = " + p.get_str());
            v = vi.get_ui();
        } else {
            v = n * s;
        }
        exps[p] += v;
    }
    for (const auto& [q, t] : field.a_factorization().factors) {
        unsigned long g = std::gcd(t, n);
        exps[q] += n - g;
    }
    for (const auto& [p, e] : exps)
        if (e > 0)
            d.exponents[p] = e;
    return d;
}

} // namespace purefield
