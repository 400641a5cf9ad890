#include "purefield/field.hpp"

#include <algorithm>

namespace purefield {

namespace {

bool is_exact_power(const Int& a, unsigned long p) {
    // Is a = b^p for some integer b?  Negative a only for odd p.
    if (a < 0 && p % 2 == 0)
        return false;
    Int absa = abs(a);
    Int root;
    return mpz_root(root.get_mpz_t(), absa.get_mpz_t(), p) != 0;
}

} // namespace

std::shared_ptr<const PureField> PureField::validate(unsigned long n, const Int& a) {
    if (n < 2)
        throw ValidationError(ValidationCode::BadInput, "degree must be >= 2");
    if (a == 0)
        throw ValidationError(ValidationCode::BadInput, "radicand must be nonzero");
    if (abs(a) == 1)
        throw ValidationError(ValidationCode::UnitRadicand, "|a| = 1 is excluded");

    auto f = std::shared_ptr<PureField>(new PureField());
    f->n_ = n;
    f->a_ = a;
    f->n_fact_ = factorize(Int(n));
    f->a_fact_ = factorize(abs(a));

    // For every p | n, p | a forces v_p(a) coprime to p.
    for (const auto& [p, s] : f->n_fact_.factors) {
        unsigned long v = f->a_fact_.exponent_of(p);
        if (v > 0 && Int(v) % p == 0)
            throw ValidationError(ValidationCode::ExcludedPrime,
                                  "v_" + p.get_str() + "(a) = " + std::to_string(v) +
                                      " is not coprime to " + p.get_str());
    }

    // Capelli: x^n - a reducible iff a is a p-th power for some p | n,
    // or 4 | n and a = -4 b^4.
    for (const auto& [p, s] : f->n_fact_.factors) {
        if (is_exact_power(a, p.get_ui()))
            throw ValidationError(ValidationCode::Reducible,
                                  "x^" + std::to_string(n) + " - " + a.get_str() +
                                      " is reducible: a is a " + p.get_str() +
                                      "-th power");
    }
    if (n % 4 == 0 && a < 0 && a % 4 == 0 && is_exact_power(-a / 4, 4))
        throw ValidationError(ValidationCode::Reducible,
                              "x^" + std::to_string(n) + " - " + a.get_str() +
                                  " is reducible: a = -4 b^4");

    // Also rejects radicands that are not n-th power free.
    f->sq_ = squarefree_decompose(a, n);

    for (const auto& [p, s] : f->n_fact_.factors) {
        if (f->a_fact_.exponent_of(p) > 0)
            continue;
        unsigned long v = valuation_of_power_minus_one(a, p.get_ui() - 1, p);
        f->r_[p] = static_cast<long>(v) - 1;
    }
    return f;
}

long PureField::r_of(const Int& p) const {
    auto it = r_.find(p);
    return it == r_.end() ? -1 : it->second;
}

std::vector<Int> PureField::s_primes() const {
    std::vector<Int> out;
    for (const auto& [p, r] : r_)
        if (r >= 1)
            out.push_back(p);
    return out;
}

FieldElement::FieldElement(FieldPtr field, Int den, std::vector<Int> num)
    : field_(std::move(field)), den_(std::move(den)), num_(std::move(num)) {
    if (!field_)
        throw DomainError("FieldElement: null field");
    if (den_ == 0)
        throw DomainError("FieldElement: zero denominator");
    if (num_.size() > field_->degree())
        throw DomainError("FieldElement: coefficient vector longer than degree");
    num_.resize(field_->degree(), Int(0));
    if (den_ < 0) {
        den_ = -den_;
        for (Int& c : num_)
            c = -c;
    }
    Int g = den_;
    for (const Int& c : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    if (g > 1) {
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        for (Int& c : num_)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    if (std::all_of(num_.begin(), num_.end(), [](const Int& c) { return c == 0; }))
        den_ = 1;
}

FieldElement FieldElement::zero(FieldPtr field) {
    unsigned long n = field->degree();
    return FieldElement(std::move(field), 1, std::vector<Int>(n, Int(0)));
}

FieldElement FieldElement::one(FieldPtr field) {
    unsigned long n = field->degree();
    std::vector<Int> num(n, Int(0));
    num[0] = 1;
    return FieldElement(std::move(field), 1, std::move(num));
}

FieldElement FieldElement::theta_power(FieldPtr field, unsigned long m) {
    unsigned long n = field->degree();
    if (m >= n)
        throw DomainError("theta_power: exponent must be < degree");
    std::vector<Int> num(n, Int(0));
    num[m] = 1;
    return FieldElement(std::move(field), 1, std::move(num));
}

bool FieldElement::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const Int& c) { return c == 0; });
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_->same_field(*o.field_) && den_ == o.den_ && num_ == o.num_;
}

namespace {

void require_same_field(const FieldElement& x, const FieldElement& y) {
    if (!x.field()->same_field(*y.field()))
        throw DomainError("elements belong to different fields");
}

// Multiplication-by-(sum c_i theta^i) matrix over the integers:
// entry (r, j) = c_{r-j} for r >= j, a * c_{n+r-j} otherwise.
IntMatrix mul_matrix_int(const PureField& f, const std::vector<Int>& c) {
    const unsigned long n = f.degree();
    IntMatrix m(n, n);
    for (unsigned long r = 0; r < n; ++r)
        for (unsigned long j = 0; j < n; ++j)
            m.at(r, j) = r >= j ? c[r - j] : Int(f.radicand() * c[n + r - j]);
    return m;
}

} // namespace

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    const unsigned long n = x.field()->degree();
    Int l;
    mpz_lcm(l.get_mpz_t(), x.den().get_mpz_t(), y.den().get_mpz_t());
    Int fx = l / x.den(), fy = l / y.den();
    std::vector<Int> num(n);
    for (unsigned long i = 0; i < n; ++i)
        num[i] = fx * x.num()[i] + fy * y.num()[i];
    return FieldElement(x.field(), l, std::move(num));
}

FieldElement operator-(const FieldElement& x) {
    std::vector<Int> num(x.num());
    for (Int& c : num)
        c = -c;
    return FieldElement(x.field(), x.den(), std::move(num));
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    return x + (-y);
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    const unsigned long n = x.field()->degree();
    const Int& a = x.field()->radicand();
    std::vector<Int> conv(2 * n - 1, Int(0));
    for (unsigned long i = 0; i < n; ++i) {
        if (x.num()[i] == 0)
            continue;
        for (unsigned long j = 0; j < n; ++j)
            conv[i + j] += x.num()[i] * y.num()[j];
    }
    std::vector<Int> num(conv.begin(), conv.begin() + n);
    for (unsigned long t = n; t < 2 * n - 1; ++t)
        num[t - n] += a * conv[t];
    return FieldElement(x.field(), x.den() * y.den(), std::move(num));
}

FieldElement operator*(const Int& c, const FieldElement& x) {
    std::vector<Int> num(x.num());
    for (Int& v : num)
        v *= c;
    return FieldElement(x.field(), x.den(), std::move(num));
}

FieldElement element_mul(const FieldElement& x, const FieldElement& y) {
    return x * y;
}

RatMatrix multiplication_matrix(const FieldElement& x) {
    const unsigned long n = x.field()->degree();
    IntMatrix m = mul_matrix_int(*x.field(), x.num());
    RatMatrix out(n, n);
    for (unsigned long i = 0; i < n; ++i)
        for (unsigned long j = 0; j < n; ++j) {
            Rat q(m.at(i, j), x.den());
            q.canonicalize();
            out.at(i, j) = q;
        }
    return out;
}

std::vector<Rat> char_poly(const FieldElement& x) {
    const unsigned long n = x.field()->degree();
    std::vector<Int> c = charpoly(mul_matrix_int(*x.field(), x.num()));
    // char poly of A/q: coefficient i of det(xI - A/q) is c_i / q^{n-i}
    std::vector<Rat> out(n + 1);
    for (unsigned long i = 0; i <= n; ++i) {
        Rat q(c[i], pow_ui(x.den(), n - i));
        q.canonicalize();
        out[i] = q;
    }
    return out;
}

bool is_algebraic_integer(const FieldElement& x) {
    if (x.den() == 1)
        return true;
    const unsigned long n = x.field()->degree();
    IntMatrix m = mul_matrix_int(*x.field(), x.num());
    for (const auto& [p, e] : factorize(x.den()).factors) {
        Int cap = pow_ui(p, e * n);
        std::vector<Int> c = charpoly_mod(m, cap);
        for (unsigned long i = 0; i < n; ++i) {
            Int need = pow_ui(p, e * (n - i));
            if (c[i] % need != 0)
                return false;
        }
    }
    return true;
}

Rat disc_of_elements(const std::vector<FieldElement>& xs) {
    if (xs.empty())
        throw DomainError("disc_of_elements: empty list");
    const FieldPtr& f = xs[0].field();
    const unsigned long n = f->degree();
    if (xs.size() != n)
        throw DomainError("disc_of_elements: need exactly n = " + std::to_string(n) +
                          " elements");
    for (const auto& x : xs)
        require_same_field(xs[0], x);
    const Int& a = f->radicand();
    // Tr(sum c_i theta^i) = n c_0, so the trace of a product needs only the
    // constant coordinate of the reduced convolution.
    IntMatrix t(n, n);
    for (unsigned long i = 0; i < n; ++i)
        for (unsigned long j = i; j < n; ++j) {
            Int c0 = xs[i].num()[0] * xs[j].num()[0];
            Int wrap = 0;
            for (unsigned long u = 1; u < n; ++u)
                wrap += xs[i].num()[u] * xs[j].num()[n - u];
            c0 += a * wrap;
            t.at(i, j) = c0 * n;
            t.at(j, i) = t.at(i, j);
        }
    Int dens = 1;
    for (const auto& x : xs)
        dens *= x.den();
    Rat out(det_bareiss(t), dens * dens);
    out.canonicalize();
    return out;
}

Int transition_determinant(const PureField& field, const ExponentProfile& profile) {
    const unsigned long n = field.degree();
    // C = prod_m C_m = prod_j a_j^{sum_m floor(jm/n)} via the floor-sum identity.
    Int c = 1;
    for (const auto& [j, aj] : field.squarefree_parts().parts) {
        Int e = floor_sum(Int(j), Int(n));
        c *= pow_ui(aj, e.get_ui());
    }
    Int result = c;
    for (const Int& p : profile.s_primes) {
        unsigned long ksum = 0;
        for (const ProfileEntry& e : profile.rows.at(p))
            ksum += e.k;
        // closed form: n_i * sum_{j=1}^{d_i} p^{s_i - j}
        unsigned long s = field.n_factorization().exponent_of(p);
        unsigned long ni = n / pow_ui(p, s).get_ui();
        Int closed = 0;
        for (unsigned long j = 1; j <= profile.d.at(p); ++j)
            closed += pow_ui(p, s - j);
        closed *= ni;
        if (closed != Int(ksum))
            throw Error("transition_determinant: exponent sum " + std::to_string(ksum) +
                        " for p = " + p.get_str() + " disagrees with closed form " +
                        closed.get_str());
        result *= pow_ui(p, ksum);
    }
    return result;
}

bool module_span_equal(const std::vector<FieldElement>& xs,
                       const std::vector<FieldElement>& ys) {
    if (xs.empty() || ys.empty())
        throw DomainError("module_span_equal: empty list");
    require_same_field(xs[0], ys[0]);
    const unsigned long n = xs[0].field()->degree();
    if (xs.size() != n || ys.size() != n)
        throw DomainError("module_span_equal: need exactly n elements per list");
    Int l = 1;
    for (const auto& x : xs)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    for (const auto& y : ys)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), y.den().get_mpz_t());
    auto scaled = [&](const std::vector<FieldElement>& es) {
        std::vector<std::vector<Int>> rows;
        rows.reserve(es.size());
        for (const auto& e : es) {
            Int f = l / e.den();
            std::vector<Int> row(n);
            for (unsigned long i = 0; i < n; ++i)
                row[i] = f * e.num()[i];
            rows.push_back(std::move(row));
        }
        return rows;
    };
    IntMatrix hx = hnf(scaled(xs));
    IntMatrix hy = hnf(scaled(ys));
    if (hx.rows() < n)
        throw RankError("module_span_equal: first list is Q-linearly dependent");
    if (hy.rows() < n)
        throw RankError("module_span_equal: second list is Q-linearly dependent");
    return hx == hy;
}

} // namespace purefield
