#include "purefield/matrix.hpp"

#include <algorithm>

namespace purefield {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Int det_bareiss(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw DomainError("det_bareiss: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix w = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && w.at(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w.at(k, j), w.at(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    Int det = w.at(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

namespace {

Int reduced(const Int& x, const Int* mod) {
    if (!mod)
        return x;
    Int r = x % *mod;
    if (r < 0)
        r += *mod;
    return r;
}

// Berkowitz: division-free, so a nonnull `mod` keeps every intermediate
// value reduced and the whole computation bounded.
std::vector<Int> charpoly_impl(const IntMatrix& a_in, const Int* mod) {
    if (a_in.rows() != a_in.cols())
        throw DomainError("charpoly: matrix must be square");
    const std::size_t n = a_in.rows();
    if (n == 0)
        return {Int(1)};
    IntMatrix a = a_in;
    if (mod)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = reduced(a.at(i, j), mod);
    // coefficients in descending degree: c[0] = 1 (leading)
    std::vector<Int> c{Int(1), reduced(-a.at(0, 0), mod)};
    std::vector<Int> v(n), nv(n), t(n + 2);
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: [1, -a_rr, -(R S), -(R M S), ..., -(R M^{r-1} S)]
        t[0] = 1;
        t[1] = reduced(-a.at(r, r), mod);
        for (std::size_t i = 0; i < r; ++i)
            v[i] = a.at(i, r); // S
        for (std::size_t k = 0; k < r; ++k) {
            Int dot = 0;
            for (std::size_t i = 0; i < r; ++i)
                dot += a.at(r, i) * v[i];
            t[k + 2] = reduced(-dot, mod);
            if (k + 1 < r) {
                for (std::size_t i = 0; i < r; ++i) {
                    Int acc = 0;
                    for (std::size_t j = 0; j < r; ++j)
                        acc += a.at(i, j) * v[j];
                    nv[i] = reduced(acc, mod);
                }
                std::swap(v, nv);
            }
        }
        std::vector<Int> next(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            Int acc = 0;
            std::size_t jmax = std::min(i, r); // c has r+1 entries
            for (std::size_t j = (i > r + 1 ? i - r - 1 : 0); j <= jmax; ++j)
                acc += t[i - j] * c[j];
            next[i] = reduced(acc, mod);
        }
        c = std::move(next);
    }
    std::reverse(c.begin(), c.end()); // ascending degree
    return c;
}

} // namespace

std::vector<Int> charpoly(const IntMatrix& a) { return charpoly_impl(a, nullptr); }

std::vector<Int> charpoly_mod(const IntMatrix& a, const Int& modulus) {
    if (modulus < 2)
        throw DomainError("charpoly_mod: modulus must be > 1");
    return charpoly_impl(a, &modulus);
}

IntMatrix hnf(const std::vector<std::vector<Int>>& rows) {
    const std::size_t nrows = rows.size();
    if (nrows == 0)
        return IntMatrix(0, 0);
    const std::size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols)
            throw DomainError("hnf: rows must have equal length");

    std::vector<std::vector<Int>> h = rows;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < ncols && pr < nrows; ++col) {
        std::size_t piv = pr;
        while (piv < nrows && h[piv][col] == 0)
            ++piv;
        if (piv == nrows)
            continue;
        std::swap(h[pr], h[piv]);
        for (std::size_t r = pr + 1; r < nrows; ++r) {
            if (h[r][col] == 0)
                continue;
            auto [g, x, y] = ext_gcd(h[pr][col], h[r][col]);
            Int alpha = h[pr][col] / g;
            Int beta = h[r][col] / g;
            for (std::size_t j = col; j < ncols; ++j) {
                Int top = x * h[pr][j] + y * h[r][j];
                Int bot = alpha * h[r][j] - beta * h[pr][j];
                h[pr][j] = top;
                h[r][j] = bot;
            }
        }
        if (h[pr][col] < 0)
            for (std::size_t j = col; j < ncols; ++j)
                h[pr][j] = -h[pr][j];
        for (std::size_t r = 0; r < pr; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h[r][col].get_mpz_t(), h[pr][col].get_mpz_t());
            if (q != 0)
                for (std::size_t j = col; j < ncols; ++j)
                    h[r][j] -= q * h[pr][j];
        }
        ++pr;
    }
    IntMatrix out(pr, ncols);
    for (std::size_t i = 0; i < pr; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            out.at(i, j) = h[i][j];
    return out;
}

} // namespace purefield
