#include "tailspec/char_poly.hpp"

#include <stdexcept>
#include <string>

namespace tailspec {

namespace {

// dense n x n integer matrix, row-major
using ZMat = std::vector<mpz_class>;

ZMat adjacency_z(const Graph& g) {
    ZMat a(static_cast<size_t>(g.n) * g.n, mpz_class(0));
    for (const auto& [i, j] : g.edges) {
        a[static_cast<size_t>(i - 1) * g.n + (j - 1)] = 1;
        a[static_cast<size_t>(j - 1) * g.n + (i - 1)] = 1;
    }
    return a;
}

ZMat mat_mul(const ZMat& a, const ZMat& b, int n) {
    ZMat c(static_cast<size_t>(n) * n, mpz_class(0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const mpz_class& aik = a[static_cast<size_t>(i) * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j)
                c[static_cast<size_t>(i) * n + j] +=
                    aik * b[static_cast<size_t>(k) * n + j];
        }
    return c;
}

mpz_class trace(const ZMat& a, int n) {
    mpz_class t = 0;
    for (int i = 0; i < n; ++i) t += a[static_cast<size_t>(i) * n + i];
    return t;
}

}  // namespace

IntPoly charpoly(const Graph& g) {
    const int n = g.n;
    if (n == 0) return IntPoly::constant(1);
    if (n > 64)
        throw std::invalid_argument("charpoly: n > 64 exceeds the practical bound");

    const ZMat a = adjacency_z(g);
    std::vector<mpz_class> c(n + 1, mpz_class(0));
    c[n] = 1;

    // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k,
    // M_{k+1} = A M_k + c_{n-k} I. Each division is exact.
    ZMat m(static_cast<size_t>(n) * n, mpz_class(0));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
    for (int k = 1; k <= n; ++k) {
        ZMat am = mat_mul(a, m, n);
        mpz_class t = trace(am, n);
        mpz_class ck;
        mpz_divexact(ck.get_mpz_t(), t.get_mpz_t(), mpz_class(-k).get_mpz_t());
        c[n - k] = ck;
        if (k < n) {
            m = std::move(am);
            for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] += ck;
        }
    }
    return IntPoly(std::move(c));
}

IntPoly chebyshev_q(int m) {
    if (m < 0) throw std::invalid_argument("chebyshev_q: m must be >= 0");
    IntPoly prev = IntPoly::constant(1);        // Q(.,0)
    if (m == 0) return prev;
    IntPoly cur = IntPoly::monomial(1, 1);      // Q(.,1)
    const IntPoly x = IntPoly::monomial(1, 1);
    for (int i = 2; i <= m; ++i) {
        IntPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly schwenk_expand(const Graph& g, int v) {
    if (g.n > 20)
        throw std::invalid_argument(
            "schwenk_expand: n > 20 (exhaustive cycle enumeration bound)");
    if (v < 1 || v > g.n)
        throw std::invalid_argument("schwenk_expand: vertex out of range");

    const IntPoly x = IntPoly::monomial(1, 1);
    IntPoly acc = x * charpoly(delete_vertices(g, {v}));
    for (int w : g.neighbors(v)) acc -= charpoly(delete_vertices(g, {v, w}));
    for (const auto& cyc : simple_cycles_through(g, v)) {
        IntPoly term = charpoly(delete_vertices(g, cyc));
        acc -= term + term;
    }
    return acc;
}

TailEquation tail_equation_poly(const IntPoly& p, const IntPoly& pv) {
    if (p.is_zero()) throw std::invalid_argument("tail_equation_poly: P is zero");
    const int n = p.degree();
    if (!pv.is_zero() && pv.degree() != n - 1)
        throw std::invalid_argument(
            "tail_equation_poly: deg Pv = " + std::to_string(pv.degree()) +
            ", expected " + std::to_string(n - 1));

    // x^n P(x + 1/x)   = sum_k p_k (x^2+1)^k x^{n-k}
    // x^n x Pv(x + 1/x) = sum_k q_k (x^2+1)^k x^{n+1-k}
    const IntPoly u = IntPoly({1, 0, 1});  // x^2 + 1
    IntPoly s0;
    IntPoly upow = IntPoly::constant(1);
    for (int k = 0; k <= n; ++k) {
        if (p.coeff(k) != 0)
            s0 += upow.scaled(p.coeff(k)) * IntPoly::monomial(1, n - k);
        if (!pv.is_zero() && k <= n - 1 && pv.coeff(k) != 0)
            s0 -= upow.scaled(pv.coeff(k)) * IntPoly::monomial(1, n + 1 - k);
        if (k < n) upow *= u;
    }

    TailEquation eq;
    eq.stripped_x_power = s0.trailing_zero_power();
    eq.s = s0.shifted_down(eq.stripped_x_power);
    eq.sign_flipped = eq.s.leading() < 0;
    if (eq.sign_flipped) eq.s = -eq.s;
    return eq;
}

}  // namespace tailspec
