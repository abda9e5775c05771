#include "tailspec/sym_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dense_util.hpp"
#include "tailspec/errors.hpp"

namespace tailspec {

SymMatrix::SymMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("SymMatrix: dim must be >= 1");
    tri_.assign(static_cast<size_t>(dim) * (dim + 1) / 2, 0.0);
}

double SymMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw std::invalid_argument("SymMatrix::at: index out of range");
    if (i < j) std::swap(i, j);
    return tri_[static_cast<size_t>(i) * (i + 1) / 2 + j];
}

void SymMatrix::set(int i, int j, double v) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw std::invalid_argument("SymMatrix::set: index out of range");
    if (!std::isfinite(v))
        throw std::invalid_argument("SymMatrix::set: non-finite entry");
    if (i < j) std::swap(i, j);
    tri_[static_cast<size_t>(i) * (i + 1) / 2 + j] = v;
}

SymMatrix adjacency_matrix(const Graph& g) {
    if (g.n < 1)
        throw std::invalid_argument("adjacency_matrix: empty graph");
    SymMatrix m(g.n);
    for (const auto& [i, j] : g.edges) m.set(i - 1, j - 1, 1.0);
    return m;
}

namespace {

// Householder reduction to tridiagonal form, eigenvalues only. On exit
// d holds the diagonal and e[0..n-2] the subdiagonal.
void tridiagonalize(detail::Dense& a, std::vector<double>& d,
                    std::vector<double>& e) {
    const int n = a.rows;
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(a.at(i, k));
            if (scale == 0.0) {
                e[i] = a.at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a.at(i, k) /= scale;
                    h += a.at(i, k) * a.at(i, k);
                }
                double f = a.at(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a.at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a.at(j, k) * a.at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += a.at(k, j) * a.at(i, k);
                    e[j] = g / h;
                    f += e[j] * a.at(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a.at(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        a.at(j, k) -= f * e[k] + g * a.at(i, k);
                }
            }
        } else {
            e[i] = a.at(i, l);
        }
    }
    for (int i = 0; i < n; ++i) d[i] = a.at(i, i);
    for (int i = 0; i < n - 1; ++i) e[i] = e[i + 1];
    e[n - 1] = 0.0;
}

// QL iteration with implicit shifts on a symmetric tridiagonal matrix.
void ql_implicit(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw NumericError("sym_eigenvalues: QL iteration cap exceeded");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

std::vector<double> sym_eigenvalues(const SymMatrix& m) {
    const int n = m.dim();
    detail::Dense a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) a.at(i, j) = a.at(j, i) = m.at(i, j);
    if (n == 1) return {a.at(0, 0)};

    std::vector<double> d, e;
    tridiagonalize(a, d, e);
    ql_implicit(d, e);
    std::sort(d.begin(), d.end());
    return d;
}

double determinant(const SymMatrix& m) {
    const int n = m.dim();
    detail::Dense a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) a.at(i, j) = a.at(j, i) = m.at(i, j);
    return detail::lu_det(std::move(a));
}

}  // namespace tailspec
