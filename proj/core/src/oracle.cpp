#include "tailspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

#include "dense_util.hpp"
#include "rat_poly.hpp"
#include "tailspec/char_poly.hpp"
#include "tailspec/errors.hpp"
#include "tailspec/roots.hpp"

namespace tailspec {

SymMatrix truncate(const Graph& g, int L) {
    if (!g.anchor) throw std::invalid_argument("truncate: anchor not set");
    if (L < 1) throw std::invalid_argument("truncate: L must be >= 1");
    Graph tail = build_path(L);
    tail.anchor = 1;
    return adjacency_matrix(couple(g, tail));
}

namespace {

TruncationReport one_truncation(const Graph& g, int L,
                                const std::vector<double>& predicted,
                                double margin) {
    TruncationReport rep;
    rep.L = L;
    rep.total_dim = g.n + L;
    rep.margin = margin;
    rep.predicted = predicted;
    rep.eigenvalues = sym_eigenvalues(truncate(g, L));

    for (double ev : rep.eigenvalues)
        if (std::abs(ev) > 2.0 + margin) rep.outliers.push_back(ev);

    const size_t matched = std::min(rep.outliers.size(), predicted.size());
    for (size_t k = 0; k < matched; ++k)
        rep.max_abs_error =
            std::max(rep.max_abs_error, std::abs(rep.outliers[k] - predicted[k]));

    std::vector<double> inside;
    for (double ev : rep.eigenvalues)
        if (ev >= -2.0 && ev <= 2.0) inside.push_back(ev);
    if (inside.size() < 2) {
        rep.band_fill = 4.0;
    } else {
        for (size_t k = 1; k < inside.size(); ++k)
            rep.band_fill = std::max(rep.band_fill, inside[k] - inside[k - 1]);
    }
    return rep;
}

}  // namespace

std::vector<TruncationReport> convergence_study(const Graph& g,
                                                const std::vector<int>& lengths,
                                                double margin) {
    if (lengths.empty())
        throw std::invalid_argument("convergence_study: no lengths given");
    for (size_t k = 1; k < lengths.size(); ++k)
        if (lengths[k] <= lengths[k - 1])
            throw std::invalid_argument(
                "convergence_study: lengths must be strictly increasing");

    std::vector<double> predicted;
    for (const auto& rec : discrete_spectrum(g).eigenvalues)
        predicted.push_back(rec.lambda);

    std::vector<std::future<TruncationReport>> jobs;
    jobs.reserve(lengths.size());
    for (int L : lengths)
        jobs.push_back(std::async(std::launch::async, one_truncation, std::cref(g),
                                  L, std::cref(predicted), margin));
    std::vector<TruncationReport> out;
    out.reserve(lengths.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

namespace {

// exact (i,j) resolvent entry of the L-vertex path at lambda = z + 1/z:
// Gaussian elimination over the rationals on the dense (lambda I - A) copy
mpq_class truncated_resolvent_entry(const mpq_class& z, int i, int j, int L) {
    const mpq_class lam = z + 1 / z;
    std::vector<mpq_class> m(static_cast<size_t>(L) * L, mpq_class(0));
    for (int r = 0; r < L; ++r) {
        m[static_cast<size_t>(r) * L + r] = lam;
        if (r + 1 < L) {
            m[static_cast<size_t>(r) * L + r + 1] = -1;
            m[static_cast<size_t>(r + 1) * L + r] = -1;
        }
    }
    std::vector<mpq_class> b(L, mpq_class(0));
    b[j - 1] = 1;

    for (int k = 0; k < L; ++k) {
        int pivot = k;
        for (int r = k + 1; r < L; ++r)
            if (cmp(abs(m[static_cast<size_t>(r) * L + k]),
                    abs(m[static_cast<size_t>(pivot) * L + k])) > 0)
                pivot = r;
        if (pivot != k) {
            for (int c = k; c < L; ++c)
                std::swap(m[static_cast<size_t>(k) * L + c],
                          m[static_cast<size_t>(pivot) * L + c]);
            std::swap(b[k], b[pivot]);
        }
        const mpq_class& pv = m[static_cast<size_t>(k) * L + k];
        if (pv == 0) throw NumericError("resolvent_check: singular system");
        for (int r = k + 1; r < L; ++r) {
            mpq_class& head = m[static_cast<size_t>(r) * L + k];
            if (head == 0) continue;
            mpq_class f = head / pv;
            f.canonicalize();
            head = 0;
            for (int c = k + 1; c < L; ++c) {
                const mpq_class& top = m[static_cast<size_t>(k) * L + c];
                if (top != 0) m[static_cast<size_t>(r) * L + c] -= f * top;
            }
            if (b[k] != 0) b[r] -= f * b[k];
        }
    }
    for (int r = L - 1; r >= 0; --r) {
        for (int c = r + 1; c < L; ++c) {
            const mpq_class& v = m[static_cast<size_t>(r) * L + c];
            if (v != 0 && b[c] != 0) b[r] -= v * b[c];
        }
        b[r] /= m[static_cast<size_t>(r) * L + r];
        b[r].canonicalize();
    }
    return b[i - 1];
}

mpq_class qpow(const mpq_class& z, int e) {
    mpq_class acc = 1;
    for (int k = 0; k < e; ++k) acc *= z;
    acc.canonicalize();
    return acc;
}

}  // namespace

double resolvent_check(double z, int i, int j, int L) {
    if (z == 0.0 || std::abs(z) >= 1.0)
        throw std::invalid_argument("resolvent_check: need 0 < |z| < 1");
    if (L < 1) throw std::invalid_argument("resolvent_check: L must be >= 1");
    if (i < 1 || j < 1 || i > L || j > L)
        throw std::invalid_argument("resolvent_check: need 1 <= i,j <= L");

    const mpq_class zq(z);  // the exact binary rational behind the double
    const mpq_class exact =
        (qpow(zq, i + j) - qpow(zq, std::abs(i - j))) / (zq - 1 / zq);
    mpq_class diff = truncated_resolvent_entry(zq, i, j, L) - exact;
    diff.canonicalize();
    return std::abs(diff.get_d());
}

namespace {

using detail::Dense;

double uniform_pm1(std::mt19937_64& rng) {
    // 53 mantissa bits, identical on every platform
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

double cond_frobenius(const Dense& m) {
    Dense inv;
    if (!detail::invert(m, inv)) return std::numeric_limits<double>::infinity();
    return frobenius(m) * frobenius(inv);
}

Dense block(const Dense& a, int r0, int c0, int rows, int cols) {
    Dense b(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) b.at(i, j) = a.at(r0 + i, c0 + j);
    return b;
}

void place(Dense& a, const Dense& b, int r0, int c0) {
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) a.at(r0 + i, c0 + j) = b.at(i, j);
}

Dense assemble(const Dense& b11, const Dense& b12, const Dense& b21,
               const Dense& b22) {
    Dense a(b11.rows + b21.rows, b11.cols + b12.cols);
    place(a, b11, 0, 0);
    place(a, b12, 0, b11.cols);
    place(a, b21, b11.rows, 0);
    place(a, b22, b11.rows, b11.cols);
    return a;
}

}  // namespace

SchurIdentityReport schur_identity_check(int dim1, int dim2, std::uint64_t seed) {
    if (dim1 < 1 || dim2 < 1)
        throw std::invalid_argument("schur_identity_check: dims must be >= 1");
    const int n = dim1 + dim2;

    // Residuals of the factorizations grow like eps * cond(A11), so the
    // accepted draws are kept well-conditioned; the identities are then
    // resolvable at the 1e-12 scale in doubles.
    constexpr double kMaxCond = 1e3;

    std::mt19937_64 rng(seed);
    Dense a;
    Dense a11, a12, a21, a22;
    int resamples = 0;
    for (;; ++resamples) {
        if (resamples > 100)
            throw NumericError(
                "schur_identity_check: persistent ill-conditioning after 100 "
                "resamples");
        a = Dense(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a.at(i, j) = a.at(j, i) = uniform_pm1(rng);
        a11 = block(a, 0, 0, dim1, dim1);
        a12 = block(a, 0, dim1, dim1, dim2);
        a21 = block(a, dim1, 0, dim2, dim1);
        a22 = block(a, dim1, dim1, dim2, dim2);
        if (cond_frobenius(a11) <= kMaxCond && cond_frobenius(a22) <= kMaxCond &&
            cond_frobenius(a) <= kMaxCond)
            break;
    }

    Dense inv11, inv22;
    detail::invert(a11, inv11);
    detail::invert(a22, inv22);
    const Dense c22 = a22 - a21 * (inv11 * a12);
    const Dense c11 = a11 - a12 * (inv22 * a21);

    SchurIdentityReport rep;
    rep.dim1 = dim1;
    rep.dim2 = dim2;
    rep.seed = seed;
    rep.resamples = resamples;

    const double scale_a = frobenius(a);

    // lower-triangular * block-diagonal * upper-triangular through C22
    {
        Dense lower = assemble(Dense::identity(dim1), Dense(dim1, dim2),
                               a21 * inv11, Dense::identity(dim2));
        Dense mid = assemble(a11, Dense(dim1, dim2), Dense(dim2, dim1), c22);
        Dense upper = assemble(Dense::identity(dim1), inv11 * a12,
                               Dense(dim2, dim1), Dense::identity(dim2));
        rep.factorization_residual_c22 =
            frobenius(lower * mid * upper - a) / scale_a;
    }
    // upper * block-diagonal * lower through C11
    {
        Dense upper = assemble(Dense::identity(dim1), a12 * inv22,
                               Dense(dim2, dim1), Dense::identity(dim2));
        Dense mid = assemble(c11, Dense(dim1, dim2), Dense(dim2, dim1), a22);
        Dense lower = assemble(Dense::identity(dim1), Dense(dim1, dim2),
                               inv22 * a21, Dense::identity(dim2));
        rep.factorization_residual_c11 =
            frobenius(upper * mid * lower - a) / scale_a;
    }

    Dense direct_inv;
    if (!detail::invert(a, direct_inv))
        throw NumericError("schur_identity_check: singular full matrix");
    const double scale_inv = frobenius(direct_inv);

    {
        Dense invc11;
        if (!detail::invert(c11, invc11))
            throw NumericError("schur_identity_check: singular C11");
        Dense b11 = invc11;
        Dense b12 = Dense(dim1, dim2) - invc11 * (a12 * inv22);
        Dense b21 = Dense(dim2, dim1) - inv22 * (a21 * invc11);
        Dense b22 = inv22 + inv22 * (a21 * (invc11 * (a12 * inv22)));
        rep.inverse_residual_c11 =
            frobenius(assemble(b11, b12, b21, b22) - direct_inv) / scale_inv;
    }
    {
        Dense invc22;
        if (!detail::invert(c22, invc22))
            throw NumericError("schur_identity_check: singular C22");
        Dense b11 = inv11 + inv11 * (a12 * (invc22 * (a21 * inv11)));
        Dense b12 = Dense(dim1, dim2) - inv11 * (a12 * invc22);
        Dense b21 = Dense(dim2, dim1) - invc22 * (a21 * inv11);
        Dense b22 = invc22;
        rep.inverse_residual_c22 =
            frobenius(assemble(b11, b12, b21, b22) - direct_inv) / scale_inv;
    }

    const double det_a = detail::lu_det(a);
    const double det_split = detail::lu_det(a11) * detail::lu_det(c22);
    rep.det_residual = std::abs(det_a - det_split) / std::max(std::abs(det_a), 1e-300);
    return rep;
}

std::vector<MultiplicityPersistence> embedded_multiplicity_probe(const Graph& g,
                                                                 int L) {
    if (!g.anchor)
        throw std::invalid_argument("embedded_multiplicity_probe: anchor not set");
    if (L < 1)
        throw std::invalid_argument("embedded_multiplicity_probe: L must be >= 1");

    std::vector<MultiplicityPersistence> out;
    if (!connected_from(g, *g.anchor)) return out;

    const IntPoly p = charpoly(g);
    const auto factors = detail::squarefree_decomposition(p);

    std::vector<std::pair<double, int>> targets;  // (eigenvalue, multiplicity)
    for (size_t idx = 2; idx < factors.size(); ++idx) {
        const IntPoly& f = factors[idx];
        if (f.degree() < 1) continue;
        // all eigenvalues lie within the degree bound |lambda| <= n
        const mpq_class bound(g.n + 1);
        for (const RootInterval& iv : sturm_isolate(f, -bound, bound))
            targets.emplace_back(refine_root(iv), static_cast<int>(idx) + 1);
    }
    if (targets.empty()) return out;

    const std::vector<double> eigs = sym_eigenvalues(truncate(g, L));
    for (const auto& [value, mult] : targets) {
        MultiplicityPersistence rec;
        rec.eigenvalue = value;
        rec.multiplicity = mult;
        for (double ev : eigs)
            if (std::abs(ev - value) <= 1e-8) ++rec.persisted;
        out.push_back(rec);
    }
    std::sort(out.begin(), out.end(),
              [](const MultiplicityPersistence& a, const MultiplicityPersistence& b) {
                  return a.eigenvalue < b.eigenvalue;
              });
    return out;
}

}  // namespace tailspec
