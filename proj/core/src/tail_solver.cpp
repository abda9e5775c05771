#include "tailspec/tail_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tailspec/roots.hpp"

namespace tailspec {

double lambda_from_x(double x) {
    if (x == 0.0) throw std::invalid_argument("lambda_from_x: x = 0");
    return x + 1.0 / x;
}

double x_from_lambda(double lambda) {
    if (!(std::abs(lambda) > 2.0))
        throw std::invalid_argument("x_from_lambda: need |lambda| > 2");
    // the |x| < 1 branch of x^2 - lambda x + 1 = 0, in cancellation-free form
    return 2.0 / (lambda + std::copysign(std::sqrt(lambda * lambda - 4.0), lambda));
}

double green_free(double z, int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("green_free: indices are 1-based");
    if (z == 0.0 || std::abs(z) >= 1.0)
        throw std::invalid_argument("green_free: need 0 < |z| < 1");
    return (std::pow(z, i + j) - std::pow(z, std::abs(i - j))) / (z - 1.0 / z);
}

GreenEntry green_entry(double z, int i, int j) {
    return GreenEntry{z, i, j, green_free(z, i, j)};
}

SpectrumReport discrete_spectrum(const Graph& g, const SolveOptions& opts) {
    if (!g.anchor)
        throw std::invalid_argument("discrete_spectrum: anchor not set");

    const IntPoly p = charpoly(g);
    const IntPoly pv = charpoly(delete_vertices(g, {*g.anchor}));
    const TailEquation eq = tail_equation_poly(p, pv);

    SpectrumReport report;
    report.stripped_x_power = eq.stripped_x_power;
    report.s_degree = eq.s.degree();

    // roots of S at the band edges x = +-1 map to lambda = +-2, which lie
    // on the essential spectrum, not in the discrete one
    for (long r : {1L, -1L}) {
        IntPoly s = eq.s;
        while (s.degree() >= 1 && s.eval(mpz_class(r)) == 0) {
            s = s.deflate_root(mpq_class(r));
            ++report.band_edge_roots_discarded;
        }
    }

    for (const RootInterval& iv : sturm_isolate(eq.s, mpq_class(-1), mpq_class(1))) {
        EigenvalueRecord rec;
        rec.x = refine_root(iv, opts.refine_tol);
        rec.lambda = lambda_from_x(rec.x);
        rec.side = rec.x > 0 ? BandSide::above : BandSide::below;
        rec.residual = std::abs(p.eval(rec.lambda) - rec.x * pv.eval(rec.lambda));
        rec.near_band = std::abs(rec.x) > 1.0 - 1e-6;
        report.eigenvalues.push_back(rec);
    }
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
              [](const EigenvalueRecord& a, const EigenvalueRecord& b) {
                  return a.lambda < b.lambda;
              });
    return report;
}

SpectrumReport full_spectrum_report(const Graph& g, const SolveOptions& opts) {
    return discrete_spectrum(g, opts);
}

SymMatrix schur_complement_matrix(const Graph& g, double lambda) {
    if (!g.anchor)
        throw std::invalid_argument("schur_complement_matrix: anchor not set");
    if (!(std::abs(lambda) > 2.0))
        throw std::invalid_argument(
            "schur_complement_matrix: need |lambda| > 2 (resolvent set of the ray)");
    const double x = x_from_lambda(lambda);
    SymMatrix m(g.n);
    for (int i = 0; i < g.n; ++i) m.set(i, i, lambda);
    for (const auto& [i, j] : g.edges) m.set(i - 1, j - 1, -1.0);
    m.set(*g.anchor - 1, *g.anchor - 1, lambda - x);
    return m;
}

}  // namespace tailspec
