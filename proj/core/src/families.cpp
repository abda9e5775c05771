#include "tailspec/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tailspec/char_poly.hpp"
#include "tailspec/roots.hpp"

namespace tailspec {

namespace {

// sinh(a t)/sinh(b t) for integers 0 < a < b, safe against overflow:
//   e^{(a-b)t} (1 - e^{-2at}) / (1 - e^{-2bt}).
// Below t = 1e-6 the 0/0 form is replaced by its series
//   (a/b) (1 + (a^2 - b^2) t^2 / 6) + O(t^4).
double sinh_ratio(double a, double b, double t) {
    if (t < 1e-6) {
        double lead = a / b;
        return lead * (1.0 + (a * a - b * b) * t * t / 6.0);
    }
    return std::exp((a - b) * t) * (1.0 - std::exp(-2.0 * a * t)) /
           (1.0 - std::exp(-2.0 * b * t));
}

EigenvalueRecord make_record(double lambda, double x, const IntPoly& p,
                             const IntPoly& pv) {
    EigenvalueRecord rec;
    rec.lambda = lambda;
    rec.x = x;
    rec.side = x > 0 ? BandSide::above : BandSide::below;
    rec.residual = std::abs(p.eval(lambda) - x * pv.eval(lambda));
    rec.near_band = std::abs(x) > 1.0 - 1e-6;
    return rec;
}

}  // namespace

double star_phi(const std::vector<int>& kappa, double t) {
    double s = 0.0;
    for (int k : kappa) s += sinh_ratio(k, k + 1, t);
    return s;
}

double flower_phi_plus(const std::vector<int>& kappa, double t) {
    double s = 0.0;
    for (int k : kappa)
        s += sinh_ratio(k, k + 1, t) + sinh_ratio(1, k + 1, t);
    return 2.0 * s;
}

double flower_phi_minus(const std::vector<int>& kappa, double t) {
    double s = 0.0;
    for (int k : kappa) {
        double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
        s += sinh_ratio(k, k + 1, t) + sign * sinh_ratio(1, k + 1, t);
    }
    return 2.0 * s;
}

FamilyReport star_spectrum(const std::vector<int>& kappa,
                           const SolveOptions& opts) {
    FamilySpec spec{Family::star, kappa};
    spec.validate();

    FamilyReport report;
    report.spec = spec;
    double limit = 0.0;
    for (int k : kappa) limit += static_cast<double>(k) / (k + 1);
    report.phi_zero_limit_plus = report.phi_zero_limit_minus = limit;

    if (spec.is_trivial_star() || limit <= 1.0) return report;

    auto f = [&kappa](double t) { return star_phi(kappa, t) - std::exp(t); };
    std::optional<double> t_plus = solve_monotone(f, 1e-8, opts.monotone_tol);
    if (!t_plus) return report;

    const auto [p, pv] = family_charpoly(spec);
    const double lambda = 2.0 * std::cosh(*t_plus);
    const double x = std::exp(-*t_plus);
    report.t_plus = report.t_minus = *t_plus;
    report.lambda_plus = lambda;
    report.lambda_minus = -lambda;  // bipartite symmetry
    report.eigenvalues.push_back(make_record(-lambda, -x, p, pv));
    report.eigenvalues.push_back(make_record(lambda, x, p, pv));
    return report;
}

UniformStarRoots star_uniform_poly(int n, int p) {
    if (n < 2 || p < 1)
        throw std::invalid_argument("star_uniform_poly: need n >= 2, p >= 1");
    // (n-1) x^{2p+2} - n x^2 + 1
    IntPoly poly = IntPoly::monomial(n - 1, 2 * p + 2) +
                   IntPoly::monomial(-n, 2) + IntPoly::constant(1);
    UniformStarRoots out;
    out.poly = poly;
    for (const RootInterval& iv :
         sturm_isolate(poly, mpq_class(-1), mpq_class(1))) {
        double x = refine_root(iv);
        if (x == 0.0) continue;
        out.roots.push_back(x);
        out.lambdas.push_back(lambda_from_x(x));
    }
    return out;
}

FamilyReport flower_spectrum(const std::vector<int>& kappa,
                             const SolveOptions& opts) {
    FamilySpec spec{Family::flower, kappa};
    spec.validate();

    FamilyReport report;
    report.spec = spec;
    report.phi_zero_limit_plus = 2.0 * kappa.size();
    double lim_minus = 0.0;
    for (int k : kappa) {
        double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
        lim_minus += (k + sign) / (k + 1);
    }
    report.phi_zero_limit_minus = 2.0 * lim_minus;

    const auto [p, pv] = family_charpoly(spec);

    if (report.phi_zero_limit_minus > 1.0) {
        auto f = [&kappa](double t) {
            return flower_phi_minus(kappa, t) - std::exp(t);
        };
        if (auto t = solve_monotone(f, 1e-8, opts.monotone_tol)) {
            report.t_minus = *t;
            report.lambda_minus = -2.0 * std::cosh(*t);
            report.eigenvalues.push_back(
                make_record(*report.lambda_minus, -std::exp(-*t), p, pv));
        }
    }
    // phi_plus(0+) = 2n > 1 always, so the positive side always exists
    {
        auto f = [&kappa](double t) {
            return flower_phi_plus(kappa, t) - std::exp(t);
        };
        if (auto t = solve_monotone(f, 1e-8, opts.monotone_tol)) {
            report.t_plus = *t;
            report.lambda_plus = 2.0 * std::cosh(*t);
            report.eigenvalues.push_back(
                make_record(*report.lambda_plus, std::exp(-*t), p, pv));
        }
    }
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
              [](const EigenvalueRecord& a, const EigenvalueRecord& b) {
                  return a.lambda < b.lambda;
              });
    return report;
}

std::pair<IntPoly, IntPoly> family_charpoly(const FamilySpec& spec) {
    spec.validate();
    const auto& kappa = spec.kappa;
    const size_t n = kappa.size();

    std::vector<IntPoly> q(n);
    for (size_t j = 0; j < n; ++j) q[j] = chebyshev_q(kappa[j]);

    // products of all Q(k_i) except index j, via prefix/suffix tables
    std::vector<IntPoly> prefix(n + 1, IntPoly::constant(1));
    std::vector<IntPoly> suffix(n + 1, IntPoly::constant(1));
    for (size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] * q[j];
    for (size_t j = n; j-- > 0;) suffix[j] = suffix[j + 1] * q[j];
    const IntPoly& q_all = prefix[n];

    IntPoly p = IntPoly::monomial(1, 1) * q_all;
    for (size_t j = 0; j < n; ++j) {
        IntPoly numer = chebyshev_q(kappa[j] - 1);
        if (spec.family == Family::flower)
            numer = (numer + IntPoly::constant(1)).scaled(2);
        p -= numer * (prefix[j] * suffix[j + 1]);
    }
    return {p, q_all};
}

}  // namespace tailspec
