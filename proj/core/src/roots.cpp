#include "tailspec/roots.hpp"

#include <cmath>
#include <stdexcept>

#include "rat_poly.hpp"
#include "tailspec/errors.hpp"

namespace tailspec {

namespace {

using detail::RatPoly;

// Sturm chain of a square-free integer polynomial, each entry normalized
// to a primitive integer polynomial (positive scaling only: the sign
// pattern is what carries the information).
std::vector<IntPoly> sturm_chain(const IntPoly& q) {
    std::vector<IntPoly> chain{q, q.derivative()};
    while (chain.back().degree() >= 1) {
        RatPoly r = detail::rp_rem(detail::rp_from(chain[chain.size() - 2]),
                                   detail::rp_from(chain.back()));
        if (r.empty()) break;  // square-free input: happens only at the end
        for (auto& c : r) c = -c;
        chain.push_back(detail::rp_to_primitive_int(r));
    }
    return chain;
}

int sign_of(const mpq_class& v) { return sgn(v); }

// sign variations of the chain at x
int variations(const std::vector<IntPoly>& chain, const mpq_class& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

struct Isolator {
    std::vector<IntPoly> chain;
    const IntPoly* q = nullptr;
    std::vector<RootInterval>* out = nullptr;

    int count(const mpq_class& a, const mpq_class& b) const {
        return variations(chain, a) - variations(chain, b);
    }

    // both endpoints are known non-roots of q
    void isolate(const mpq_class& a, const mpq_class& b, int roots) {
        if (roots == 0) return;
        if (roots == 1) {
            out->push_back(RootInterval{a, b, *q, std::nullopt, std::nullopt});
            return;
        }
        mpq_class mid = (a + b) / 2;
        mid.canonicalize();
        if (q->eval(mid) == 0) {
            // exact rational root at the midpoint: shrink a window around
            // it until it isolates, then recurse on the flanks
            mpq_class delta = (b - a) / 4;
            while (true) {
                delta.canonicalize();
                mpq_class lo = mid - delta, hi = mid + delta;
                if (q->eval(lo) != 0 && q->eval(hi) != 0 && count(lo, hi) == 1) {
                    out->push_back(
                        RootInterval{lo, hi, *q, std::nullopt, std::nullopt});
                    isolate(a, lo, count(a, lo));
                    isolate(hi, b, count(hi, b));
                    return;
                }
                delta /= 2;
            }
        }
        int left = count(a, mid);
        isolate(a, mid, left);
        isolate(mid, b, roots - left);
    }
};

}  // namespace

std::vector<RootInterval> sturm_isolate(const IntPoly& p, const mpq_class& lo,
                                        const mpq_class& hi) {
    if (p.is_zero())
        throw std::invalid_argument("sturm_isolate: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_isolate: need lo < hi");

    IntPoly q = detail::squarefree_part(p);
    // roots exactly at the endpoints are excluded (open interval); they
    // are simple in q, so one deflation each removes them
    if (q.degree() >= 1 && q.eval(lo) == 0) q = q.deflate_root(lo);
    if (q.degree() >= 1 && q.eval(hi) == 0) q = q.deflate_root(hi);

    std::vector<RootInterval> out;
    if (q.degree() < 1) return out;

    Isolator iso;
    iso.chain = sturm_chain(q);
    iso.q = &q;
    iso.out = &out;
    iso.isolate(lo, hi, iso.count(lo, hi));

    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

double refine_root(const RootInterval& r, double tol) {
    if (tol <= 0) throw std::invalid_argument("refine_root: tol must be > 0");
    const IntPoly& q = r.poly;

    // exact bisection on the square-free polynomial: the sign change is
    // guaranteed strict, so this cannot stall
    mpq_class a = r.lo, b = r.hi;
    int sa = sgn(q.eval(a));
    if (sa == 0) return a.get_d();
    mpq_class width = b - a;
    while (width.get_d() > tol) {
        mpq_class mid = (a + b) / 2;
        mid.canonicalize();
        int sm = sgn(q.eval(mid));
        if (sm == 0) {
            a = b = mid;
            break;
        }
        if (sm == sa)
            a = mid;
        else
            b = mid;
        width = b - a;
    }

    const double lo_d = r.lo.get_d(), hi_d = r.hi.get_d();
    double x = (a.get_d() + b.get_d()) / 2;

    // guarded Newton polish; fall back to the bisection value whenever an
    // iterate leaves the bracket or stops improving
    const IntPoly dq = q.derivative();
    double best = x, best_abs = std::abs(q.eval(x));
    for (int it = 0; it < 12; ++it) {
        double d = dq.eval(x);
        if (d == 0.0) break;
        double next = x - q.eval(x) / d;
        if (!(next >= lo_d && next <= hi_d)) break;
        double v = std::abs(q.eval(next));
        if (v < best_abs) {
            best_abs = v;
            best = next;
        }
        if (next == x) break;
        x = next;
    }
    return best;
}

std::optional<double> solve_monotone(const std::function<double(double)>& f,
                                     double t_min, double tol) {
    if (t_min <= 0) throw std::invalid_argument("solve_monotone: t_min must be > 0");
    double lo = t_min;
    double f_lo = f(lo);
    if (f_lo <= 0) return std::nullopt;

    double hi = std::max(1.0, 2 * lo);
    int guard = 0;
    while (f(hi) > 0) {
        lo = hi;
        hi *= 2;
        if (++guard > 100) throw NumericError("solve_monotone: no sign change up to t = 2^100");
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (f(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace tailspec
