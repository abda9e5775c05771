#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tailspec/int_poly.hpp"

namespace tailspec {

/// Open interval (lo, hi) containing exactly one distinct real root of
/// `poly` (the square-free part of the isolated polynomial; Sturm count 1).
struct RootInterval {
    mpq_class lo;
    mpq_class hi;
    IntPoly poly;  // square-free, primitive
    std::optional<double> refined;
    std::optional<double> residual;  // |poly(refined)|
};

/// Certified isolation of the distinct real roots of p inside the open
/// interval (lo, hi), by exact rational Sturm sequences. Repeated roots
/// are merged (the count is of distinct roots); roots exactly at lo or
/// hi are excluded. Throws std::invalid_argument on the zero polynomial.
std::vector<RootInterval> sturm_isolate(const IntPoly& p, const mpq_class& lo,
                                        const mpq_class& hi);

/// Exact bisection of the isolation interval to width <= tol followed by
/// a guarded Newton polish; the result lies inside the original interval.
double refine_root(const RootInterval& r, double tol = 1e-13);

/// Unique zero of a strictly decreasing f on (t_min, infinity) with
/// f -> -infinity, found by bracket doubling then bisection to width tol.
/// Returns nullopt when f(t_min) <= 0 (no zero to the right of t_min).
std::optional<double> solve_monotone(const std::function<double(double)>& f,
                                     double t_min = 1e-8, double tol = 1e-14);

}  // namespace tailspec
