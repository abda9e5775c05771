#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tailspec/graph.hpp"
#include "tailspec/int_poly.hpp"
#include "tailspec/tail_solver.hpp"

namespace tailspec {

/// Closed-form spectrum of a star or flower family with a ray attached
/// at the root, via the hyperbolic substitution x = +-e^{-t}:
/// each side solves phi(t) = e^t for a strictly decreasing phi, and the
/// eigenvalue exists iff phi(0+) > 1.
struct FamilyReport {
    FamilySpec spec;
    std::optional<double> t_plus;
    std::optional<double> t_minus;
    std::optional<double> lambda_plus;   //  2 cosh(t_plus)
    std::optional<double> lambda_minus;  // -2 cosh(t_minus)
    double phi_zero_limit_plus = 0.0;    // lim_{t->0+} of the t+ equation lhs
    double phi_zero_limit_minus = 0.0;   // lim_{t->0+} of the t- equation lhs
    std::vector<EigenvalueRecord> eigenvalues;  // sorted by lambda
};

/// Left-hand sides of the family equations, evaluated overflow-safe:
/// sinh(a t)/sinh(b t) = e^{(a-b)t} (1 - e^{-2at}) / (1 - e^{-2bt}),
/// with the series limit a/b (1 + (a^2-b^2) t^2/6) below t = 1e-6.
double star_phi(const std::vector<int>& kappa, double t);
double flower_phi_plus(const std::vector<int>& kappa, double t);
double flower_phi_minus(const std::vector<int>& kappa, double t);

/// Multiple star S(kappa) + ray at the root. Solves
///   sum_j sinh(k_j t)/sinh((k_j+1) t) = e^t
/// for t+ and reports sigma_d = {+-2 cosh t+} (bipartite symmetry).
/// The trivial configuration kappa = (1,1) and any configuration with
/// phi(0+) <= 1 report an empty discrete spectrum.
FamilyReport star_spectrum(const std::vector<int>& kappa,
                           const SolveOptions& opts = {});

struct UniformStarRoots {
    IntPoly poly;                // (n-1) x^{2p+2} - n x^2 + 1
    std::vector<double> roots;   // roots in (-1,1)\{0}, ascending
    std::vector<double> lambdas; // x + 1/x for each root
};

/// Uniform-star special case k_j = p for all j: the equation reduces to
/// the fixed polynomial (n-1) x^{2p+2} - n x^2 + 1 = 0.
UniformStarRoots star_uniform_poly(int n, int p);

/// Flower F(kappa) + ray at the root. Positive side solves
///   2 sum_j [sinh(k_j t) + sinh t] / sinh((k_j+1) t) = e^t
/// (the "+ sinh t" term comes from substituting Q(lambda,m) =
/// sinh((m+1)t)/sinh t into the rational root condition
///   2 sum_j (Q(lambda,k_j-1) + 1)/Q(lambda,k_j) = 1/x); negative side
///   2 sum_j [sinh(k_j t) + (-1)^{k_j+1} sinh t] / sinh((k_j+1) t) = e^t.
/// Each side is reported absent when its phi(0+) <= 1.
FamilyReport flower_spectrum(const std::vector<int>& kappa,
                             const SolveOptions& opts = {});

/// Closed-form (P, Pv) for a family from Chebyshev path polynomials:
/// star:   P = lambda Q - sum_j Q(k_j - 1) prod_{i != j} Q(k_i),
/// flower: P = lambda Q - 2 sum_j (Q(k_j - 1) + 1) prod_{i != j} Q(k_i),
/// with Q = prod_j Q(k_j); Pv = Q in both cases. Equal (exactly) to the
/// characteristic polynomials of the built graphs.
std::pair<IntPoly, IntPoly> family_charpoly(const FamilySpec& spec);

}  // namespace tailspec
