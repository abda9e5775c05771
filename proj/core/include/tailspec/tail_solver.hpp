#pragma once

#include <string>
#include <vector>

#include "tailspec/char_poly.hpp"
#include "tailspec/graph.hpp"
#include "tailspec/sym_eigen.hpp"

namespace tailspec {

/// Joukowski map lambda = x + 1/x. The branch with |x| < 1 sends
/// (0,1) onto (2,inf) and (-1,0) onto (-inf,-2).
double lambda_from_x(double x);
/// Inverse branch with |x| < 1 and sign(x) = sign(lambda); needs |lambda| > 2.
double x_from_lambda(double lambda);

/// Entry (i,j) of the resolvent (lambda I - A)^{-1} of the one-sided
/// infinite path, lambda = z + 1/z, 0 < |z| < 1, 1-based indices:
///   r_ij(z) = (z^{i+j} - z^{|i-j|}) / (z - 1/z).
/// In particular r_11(z) = z.
double green_free(double z, int i, int j);

struct GreenEntry {
    double z = 0.0;
    int i = 1;
    int j = 1;
    double value = 0.0;  // r_ij(z), symmetric in (i, j)
};

GreenEntry green_entry(double z, int i, int j);

enum class BandSide { above, below };

struct EigenvalueRecord {
    double lambda = 0.0;
    double x = 0.0;  // in (-1,1)\{0}, lambda = x + 1/x
    BandSide side = BandSide::above;
    double residual = 0.0;  // |P(lambda) - x Pv(lambda)| in doubles
    bool near_band = false;  // |x| > 1 - 1e-6: low confidence
};

/// Essential band [-2,2] plus the discrete eigenvalues of g + ray.
struct SpectrumReport {
    double band_lo = -2.0;
    double band_hi = 2.0;
    std::vector<EigenvalueRecord> eigenvalues;  // sorted by lambda
    int stripped_x_power = 0;
    int s_degree = 0;
    int band_edge_roots_discarded = 0;  // roots of S at x = +-1
};

/// Options shared by the solving paths.
struct SolveOptions {
    double refine_tol = 1e-13;    // x-space bisection width
    double monotone_tol = 1e-14;  // t-space bisection width
};

/// Spectrum of the infinite graph obtained by attaching a one-sided
/// infinite path at g's anchor. The essential band is [-2,2] (a finite
/// coupling is a finite-rank perturbation of the free path); the discrete
/// eigenvalues are the roots of the tail equation
///   P(lambda) - x Pv(lambda) = 0,  lambda = x + 1/x,  x in (-1,1)\{0},
/// where P = charpoly(g) and Pv = charpoly(g minus the anchor).
SpectrumReport discrete_spectrum(const Graph& g, const SolveOptions& opts = {});

/// Same as discrete_spectrum with eigenvalues sorted and residuals
/// attached (kept as a separate entry point for report assembly).
SpectrumReport full_spectrum_report(const Graph& g, const SolveOptions& opts = {});

/// The n x n Schur complement lambda I - A(g) - x E at the anchor slot,
/// where x solves lambda = x + 1/x with |x| < 1. Defined for |lambda| > 2;
/// its determinant vanishes exactly at the discrete eigenvalues.
SymMatrix schur_complement_matrix(const Graph& g, double lambda);

}  // namespace tailspec
