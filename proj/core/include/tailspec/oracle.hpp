#pragma once

#include <cstdint>
#include <vector>

#include "tailspec/graph.hpp"
#include "tailspec/sym_eigen.hpp"
#include "tailspec/tail_solver.hpp"

namespace tailspec {

/// Eigenvalues of the finite truncation g + P_L compared against the
/// tail-equation prediction; band outliers converge geometrically to the
/// discrete spectrum as L grows.
struct TruncationReport {
    int L = 0;
    int total_dim = 0;
    std::vector<double> eigenvalues;  // sorted ascending
    std::vector<double> outliers;     // |lambda| > 2 + margin
    std::vector<double> predicted;    // from the tail equation, sorted
    double max_abs_error = 0.0;       // over sorted-order matched pairs
    double band_fill = 0.0;  // max gap between consecutive eigenvalues in [-2,2]
    double margin = 0.02;
};

/// Adjacency matrix of g with a path of L vertices coupled at the anchor.
SymMatrix truncate(const Graph& g, int L);

/// One TruncationReport per requested tail length (lengths increasing).
/// Independent lengths run concurrently; results are merged in order.
std::vector<TruncationReport> convergence_study(const Graph& g,
                                                const std::vector<int>& lengths,
                                                double margin = 0.02);

/// |(lambda I - A(P_L))^{-1}_{ij} - r_ij(z)| at lambda = z + 1/z.
/// Computed in exact rational arithmetic (z is taken as the exact
/// rational the double represents) so the geometric decay ~|z|^{2L} is
/// observable far below the double rounding floor; the dense solve is a
/// full Gaussian elimination over the rationals.
double resolvent_check(double z, int i, int j, int L);

/// Residuals of the finite-dimensional block-matrix identities on a
/// seeded random symmetric matrix with blocks of sizes dim1, dim2:
/// the two triangular factorizations through the complements
/// C22 = A22 - A21 A11^{-1} A12 and C11 = A11 - A12 A22^{-1} A21,
/// the two block-inverse formulas, and det(A) = det(A11) det(C22).
struct SchurIdentityReport {
    int dim1 = 0;
    int dim2 = 0;
    std::uint64_t seed = 0;
    int resamples = 0;  // draws rejected for ill-conditioning
    double factorization_residual_c22 = 0.0;  // relative, Frobenius
    double factorization_residual_c11 = 0.0;
    double inverse_residual_c22 = 0.0;
    double inverse_residual_c11 = 0.0;
    double det_residual = 0.0;  // relative
};

SchurIdentityReport schur_identity_check(int dim1, int dim2, std::uint64_t seed);

/// Persistence of high-multiplicity eigenvalues under coupling: an
/// eigenvalue of g with multiplicity m >= 3 stays an eigenvalue of the
/// coupled graph; truncations must carry at least m - 2 copies.
struct MultiplicityPersistence {
    double eigenvalue = 0.0;
    int multiplicity = 0;  // multiplicity in charpoly(g), >= 3
    int persisted = 0;     // truncated eigenvalues within 1e-8
};

/// Empty when g has no eigenvalue of multiplicity >= 3 or when some
/// vertex is unreachable from the anchor.
std::vector<MultiplicityPersistence> embedded_multiplicity_probe(const Graph& g,
                                                                 int L);

}  // namespace tailspec
