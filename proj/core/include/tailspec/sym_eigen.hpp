#pragma once

#include <vector>

#include "tailspec/graph.hpp"

namespace tailspec {

/// Dense symmetric real matrix, stored as the lower triangle.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int dim);

    int dim() const { return dim_; }
    double at(int i, int j) const;     // 0-based, symmetric access
    void set(int i, int j, double v);  // sets both (i,j) and (j,i)

  private:
    int dim_ = 0;
    std::vector<double> tri_;  // row-major lower triangle
};

SymMatrix adjacency_matrix(const Graph& g);

/// All eigenvalues in nondecreasing order: Householder tridiagonalization
/// followed by implicit-shift QL iteration. Works on a private copy.
/// Throws NumericError if the QL iteration cap is exceeded.
std::vector<double> sym_eigenvalues(const SymMatrix& m);

/// Determinant via LU with partial pivoting (on a dense copy).
double determinant(const SymMatrix& m);

}  // namespace tailspec
