#pragma once

#include <optional>

#include "mqdr/tensor.hpp"

// Dense per-slice matrix algorithms used by the tensor-level routines.

namespace mqdr {

/// A = F G with F m x r (orthonormal columns) and G r x n.
struct MatrixFRD {
  Matrix F;
  Matrix G;
  Index rank = 0;
};

/// A = Q D R with pairwise-orthogonal (unnormalized) columns in Q,
/// D = (Q* Q)^{-1} diagonal and R = Q* A upper trapezoidal.
struct MatrixQDR {
  Matrix Q;
  Matrix D;
  Matrix R;
  Index rank = 0;
};

/// Largest singular value (0 for empty matrices).
double spectral_norm(const Matrix& a);

/// Number of singular values strictly above
/// tol.rank_rel_tol * max(m, n) * scale, where scale defaults to sigma_1(a).
Index matrix_rank(const Matrix& a, const ToleranceConfig& tol = {},
                  std::optional<double> scale = std::nullopt);

/// Full-rank factorization from column-pivoted Householder QR.
MatrixFRD matrix_frd(const Matrix& a, const ToleranceConfig& tol = {},
                     std::optional<double> scale = std::nullopt);

/// Square-root-free Gram-Schmidt factorization. A column is kept when its
/// orthogonal remainder exceeds tol.zero_column_tol * max(scale, |a_j|).
/// With max_columns >= 0 the sweep stops after that many kept columns.
MatrixQDR matrix_qdr(const Matrix& a, const ToleranceConfig& tol = {},
                     double scale = 1.0, Index max_columns = -1);

/// Smallest j >= 0 with rank(A^j) == rank(A^{j+1}). Powers are ranked
/// against scale^j (scale defaults to sigma_1(a)).
Index matrix_index(const Matrix& a, const ToleranceConfig& tol = {},
                   std::optional<double> scale = std::nullopt);

/// Solves A X = B by LU with partial pivoting. Throws SingularSystem when a
/// pivot magnitude is at or below tol.rank_rel_tol * n * max|A_ij|.
Matrix solve_linear(const Matrix& a, const Matrix& b,
                    const ToleranceConfig& tol = {});

}  // namespace mqdr
