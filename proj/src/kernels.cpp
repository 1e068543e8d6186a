#include "mqdr/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mqdr/errors.hpp"

namespace mqdr {

namespace {

Eigen::VectorXd singular_values(const Matrix& a) {
  if (a.size() == 0) return {};
  return Eigen::JacobiSVD<Matrix>(a).singularValues();
}

double rank_threshold(const Matrix& a, const ToleranceConfig& tol,
                      double scale) {
  return tol.rank_rel_tol * static_cast<double>(std::max(a.rows(), a.cols())) *
         scale;
}

Index count_above(const Eigen::VectorXd& sv, double threshold) {
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++r;
  }
  return r;
}

}  // namespace

double spectral_norm(const Matrix& a) {
  const Eigen::VectorXd sv = singular_values(a);
  return sv.size() == 0 ? 0.0 : sv(0);
}

Index matrix_rank(const Matrix& a, const ToleranceConfig& tol,
                  std::optional<double> scale) {
  const Eigen::VectorXd sv = singular_values(a);
  if (sv.size() == 0) return 0;
  return count_above(sv, rank_threshold(a, tol, scale.value_or(sv(0))));
}

MatrixFRD matrix_frd(const Matrix& a, const ToleranceConfig& tol,
                     std::optional<double> scale) {
  MatrixFRD out;
  out.rank = matrix_rank(a, tol, scale);
  const Index r = out.rank;
  if (r == 0) {
    out.F = Matrix::Zero(a.rows(), 0);
    out.G = Matrix::Zero(0, a.cols());
    return out;
  }
  // A P = Q R; Eigen picks the first maximal column norm, so ties go to the
  // lowest column index.
  Eigen::ColPivHouseholderQR<Matrix> qr(a);
  const Matrix q = qr.householderQ() * Matrix::Identity(a.rows(), r);
  const Matrix r_top = qr.matrixR().topRows(r).triangularView<Eigen::Upper>();
  out.F = q;
  out.G = r_top * qr.colsPermutation().transpose();
  return out;
}

MatrixQDR matrix_qdr(const Matrix& a, const ToleranceConfig& tol, double scale,
                     Index max_columns) {
  const Index m = a.rows();
  const Index n = a.cols();
  std::vector<Eigen::VectorXcd> basis;
  std::vector<double> norms2;
  std::vector<Index> origin;  // column of A that produced each basis vector
  for (Index j = 0; j < n; ++j) {
    if (max_columns >= 0 && static_cast<Index>(basis.size()) >= max_columns) {
      break;
    }
    const Eigen::VectorXcd col = a.col(j);
    Eigen::VectorXcd v = col;
    // Modified Gram-Schmidt, swept twice to restore orthogonality lost to
    // cancellation.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        v -= (basis[i].dot(v) / norms2[i]) * basis[i];
      }
    }
    if (v.norm() > tol.zero_column_tol * std::max(scale, col.norm())) {
      norms2.push_back(v.squaredNorm());
      basis.push_back(std::move(v));
      origin.push_back(j);
    }
  }

  const Index r = static_cast<Index>(basis.size());
  MatrixQDR out;
  out.rank = r;
  out.Q.resize(m, r);
  out.D = Matrix::Zero(r, r);
  for (Index i = 0; i < r; ++i) {
    out.Q.col(i) = basis[static_cast<std::size_t>(i)];
    out.D(i, i) = 1.0 / norms2[static_cast<std::size_t>(i)];
  }
  out.R = out.Q.adjoint() * a;
  // Columns preceding the birth of q_i lie in span(q_1..q_{i-1}).
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < origin[static_cast<std::size_t>(i)]; ++j) {
      out.R(i, j) = Complex{};
    }
  }
  return out;
}

Index matrix_index(const Matrix& a, const ToleranceConfig& tol,
                   std::optional<double> scale) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("matrix_index needs a square matrix");
  }
  const Index m = a.rows();
  if (m == 0) return 0;
  const double base = scale.value_or(spectral_norm(a));
  Index previous = m;  // rank(A^0)
  Matrix power = a;
  double power_scale = base;
  for (Index j = 0; j <= m; ++j) {
    const Index current = matrix_rank(power, tol, power_scale);
    if (current == previous) return j;
    previous = current;
    power = power * a;
    power_scale *= base;
  }
  return m;
}

Matrix solve_linear(const Matrix& a, const Matrix& b,
                    const ToleranceConfig& tol) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) {
    throw DimensionMismatch("solve_linear: incompatible shapes");
  }
  const Index n = a.rows();
  if (n == 0) return Matrix::Zero(0, b.cols());
  Eigen::PartialPivLU<Matrix> lu(a);
  const double max_entry = a.cwiseAbs().maxCoeff();
  const double threshold = tol.rank_rel_tol * static_cast<double>(n) * max_entry;
  const auto& packed = lu.matrixLU();
  for (Index i = 0; i < n; ++i) {
    if (!(std::abs(packed(i, i)) > threshold)) {
      throw SingularSystem("pivot " + std::to_string(i) +
                           " is below the rank threshold");
    }
  }
  return lu.solve(b);
}

}  // namespace mqdr
