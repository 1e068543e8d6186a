#include "mqdr/geninv.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mqdr/errors.hpp"
#include "mqdr/kernels.hpp"

namespace mqdr {

namespace {

double fro_scale(const Tensor3& transformed) {
  double s = 0.0;
  for (Index k = 0; k < transformed.depth(); ++k) {
    s = std::max(s, transformed.slice(k).norm());
  }
  return s;
}

Matrix matrix_power(const Matrix& a, Index l) {
  Matrix out = Matrix::Identity(a.rows(), a.cols());
  for (Index i = 0; i < l; ++i) out = out * a;
  return out;
}

// Z~_k = Q (R A~_k Q)^{-1} R with [Q, D, R] = QDR(W~_k), for every slice.
// `scale` is the Gram-Schmidt reference magnitude for the W~ slices.
//
// Gram-Schmidt leaves the columns of Q unnormalized, so the core R A~ Q can be
// scaled by |q_i|^2 row and column-wise. With N = diag(1/|q_i|) the same
// product is evaluated as (QN) (N R A~ Q N)^{-1} (N R), which keeps the rank
// guard and the LU pivots meaningful when the |q_i| differ by many orders.
Tensor3 outer_from_transformed(const Tensor3& at,
                               const std::vector<Matrix>& w_slices,
                               double scale, const ToleranceConfig& tol) {
  const Index m = at.rows();
  const Index n = at.cols();
  Tensor3 zt(n, m, at.depth());
  for (Index k = 0; k < at.depth(); ++k) {
    const MatrixQDR f =
        matrix_qdr(w_slices[static_cast<std::size_t>(k)], tol, scale);
    if (f.rank == 0) continue;
    const Eigen::VectorXd inv_norms = f.Q.colwise().norm().cwiseInverse().transpose();
    const Matrix qn = f.Q * inv_norms.asDiagonal();
    const Matrix rn = inv_norms.asDiagonal() * f.R;
    const Matrix core = rn * at.slice(k) * qn;
    if (matrix_rank(core, tol) != f.rank) {
      throw ExistenceViolated(static_cast<std::size_t>(k));
    }
    Matrix x;
    try {
      x = solve_linear(core, rn, tol);
    } catch (const SingularSystem&) {
      throw ExistenceViolated(static_cast<std::size_t>(k));
    }
    zt.set_slice(k, qn * x);
  }
  return zt;
}

}  // namespace

bool SubspaceReport::all() const {
  return std::all_of(range_equal.begin(), range_equal.end(),
                     [](bool b) { return b; }) &&
         std::all_of(null_equal.begin(), null_equal.end(),
                     [](bool b) { return b; });
}

GinvReport pinv_frd(const Tensor3& a, const Transform& t,
                    const ToleranceConfig& tol) {
  const Tensor3 at = to_transform_domain(a, t);
  const double scale = max_slice_norm2(at);
  Tensor3 xt(a.cols(), a.rows(), a.depth());
  for (Index k = 0; k < a.depth(); ++k) {
    const Matrix slice = at.slice(k);
    const MatrixFRD f = matrix_frd(slice, tol, scale);
    if (f.rank == 0) continue;
    const Matrix f_adj = f.F.adjoint();
    const Matrix g_adj = f.G.adjoint();
    const Matrix core = f_adj * slice * g_adj;
    const Matrix core_inv =
        solve_linear(core, Matrix::Identity(f.rank, f.rank), tol);
    xt.set_slice(k, g_adj * core_inv * f_adj);
  }
  GinvReport out{from_transform_domain(xt, t), {}};
  out.residuals = residual_report(a, out.X, t, InverseKind::pinv, tol);
  return out;
}

GinvReport drazin_frd(const Tensor3& b, const Transform& t,
                      const ToleranceConfig& tol) {
  if (b.rows() != b.cols()) {
    throw DimensionMismatch("Drazin inverse needs square slices");
  }
  const Tensor3 bt = to_transform_domain(b, t);
  const double scale = max_slice_norm2(bt);
  Tensor3 yt(b.rows(), b.rows(), b.depth());
  for (Index k = 0; k < b.depth(); ++k) {
    const Matrix slice = bt.slice(k);
    const Index l = matrix_index(slice, tol, scale);
    const MatrixFRD f = matrix_frd(matrix_power(slice, l), tol,
                                   std::pow(scale, static_cast<double>(l)));
    if (f.rank == 0) continue;
    const Matrix core = f.G * slice * f.F;
    yt.set_slice(k, f.F * solve_linear(core, f.G, tol));
  }
  GinvReport out{from_transform_domain(yt, t), {}};
  out.residuals = residual_report(b, out.X, t, InverseKind::drazin, tol);
  return out;
}

GinvReport outer_inverse_qdr(const Tensor3& a, const Tensor3& w,
                             const Transform& t, const ToleranceConfig& tol) {
  if (w.rows() != a.cols() || w.cols() != a.rows() ||
      w.depth() != a.depth()) {
    throw DimensionMismatch("W must have the shape of A transposed");
  }
  const Tensor3 at = to_transform_domain(a, t);
  const Tensor3 wt = to_transform_domain(w, t);
  std::vector<Matrix> w_slices;
  for (Index k = 0; k < wt.depth(); ++k) w_slices.emplace_back(wt.slice(k));
  GinvReport out{
      from_transform_domain(
          outer_from_transformed(at, w_slices, fro_scale(wt), tol), t),
      {}};
  out.residuals = residual_report(a, out.X, t, InverseKind::outer, tol);
  return out;
}

GinvReport pinv_qdr(const Tensor3& a, const Transform& t,
                    const ToleranceConfig& tol) {
  const Tensor3 at = to_transform_domain(a, t);
  // W = A*, formed directly in the transform domain.
  std::vector<Matrix> w_slices;
  for (Index k = 0; k < at.depth(); ++k) {
    w_slices.emplace_back(at.slice(k).adjoint());
  }
  GinvReport out{
      from_transform_domain(
          outer_from_transformed(at, w_slices, fro_scale(at), tol), t),
      {}};
  out.residuals = residual_report(a, out.X, t, InverseKind::pinv, tol);
  return out;
}

GinvReport drazin_qdr(const Tensor3& b, const Transform& t,
                      const ToleranceConfig& tol) {
  const Index k_tubal = multi_index(b, t, tol).tubal_index;
  const Tensor3 bt = to_transform_domain(b, t);
  // W = B^k with k the tubal index; powers are taken slice-wise so that
  // nilpotent parts vanish relative to |B|^k instead of an absolute floor.
  std::vector<Matrix> w_slices;
  for (Index k = 0; k < bt.depth(); ++k) {
    w_slices.push_back(matrix_power(Matrix(bt.slice(k)), k_tubal));
  }
  const double scale =
      k_tubal == 0 ? 1.0 : std::pow(fro_scale(bt), static_cast<double>(k_tubal));
  GinvReport out{
      from_transform_domain(outer_from_transformed(bt, w_slices, scale, tol),
                            t),
      {}};
  out.residuals = residual_report(b, out.X, t, InverseKind::drazin, tol);
  return out;
}

SubspaceReport check_subspaces(const Tensor3& z, const Tensor3& w,
                               const Transform& t,
                               const ToleranceConfig& tol) {
  if (z.rows() != w.rows() || z.cols() != w.cols() ||
      z.depth() != w.depth()) {
    throw DimensionMismatch("check_subspaces needs equally shaped tensors");
  }
  const Tensor3 zt = to_transform_domain(z, t);
  const Tensor3 wt = to_transform_domain(w, t);
  // Normalize each tensor so block scaling cannot hide directions from the
  // rank threshold of the concatenations.
  const double sz = max_slice_norm2(zt);
  const double sw = max_slice_norm2(wt);
  SubspaceReport out;
  for (Index k = 0; k < z.depth(); ++k) {
    const Matrix zk = sz > 0.0 ? Matrix(zt.slice(k) / sz) : Matrix(zt.slice(k));
    const Matrix wk = sw > 0.0 ? Matrix(wt.slice(k) / sw) : Matrix(wt.slice(k));
    Matrix side(zk.rows(), zk.cols() + wk.cols());
    side << zk, wk;
    Matrix stacked(zk.rows() + wk.rows(), zk.cols());
    stacked << zk, wk;
    const Index rz = matrix_rank(zk, tol, 1.0);
    const Index rw = matrix_rank(wk, tol, 1.0);
    out.range_equal.push_back(rz == rw && matrix_rank(side, tol, 1.0) == rz);
    out.null_equal.push_back(rz == rw &&
                             matrix_rank(stacked, tol, 1.0) == rz);
  }
  return out;
}

ResidualMap residual_report(const Tensor3& a, const Tensor3& x,
                            const Transform& t, InverseKind kind,
                            const ToleranceConfig& tol) {
  ResidualMap out;
  const Tensor3 ax = m_product(a, x, t);
  const Tensor3 xa = m_product(x, a, t);
  const Tensor3 xax = m_product(xa, x, t);
  out["E2"] = fro_norm(x - xax);
  switch (kind) {
    case InverseKind::pinv:
      out["E1"] = fro_norm(a - m_product(ax, a, t));
      out["E3"] = fro_norm(ax - m_transpose(ax, t));
      out["E4"] = fro_norm(xa - m_transpose(xa, t));
      break;
    case InverseKind::drazin: {
      out["E5"] = fro_norm(ax - xa);
      const Index k = multi_index(a, t, tol).tubal_index;
      const Tensor3 ak = m_power(a, k, t);
      out["E1k"] = fro_norm(m_product(x, m_product(ak, a, t), t) - ak);
      break;
    }
    case InverseKind::outer:
      break;
  }
  return out;
}

}  // namespace mqdr
