#include "mqdr/decomp.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "mqdr/errors.hpp"
#include "mqdr/kernels.hpp"

namespace mqdr {

namespace {

// Reference magnitude for Gram-Schmidt column drops: the largest slice
// Frobenius norm in the transform domain.
double column_scale(const Tensor3& transformed) {
  double s = 0.0;
  for (Index k = 0; k < transformed.depth(); ++k) {
    s = std::max(s, transformed.slice(k).norm());
  }
  return s;
}

TensorQDR assemble(const std::vector<MatrixQDR>& parts, Index m, Index n,
                   Index width, const Transform& t) {
  const Index p = static_cast<Index>(parts.size());
  Tensor3 q(m, width, p);
  Tensor3 d(width, width, p);
  Tensor3 r(width, n, p);
  for (Index k = 0; k < p; ++k) {
    const MatrixQDR& f = parts[static_cast<std::size_t>(k)];
    const Index s = f.rank;
    q.slice(k).leftCols(s) = f.Q;
    d.slice(k).topLeftCorner(s, s) = f.D;
    r.slice(k).topRows(s) = f.R;
  }
  return TensorQDR{from_transform_domain(q, t), from_transform_domain(d, t),
                   from_transform_domain(r, t), width};
}

}  // namespace

TensorFRD tensor_frd(const Tensor3& a, const Transform& t,
                     const ToleranceConfig& tol) {
  const Tensor3 at = to_transform_domain(a, t);
  const double scale = max_slice_norm2(at);
  std::vector<MatrixFRD> parts;
  Index r = 0;
  for (Index k = 0; k < a.depth(); ++k) {
    parts.push_back(matrix_frd(Matrix(at.slice(k)), tol, scale));
    r = std::max(r, parts.back().rank);
  }
  Tensor3 s(a.rows(), r, a.depth());
  Tensor3 g(r, a.cols(), a.depth());
  for (Index k = 0; k < a.depth(); ++k) {
    const MatrixFRD& f = parts[static_cast<std::size_t>(k)];
    // [F 0] and [G; 0] when the slice rank falls short of r.
    s.slice(k).leftCols(f.rank) = f.F;
    g.slice(k).topRows(f.rank) = f.G;
  }
  return TensorFRD{from_transform_domain(s, t), from_transform_domain(g, t), r};
}

TensorQDR tensor_qdr(const Tensor3& a, const Transform& t,
                     const ToleranceConfig& tol) {
  const Tensor3 at = to_transform_domain(a, t);
  const double scale = column_scale(at);
  std::vector<MatrixQDR> parts;
  Index r = 0;
  for (Index k = 0; k < a.depth(); ++k) {
    parts.push_back(matrix_qdr(Matrix(at.slice(k)), tol, scale));
    r = std::max(r, parts.back().rank);
  }
  return assemble(parts, a.rows(), a.cols(), r, t);
}

TensorQDR truncated_qdr(const Tensor3& a, const Transform& t, Index k,
                        const ToleranceConfig& tol) {
  const Index limit = std::min(a.rows(), a.cols());
  if (k < 1 || k > limit) {
    throw InvalidArgument("truncation rank " + std::to_string(k) +
                          " outside [1, " + std::to_string(limit) + "]");
  }
  const Tensor3 at = to_transform_domain(a, t);
  const double scale = column_scale(at);
  std::vector<MatrixQDR> parts;
  for (Index s = 0; s < a.depth(); ++s) {
    parts.push_back(matrix_qdr(Matrix(at.slice(s)), tol, scale, k));
  }
  return assemble(parts, a.rows(), a.cols(), k, t);
}

Tensor3 reconstruct(const TensorQDR& f, const Transform& t) {
  const Tensor3 q = to_transform_domain(f.Q, t);
  const Tensor3 d = to_transform_domain(f.D, t);
  const Tensor3 r = to_transform_domain(f.R, t);
  return from_transform_domain(facewise_product(facewise_product(q, d), r), t);
}

Tensor3 reconstruct(const TensorFRD& f, const Transform& t) {
  return m_product(f.S, f.T, t);
}

}  // namespace mqdr
