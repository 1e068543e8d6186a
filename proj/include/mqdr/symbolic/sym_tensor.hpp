#pragma once

#include <cstddef>
#include <vector>

#include "mqdr/errors.hpp"
#include "mqdr/symbolic/ratfun.hpp"
#include "mqdr/tensor.hpp"

// Exact M-product algebra over Q(x). Every zero test is exact, so no
// tolerances appear in this part of the library.

namespace mqdr::sym {

using Size = std::ptrdiff_t;

/// Dense matrix with entries T, row-major.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Size rows, Size cols)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows);

  static DenseMatrix identity(Size n) {
    DenseMatrix m(n, n);
    for (Size i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  Size rows() const noexcept { return rows_; }
  Size cols() const noexcept { return cols_; }
  T& operator()(Size i, Size j) {
    return e_[static_cast<std::size_t>(i * cols_ + j)];
  }
  const T& operator()(Size i, Size j) const {
    return e_[static_cast<std::size_t>(i * cols_ + j)];
  }
  const std::vector<T>& entries() const noexcept { return e_; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (Size i = 0; i < rows_; ++i)
      for (Size j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  Size rows_ = 0;
  Size cols_ = 0;
  std::vector<T> e_;
};

template <class T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(static_cast<Size>(rows.size())),
      cols_(rows.size() ? static_cast<Size>(rows.begin()->size()) : 0) {
  for (const auto& r : rows) {
    if (static_cast<Size>(r.size()) != cols_) {
      throw DimensionMismatch("ragged matrix literal");
    }
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

using SymMatrix = DenseMatrix<RatFun>;
using QMatrix = DenseMatrix<BigRational>;

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);

/// m x n x p tensor over Q(x); same layout as Tensor3 (slice-major,
/// row-major within a slice).
class SymTensor3 {
 public:
  SymTensor3() = default;
  SymTensor3(Size m, Size n, Size p);
  static SymTensor3 from_slices(const std::vector<SymMatrix>& slices);

  Size rows() const noexcept { return m_; }
  Size cols() const noexcept { return n_; }
  Size depth() const noexcept { return p_; }

  RatFun& operator()(Size i, Size j, Size k) {
    return e_[static_cast<std::size_t>(k * m_ * n_ + i * n_ + j)];
  }
  const RatFun& operator()(Size i, Size j, Size k) const {
    return e_[static_cast<std::size_t>(k * m_ * n_ + i * n_ + j)];
  }
  const std::vector<RatFun>& entries() const noexcept { return e_; }

  SymMatrix slice(Size k) const;
  void set_slice(Size k, const SymMatrix& s);
  bool is_zero() const;

  SymTensor3& operator-=(const SymTensor3& o);
  friend SymTensor3 operator-(SymTensor3 a, const SymTensor3& b) {
    return a -= b;
  }
  friend bool operator==(const SymTensor3&, const SymTensor3&) = default;

 private:
  Size m_ = 0;
  Size n_ = 0;
  Size p_ = 0;
  std::vector<RatFun> e_;
};

/// Rational transform with its exact inverse.
class SymTransform {
 public:
  /// Exact Gauss-Jordan inversion; throws SingularTransform.
  explicit SymTransform(QMatrix m);
  Size size() const noexcept { return m_.rows(); }
  const QMatrix& matrix() const noexcept { return m_; }
  const QMatrix& inverse() const noexcept { return inv_; }
  /// Floating-point copy for the numeric routines.
  Transform to_numeric() const;

 private:
  QMatrix m_;
  QMatrix inv_;
};

struct SymQDR {
  SymMatrix Q;
  SymMatrix D;
  SymMatrix R;
  Size rank = 0;
};

struct SymTensorQDR {
  SymTensor3 Q;
  SymTensor3 D;
  SymTensor3 R;
  Size rank = 0;
};

SymTensor3 sym_mode3_product(const SymTensor3& a, const QMatrix& w);
SymTensor3 sym_to_transform_domain(const SymTensor3& a, const SymTransform& t);
SymTensor3 sym_from_transform_domain(const SymTensor3& a,
                                     const SymTransform& t);
SymTensor3 sym_facewise_product(const SymTensor3& a, const SymTensor3& b);
SymTensor3 sym_m_product(const SymTensor3& a, const SymTensor3& b,
                         const SymTransform& t);
/// Transpose under the M-product. Coefficients are rational, so there is no
/// conjugation and the result is the slice-wise transpose.
SymTensor3 sym_transpose(const SymTensor3& a);
SymTensor3 sym_identity(Size m, const SymTransform& t);

/// Exact square-root-free Gram-Schmidt: Q D R = A with D = (Q^T Q)^{-1},
/// R = Q^T A, and a column dropped exactly when its remainder is zero.
SymQDR sym_matrix_qdr(const SymMatrix& a);
/// Slice-wise exact QDR padded to the tubal rank.
SymTensorQDR sym_tensor_qdr(const SymTensor3& a, const SymTransform& t);

/// Solves A X = B by Gaussian elimination with nonzero pivots.
/// Throws SingularSystem.
SymMatrix sym_solve(const SymMatrix& a, const SymMatrix& b);

/// Outer inverse with range R(W) and null space N(W).
/// Throws ExistenceViolated(k) when the core R~ A~ Q~ is singular on slice k.
SymTensor3 sym_outer_inverse(const SymTensor3& a, const SymTensor3& w,
                             const SymTransform& t);
/// Moore-Penrose inverse as the outer inverse with W = A^T.
SymTensor3 sym_pinv(const SymTensor3& a, const SymTransform& t);

/// Entry-wise substitution x = x0; throws PoleAtPoint.
Tensor3 evaluate(const SymTensor3& a, const BigRational& x0);
Matrix to_numeric(const QMatrix& m);

}  // namespace mqdr::sym
