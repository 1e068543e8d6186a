#include "mqdr/symbolic/sym_tensor.hpp"

#include <string>

#include "mqdr/errors.hpp"

namespace mqdr::sym {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionMismatch(what);
}

void check_transform(const SymTensor3& a, const SymTransform& t) {
  require(t.size() == a.depth(), "transform size " + std::to_string(t.size()) +
                                     " does not match tensor depth " +
                                     std::to_string(a.depth()));
}

SymMatrix slice_product(const SymTensor3& a, const SymTensor3& b, Size k) {
  SymMatrix out(a.rows(), b.cols());
  for (Size i = 0; i < a.rows(); ++i) {
    for (Size j = 0; j < b.cols(); ++j) {
      RatFun acc;
      for (Size l = 0; l < a.cols(); ++l) {
        const RatFun& x = a(i, l, k);
        if (x.is_zero()) continue;
        const RatFun& y = b(l, j, k);
        if (y.is_zero()) continue;
        acc += x * y;
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

/// Row reduction shared by the transform inverse and the linear solver.
/// Reduces [A | B] in place to [I | A^{-1} B]; returns false when A is
/// singular.
template <class T>
bool gauss_jordan(DenseMatrix<T>& a, DenseMatrix<T>& b) {
  const Size n = a.rows();
  for (Size col = 0; col < n; ++col) {
    Size pivot = col;
    while (pivot < n && a(pivot, col) == T(0)) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (Size j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      for (Size j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(pivot, j));
    }
    const T inv = T(1) / a(col, col);
    for (Size j = 0; j < n; ++j) a(col, j) = a(col, j) * inv;
    for (Size j = 0; j < b.cols(); ++j) b(col, j) = b(col, j) * inv;
    for (Size i = 0; i < n; ++i) {
      if (i == col || a(i, col) == T(0)) continue;
      const T f = a(i, col);
      for (Size j = 0; j < n; ++j) {
        if (!(a(col, j) == T(0))) a(i, j) = a(i, j) - f * a(col, j);
      }
      for (Size j = 0; j < b.cols(); ++j) {
        if (!(b(col, j) == T(0))) b(i, j) = b(i, j) - f * b(col, j);
      }
    }
  }
  return true;
}

SymMatrix take_columns(const SymMatrix& a, Size count) {
  SymMatrix out(a.rows(), count);
  for (Size i = 0; i < a.rows(); ++i)
    for (Size j = 0; j < count; ++j) out(i, j) = a(i, j);
  return out;
}

}  // namespace

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
  require(a.cols() == b.rows(), "inner dimensions differ");
  SymMatrix out(a.rows(), b.cols());
  for (Size i = 0; i < a.rows(); ++i) {
    for (Size l = 0; l < a.cols(); ++l) {
      if (a(i, l).is_zero()) continue;
      for (Size j = 0; j < b.cols(); ++j) {
        if (b(l, j).is_zero()) continue;
        out(i, j) += a(i, l) * b(l, j);
      }
    }
  }
  return out;
}

SymTensor3::SymTensor3(Size m, Size n, Size p)
    : m_(m), n_(n), p_(p), e_(static_cast<std::size_t>(m * n * p)) {
  if (m < 0 || n < 0 || p < 0) throw DimensionMismatch("negative dimension");
}

SymTensor3 SymTensor3::from_slices(const std::vector<SymMatrix>& slices) {
  if (slices.empty()) throw DimensionMismatch("no slices given");
  SymTensor3 t(slices[0].rows(), slices[0].cols(),
               static_cast<Size>(slices.size()));
  for (Size k = 0; k < t.p_; ++k) t.set_slice(k, slices[static_cast<std::size_t>(k)]);
  return t;
}

SymMatrix SymTensor3::slice(Size k) const {
  SymMatrix s(m_, n_);
  for (Size i = 0; i < m_; ++i)
    for (Size j = 0; j < n_; ++j) s(i, j) = (*this)(i, j, k);
  return s;
}

void SymTensor3::set_slice(Size k, const SymMatrix& s) {
  require(s.rows() == m_ && s.cols() == n_, "slice shape mismatch");
  for (Size i = 0; i < m_; ++i)
    for (Size j = 0; j < n_; ++j) (*this)(i, j, k) = s(i, j);
}

bool SymTensor3::is_zero() const {
  for (const auto& e : e_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

SymTensor3& SymTensor3::operator-=(const SymTensor3& o) {
  require(m_ == o.m_ && n_ == o.n_ && p_ == o.p_, "shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

SymTransform::SymTransform(QMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw SingularTransform("transform must be a non-empty square matrix");
  }
  QMatrix work = m_;
  inv_ = QMatrix::identity(m_.rows());
  if (!gauss_jordan(work, inv_)) {
    throw SingularTransform("rational transform is singular");
  }
}

Transform SymTransform::to_numeric() const { return Transform(sym::to_numeric(m_)); }

Matrix to_numeric(const QMatrix& m) {
  Matrix out(m.rows(), m.cols());
  for (Size i = 0; i < m.rows(); ++i)
    for (Size j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

SymTensor3 sym_mode3_product(const SymTensor3& a, const QMatrix& w) {
  require(w.cols() == a.depth(), "mode-3 factor has " + std::to_string(w.cols()) +
                                     " columns for depth " +
                                     std::to_string(a.depth()));
  SymTensor3 out(a.rows(), a.cols(), w.rows());
  for (Size k = 0; k < w.rows(); ++k) {
    for (Size l = 0; l < a.depth(); ++l) {
      const BigRational& c = w(k, l);
      if (c == 0) continue;
      const RatFun f(c);
      for (Size i = 0; i < a.rows(); ++i)
        for (Size j = 0; j < a.cols(); ++j) {
          if (!a(i, j, l).is_zero()) out(i, j, k) += a(i, j, l) * f;
        }
    }
  }
  return out;
}

SymTensor3 sym_to_transform_domain(const SymTensor3& a, const SymTransform& t) {
  check_transform(a, t);
  return sym_mode3_product(a, t.matrix());
}

SymTensor3 sym_from_transform_domain(const SymTensor3& a,
                                     const SymTransform& t) {
  check_transform(a, t);
  return sym_mode3_product(a, t.inverse());
}

SymTensor3 sym_facewise_product(const SymTensor3& a, const SymTensor3& b) {
  require(a.cols() == b.rows() && a.depth() == b.depth(),
          "facewise product shape mismatch");
  SymTensor3 out(a.rows(), b.cols(), a.depth());
  for (Size k = 0; k < a.depth(); ++k) out.set_slice(k, slice_product(a, b, k));
  return out;
}

SymTensor3 sym_m_product(const SymTensor3& a, const SymTensor3& b,
                         const SymTransform& t) {
  check_transform(a, t);
  return sym_from_transform_domain(
      sym_facewise_product(sym_to_transform_domain(a, t),
                           sym_to_transform_domain(b, t)),
      t);
}

SymTensor3 sym_transpose(const SymTensor3& a) {
  SymTensor3 out(a.cols(), a.rows(), a.depth());
  for (Size k = 0; k < a.depth(); ++k)
    for (Size i = 0; i < a.rows(); ++i)
      for (Size j = 0; j < a.cols(); ++j) out(j, i, k) = a(i, j, k);
  return out;
}

SymTensor3 sym_identity(Size m, const SymTransform& t) {
  SymTensor3 tilde(m, m, t.size());
  for (Size k = 0; k < t.size(); ++k)
    for (Size i = 0; i < m; ++i) tilde(i, i, k) = RatFun(1);
  return sym_from_transform_domain(tilde, t);
}

SymQDR sym_matrix_qdr(const SymMatrix& a) {
  const Size m = a.rows();
  const Size n = a.cols();
  SymMatrix q(m, std::min(m, n));
  std::vector<RatFun> norms;
  Size r = 0;
  for (Size j = 0; j < n && r < m; ++j) {
    std::vector<RatFun> v(static_cast<std::size_t>(m));
    for (Size i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = a(i, j);
    // Exact arithmetic: classical and modified sweeps coincide.
    for (Size c = 0; c < r; ++c) {
      RatFun proj;
      for (Size i = 0; i < m; ++i) {
        if (!q(i, c).is_zero() && !a(i, j).is_zero()) proj += q(i, c) * a(i, j);
      }
      if (proj.is_zero()) continue;
      const RatFun coef = proj / norms[static_cast<std::size_t>(c)];
      for (Size i = 0; i < m; ++i) {
        if (!q(i, c).is_zero()) v[static_cast<std::size_t>(i)] -= coef * q(i, c);
      }
    }
    // Over Q(x) a sum of squares vanishes only when every term does.
    RatFun nv;
    for (const auto& e : v) {
      if (!e.is_zero()) nv += e * e;
    }
    if (nv.is_zero()) continue;
    for (Size i = 0; i < m; ++i) q(i, r) = v[static_cast<std::size_t>(i)];
    norms.push_back(nv);
    ++r;
  }
  SymQDR out;
  out.rank = r;
  out.Q = take_columns(q, r);
  out.D = SymMatrix(r, r);
  for (Size i = 0; i < r; ++i) out.D(i, i) = RatFun(1) / norms[static_cast<std::size_t>(i)];
  out.R = out.Q.transpose() * a;
  return out;
}

SymTensorQDR sym_tensor_qdr(const SymTensor3& a, const SymTransform& t) {
  check_transform(a, t);
  const SymTensor3 at = sym_to_transform_domain(a, t);
  std::vector<SymQDR> parts;
  Size r = 0;
  for (Size k = 0; k < a.depth(); ++k) {
    parts.push_back(sym_matrix_qdr(at.slice(k)));
    r = std::max(r, parts.back().rank);
  }
  SymTensor3 q(a.rows(), r, a.depth());
  SymTensor3 d(r, r, a.depth());
  SymTensor3 rr(r, a.cols(), a.depth());
  for (Size k = 0; k < a.depth(); ++k) {
    const SymQDR& f = parts[static_cast<std::size_t>(k)];
    for (Size i = 0; i < a.rows(); ++i)
      for (Size j = 0; j < f.rank; ++j) q(i, j, k) = f.Q(i, j);
    for (Size i = 0; i < f.rank; ++i) d(i, i, k) = f.D(i, i);
    for (Size i = 0; i < f.rank; ++i)
      for (Size j = 0; j < a.cols(); ++j) rr(i, j, k) = f.R(i, j);
  }
  SymTensorQDR out;
  out.rank = r;
  out.Q = sym_from_transform_domain(q, t);
  out.D = sym_from_transform_domain(d, t);
  out.R = sym_from_transform_domain(rr, t);
  return out;
}

SymMatrix sym_solve(const SymMatrix& a, const SymMatrix& b) {
  require(a.rows() == a.cols() && a.rows() == b.rows(),
          "solve needs a square system with matching right-hand side");
  SymMatrix work = a;
  SymMatrix x = b;
  if (!gauss_jordan(work, x)) throw SingularSystem("exact system is singular");
  return x;
}

namespace {

SymTensor3 outer_from_transformed(const SymTensor3& at, const SymTensor3& wt,
                                  const SymTransform& t) {
  const Size m = at.rows();
  const Size n = at.cols();
  SymTensor3 zt(n, m, at.depth());
  for (Size k = 0; k < at.depth(); ++k) {
    const SymQDR f = sym_matrix_qdr(wt.slice(k));
    if (f.rank == 0) continue;
    const SymMatrix core = f.R * at.slice(k) * f.Q;
    SymMatrix x;
    try {
      x = sym_solve(core, f.R);
    } catch (const SingularSystem&) {
      throw ExistenceViolated(static_cast<std::size_t>(k));
    }
    zt.set_slice(k, f.Q * x);
  }
  return sym_from_transform_domain(zt, t);
}

}  // namespace

SymTensor3 sym_outer_inverse(const SymTensor3& a, const SymTensor3& w,
                             const SymTransform& t) {
  check_transform(a, t);
  require(w.rows() == a.cols() && w.cols() == a.rows() && w.depth() == a.depth(),
          "W must be n x m x p for an m x n x p tensor");
  return outer_from_transformed(sym_to_transform_domain(a, t),
                                sym_to_transform_domain(w, t), t);
}

SymTensor3 sym_pinv(const SymTensor3& a, const SymTransform& t) {
  check_transform(a, t);
  const SymTensor3 at = sym_to_transform_domain(a, t);
  return outer_from_transformed(at, sym_transpose(at), t);
}

Tensor3 evaluate(const SymTensor3& a, const BigRational& x0) {
  Tensor3 out(a.rows(), a.cols(), a.depth());
  for (Size k = 0; k < a.depth(); ++k)
    for (Size i = 0; i < a.rows(); ++i)
      for (Size j = 0; j < a.cols(); ++j) out(i, j, k) = a(i, j, k).eval(x0).get_d();
  return out;
}

}  // namespace mqdr::sym
