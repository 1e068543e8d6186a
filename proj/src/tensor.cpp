#include "mqdr/tensor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mqdr/errors.hpp"
#include "mqdr/kernels.hpp"

namespace mqdr {

namespace {

std::string shape(const Tensor3& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + "x" +
         std::to_string(a.depth());
}

void require_depth(const Tensor3& a, const Transform& t) {
  if (a.depth() != t.size()) {
    throw DimensionMismatch("tensor " + shape(a) + " does not match a " +
                            std::to_string(t.size()) + "x" +
                            std::to_string(t.size()) + " transform");
  }
}

}  // namespace

void ToleranceConfig::validate() const {
  for (double v : {rank_rel_tol, residual_tol, zero_column_tol}) {
    if (!(v >= 0.0)) throw InvalidArgument("tolerances must be non-negative");
  }
}

Tensor3::Tensor3(Index m, Index n, Index p) : m_(m), n_(n), p_(p) {
  if (m < 0 || n < 0 || p < 0) {
    throw InvalidArgument("tensor dimensions must be non-negative");
  }
  data_.assign(static_cast<std::size_t>(m * n * p), Complex{});
}

Tensor3 Tensor3::from_slices(std::span<const Matrix> slices) {
  if (slices.empty()) return {};
  const Index m = slices.front().rows();
  const Index n = slices.front().cols();
  Tensor3 out(m, n, static_cast<Index>(slices.size()));
  for (std::size_t k = 0; k < slices.size(); ++k) {
    out.set_slice(static_cast<Index>(k), slices[k]);
  }
  return out;
}

Tensor3 Tensor3::from_slices(std::initializer_list<Matrix> slices) {
  return from_slices(std::span<const Matrix>(slices.begin(), slices.size()));
}

const Complex& Tensor3::at(Index i, Index j, Index k) const {
  if (i < 0 || i >= m_ || j < 0 || j >= n_ || k < 0 || k >= p_) {
    throw std::out_of_range("tensor index out of range");
  }
  return (*this)(i, j, k);
}

SliceMap Tensor3::slice(Index k) {
  return SliceMap(data_.data() + k * m_ * n_, m_, n_);
}

ConstSliceMap Tensor3::slice(Index k) const {
  return ConstSliceMap(data_.data() + k * m_ * n_, m_, n_);
}

void Tensor3::set_slice(Index k, const Matrix& value) {
  if (value.rows() != m_ || value.cols() != n_) {
    throw DimensionMismatch("slice shape " + std::to_string(value.rows()) +
                            "x" + std::to_string(value.cols()) +
                            " does not fit tensor " + shape(*this));
  }
  slice(k) = value;
}

bool Tensor3::is_real() const noexcept {
  for (const Complex& v : data_) {
    if (v.imag() != 0.0) return false;
  }
  return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  if (m_ != other.m_ || n_ != other.n_ || p_ != other.p_) {
    throw DimensionMismatch("cannot add " + shape(*this) + " and " +
                            shape(other));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  if (m_ != other.m_ || n_ != other.n_ || p_ != other.p_) {
    throw DimensionMismatch("cannot subtract " + shape(other) + " from " +
                            shape(*this));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(Complex s) {
  for (Complex& v : data_) v *= s;
  return *this;
}

Transform::Transform(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimensionMismatch("transform must be a non-empty square matrix");
  }
  const Index p = m_.rows();
  Eigen::FullPivLU<Matrix> lu(m_);
  if (!lu.isInvertible()) {
    throw SingularTransform("transform matrix is singular");
  }
  inv_ = lu.inverse();
  const double residual =
      (m_ * inv_ - Matrix::Identity(p, p)).norm();
  if (!(residual <= 1e-10 * m_.norm() * inv_.norm())) {
    throw SingularTransform("transform inverse failed verification (|M Minv - I| = " +
                            std::to_string(residual) + ")");
  }
}

Transform Transform::identity(Index p) {
  return Transform(Matrix::Identity(p, p));
}

Transform Transform::dct(Index p) {
  Matrix c(p, p);
  for (Index k = 0; k < p; ++k) {
    const double s = std::sqrt((k == 0 ? 1.0 : 2.0) / static_cast<double>(p));
    for (Index i = 0; i < p; ++i) {
      c(k, i) = s * std::cos(std::numbers::pi * static_cast<double>((2 * i + 1) * k) /
                             static_cast<double>(2 * p));
    }
  }
  return Transform(std::move(c));
}

Transform Transform::dft(Index p) {
  Matrix f(p, p);
  for (Index k = 0; k < p; ++k) {
    for (Index i = 0; i < p; ++i) {
      // Reduce the exponent first so large p keeps full accuracy.
      const double angle = -2.0 * std::numbers::pi *
                           static_cast<double>((k * i) % p) /
                           static_cast<double>(p);
      f(k, i) = std::polar(1.0, angle);
    }
  }
  return Transform(std::move(f));
}

Transform Transform::seeded_random(Index p, std::uint64_t seed) {
  Lcg64 rng(seed);
  Matrix m(p, p);
  for (Index i = 0; i < p; ++i) {
    for (Index j = 0; j < p; ++j) m(i, j) = rng.next_symmetric();
  }
  return Transform(std::move(m));
}

Tensor3 mode3_product(const Tensor3& a, const Matrix& w) {
  if (w.cols() != a.depth()) {
    throw DimensionMismatch("mode-3 product: matrix has " +
                            std::to_string(w.cols()) + " columns, tensor " +
                            shape(a));
  }
  const Index slice_size = a.rows() * a.cols();
  Tensor3 out(a.rows(), a.cols(), w.rows());
  auto src = a.data();
  auto dst = out.data();
  for (Index k = 0; k < w.rows(); ++k) {
    Complex* out_slice = dst.data() + k * slice_size;
    for (Index l = 0; l < a.depth(); ++l) {
      const Complex c = w(k, l);
      if (c == Complex{}) continue;
      const Complex* in_slice = src.data() + l * slice_size;
      for (Index e = 0; e < slice_size; ++e) out_slice[e] += c * in_slice[e];
    }
  }
  return out;
}

Tensor3 to_transform_domain(const Tensor3& a, const Transform& t) {
  require_depth(a, t);
  return mode3_product(a, t.matrix());
}

Tensor3 from_transform_domain(const Tensor3& a, const Transform& t) {
  require_depth(a, t);
  return mode3_product(a, t.inverse());
}

Tensor3 facewise_product(const Tensor3& a, const Tensor3& b) {
  if (a.cols() != b.rows() || a.depth() != b.depth()) {
    throw DimensionMismatch("facewise product of " + shape(a) + " and " +
                            shape(b));
  }
  Tensor3 out(a.rows(), b.cols(), a.depth());
  for (Index k = 0; k < a.depth(); ++k) {
    out.slice(k).noalias() = a.slice(k) * b.slice(k);
  }
  return out;
}

Tensor3 m_product(const Tensor3& a, const Tensor3& b, const Transform& t) {
  require_depth(a, t);
  require_depth(b, t);
  return from_transform_domain(
      facewise_product(to_transform_domain(a, t), to_transform_domain(b, t)),
      t);
}

Tensor3 m_transpose(const Tensor3& a, const Transform& t) {
  const Tensor3 at = to_transform_domain(a, t);
  Tensor3 out(a.cols(), a.rows(), a.depth());
  for (Index k = 0; k < a.depth(); ++k) {
    out.slice(k) = at.slice(k).adjoint();
  }
  return from_transform_domain(out, t);
}

Tensor3 m_identity(Index m, Index p, const Transform& t) {
  if (m < 1 || p < 1) throw InvalidArgument("identity needs m, p >= 1");
  if (p != t.size()) {
    throw DimensionMismatch("identity depth does not match transform");
  }
  Tensor3 out(m, m, p);
  for (Index k = 0; k < p; ++k) out.slice(k).setIdentity();
  return from_transform_domain(out, t);
}

double max_slice_norm2(const Tensor3& transformed) {
  double s = 0.0;
  for (Index k = 0; k < transformed.depth(); ++k) {
    s = std::max(s, spectral_norm(Matrix(transformed.slice(k))));
  }
  return s;
}

Tensor3 m_inverse(const Tensor3& a, const Transform& t,
                  const ToleranceConfig& tol) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("m_inverse needs square slices, got " + shape(a));
  }
  const Tensor3 at = to_transform_domain(a, t);
  const double scale = max_slice_norm2(at);
  const Index m = a.rows();
  Tensor3 out(m, m, a.depth());
  for (Index k = 0; k < a.depth(); ++k) {
    const Matrix slice = at.slice(k);
    if (matrix_rank(slice, tol, scale) < m) {
      throw SingularSlice(static_cast<std::size_t>(k));
    }
    try {
      out.set_slice(k, solve_linear(slice, Matrix::Identity(m, m), tol));
    } catch (const SingularSystem&) {
      throw SingularSlice(static_cast<std::size_t>(k));
    }
  }
  return from_transform_domain(out, t);
}

MultiRank multirank(const Tensor3& a, const Transform& t,
                    const ToleranceConfig& tol) {
  const Tensor3 at = to_transform_domain(a, t);
  const double scale = max_slice_norm2(at);
  MultiRank out;
  for (Index k = 0; k < a.depth(); ++k) {
    const Index r = matrix_rank(Matrix(at.slice(k)), tol, scale);
    out.ranks.push_back(r);
    out.tubal_rank = std::max(out.tubal_rank, r);
  }
  return out;
}

MultiIndex multi_index(const Tensor3& a, const Transform& t,
                       const ToleranceConfig& tol) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("multi_index needs square slices, got " + shape(a));
  }
  const Tensor3 at = to_transform_domain(a, t);
  const double scale = max_slice_norm2(at);
  MultiIndex out;
  for (Index k = 0; k < a.depth(); ++k) {
    const Index idx = matrix_index(Matrix(at.slice(k)), tol, scale);
    out.indices.push_back(idx);
    out.tubal_index = std::max(out.tubal_index, idx);
  }
  return out;
}

double fro_norm(const Tensor3& a) {
  double sum = 0.0;
  for (const Complex& v : a.data()) sum += std::norm(v);
  return std::sqrt(sum);
}

Tensor3 m_power(const Tensor3& a, Index j, const Transform& t) {
  if (j < 0) throw InvalidArgument("m_power needs j >= 0");
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("m_power needs square slices, got " + shape(a));
  }
  Tensor3 out = m_identity(a.rows(), a.depth(), t);
  if (j == 0) return out;
  out = a;
  for (Index i = 1; i < j; ++i) out = m_product(a, out, t);
  return out;
}

}  // namespace mqdr
