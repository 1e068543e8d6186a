#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mqdr {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RowMajorMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SliceMap = Eigen::Map<RowMajorMatrix>;
using ConstSliceMap = Eigen::Map<const RowMajorMatrix>;

/// Numerical thresholds shared by every floating-point algorithm.
struct ToleranceConfig {
  /// Singular values below rank_rel_tol * max(m, n) * scale count as zero.
  double rank_rel_tol = 1e-12;
  /// Bound used by residual self-checks.
  double residual_tol = 1e-8;
  /// Gram-Schmidt drops a column whose orthogonal remainder is below
  /// zero_column_tol * max(scale, |a_j|).
  double zero_column_tol = 1e-12;

  /// Throws InvalidArgument if any field is negative or NaN.
  void validate() const;
};

/// Dense m x n x p complex tensor. Storage is slice-major and row-major
/// within each frontal slice: entry (i, j, k) lives at k*m*n + i*n + j.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(Index m, Index n, Index p);

  /// Stacks equally sized matrices as frontal slices.
  static Tensor3 from_slices(std::span<const Matrix> slices);
  static Tensor3 from_slices(std::initializer_list<Matrix> slices);

  Index rows() const noexcept { return m_; }
  Index cols() const noexcept { return n_; }
  Index depth() const noexcept { return p_; }
  Index size() const noexcept { return m_ * n_ * p_; }

  Complex& operator()(Index i, Index j, Index k) {
    return data_[static_cast<std::size_t>(k * m_ * n_ + i * n_ + j)];
  }
  const Complex& operator()(Index i, Index j, Index k) const {
    return data_[static_cast<std::size_t>(k * m_ * n_ + i * n_ + j)];
  }
  /// Bounds-checked access; throws std::out_of_range.
  const Complex& at(Index i, Index j, Index k) const;

  SliceMap slice(Index k);
  ConstSliceMap slice(Index k) const;
  void set_slice(Index k, const Matrix& value);

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  /// True if every imaginary part is exactly zero.
  bool is_real() const noexcept;

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  Tensor3& operator*=(Complex s);

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(Complex s, Tensor3 a) { return a *= s; }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  Index m_ = 0;
  Index n_ = 0;
  Index p_ = 0;
  std::vector<Complex> data_;
};

/// Invertible p x p matrix defining the M-product, with its cached inverse.
class Transform {
 public:
  /// Computes the inverse and verifies
  /// |M Minv - I|_F <= 1e-10 |M|_F |Minv|_F. Throws SingularTransform.
  explicit Transform(Matrix m);

  static Transform identity(Index p);
  /// Orthonormal DCT-II matrix.
  static Transform dct(Index p);
  /// Unnormalized DFT matrix (the M-product becomes the t-product).
  static Transform dft(Index p);
  /// Entries uniform in [-1, 1) drawn from Lcg64 seeded with `seed`.
  static Transform seeded_random(Index p, std::uint64_t seed);

  Index size() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const Matrix& inverse() const noexcept { return inv_; }

 private:
  Matrix m_;
  Matrix inv_;
};

/// 64-bit linear congruential generator
///   state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)
/// whose top 53 bits give uniform doubles in [0, 1). Fixed so seeded runs
/// are reproducible across platforms and implementations.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64() noexcept {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
  double next_symmetric() noexcept { return 2.0 * next_unit() - 1.0; }

 private:
  std::uint64_t state_;
};

struct MultiRank {
  std::vector<Index> ranks;
  Index tubal_rank = 0;
};

struct MultiIndex {
  std::vector<Index> indices;
  Index tubal_index = 0;
};

/// out(i, j, k) = sum_l A(i, j, l) * W(k, l).
Tensor3 mode3_product(const Tensor3& a, const Matrix& w);

/// A x_3 M.
Tensor3 to_transform_domain(const Tensor3& a, const Transform& t);
/// A x_3 M^{-1}.
Tensor3 from_transform_domain(const Tensor3& a, const Transform& t);

/// Slice-by-slice matrix product.
Tensor3 facewise_product(const Tensor3& a, const Tensor3& b);

/// (A~ Delta B~) x_3 M^{-1}.
Tensor3 m_product(const Tensor3& a, const Tensor3& b, const Transform& t);

/// Conjugate transpose under the M-product.
Tensor3 m_transpose(const Tensor3& a, const Transform& t);

/// Tensor whose transform-domain slices are all I_m.
Tensor3 m_identity(Index m, Index p, const Transform& t);

/// Per-slice inversion in the transform domain. Throws SingularSlice(k).
Tensor3 m_inverse(const Tensor3& a, const Transform& t,
                  const ToleranceConfig& tol = {});

MultiRank multirank(const Tensor3& a, const Transform& t,
                    const ToleranceConfig& tol = {});

MultiIndex multi_index(const Tensor3& a, const Transform& t,
                       const ToleranceConfig& tol = {});

/// Frobenius norm; summation runs in storage order.
double fro_norm(const Tensor3& a);

/// A^0 = identity tensor, A^j = A * A^{j-1}.
Tensor3 m_power(const Tensor3& a, Index j, const Transform& t);

/// Largest spectral norm over the slices of an already transformed tensor.
/// Rank decisions on individual slices are made relative to this value so a
/// slice that is zero up to transform roundoff is treated as zero.
double max_slice_norm2(const Tensor3& transformed);

}  // namespace mqdr
