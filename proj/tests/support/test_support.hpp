#pragma once

// Shared fixtures and independent oracles for the test binaries. The oracles
// deliberately avoid the library's own kernels.

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "mqdr/tensor.hpp"

namespace mqdr::testing {

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m ? static_cast<Index>(rows.begin()->size()) : 0;
  Matrix out(m, n);
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (double v : r) out(i, j++) = v;
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// out(i, j, k) = sum_l a(i, j, l) w(k, l), by explicit loops.
inline Tensor3 mode3_oracle(const Tensor3& a, const Matrix& w) {
  Tensor3 out(a.rows(), a.cols(), w.rows());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < w.rows(); ++k) {
        Complex acc = 0;
        for (Index l = 0; l < a.depth(); ++l) acc += a(i, j, l) * w(k, l);
        out(i, j, k) = acc;
      }
  return out;
}

/// Slice-by-slice triple-loop matrix product.
inline Tensor3 facewise_oracle(const Tensor3& a, const Tensor3& b) {
  Tensor3 out(a.rows(), b.cols(), a.depth());
  for (Index k = 0; k < a.depth(); ++k)
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j = 0; j < b.cols(); ++j) {
        Complex acc = 0;
        for (Index l = 0; l < a.cols(); ++l) acc += a(i, l, k) * b(l, j, k);
        out(i, j, k) = acc;
      }
  return out;
}

inline Tensor3 m_product_oracle(const Tensor3& a, const Tensor3& b,
                                const Matrix& m) {
  const Matrix minv = m.inverse();
  return mode3_oracle(facewise_oracle(mode3_oracle(a, m), mode3_oracle(b, m)),
                      minv);
}

/// Pseudoinverse from a full SVD keeping sigma_i > cut (default
/// 1e-10 sigma_1).
inline Matrix svd_pinv(const Matrix& a, double cut = -1.0) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Matrix sinv = Matrix::Zero(a.cols(), a.rows());
  if (cut < 0.0) cut = s.size() ? 1e-10 * s(0) : 0.0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut) sinv(i, i) = 1.0 / s(i);
  }
  return svd.matrixV() * sinv * svd.matrixU().adjoint();
}

inline Index svd_rank(const Matrix& a, double rel) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i) r += s(i) > rel * s(0) ? 1 : 0;
  return s(0) == 0.0 ? 0 : r;
}

/// Smallest j with rank(A^j) = rank(A^{j+1}), by explicit powers.
inline Index brute_force_index(const Matrix& a, double zero_norm) {
  const Index m = a.rows();
  auto rank_of = [&](const Matrix& p) {
    if (p.norm() <= zero_norm) return Index{0};
    return svd_rank(p, 1e-9);
  };
  Matrix power = Matrix::Identity(m, m);
  Index prev = m;
  for (Index j = 0; j <= m; ++j) {
    Matrix next = power * a;
    const Index r = rank_of(next);
    if (r == prev) return j;
    prev = r;
    power = next;
  }
  return m;
}

/// Drazin inverse of a matrix from the spectral formula
/// A^D = A^l (A^{2l+1})^+ A^l, with l the index.
inline Matrix drazin_oracle(const Matrix& a, Index l) {
  Matrix al = Matrix::Identity(a.rows(), a.cols());
  for (Index i = 0; i < l; ++i) al = al * a;
  Matrix a2l1 = al * al * a;
  return al * svd_pinv(a2l1) * al;
}

// ---------------------------------------------------------------------------
// Random inputs
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  Index integer(Index lo, Index hi) {
    return std::uniform_int_distribution<Index>(lo, hi)(gen_);
  }
  Complex entry(bool complex) {
    const double re = uniform();
    return {re, complex ? uniform() : 0.0};
  }
  Matrix matrix(Index m, Index n, bool complex = false) {
    Matrix out(m, n);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < n; ++j) out(i, j) = entry(complex);
    return out;
  }
  Matrix rank_matrix(Index m, Index n, Index r) {
    if (r == 0) return Matrix::Zero(m, n);
    return matrix(m, r) * matrix(r, n);
  }
  /// Well-conditioned invertible matrix.
  Matrix invertible(Index p) {
    return matrix(p, p) + 2.0 * static_cast<double>(p) * Matrix::Identity(p, p);
  }
  Tensor3 tensor(Index m, Index n, Index p, bool complex = false) {
    Tensor3 out(m, n, p);
    for (auto& v : out.data()) v = entry(complex);
    return out;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Tensor whose transform-domain slice k has rank ranks[k].
inline Tensor3 tensor_with_multirank(Rng& rng, Index m, Index n,
                                     const std::vector<Index>& ranks,
                                     const Transform& t) {
  const Index p = static_cast<Index>(ranks.size());
  Tensor3 tilde(m, n, p);
  for (Index k = 0; k < p; ++k) {
    tilde.set_slice(k, rng.rank_matrix(m, n, ranks[static_cast<std::size_t>(k)]));
  }
  return from_transform_domain(tilde, t);
}

/// Square slice P diag(C, N) P^{-1} with C invertible of size m - s and N the
/// nilpotent shift of size s, so the slice index is s (0 when s = 0).
inline Matrix slice_with_index(Rng& rng, Index m, Index s) {
  Matrix core = Matrix::Zero(m, m);
  const Index c = m - s;
  if (c > 0) core.topLeftCorner(c, c) = rng.invertible(c);
  for (Index i = 0; i + 1 < s; ++i) core(c + i, c + i + 1) = 1.0;
  const Matrix p = rng.invertible(m);
  return p * core * p.inverse();
}

inline Tensor3 tensor_with_indices(Rng& rng, Index m,
                                   const std::vector<Index>& indices,
                                   const Transform& t) {
  const Index p = static_cast<Index>(indices.size());
  Tensor3 tilde(m, m, p);
  for (Index k = 0; k < p; ++k) {
    tilde.set_slice(k, slice_with_index(rng, m, indices[static_cast<std::size_t>(k)]));
  }
  return from_transform_domain(tilde, t);
}

inline double max_abs_diff(const Tensor3& a, const Tensor3& b) {
  double d = 0.0;
  for (Index i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a.data()[static_cast<std::size_t>(i)] -
                             b.data()[static_cast<std::size_t>(i)]));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Worked examples with reference values
// ---------------------------------------------------------------------------

namespace examples {

/// 2x3x2 tensor with multirank (1, 2) under an upper unit-triangular M.
inline Tensor3 frd_small() {
  return Tensor3::from_slices({mat({{0, 1, 0}, {0, 1, 1}}),
                               mat({{1, 0, 1}, {0, 1, 1}})});
}
inline Matrix frd_small_m() { return mat({{1, -1}, {0, 1}}); }
/// Four-decimal reference factors S (2x2x2) and T (2x3x2).
inline Tensor3 frd_small_reference_s() {
  return Tensor3::from_slices({mat({{0.3855, 0.7071}, {-0.9306, -0.7071}}),
                               mat({{-0.9306, 0.7071}, {-0.9306, -0.7071}})});
}
inline Tensor3 frd_small_reference_t() {
  return Tensor3::from_slices(
      {mat({{-1.2971, 0.2226, -1.8344}, {0.7071, -0.7071, 0}}),
       mat({{-0.5373, -0.5373, -1.0746}, {0.7071, -0.7071, 0}})});
}

/// 3x3x3 tensor with multirank (2, 2, 3).
inline Tensor3 pinv_square() {
  return Tensor3::from_slices({mat({{0, 1, 0}, {-1, 0, 1}, {-1, 0, 1}}),
                               mat({{1, 1, 1}, {1, 1, 2}, {-1, 0, -1}}),
                               mat({{1, 2, 1}, {2, 1, 1}, {1, 1, 1}})});
}
inline Matrix pinv_square_m() { return mat({{1, -1, 1}, {0, 1, 1}, {0, 0, 1}}); }
/// Four-decimal reference Moore-Penrose inverse.
inline Tensor3 pinv_square_reference() {
  return Tensor3::from_slices(
      {mat({{-0.1553, -1.7632, 1.9421}, {-1.1053, -0.2632, 2.3421}, {1.7447, 2.2368, -5.8579}}),
       mat({{-0.1053, -0.7632, 0.8421}, {-0.6053, -0.2632, 1.3421}, {0.8947, 1.2368, -3.1579}}),
       mat({{0, 1, -1}, {1, 0, -1}, {-1, -1, 3}})});
}
/// Exact inverse; its entries round to the four-decimal reference values.
inline Tensor3 pinv_square_exact() {
  return Tensor3::from_slices(
      {mat({{-59.0 / 380, -67.0 / 38, 369.0 / 190},
            {-21.0 / 19, -5.0 / 19, 89.0 / 38},
            {663.0 / 380, 85.0 / 38, -1113.0 / 190}}),
       mat({{-2.0 / 19, -29.0 / 38, 16.0 / 19},
            {-23.0 / 38, -5.0 / 19, 51.0 / 38},
            {17.0 / 19, 47.0 / 38, -60.0 / 19}}),
       mat({{0, 1, -1}, {1, 0, -1}, {-1, -1, 3}})});
}

/// Upper-triangular transform shared by the Drazin, 3x4x3 pseudoinverse and
/// QDR examples.
inline Matrix shear_m() { return mat({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}); }

/// 3x3x3 tensor with slice indices (1, 2, 3).
inline Tensor3 drazin_square() {
  return Tensor3::from_slices({mat({{1, 0, 0}, {3, 3, -1}, {0, 0, 0}}),
                               mat({{2, 0, 0}, {0, 0, 1}, {0, 0, 0}}),
                               mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})});
}
inline Tensor3 drazin_square_reference() {
  return Tensor3::from_slices(
      {mat({{0.0625, 0.0625, 0}, {0.1875, 0.1875, 0}, {0, 0, 0}}),
       mat({{0.5, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
       mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})});
}

/// 3x4x3 tensor with multirank (1, 2, 3).
inline Tensor3 pinv_wide() {
  return Tensor3::from_slices({mat({{-1, 2, 3, 0}, {-1, 1, -3, 2}, {0, 2, 2, -2}}),
                               mat({{1, 1, 1, 0}, {0, 0, -1, 0}, {1, 1, 0, 0}}),
                               mat({{2, -2, -2, 0}, {0, -1, 2, -2}, {2, -2, 0, 2}})});
}
/// Exact reference Moore-Penrose inverse (4x3x3).
inline Tensor3 pinv_wide_reference() {
  return Tensor3::from_slices(
      {mat({{-11.0 / 516, -67.0 / 516, 8.0 / 129},
            {5.0 / 43, 7.0 / 43, 5.0 / 43},
            {187.0 / 516, -151.0 / 516, -7.0 / 129},
            {19.0 / 86, 9.0 / 43, -12.0 / 43}}),
       mat({{1.0 / 6, 1.0 / 6, 1.0 / 3},
            {1.0 / 6, 1.0 / 6, 1.0 / 3},
            {1.0 / 3, -2.0 / 3, -1.0 / 3},
            {0, 0, 0}}),
       mat({{9.0 / 86, 2.0 / 43, 9.0 / 86},
            {-5.0 / 43, -7.0 / 43, -5.0 / 43},
            {-12.0 / 43, 9.0 / 43, 19.0 / 86},
            {-19.0 / 86, -9.0 / 43, 12.0 / 43}})});
}

/// 3x4x3 tensor with multirank (1, 2, 3) used for QDR.
inline Tensor3 qdr_wide() {
  return Tensor3::from_slices({mat({{4, 2, -2, -1}, {4, 2, -4, 0}, {2, 3, -2, 1}}),
                               mat({{1, -2, 3, 2}, {2, -2, 4, 2}, {2, -2, 4, 2}}),
                               mat({{-2, -2, 0, -1}, {-2, -2, 2, -2}, {-1, -3, 1, -2}})});
}

}  // namespace examples
}  // namespace mqdr::testing
