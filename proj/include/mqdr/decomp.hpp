#pragma once

#include "mqdr/tensor.hpp"

namespace mqdr {

/// A = S * T with S m x r x p, T r x n x p and r the tubal rank.
struct TensorFRD {
  Tensor3 S;
  Tensor3 T;
  Index rank = 0;
};

/// A = Q * D * R; D is diagonal and R upper trapezoidal in the transform
/// domain.
struct TensorQDR {
  Tensor3 Q;
  Tensor3 D;
  Tensor3 R;
  Index rank = 0;
};

/// Slice-wise full-rank factorization, zero-padded on the right of F and the
/// bottom of G up to the tubal rank.
TensorFRD tensor_frd(const Tensor3& a, const Transform& t,
                     const ToleranceConfig& tol = {});

/// Slice-wise QDR padded to the tubal rank.
TensorQDR tensor_qdr(const Tensor3& a, const Transform& t,
                     const ToleranceConfig& tol = {});

/// Keeps at most k Gram-Schmidt directions per slice (1 <= k <= min(m, n)).
/// Slices of rank below k are zero padded so every factor has width k.
TensorQDR truncated_qdr(const Tensor3& a, const Transform& t, Index k,
                        const ToleranceConfig& tol = {});

/// Q * D * R.
Tensor3 reconstruct(const TensorQDR& f, const Transform& t);
/// S * T.
Tensor3 reconstruct(const TensorFRD& f, const Transform& t);

}  // namespace mqdr
