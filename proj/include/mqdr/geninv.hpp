#pragma once

#include <map>
#include <string>
#include <vector>

#include "mqdr/tensor.hpp"

namespace mqdr {

/// Residual names: E1 = |A - AXA|, E2 = |X - XAX|, E3 = |AX - (AX)*|,
/// E4 = |XA - (XA)*|, E5 = |AX - XA|, E1k = |X A^{k+1} - A^k| (k = tubal
/// index). All norms are Frobenius and all products are M-products.
using ResidualMap = std::map<std::string, double>;

struct GinvReport {
  Tensor3 X;
  ResidualMap residuals;
};

enum class InverseKind { pinv, drazin, outer };

/// Moore-Penrose inverse, slice by slice from full-rank factorizations:
/// X~_k = G* (F* A~_k G*)^{-1} F*.
GinvReport pinv_frd(const Tensor3& a, const Transform& t,
                    const ToleranceConfig& tol = {});

/// Drazin inverse: with l the index of B~_k and B~_k^l = F G,
/// Y~_k = F (G B~_k F)^{-1} G.
GinvReport drazin_frd(const Tensor3& b, const Transform& t,
                      const ToleranceConfig& tol = {});

/// Outer inverse with range R(W) and null space N(W), W of shape n x m x p.
/// Throws ExistenceViolated(k) when rank(R~ A~ Q~) != rank(W~) on slice k.
GinvReport outer_inverse_qdr(const Tensor3& a, const Tensor3& w,
                             const Transform& t,
                             const ToleranceConfig& tol = {});

/// Outer inverse with W = A*.
GinvReport pinv_qdr(const Tensor3& a, const Transform& t,
                    const ToleranceConfig& tol = {});

/// Outer inverse with W = B^k, k the tubal index.
GinvReport drazin_qdr(const Tensor3& b, const Transform& t,
                      const ToleranceConfig& tol = {});

struct SubspaceReport {
  std::vector<bool> range_equal;
  std::vector<bool> null_equal;
  bool all() const;
};

/// Slice-wise check that R(Z) = R(W) and N(Z) = N(W) via ranks of the
/// concatenations [Z~_k W~_k] and [Z~_k; W~_k].
SubspaceReport check_subspaces(const Tensor3& z, const Tensor3& w,
                               const Transform& t,
                               const ToleranceConfig& tol = {});

ResidualMap residual_report(const Tensor3& a, const Tensor3& x,
                            const Transform& t, InverseKind kind,
                            const ToleranceConfig& tol = {});

}  // namespace mqdr
