"""M-product tensor decompositions, generalized inverses and image compression.

Tensors are numpy arrays of shape (m, n, p); images are (h, w, 3) uint8 arrays.
"""

from ._mqdr import (
    DimensionMismatch,
    Error,
    ExistenceViolated,
    FormatError,
    InvalidArgument,
    MathError,
    SingularSlice,
    ToleranceConfig,
    Transform,
    compress,
    drazin,
    frd,
    m_product,
    m_transpose,
    multirank,
    outer,
    pinv,
    psnr,
    qdr,
    ssim,
    sym_evaluate,
    sym_outer,
    sym_pinv,
)

__all__ = [
    "DimensionMismatch",
    "Error",
    "ExistenceViolated",
    "FormatError",
    "InvalidArgument",
    "MathError",
    "SingularSlice",
    "ToleranceConfig",
    "Transform",
    "compress",
    "drazin",
    "frd",
    "m_product",
    "m_transpose",
    "multirank",
    "outer",
    "pinv",
    "psnr",
    "qdr",
    "ssim",
    "sym_evaluate",
    "sym_outer",
    "sym_pinv",
]
