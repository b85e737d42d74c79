"""Exact max-plus algebra and switched discrete event system analysis.

Scalars are ``None`` for epsilon (minus infinity) or ``fractions.Fraction``.
Matrix entries may be given as ``None``, ``int``, ``Fraction`` or strings such
as ``"eps"`` and ``"13/3"``. Node indices are 0-based.
"""

from ._core import (
    DimensionMismatch,
    Error,
    Matrix,
    NoEigenvectorColumn,
    NotIrreducible,
    NullScalar,
    ParseError,
    TheoremViolation,
    TransientBoundExceeded,
    UnknownMatrixName,
    ZeroInitialState,
    apply,
    compose,
    cross_validate,
    eigenvalue,
    eigenvalue_relation_probe,
    eigenvector,
    format_matrix,
    has_finite_diagonal,
    is_irreducible,
    oplus,
    otimes,
    parse_matrix,
    period_and_transient,
    power,
    product_irreducibility_check,
    read_matrix_file,
    shift,
    simulate,
    spectral_analysis,
    strongly_connected_components,
    switched_analysis,
)

eps = None

__all__ = [name for name in dir() if not name.startswith("_")]
