# SPDX-License-Identifier: Apache-2.0
"""Exact Dedekind-sum family and coin-exchange counting.

Everything is exact: rationals come back as :class:`fractions.Fraction`,
counts as ``int``. Rational arguments accept ``Fraction``, ``int`` or a
``"p/q"`` string; floats are rejected.
"""

from ._core import (  # noqa: F401
    ValidationError,
    SingularityError,
    InternalInconsistencyError,
    sawtooth,
    frac,
    bernoulli2,
    dedekind,
    dedekind_naive,
    rademacher_sum,
    knuth_sum,
    fourier_dedekind,
    zagier_sum,
    dedekind_via_zagier,
    partition_count,
    interior_count,
    partition_formula,
    interior_formula,
    q_value,
    q_polynomial,
    quasipolynomial,
    dedekind_residual,
    rademacher_residual,
    gessel_residual,
    general_residual,
    zagier_residual,
    raddedsum_residual,
    cone_index,
    cone_decompose,
    cone_series_verify,
    cone_enumerate,
    verify_suite,
    __version__,
)

__all__ = [
    "ValidationError",
    "SingularityError",
    "InternalInconsistencyError",
    "sawtooth",
    "frac",
    "bernoulli2",
    "dedekind",
    "dedekind_naive",
    "rademacher_sum",
    "knuth_sum",
    "fourier_dedekind",
    "zagier_sum",
    "dedekind_via_zagier",
    "partition_count",
    "interior_count",
    "partition_formula",
    "interior_formula",
    "q_value",
    "q_polynomial",
    "quasipolynomial",
    "dedekind_residual",
    "rademacher_residual",
    "gessel_residual",
    "general_residual",
    "zagier_residual",
    "raddedsum_residual",
    "cone_index",
    "cone_decompose",
    "cone_series_verify",
    "cone_enumerate",
    "verify_suite",
]
