"""Riesz bases of left-translate systems on semidirect product groups.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from rieszrep._core import (  # noqa: F401
    Generator,
    Group,
    Signal,
    __version__,
    analyze,
    average_sample_signal,
    biorthogonality_check,
    convolve,
    correlate,
    delta,
    demo_spline_generator,
    dihedral_finite,
    dihedral_infinite,
    dual,
    dual_exact,
    inverse_filter,
    involution,
    left_translate,
    max_abs_diff,
    onb_check,
    oracle,
    piecewise_generator,
    pointwise_sample_signal,
    rkhs_bound,
    sample_and_reconstruct,
    semidirect,
    spline_case,
)

__all__ = [
    "Generator",
    "Group",
    "Signal",
    "__version__",
    "analyze",
    "average_sample_signal",
    "biorthogonality_check",
    "convolve",
    "correlate",
    "delta",
    "demo_spline_generator",
    "dihedral_finite",
    "dihedral_infinite",
    "dual",
    "dual_exact",
    "inverse_filter",
    "involution",
    "left_translate",
    "max_abs_diff",
    "onb_check",
    "oracle",
    "piecewise_generator",
    "pointwise_sample_signal",
    "rkhs_bound",
    "sample_and_reconstruct",
    "semidirect",
    "spline_case",
]
