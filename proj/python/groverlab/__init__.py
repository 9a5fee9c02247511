"""Generalized amplitude-amplification kernel laboratory.

Thin Python veneer over the C++ core: phase sets, the 2x2 reduced kernel and
its closed-form eigensystem, probability evolution, the full-statevector
oracle, and sweep/cross-validation helpers.
"""

from ._core import (
    EigenSystem,
    Kernel2,
    PhaseSet,
    ProblemSpec,
    __version__,
    build_kernel,
    cross_validate,
    eigensystem,
    evolve_probability,
    figure_preset,
    g1_alignment,
    is_matched,
    matching_defect,
    predicted_peak_m,
    run_full,
    spectral_probability,
    sweep,
)

__all__ = [
    "EigenSystem",
    "Kernel2",
    "PhaseSet",
    "ProblemSpec",
    "__version__",
    "build_kernel",
    "cross_validate",
    "eigensystem",
    "evolve_probability",
    "figure_preset",
    "g1_alignment",
    "is_matched",
    "matching_defect",
    "predicted_peak_m",
    "run_full",
    "spectral_probability",
    "sweep",
]
