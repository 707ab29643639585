"""Exact slope and intersection computations on the moduli space of
stable curves.

The package is organized around five calculators:

- :mod:`mgbar.divclass` — divisor classes on the standard
  lambda/delta basis, slopes, test-curve pairings, and the named
  syzygy and degeneracy classes;
- :mod:`mgbar.tautring` — the tautological coefficient ring of a
  curve times its Picard variety, Gysin pushforwards, and the
  genus-22 degeneracy pipeline;
- :mod:`mgbar.psi` — descendent integrals of psi classes by the
  KdV/Virasoro recursion with string and dilaton reductions;
- :mod:`mgbar.bn` — Brill-Noether numbers, limit linear series,
  formal bundle arithmetic, Severi and liaison numerology;
- :mod:`mgbar.koszul` — Koszul cohomology of graded modules by
  exact linear algebra.

A command-line front end lives in :mod:`mgbar.cli` (entry point
``mgbar``).
"""

from .divclass import (
    INFINITE,
    DivisorClass,
    CurveNumbers,
    SlopeUndeterminedError,
    canonical_coarse,
    canonical_stack,
    d22_class,
    gieseker_petri_slope,
    general_type_witness,
    k3_obstruction,
    kappa1,
    koszul_even_slope,
    koszul_odd_class,
    lambda_chern_n,
    pair,
    slope,
    slope_conjecture_bound,
    test_curve,
)
from .tautring import (
    RingElement,
    PushforwardTable,
    element_from_string,
    integrate_over_C,
    integrate_over_W,
    load_table,
    solve_d22,
)
from .psi import (
    Correlator,
    ResourceLimitError,
    correlator_value,
    pand_bound,
    psi_one_point,
)
from .bn import (
    INFEASIBLE,
    FormalBundle,
    LinearSeriesData,
    TreeCurve,
    hilbert_dim,
    liaison_solve,
    limit_series_compatible,
    quadric_count,
    rho,
    severi_analyze,
)
from .koszul import (
    GradedModule,
    KoszulStrand,
    green_lazarsfeld_Np,
    koszul_cohomology,
    koszul_matrix,
    matrix_rank,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "INFINITE",
    "DivisorClass",
    "CurveNumbers",
    "SlopeUndeterminedError",
    "canonical_coarse",
    "canonical_stack",
    "d22_class",
    "gieseker_petri_slope",
    "general_type_witness",
    "k3_obstruction",
    "kappa1",
    "koszul_even_slope",
    "koszul_odd_class",
    "lambda_chern_n",
    "pair",
    "slope",
    "slope_conjecture_bound",
    "test_curve",
    "RingElement",
    "PushforwardTable",
    "element_from_string",
    "integrate_over_C",
    "integrate_over_W",
    "load_table",
    "solve_d22",
    "Correlator",
    "ResourceLimitError",
    "correlator_value",
    "pand_bound",
    "psi_one_point",
    "INFEASIBLE",
    "FormalBundle",
    "LinearSeriesData",
    "TreeCurve",
    "hilbert_dim",
    "liaison_solve",
    "limit_series_compatible",
    "quadric_count",
    "rho",
    "severi_analyze",
    "GradedModule",
    "KoszulStrand",
    "green_lazarsfeld_Np",
    "koszul_cohomology",
    "koszul_matrix",
    "matrix_rank",
]
