"""Exact Pell-Fermat arithmetic and Nikulin configurations on Kummer surfaces."""

from .pell import (
    CFExpansion,
    PellSolution,
    TClassification,
    appendix_family,
    cf_sqrt,
    classify_t,
    family_8s2,
    fundamental_solution,
    is_square,
    negative_fundamental_solution,
    nth_solution,
    scan_8s_beta_even,
    scan_parity_lemmas,
)
from .lattice import (
    BLOCKS,
    DivisorClass,
    EXCEPTIONALS,
    GramForm,
    L,
    enumerate_minus2,
    exceptional,
    is_admissible,
    is_effective_candidate,
    is_in_block_overlattice,
)
from .constructions import (
    EvenBetaConstruction,
    NikulinConfiguration,
    NoNegPell,
    NoQuarticCase,
    OddBetaCase,
    SquareCase,
    SubcaseReport,
    build_double_plane_divisor,
    build_even_beta,
    build_quartic_divisor,
    build_t2_configuration,
    build_t4_configuration,
    check_odd_beta_obstruction,
    make_nikulin_configuration,
    solve_three_conditions,
    subcase_classify,
)
from .verifiers import (
    BoundOverflow,
    Verdict,
    verify_contracted_set,
    verify_even_propagation,
    verify_lemma_treize,
    verify_quartic_degree_one,
    verify_t2_f1_nef,
    verify_t4_nefness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
