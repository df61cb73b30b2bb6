"""Exact graded-commutative algebras over bicharacters, with the flux model."""

from .algebra import (
    AlgebraElement,
    EnumerationLimitError,
    Generator,
    format_word,
    GradedAlgebra,
    Monomial,
    Partition,
    filling_factor,
    new_flux_algebra,
    new_graded_algebra,
)
from .bicharacter import (
    BasisVector,
    Biform,
    Bicharacter,
    CommutationTable,
    Report,
    bichar_eval,
    braiding_apply,
    flux_bicharacter,
    flux_generator_table,
    single_particle_basis,
    trivial_bicharacter,
    verify_bicharacter,
    verify_braiding_involution,
    verify_normalized,
    verify_ybe,
)
from .grading import INF, GradeVector, GroupSpec, SpecMismatchError, group_add, reduce_grading_group
from .phase import (
    MINUS_ONE,
    ONE,
    CycInt,
    OrderMismatchError,
    Phase,
    cyc_add,
    cyc_from_phase,
    cyc_mul,
    cyclotomic_polynomial,
    phase_mul,
    phase_pow,
)

__version__ = "0.1.0"
