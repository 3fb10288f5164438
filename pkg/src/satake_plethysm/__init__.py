"""Bounded partitions, GL2 plethysm multiplicities and explicit Satake inversion."""
from .basic_function import (
    CONSISTENT,
    PRINTED,
    BasicFunctionSeries,
    SatakeParams,
    basic_function,
    euler_factor_series,
    hecke_operator_S,
    hecke_operator_T,
    trace_series,
)
from .hecke import (
    CartanElement,
    HeckeElement,
    SymLaurent,
    build_one_m,
    convolve,
    evaluate,
    from_cartan,
    satake_forward,
    satake_inverse,
    sym_multiply,
    to_cartan,
)
from .partitions import (
    BoundedClass,
    Partition,
    count_exact_parts,
    count_partitions,
    enumerate_partitions,
    gaussian_coefficients,
    theorem1_bijection,
)
from .plethysm import (
    CharacterPolynomial,
    decompose_character,
    multiplicity_generic,
    multiplicity_k3_closed,
    multiplicity_k3_residue,
    multiplicity_k4_closed,
    multiplicity_k4_recursive,
    plethysm_character,
    signed_sequence,
)
from .qcoeff import QCoeff

__version__ = "0.1.0"
