"""Syndrome decoding of small stabilizer codes on exact state vectors."""

from .codes import (
    StabilizerCode,
    encode,
    five_qubit_code,
    get_code,
    quantum_hamming_bound,
    rep3_code,
    shor9_code,
)
from .decoder import (
    NotPauliEigenstate,
    StateOutsideCodeSpace,
    UncorrectableSyndrome,
    build_table,
    correct,
    decode,
    extract_logical,
    predicted_syndrome,
    syndrome,
    verify_against_printed,
)
from .pauli import PauliString, commutes, multiply, parse_pauli, weight
from .statevec import StateVector, fidelity

__version__ = "0.1.0"

__all__ = [
    "StabilizerCode",
    "encode",
    "five_qubit_code",
    "get_code",
    "quantum_hamming_bound",
    "rep3_code",
    "shor9_code",
    "NotPauliEigenstate",
    "StateOutsideCodeSpace",
    "UncorrectableSyndrome",
    "build_table",
    "correct",
    "decode",
    "extract_logical",
    "predicted_syndrome",
    "syndrome",
    "verify_against_printed",
    "PauliString",
    "commutes",
    "multiply",
    "parse_pauli",
    "weight",
    "StateVector",
    "fidelity",
]
