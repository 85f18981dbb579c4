"""
The three codes: the five-qubit perfect code, the three-qubit repetition
code and Shor's nine-qubit code, each with its encoding circuit.

Logical basis states are produced by running a code's own encoder on
(1, 0) and (0, 1) when the code object is built.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from math import comb, isclose
from typing import Callable, NamedTuple

from .pauli import PauliString, commutes, multiply, parse_pauli
from .statevec import (
    StateVector,
    apply_controlled,
    apply_hadamard,
    basis_state,
    pauli_action,
    tensor,
)

__all__ = [
    "StabilizerCode",
    "five_qubit_code",
    "rep3_code",
    "shor9_code",
    "get_code",
    "CODE_IDS",
    "encode",
    "qubit_state",
    "Relation",
    "BoundCheck",
    "quantum_hamming_bound",
]

Encoder = Callable[[StateVector], StateVector]


@dataclass(frozen=True, eq=False)
class StabilizerCode:
    """An (n, 1) stabilizer code with a concrete encoding recipe.

    ``encoder`` maps the one-qubit information state to the n-qubit coded
    state.  ``preferred_representatives`` overrides the default choice of
    correction operator for the named degenerate classes.
    """

    name: str
    n: int
    k: int
    stabilizers: tuple[PauliString, ...]
    encoder: Encoder = field(repr=False)
    preferred_representatives: tuple[PauliString, ...] = ()
    logical_zero: StateVector = field(init=False, repr=False)
    logical_one: StateVector = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.stabilizers) != self.n - self.k:
            raise ValueError(f"{self.name}: expected {self.n - self.k} stabilizers")
        for i, a in enumerate(self.stabilizers):
            square = multiply(a, a)
            if not square.is_identity() or square.phase != 0:
                raise ValueError(f"{self.name}: generator {a} does not square to +I")
            for b in self.stabilizers[i + 1:]:
                if not commutes(a, b):
                    raise ValueError(f"{self.name}: generators {a} and {b} anticommute")
        object.__setattr__(self, "logical_zero", self.encoder(basis_state("0")))
        object.__setattr__(self, "logical_one", self.encoder(basis_state("1")))

    @property
    def num_stabilizers(self) -> int:
        return len(self.stabilizers)


def qubit_state(alpha0: complex, alpha1: complex, tol: float = 1e-9) -> StateVector:
    """``alpha0|0> + alpha1|1>``; the coefficients must be normalized within ``tol``."""
    norm2 = abs(alpha0) ** 2 + abs(alpha1) ** 2
    if not isclose(norm2, 1.0, abs_tol=tol):
        raise ValueError(f"|alpha0|^2 + |alpha1|^2 = {norm2!r}, expected 1")
    return StateVector.from_amplitudes([alpha0, alpha1], normalize=True)


def _pad(state: StateVector, n: int) -> StateVector:
    return tensor(state, basis_state("0" * (n - state.n)))


_FIVE_FANOUT = parse_pauli("IXXXX", 5)
_REP3_FANOUT = parse_pauli("X2X3", 3)


def _encode_five(psi: StateVector) -> StateVector:
    state = _pad(psi, 5)
    state = apply_controlled(state, {1}, _FIVE_FANOUT)
    # prod (I + H_i) is not unitary; each factor is applied as the projector (I + H_i)/2
    amps = state.amps
    for h in FIVE_QUBIT_STABILIZERS:
        amps = (amps + pauli_action(amps, h)) / 2
    return StateVector.from_amplitudes(amps, normalize=True)


def _encode_rep3(psi: StateVector) -> StateVector:
    state = _pad(psi, 3)
    return apply_controlled(state, {1}, _REP3_FANOUT)


def _encode_shor9(psi: StateVector) -> StateVector:
    state = _pad(psi, 9)
    state = apply_controlled(state, {1}, parse_pauli("X4X7", 9))
    for leader in (1, 4, 7):
        state = apply_hadamard(state, leader)
    for leader in (1, 4, 7):
        targets = parse_pauli(f"X{leader + 1}X{leader + 2}", 9)
        state = apply_controlled(state, {leader}, targets)
    return state


FIVE_QUBIT_STABILIZERS = tuple(
    parse_pauli(s, 5) for s in ("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ")
)


@functools.lru_cache(maxsize=None)
def five_qubit_code() -> StabilizerCode:
    return StabilizerCode("five", 5, 1, FIVE_QUBIT_STABILIZERS, _encode_five)


@functools.lru_cache(maxsize=None)
def rep3_code() -> StabilizerCode:
    stabilizers = tuple(parse_pauli(s, 3) for s in ("Z1Z2", "Z2Z3"))
    return StabilizerCode("rep3", 3, 1, stabilizers, _encode_rep3)


@functools.lru_cache(maxsize=None)
def shor9_code() -> StabilizerCode:
    stabilizers = tuple(
        parse_pauli(s, 9)
        for s in (
            "Z1Z2", "Z2Z3", "Z4Z5", "Z5Z6", "Z7Z8", "Z8Z9",
            "X1X2X3X4X5X6", "X4X5X6X7X8X9",
        )
    )
    # phase flips inside a block are all fixed by the block's middle qubit
    middles = tuple(parse_pauli(f"Z{q}", 9) for q in (2, 5, 8))
    return StabilizerCode("shor9", 9, 1, stabilizers, _encode_shor9, middles)


CODE_IDS = {"five": five_qubit_code, "rep3": rep3_code, "shor9": shor9_code}


def get_code(code_id: str) -> StabilizerCode:
    try:
        return CODE_IDS[code_id]()
    except KeyError:
        raise ValueError(f"unknown code {code_id!r}; choose from {sorted(CODE_IDS)}") from None


def encode(code: StabilizerCode, alpha0: complex, alpha1: complex) -> StateVector:
    """Encode ``alpha0|0> + alpha1|1>`` into ``code`` by running its circuit."""
    return code.encoder(qubit_state(alpha0, alpha1))


class Relation(enum.Enum):
    PERFECT = "PERFECT"
    SATISFIED = "SATISFIED"
    VIOLATED = "VIOLATED"


class BoundCheck(NamedTuple):
    lhs: int
    rhs: int
    relation: Relation

    def __str__(self) -> str:
        op = ">" if self.relation is Relation.VIOLATED else "≤"
        return f"{self.lhs} {op} {self.rhs} {self.relation.value}"


def quantum_hamming_bound(n: int, k: int, t: int) -> BoundCheck:
    """Compare ``sum_j C(n, j) 3^j 2^k`` (j = 0..t) against ``2^n`` in exact integers."""
    if not (isinstance(n, int) and isinstance(k, int) and isinstance(t, int)):
        raise TypeError("n, k and t must be integers")
    if not 0 <= k < n or t < 0:
        raise ValueError(f"need 0 <= k < n and t >= 0, got n={n}, k={k}, t={t}")
    lhs = sum(comb(n, j) * 3**j for j in range(t + 1)) * 2**k
    rhs = 2**n
    if lhs == rhs:
        relation = Relation.PERFECT
    elif lhs < rhs:
        relation = Relation.SATISFIED
    else:
        relation = Relation.VIOLATED
    return BoundCheck(lhs, rhs, relation)
