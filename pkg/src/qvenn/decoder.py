"""
Syndrome extraction, lookup-table construction, correction and retrieval.

The live decoder only ever uses tables derived from commutation with the
stabilizer generators.  Tables printed in the literature are kept verbatim
in :data:`PRINTED_TABLES` for comparison by :func:`verify_against_printed`.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .codes import StabilizerCode
from .pauli import (
    PauliString,
    commutes,
    identity,
    in_group,
    multiply,
    parse_pauli,
    single_qubit_errors,
)
from .statevec import (
    StateVector,
    apply_controlled,
    apply_hadamard,
    apply_pauli,
    basis_state,
    expectation,
    inner,
    project_span,
    tensor,
)

__all__ = [
    "Syndrome",
    "SNAP_TOL",
    "NotPauliEigenstate",
    "UncorrectableSyndrome",
    "StateOutsideCodeSpace",
    "CorrectionClass",
    "SyndromeTable",
    "syndrome",
    "predicted_syndrome",
    "build_table",
    "PRINTED_TABLES",
    "Discrepancy",
    "VerificationReport",
    "verify_against_printed",
    "correct",
    "extract_logical",
    "retrieve_by_circuit",
    "decode",
]

Syndrome = tuple[int, ...]

SNAP_TOL = 1e-9
CODE_SPACE_TOL = 1e-9


class NotPauliEigenstate(ValueError):
    """A stabilizer expectation is not within tolerance of +1 or -1."""


class UncorrectableSyndrome(LookupError):
    """The measured syndrome has no entry in the lookup table."""


class StateOutsideCodeSpace(ValueError):
    """The state has weight outside span{|0_L>, |1_L>}."""


def syndrome(code: StabilizerCode, state: StateVector) -> Syndrome:
    """Measure ``<psi|H_i|psi>`` for every generator and snap to +/-1."""
    if state.n != code.n:
        raise ValueError(f"{code.name} acts on {code.n} qubits, state has {state.n}")
    signs = []
    for h in code.stabilizers:
        value = expectation(state, h)
        if abs(value - 1.0) <= SNAP_TOL:
            signs.append(1)
        elif abs(value + 1.0) <= SNAP_TOL:
            signs.append(-1)
        else:
            raise NotPauliEigenstate(f"<{h.format()}> = {value:.12g} is not +/-1")
    return tuple(signs)


def predicted_syndrome(code: StabilizerCode, error: PauliString) -> Syndrome:
    """Syndrome of ``error`` from commutation alone: -1 where it anticommutes."""
    if error.n != code.n:
        raise ValueError(f"{code.name} acts on {code.n} qubits, error has {error.n}")
    return tuple(1 if commutes(error, h) else -1 for h in code.stabilizers)


def _syndrome_key(s: Syndrome) -> tuple[int, ...]:
    return tuple(0 if v == 1 else 1 for v in s)


@dataclass(frozen=True)
class CorrectionClass:
    """Errors sharing one syndrome, corrected by ``representative``.

    ``unsound`` lists members for which representative * member is not in
    the stabilizer group: applying the representative leaves a logical error.
    """

    syndrome: Syndrome
    representative: PauliString
    members: tuple[PauliString, ...]
    unsound: tuple[PauliString, ...] = ()

    def is_sound(self, error: PauliString) -> bool:
        return error in self.members and error not in self.unsound

    @property
    def sound_members(self) -> tuple[PauliString, ...]:
        return tuple(m for m in self.members if m not in self.unsound)


@dataclass(frozen=True)
class SyndromeTable:
    code_name: str
    classes: tuple[CorrectionClass, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {c.syndrome: c for c in self.classes})

    def __len__(self) -> int:
        return len(self.classes)

    def __contains__(self, s: Syndrome) -> bool:
        return tuple(s) in self._index

    def lookup(self, s: Syndrome) -> CorrectionClass:
        try:
            return self._index[tuple(s)]
        except KeyError:
            raise UncorrectableSyndrome(f"syndrome {list(s)} is not in the {self.code_name} table") from None

    def class_of(self, error: PauliString) -> CorrectionClass | None:
        for c in self.classes:
            if error in c.members:
                return c
        return None

    def to_dict(self) -> dict:
        return {
            "code": self.code_name,
            "classes": [
                {
                    "syndrome": list(c.syndrome),
                    "representative": c.representative.format(),
                    "members": [m.format() for m in c.members],
                    "unsound": [m.format() for m in c.unsound],
                }
                for c in self.classes
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        """Aligned text table, one row per class, in syndrome order."""
        n_stab = len(self.classes[0].syndrome)
        head = "  ".join(f"S{i + 1:<2}" for i in range(n_stab))
        rows = [f"{'correction':<10}  {head}  members"]
        for c in self.classes:
            signs = "  ".join(f"{v:+d} " for v in c.syndrome)
            members = ", ".join(
                m.label() + ("*" if m in c.unsound else "") for m in c.members
            )
            rows.append(f"{c.representative.label():<10}  {signs}  {members}")
        if any(c.unsound for c in self.classes):
            rows.append("* unsound: the correction leaves a logical error")
        return "\n".join(rows)


@functools.lru_cache(maxsize=None)
def build_table(code: StabilizerCode) -> SyndromeTable:
    """Group I and all single-qubit X, Y, Z errors by predicted syndrome."""
    groups: dict[Syndrome, list[PauliString]] = {}
    for error in [identity(code.n), *single_qubit_errors(code.n)]:
        groups.setdefault(predicted_syndrome(code, error), []).append(error)

    classes = []
    for s in sorted(groups, key=_syndrome_key):
        members = tuple(sorted(groups[s], key=PauliString.sort_key))
        preferred = [p for p in code.preferred_representatives if p in members]
        rep = preferred[0] if preferred else members[0]
        unsound = tuple(
            m for m in members if not in_group(multiply(rep, m), list(code.stabilizers))
        )
        classes.append(CorrectionClass(s, rep, members, unsound))
    return SyndromeTable(code.name, tuple(classes))


# Rows as printed, error label -> printed syndrome text -> reading.  The
# five-qubit X5 row is typeset "11- 1 -1" and read as (1, 1, -1, -1).  The
# printed Y2 row duplicates X3 and is kept as printed.
PRINTED_TABLES: dict[str, list[tuple[str, str, Syndrome]]] = {
    "five": [
        ("X1", "1 1 1 -1", (1, 1, 1, -1)),
        ("X2", "-1 1 1 1", (-1, 1, 1, 1)),
        ("X3", "-1-1 1 1", (-1, -1, 1, 1)),
        ("X4", "1-1-1 1", (1, -1, -1, 1)),
        ("X5", "11- 1 -1", (1, 1, -1, -1)),
        ("Z1", "-1 1 -1 1", (-1, 1, -1, 1)),
        ("Z2", "1 -11 -1", (1, -1, 1, -1)),
        ("Z3", "1 1-1 1", (1, 1, -1, 1)),
        ("Z4", "-1 11 -1", (-1, 1, 1, -1)),
        ("Z5", "1 -1 1 1", (1, -1, 1, 1)),
        ("Y1", "-1 1-1-1", (-1, 1, -1, -1)),
        ("Y2", "-1 -1 1 1", (-1, -1, 1, 1)),
        ("Y3", "-1-1-1 1", (-1, -1, -1, 1)),
        ("Y4", "-1-1-1-1", (-1, -1, -1, -1)),
        ("Y5", "1-1-1-1", (1, -1, -1, -1)),
    ],
    "rep3": [
        ("X1", "-1 1", (-1, 1)),
        ("X2", "-1-1", (-1, -1)),
        ("X3", "1-1", (1, -1)),
        ("I", "1 1", (1, 1)),
    ],
    "shor9": [
        ("X1", "-1 1 1 1 1 1 1 1", (-1, 1, 1, 1, 1, 1, 1, 1)),
        ("X2", "-1 -1 1 1 1 1 1 1", (-1, -1, 1, 1, 1, 1, 1, 1)),
        ("X3", "1 -1 1 1 1 1 1 1", (1, -1, 1, 1, 1, 1, 1, 1)),
        ("X4", "1 1 -1 1 1 1 1 1", (1, 1, -1, 1, 1, 1, 1, 1)),
        ("X5", "1 1 -1 -1 1 1 1 1", (1, 1, -1, -1, 1, 1, 1, 1)),
        ("X6", "1 1 1 -1 1 1 1 1", (1, 1, 1, -1, 1, 1, 1, 1)),
        ("X7", "1 1 1 1 -1 1 1 1", (1, 1, 1, 1, -1, 1, 1, 1)),
        ("X8", "1 1 1 1 -1 -1 1 1", (1, 1, 1, 1, -1, -1, 1, 1)),
        ("X9", "1 1 1 1 1 -1 1 1", (1, 1, 1, 1, 1, -1, 1, 1)),
        ("Z1 Z2 Z3", "1 1 1 1 1 1 -1 1", (1, 1, 1, 1, 1, 1, -1, 1)),
        ("Z4 Z5 Z6", "1 1 1 1 1 1 -1 -1", (1, 1, 1, 1, 1, 1, -1, -1)),
        ("Z7 Z8 Z9", "1 1 1 1 1 1 1 -1", (1, 1, 1, 1, 1, 1, 1, -1)),
        ("I", "1 1 1 1 1 1 1 1", (1, 1, 1, 1, 1, 1, 1, 1)),
    ],
}

# printed rows whose typesetting needed interpretation
_AMBIGUOUS_ROWS = {"five": ("X5",)}


@dataclass(frozen=True)
class Discrepancy:
    error: str
    printed: Syndrome
    derived: Syndrome


@dataclass(frozen=True)
class VerificationReport:
    code_name: str
    rows_checked: int
    discrepancies: tuple[Discrepancy, ...]
    interpreted_rows: tuple[tuple[str, str, Syndrome], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def verify_against_printed(code: StabilizerCode) -> VerificationReport:
    """Compare every printed row with the derived syndrome of the named error(s).

    A row naming several errors (the Shor Z triples) must also coincide with
    exactly one derived correction class.
    """
    rows = PRINTED_TABLES[code.name]
    table = build_table(code)
    found = []
    for label, _, printed in rows:
        errors = [parse_pauli(name, code.n) for name in label.split()]
        for error in errors:
            derived = predicted_syndrome(code, error)
            if derived != printed:
                found.append(Discrepancy(error.label(), printed, derived))
        if len(errors) > 1:
            cls = table.lookup(printed) if printed in table else None
            if cls is None or set(cls.members) != set(errors):
                found.append(Discrepancy(label, printed, cls.syndrome if cls else ()))
    ambiguous = tuple(r for r in rows if r[0] in _AMBIGUOUS_ROWS.get(code.name, ()))
    return VerificationReport(code.name, len(rows), tuple(found), ambiguous)


def correct(code: StabilizerCode, received: StateVector) -> tuple[StateVector, PauliString]:
    """Measure the syndrome and undo the class representative."""
    cls = build_table(code).lookup(syndrome(code, received))
    applied = cls.representative.adjoint()
    return apply_pauli(received, applied), applied


def _normalized_pair(a0: complex, a1: complex) -> tuple[complex, complex]:
    norm = np.sqrt(abs(a0) ** 2 + abs(a1) ** 2)
    return a0 / norm, a1 / norm


def _logical_overlaps(code: StabilizerCode, state: StateVector) -> tuple[complex, complex]:
    a0 = inner(code.logical_zero, state)
    a1 = inner(code.logical_one, state)
    weight = abs(a0) ** 2 + abs(a1) ** 2
    if weight < 1 - CODE_SPACE_TOL:
        raise StateOutsideCodeSpace(f"only {weight:.12g} of the state lies in the {code.name} code space")
    return _normalized_pair(a0, a1)


def _retrieve_via_root_strings(state: StateVector, n: int) -> tuple[complex, complex]:
    """Project onto {|0..0>, |1..1>}, append a qubit and disentangle it.

    The appended qubit is flipped under control of qubit 1, then qubits
    1..n are flipped under control of the appended qubit, which leaves the
    information on the appended qubit and 0s everywhere else.
    """
    projected, _ = project_span(state, ["0" * n, "1" * n])
    state = tensor(projected, basis_state("0"))
    m = n + 1
    state = apply_controlled(state, {1}, parse_pauli(f"X{m}", m))
    flips = parse_pauli("".join(f"X{q}" for q in range(1, n + 1)), m)
    state = apply_controlled(state, {m}, flips)
    collapsed, _ = project_span(state, ["0" * n + "0", "0" * n + "1"])
    return complex(collapsed.amps[0]), complex(collapsed.amps[1])


def _retrieve_shor9(state: StateVector) -> tuple[complex, complex]:
    """Run the encoding circuit backwards and read qubit 1."""
    for leader in (7, 4, 1):
        targets = parse_pauli(f"X{leader + 1}X{leader + 2}", 9)
        state = apply_controlled(state, {leader}, targets)
    for leader in (7, 4, 1):
        state = apply_hadamard(state, leader)
    state = apply_controlled(state, {1}, parse_pauli("X4X7", 9))
    collapsed, _ = project_span(state, ["0" * 9, "1" + "0" * 8])
    return complex(collapsed.amps[0]), complex(collapsed.amps[2**8])


def retrieve_by_circuit(code: StabilizerCode, corrected: StateVector) -> tuple[complex, complex]:
    """Recover (alpha0, alpha1) by gate-level steps instead of overlaps."""
    if code.name in ("five", "rep3"):
        return _retrieve_via_root_strings(corrected, code.n)
    if code.name == "shor9":
        return _retrieve_shor9(corrected)
    raise ValueError(f"no retrieval circuit for code {code.name!r}")


def extract_logical(
    code: StabilizerCode,
    corrected: StateVector,
    method: Literal["overlap", "circuit"] = "overlap",
) -> tuple[complex, complex]:
    """Logical amplitudes ``(<0_L|s>, <1_L|s>)`` of a code-space state.

    Both methods fix the same global phase.  ``"circuit"`` still checks
    code-space membership via the overlaps first.
    """
    pair = _logical_overlaps(code, corrected)
    if method == "overlap":
        return pair
    if method == "circuit":
        return retrieve_by_circuit(code, corrected)
    raise ValueError(f"unknown retrieval method {method!r}")


def decode(
    code: StabilizerCode, received: StateVector
) -> tuple[complex, complex, PauliString]:
    corrected, applied = correct(code, received)
    alpha0, alpha1 = extract_logical(code, corrected)
    return alpha0, alpha1, applied
