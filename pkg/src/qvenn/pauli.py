"""
n-qubit Pauli operators in binary symplectic form.

A Pauli string is stored as ``(x, z, phase)`` where site ``p`` carries

    (x, z) = (0, 0) -> I,  (1, 0) -> X,  (0, 1) -> Z,  (1, 1) -> Y

and ``phase`` is the exponent ``k`` of the global prefactor ``i**k``.  The
site operator for bits (1, 1) is the Hermitian Y matrix itself, so a bare
"Y" has phase +1 and ``Y = i X Z`` holds exactly.

Single-site products carry the following i-exponents (row times column):

         I    X    Y    Z
    I    0    0    0    0
    X    0    0   +1   -1      XY =  iZ,  XZ = -iY
    Y    0   -1    0   +1      YX = -iZ,  YZ =  iX
    Z    0   +1   -1    0      ZX =  iY,  ZY = -iX

Qubits are numbered from 1, with qubit 1 the leftmost tensor factor.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "PauliString",
    "parse_pauli",
    "commutes",
    "multiply",
    "weight",
    "identity",
    "single",
    "product",
    "single_qubit_errors",
    "in_group",
]

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}
_PHASE_TEXT = {0: "", 1: "+i", 2: "-", 3: "-i"}
_PHASE_PREFIX = re.compile(r"^(\+i|-i|\+|-)?")
_INDEXED_TERM = re.compile(r"([IXYZ])(\d+)")


def _site_exponent(x1: int, z1: int, x2: int, z2: int) -> int:
    """i-exponent picked up by the single-site product P(x1,z1) * P(x2,z2)."""
    if x1 == 0 and z1 == 0:
        return 0
    if x1 == 1 and z1 == 1:
        return z2 - x2
    if x1 == 1:
        return z2 * (2 * x2 - 1)
    return x2 * (1 - 2 * z2)


@dataclass(frozen=True)
class PauliString:
    """Immutable Pauli operator ``i**phase * P_1 (x) ... (x) P_n``."""

    x: tuple[int, ...]
    z: tuple[int, ...]
    phase: int = 0

    def __post_init__(self):
        if len(self.x) != len(self.z):
            raise ValueError("x and z bit vectors must have equal length")
        if len(self.x) == 0:
            raise ValueError("a Pauli string needs at least one qubit")
        if any(b not in (0, 1) for b in self.x + self.z):
            raise ValueError("symplectic bits must be 0 or 1")
        object.__setattr__(self, "phase", self.phase % 4)

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def letters(self) -> str:
        """Dense letter string without the phase marker."""
        return "".join(_BITS_LETTER[b] for b in zip(self.x, self.z))

    @property
    def phase_value(self) -> complex:
        return 1j ** self.phase

    @property
    def support(self) -> tuple[int, ...]:
        """1-based indices of the non-identity sites."""
        return tuple(p + 1 for p in range(self.n) if self.x[p] or self.z[p])

    def is_hermitian(self) -> bool:
        return self.phase in (0, 2)

    def is_identity(self) -> bool:
        return not any(self.x) and not any(self.z)

    def adjoint(self) -> PauliString:
        return PauliString(self.x, self.z, -self.phase)

    def with_phase(self, phase: int) -> PauliString:
        return PauliString(self.x, self.z, phase)

    def format(self) -> str:
        """Canonical dense text form, e.g. ``"XZZXI"`` or ``"-iXY"``."""
        return _PHASE_TEXT[self.phase] + self.letters

    def label(self) -> str:
        """Compact indexed form, e.g. ``"Z1Z2"``; ``"I"`` for the identity."""
        terms = "".join(f"{self.letters[p - 1]}{p}" for p in self.support)
        return _PHASE_TEXT[self.phase] + (terms or "I")

    def sort_key(self) -> tuple:
        """Order by weight, then letters (X < Y < Z) and indices site by site."""
        return (weight(self), tuple((self.letters[p - 1], p) for p in self.support))

    def __str__(self) -> str:
        return self.format()

    def __mul__(self, other: PauliString) -> PauliString:
        return multiply(self, other)


def identity(n: int) -> PauliString:
    if n <= 0:
        raise ValueError(f"qubit count must be positive, got {n}")
    return PauliString((0,) * n, (0,) * n)


def single(letter: str, index: int, n: int) -> PauliString:
    """The operator ``letter`` on qubit ``index`` (1-based) of an n-qubit register."""
    return parse_pauli(f"{letter}{index}", n)


def parse_pauli(text: str, n: int) -> PauliString:
    """Parse a dense (``"XZZXI"``) or indexed (``"Z1Z2"``) Pauli string.

    An optional leading phase marker ``+``, ``-``, ``+i`` or ``-i`` is
    accepted in either form.  In the indexed form repeated sites are folded
    by Pauli multiplication, so ``"X1Z1"`` gives ``-iY`` on qubit 1.  A bare
    ``"I"`` denotes the identity for any ``n``.
    """
    if n <= 0:
        raise ValueError(f"qubit count must be positive, got {n}")
    body = text.strip()
    marker = _PHASE_PREFIX.match(body).group(0)
    body = body[len(marker):]
    phase = {"": 0, "+": 0, "+i": 1, "-": 2, "-i": 3}[marker]

    if body == "I":
        return identity(n).with_phase(phase)

    if any(c.isdigit() for c in body):
        pos = 0
        result = identity(n)
        for m in _INDEXED_TERM.finditer(body):
            if m.start() != pos:
                raise ValueError(f"malformed indexed Pauli string {text!r}")
            pos = m.end()
            index = int(m.group(2))
            if not 1 <= index <= n:
                raise ValueError(f"qubit index {index} out of range 1..{n}")
            x = [0] * n
            z = [0] * n
            x[index - 1], z[index - 1] = _LETTER_BITS[m.group(1)]
            result = multiply(result, PauliString(tuple(x), tuple(z)))
        if pos != len(body) or pos == 0:
            raise ValueError(f"malformed indexed Pauli string {text!r}")
        return result.with_phase(result.phase + phase)

    if len(body) != n:
        raise ValueError(f"dense Pauli string {text!r} must have exactly {n} letters")
    try:
        bits = [_LETTER_BITS[c] for c in body]
    except KeyError as err:
        raise ValueError(f"invalid Pauli letter {err.args[0]!r} in {text!r}") from None
    return PauliString(tuple(b[0] for b in bits), tuple(b[1] for b in bits), phase)


def _check_lengths(a: PauliString, b: PauliString) -> None:
    if a.n != b.n:
        raise ValueError(f"Pauli length mismatch: {a.n} vs {b.n}")


def commutes(a: PauliString, b: PauliString) -> bool:
    """True iff ``ab == ba``, decided by the symplectic inner product."""
    _check_lengths(a, b)
    form = sum(xa * zb + za * xb for xa, za, xb, zb in zip(a.x, a.z, b.x, b.z))
    return form % 2 == 0


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Exact operator product ``a @ b`` including the phase."""
    _check_lengths(a, b)
    phase = a.phase + b.phase
    for xa, za, xb, zb in zip(a.x, a.z, b.x, b.z):
        phase += _site_exponent(xa, za, xb, zb)
    x = tuple(xa ^ xb for xa, xb in zip(a.x, b.x))
    z = tuple(za ^ zb for za, zb in zip(a.z, b.z))
    return PauliString(x, z, phase)


def product(paulis: Iterable[PauliString], n: int) -> PauliString:
    result = identity(n)
    for p in paulis:
        result = multiply(result, p)
    return result


def weight(a: PauliString) -> int:
    return sum(1 for xb, zb in zip(a.x, a.z) if xb or zb)


def single_qubit_errors(n: int) -> list[PauliString]:
    """All 3n weight-one Paulis, ordered X1..Xn, Y1..Yn, Z1..Zn."""
    return [single(letter, i, n) for letter in "XYZ" for i in range(1, n + 1)]


def in_group(element: PauliString, generators: list[PauliString]) -> bool:
    """Whether ``element`` lies in the group generated by ``generators``, up to phase.

    Solved as a linear system over GF(2) on the symplectic vectors.
    """
    rows = [_to_int(g) for g in generators]
    target = _to_int(element)
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead not in basis:
                basis[lead] = row
                break
            row ^= basis[lead]
    while target:
        lead = target.bit_length() - 1
        if lead not in basis:
            return False
        target ^= basis[lead]
    return True


def _to_int(p: PauliString) -> int:
    bits = p.x + p.z
    return int("".join(map(str, bits)), 2)

