"""
Dense state vectors for up to ten qubits.

Amplitude index ``i`` is the computational basis label read big-endian:
qubit 1 is the most significant bit, so ``|10>`` sits at index 2.  Every
operation here is a pure function returning a new :class:`StateVector`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .pauli import PauliString

__all__ = [
    "MAX_QUBITS",
    "StateVector",
    "basis_state",
    "tensor",
    "apply_pauli",
    "apply_hadamard",
    "apply_controlled",
    "expectation",
    "inner",
    "project_span",
    "fidelity",
    "ZeroProjection",
    "pauli_action",
    "format_complex",
]

MAX_QUBITS = 10
NORM_TOL = 1e-12


class ZeroProjection(ValueError):
    """Projection of a state onto a subspace it has no weight in."""


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    amps: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count {self.n} outside 1..{MAX_QUBITS}")
        amps = np.array(self.amps, dtype=np.complex128).reshape(-1)
        if amps.shape != (2**self.n,):
            raise ValueError(f"expected {2**self.n} amplitudes, got {amps.size}")
        norm = np.vdot(amps, amps).real
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (norm^2 = {norm!r})")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @classmethod
    def from_amplitudes(cls, amps: Sequence[complex], normalize: bool = False) -> StateVector:
        arr = np.asarray(amps, dtype=np.complex128)
        n = int(arr.size).bit_length() - 1
        if 2**n != arr.size:
            raise ValueError(f"amplitude count {arr.size} is not a power of two")
        if normalize:
            norm = np.linalg.norm(arr)
            if norm == 0:
                raise ValueError("cannot normalize the zero vector")
            arr = arr / norm
        return cls(n, arr)

    def dump(self, digits: int = 9) -> str:
        """One line per nonzero amplitude, ``"bitstring: re+imi"``."""
        lines = []
        for index in np.flatnonzero(np.abs(self.amps) > NORM_TOL):
            label = format(int(index), f"0{self.n}b")
            lines.append(f"{label}: {format_complex(self.amps[index], digits)}")
        return "\n".join(lines)

    def __neg__(self) -> StateVector:
        return StateVector(self.n, -self.amps)


def format_complex(value: complex, digits: int = 9) -> str:
    """Render ``a+bi`` with ``digits`` significant digits, dropping zero parts."""
    re = 0.0 if abs(value.real) < NORM_TOL else float(value.real)
    im = 0.0 if abs(value.imag) < NORM_TOL else float(value.imag)
    if im == 0.0:
        return f"{re:.{digits}g}"
    sign = "-" if im < 0 else "+"
    if re == 0.0:
        return f"{'-' if im < 0 else ''}{abs(im):.{digits}g}i"
    return f"{re:.{digits}g}{sign}{abs(im):.{digits}g}i"


def _bit(q: int, n: int) -> int:
    return 1 << (n - q)


def _check_qubit(q: int, n: int) -> None:
    if not 1 <= q <= n:
        raise ValueError(f"qubit index {q} out of range 1..{n}")


def basis_state(bits: str) -> StateVector:
    if not 1 <= len(bits) <= MAX_QUBITS or set(bits) - {"0", "1"}:
        raise ValueError(f"invalid basis label {bits!r}")
    amps = np.zeros(2 ** len(bits), dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return StateVector(len(bits), amps)


def tensor(a: StateVector, b: StateVector) -> StateVector:
    if a.n + b.n > MAX_QUBITS:
        raise ValueError(f"tensor product would need {a.n + b.n} > {MAX_QUBITS} qubits")
    return StateVector(a.n + b.n, np.kron(a.amps, b.amps))


@functools.lru_cache(maxsize=4096)
def _pauli_tables(p: PauliString) -> tuple[np.ndarray, np.ndarray]:
    """Destination index and multiplier per basis state for ``p``."""
    n = p.n
    xmask = sum(_bit(q + 1, n) for q in range(n) if p.x[q])
    zmask = sum(_bit(q + 1, n) for q in range(n) if p.z[q])
    n_y = sum(1 for xb, zb in zip(p.x, p.z) if xb and zb)
    index = np.arange(2**n)
    parity = np.zeros(2**n, dtype=np.int64)
    masked = index & zmask
    while masked.any():
        parity ^= masked & 1
        masked >>= 1
    # Y = iXZ per site, so P = i^(phase + #Y) X^x Z^z
    coeff = 1j ** ((p.phase + n_y) % 4)
    mult = np.where(parity, -coeff, coeff).astype(np.complex128)
    dest = index ^ xmask
    dest.flags.writeable = False
    mult.flags.writeable = False
    return dest, mult


def pauli_action(amps: np.ndarray, p: PauliString) -> np.ndarray:
    """Matrix action of ``p`` on a raw amplitude array (no normalization check)."""
    dest, mult = _pauli_tables(p)
    out = np.empty_like(amps)
    out[dest] = mult * amps
    return out


def apply_pauli(s: StateVector, p: PauliString) -> StateVector:
    if p.n != s.n:
        raise ValueError(f"Pauli on {p.n} qubits applied to a {s.n}-qubit state")
    return StateVector(s.n, pauli_action(s.amps, p))


def apply_hadamard(s: StateVector, q: int) -> StateVector:
    _check_qubit(q, s.n)
    h = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
    psi = s.amps.reshape((2,) * s.n)
    psi = np.moveaxis(np.tensordot(h, psi, axes=([1], [q - 1])), 0, q - 1)
    return StateVector(s.n, psi.reshape(-1))


def apply_controlled(s: StateVector, controls: Iterable[int], targets: PauliString) -> StateVector:
    """Apply ``targets`` on every basis component whose control qubits all read 1."""
    controls = set(controls)
    if targets.n != s.n:
        raise ValueError(f"Pauli on {targets.n} qubits applied to a {s.n}-qubit state")
    for q in controls:
        _check_qubit(q, s.n)
    overlap = controls & set(targets.support)
    if overlap:
        raise ValueError(f"control qubits {sorted(overlap)} overlap the target support")
    cmask = sum(_bit(q, s.n) for q in controls)
    fired = (np.arange(2**s.n) & cmask) == cmask
    return StateVector(s.n, np.where(fired, pauli_action(s.amps, targets), s.amps))


def expectation(s: StateVector, p: PauliString) -> float:
    if p.n != s.n:
        raise ValueError(f"Pauli on {p.n} qubits measured on a {s.n}-qubit state")
    if not p.is_hermitian():
        raise ValueError(f"{p.format()} is not Hermitian")
    return float(np.vdot(s.amps, pauli_action(s.amps, p)).real)


def inner(a: StateVector, b: StateVector) -> complex:
    """``<a|b>``, conjugate-linear in ``a``."""
    if a.n != b.n:
        raise ValueError(f"state length mismatch: {a.n} vs {b.n}")
    return complex(np.vdot(a.amps, b.amps))


def fidelity(a: StateVector, b: StateVector) -> float:
    """``|<a|b>|``, blind to global phase."""
    return min(1.0, abs(inner(a, b)))


def project_span(s: StateVector, basis_labels: Sequence[str]) -> tuple[StateVector, float]:
    """Project onto span{|label>} and renormalize.

    Returns the projected state and the probability (squared norm) of the
    projection.  Raises :class:`ZeroProjection` if that probability vanishes.
    """
    if len(set(basis_labels)) != len(basis_labels):
        raise ValueError("basis labels must be distinct")
    keep = np.zeros(2**s.n, dtype=bool)
    for label in basis_labels:
        if len(label) != s.n or set(label) - {"0", "1"}:
            raise ValueError(f"basis label {label!r} does not fit {s.n} qubits")
        keep[int(label, 2)] = True
    projected = np.where(keep, s.amps, 0)
    prob = float(np.vdot(projected, projected).real)
    if prob < NORM_TOL:
        raise ZeroProjection(f"state has no weight on {list(basis_labels)}")
    return StateVector(s.n, projected / np.sqrt(prob)), prob
