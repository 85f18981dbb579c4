"""
Monte Carlo harness: encode, pass through an independent depolarizing
channel, decode, and score the recovered logical qubit.

Each trial draws from its own PCG64 stream seeded by ``(seed, trial)``, so
results do not depend on the order in which trials are run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .codes import StabilizerCode, encode
from .decoder import UncorrectableSyndrome, build_table, decode, syndrome
from .pauli import PauliString, identity, multiply, single
from .statevec import apply_pauli

__all__ = [
    "SUCCESS_TOL",
    "TrialRecord",
    "SimulationSummary",
    "trial_rng",
    "sample_errors",
    "run_trial",
    "simulate",
    "single_error_success_probability",
]

SUCCESS_TOL = 1e-9


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    errors: tuple[PauliString, ...]
    syndrome: tuple[int, ...] | None
    applied: PauliString | None
    fidelity: float

    @property
    def success(self) -> bool:
        return self.fidelity >= 1 - SUCCESS_TOL

    def to_dict(self) -> dict:
        return {
            "trial": self.trial,
            "errors": [e.label() for e in self.errors],
            "syndrome": list(self.syndrome) if self.syndrome is not None else None,
            "applied": self.applied.label() if self.applied is not None else None,
            "fidelity": _sig(self.fidelity),
            "success": self.success,
        }


@dataclass(frozen=True)
class SimulationSummary:
    code: str
    p: float
    trials: int
    seed: int
    successes: int
    conditional_trials: int
    conditional_successes: int
    mean_fidelity: float

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials

    @property
    def conditional_success_rate(self) -> float | None:
        if not self.conditional_trials:
            return None
        return self.conditional_successes / self.conditional_trials

    def to_dict(self) -> dict:
        rate = self.conditional_success_rate
        return {
            "code": self.code,
            "p": self.p,
            "trials": self.trials,
            "seed": self.seed,
            "successes": self.successes,
            "success_rate": _sig(self.success_rate),
            "conditional_trials": self.conditional_trials,
            "conditional_successes": self.conditional_successes,
            "conditional_success_rate": None if rate is None else _sig(rate),
            "mean_fidelity": _sig(self.mean_fidelity),
        }


def _sig(x: float) -> float:
    return float(f"{x:.9g}")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))


def sample_errors(rng: np.random.Generator, n: int, p: float) -> tuple[PauliString, ...]:
    """Per qubit: nothing with probability 1-p, else X, Y or Z with p/3 each."""
    errors = []
    for q, r in enumerate(rng.random(n), start=1):
        if r < p:
            letter = "XYZ"[min(int(3 * r / p), 2)]
            errors.append(single(letter, q, n))
    return tuple(errors)


def _random_qubit(rng: np.random.Generator) -> tuple[complex, complex]:
    v = rng.normal(size=4)
    v /= np.linalg.norm(v)
    return complex(v[0], v[1]), complex(v[2], v[3])


def run_trial(
    code: StabilizerCode,
    p: float,
    seed: int,
    trial: int,
    alpha: tuple[complex, complex] | None = None,
) -> TrialRecord:
    rng = trial_rng(seed, trial)
    errors = sample_errors(rng, code.n, p)
    a0, a1 = alpha if alpha is not None else _random_qubit(rng)

    total = identity(code.n)
    for e in errors:
        total = multiply(total, e)
    received = apply_pauli(encode(code, a0, a1), total)
    measured = syndrome(code, received)
    try:
        b0, b1, applied = decode(code, received)
    except UncorrectableSyndrome:
        return TrialRecord(trial, errors, measured, None, 0.0)
    fid = float(min(1.0, abs(np.conj(a0) * b0 + np.conj(a1) * b1)))
    return TrialRecord(trial, errors, measured, applied, fid)


def simulate(
    code: StabilizerCode,
    p: float,
    trials: int,
    seed: int,
    alpha: tuple[complex, complex] | None = None,
    records: list[TrialRecord] | None = None,
) -> SimulationSummary:
    """Run ``trials`` independent trials; appends each record to ``records`` if given.

    With ``alpha=None`` every trial encodes a fresh Haar-random qubit.
    """
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if trials < 1:
        raise ValueError("need at least one trial")
    successes = cond_trials = cond_successes = 0
    fid_sum = 0.0
    for t in range(trials):
        rec = run_trial(code, p, seed, t, alpha)
        if records is not None:
            records.append(rec)
        successes += int(rec.success)
        fid_sum += rec.fidelity
        if len(rec.errors) <= 1:
            cond_trials += 1
            cond_successes += int(rec.success)
    return SimulationSummary(
        code.name, p, trials, seed, successes, cond_trials, cond_successes, fid_sum / trials
    )


def single_error_success_probability(code: StabilizerCode, p: float) -> float:
    """Probability that at most one qubit is hit and the hit is soundly corrected.

    Enumerates all 4^n per-qubit error configurations.
    """
    table = build_table(code)
    probs = {"I": 1 - p, "X": p / 3, "Y": p / 3, "Z": p / 3}
    total = 0.0
    for config in itertools.product("IXYZ", repeat=code.n):
        hits = [(q, letter) for q, letter in enumerate(config, start=1) if letter != "I"]
        if len(hits) > 1:
            continue
        error = single(hits[0][1], hits[0][0], code.n) if hits else identity(code.n)
        cls = table.class_of(error)
        if cls is not None and cls.is_sound(error):
            total += float(np.prod([probs[c] for c in config]))
    return total
