"""Seeded Monte-Carlo estimates of how often the generic behaviour occurs.

Random systems are drawn from ``M_{l,k}(d)``: every entry is a Laurent
polynomial supported on monomials of degree at most ``d``, each monomial kept
with probability ``density`` and given a nonzero integer coefficient drawn
uniformly from ``[coeff_low, coeff_high]``.

Trial ``i`` draws from its own generator seeded by ``(seed, i, stream)``, so
results do not depend on execution order and a parallel run reproduces the
sequential histogram exactly.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import partial
from typing import Callable, Optional

import numpy as np

from .behavior import INF, SystemMatrix, degree_of_autonomy
from .control import generic_strength, strength
from .errors import InvariantViolation, PreconditionError
from .ideal import LaurentIdeal, height, is_regular_sequence
from .laurent import LaurentPoly, monomials_up_to

PLANT_STREAM, CONTROLLER_STREAM = 0, 1


@dataclass(frozen=True)
class SampleSpec:
    n: int
    k: int = 1
    rows: int = 1
    degree: int = 1
    coeff_low: int = -5
    coeff_high: int = 5
    density: Fraction = Fraction(1)
    seed: int = 0

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or self.rows < 0 or self.degree < 0:
            raise ValueError("need n >= 1, k >= 1, rows >= 0, degree >= 0")
        if self.coeff_low > self.coeff_high:
            raise ValueError("coeff_low must not exceed coeff_high")
        if self.coeff_low == self.coeff_high == 0:
            raise ValueError("coefficient range contains no nonzero integer")
        dens = Fraction(self.density)
        if not 0 < dens <= 1:
            raise ValueError("density must lie in (0, 1]")
        object.__setattr__(self, "density", dens)
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @property
    def nonzero_coeffs(self) -> np.ndarray:
        r = np.arange(self.coeff_low, self.coeff_high + 1)
        return r[r != 0]


@dataclass
class ExperimentStats:
    experiment: str
    spec: SampleSpec
    trials: int
    histogram: dict
    predicted: object
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def fraction_generic(self) -> Fraction:
        if not self.trials:
            return Fraction(0)
        return Fraction(self.histogram.get(self.predicted, 0), self.trials)


def trial_rng(seed: int, trial: int, stream: int = PLANT_STREAM) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial, stream]))


def sample_poly(spec: SampleSpec, rng: np.random.Generator) -> LaurentPoly:
    """Random nonzero Laurent polynomial of degree at most ``spec.degree``."""
    mons = monomials_up_to(spec.n, spec.degree)
    choices = spec.nonzero_coeffs
    p = float(spec.density)
    while True:
        keep = rng.random(len(mons)) < p
        coeffs = rng.choice(choices, size=len(mons))
        terms = {m: int(c) for m, c, k in zip(mons, coeffs, keep) if k}
        if terms:
            return LaurentPoly(spec.n, terms)


def sample_matrix(spec: SampleSpec, rng: np.random.Generator) -> SystemMatrix:
    rows = tuple(tuple(sample_poly(spec, rng) for _ in range(spec.k)) for _ in range(spec.rows))
    return SystemMatrix(spec.n, spec.k, rows)


def generic_degree(n: int, k: int, rows: int):
    """Degree of autonomy of a generic ``rows x k`` system."""
    if rows < k:
        return 0
    s = rows - k + 1
    return s if s <= n else INF


def _run(fn: Callable, trials: int, workers: Optional[int]) -> list:
    if workers and workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, range(trials), chunksize=max(1, trials // (4 * workers))))
    return [fn(i) for i in range(trials)]


def _stats(name, spec, outcomes, predicted, t0, **extra) -> ExperimentStats:
    hist = dict(sorted(Counter(outcomes).items(), key=lambda kv: (kv[0] == INF, kv[0])))
    return ExperimentStats(name, spec, len(outcomes), hist, predicted, time.perf_counter() - t0, extra)


# regular sequences -----------------------------------------------------------


def _regseq_trial(spec: SampleSpec, r: int, i: int) -> bool:
    rng = trial_rng(spec.seed, i)
    seq = [sample_poly(spec, rng) for _ in range(r)]
    if not is_regular_sequence(seq):
        return False
    h = height(LaurentIdeal.from_gens(seq, spec.n))
    if h != r:
        raise InvariantViolation(f"trial {i}: regular sequence of length {r} spans an ideal of height {h}")
    return True


def expt_regular_sequences(spec: SampleSpec, trials: int, r: Optional[int] = None,
                           workers: Optional[int] = None) -> ExperimentStats:
    """How often ``r`` random Laurent polynomials form a regular sequence.

    Every passing tuple must also generate an ideal of height ``r``.
    """
    r = spec.rows if r is None else r
    if not 1 <= r <= spec.n:
        raise PreconditionError(f"regular-sequence experiment needs 1 <= r <= n, got r={r}, n={spec.n}")
    t0 = time.perf_counter()
    out = _run(partial(_regseq_trial, spec, r), trials, workers)
    return _stats("regseq", replace(spec, rows=r), out, True, t0)


# unit ideals ---------------------------------------------------------------


def _unit_trial(spec: SampleSpec, r: int, i: int) -> bool:
    rng = trial_rng(spec.seed, i)
    return LaurentIdeal.from_gens([sample_poly(spec, rng) for _ in range(r)], spec.n).is_unit


def expt_unit_ideal(spec: SampleSpec, trials: int, r: Optional[int] = None,
                    workers: Optional[int] = None) -> ExperimentStats:
    """How often ``r > n`` random Laurent polynomials generate all of ``A``."""
    r = spec.rows if r is None else r
    if r <= spec.n:
        raise PreconditionError(f"unit-ideal experiment needs r > n, got r={r}, n={spec.n}")
    t0 = time.perf_counter()
    out = _run(partial(_unit_trial, spec, r), trials, workers)
    return _stats("unit", replace(spec, rows=r), out, True, t0)


# degree of autonomy ------------------------------------------------------------


def _degree_trial(spec: SampleSpec, i: int):
    M = sample_matrix(spec, trial_rng(spec.seed, i))
    d = degree_of_autonomy(M)
    if spec.rows >= spec.k:
        ceiling = spec.rows - spec.k + 1
        if d != INF and d > ceiling:
            raise InvariantViolation(f"trial {i}: degree {d} exceeds the Macaulay bound {ceiling}")
    return d


def expt_generic_degree(spec: SampleSpec, trials: int, workers: Optional[int] = None) -> ExperimentStats:
    t0 = time.perf_counter()
    out = _run(partial(_degree_trial, spec), trials, workers)
    return _stats("degree", spec, out, generic_degree(spec.n, spec.k, spec.rows), t0)


# controller strength --------------------------------------------------------


def _strength_trial(plant_spec: SampleSpec, ctrl_spec: SampleSpec, i: int):
    plant = sample_matrix(plant_spec, trial_rng(plant_spec.seed, i, PLANT_STREAM))
    ctrl = sample_matrix(ctrl_spec, trial_rng(ctrl_spec.seed, i, CONTROLLER_STREAM))
    rep = strength(plant, ctrl)
    if rep.strength != INF and rep.strength < 0:
        raise InvariantViolation(f"trial {i}: negative strength {rep.strength}")
    return rep.strength


def expt_controller_strength(plant_spec: SampleSpec, controller_spec: SampleSpec, trials: int,
                             workers: Optional[int] = None) -> ExperimentStats:
    if (plant_spec.n, plant_spec.k) != (controller_spec.n, controller_spec.k):
        raise ValueError("plant and controller specs must agree on n and k")
    t0 = time.perf_counter()
    out = _run(partial(_strength_trial, plant_spec, controller_spec), trials, workers)
    predicted = generic_strength(plant_spec.n, plant_spec.k, plant_spec.rows, controller_spec.rows)
    return _stats("strength", plant_spec, out, predicted, t0, controller_rows=controller_spec.rows)

