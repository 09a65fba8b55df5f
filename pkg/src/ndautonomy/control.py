"""Controllers, strength, and the restriction-based degree of autonomy.

Attaching a controller ``C = B(R')`` to a plant ``B = B(R)`` gives the
controlled system ``B(R + R')``: the two kernel representations are stacked.
The strength of ``C`` is the resulting increase of the degree of autonomy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .behavior import INF, SystemMatrix, characteristic_ideal, degree_of_autonomy
from .errors import PreconditionError
from .ideal import LaurentIdeal, restrict_ideal


@dataclass(frozen=True)
class SublatticeEmbedding:
    """Coordinate sublattice ``Z^m -> Z^n`` picking the (0-based) ``indices``."""

    n: int
    indices: tuple

    def __post_init__(self):
        idx = tuple(self.indices)
        if list(idx) != sorted(set(idx)):
            raise ValueError("indices must be strictly increasing")
        if any(not 0 <= i < self.n for i in idx):
            raise IndexError(f"indices must lie in 0..{self.n - 1}")
        object.__setattr__(self, "indices", idx)

    @property
    def m(self) -> int:
        return len(self.indices)

    @classmethod
    def all(cls, n: int, m: int) -> list:
        return [cls(n, c) for c in itertools.combinations(range(n), m)]


@dataclass
class StrengthReport:
    n: int
    k: int
    plant_rows: int
    controller_rows: int
    delta_plant: object
    delta_controlled: object
    strength: object
    generic_bound: object
    max_efficient: bool


def _check_shapes(plant: SystemMatrix, controller: SystemMatrix):
    if (plant.n, plant.k) != (controller.n, controller.k):
        raise ValueError(
            f"plant is {plant.n}-D with k={plant.k}, controller is {controller.n}-D with k={controller.k}"
        )


def interconnect(plant: SystemMatrix, controller: SystemMatrix) -> SystemMatrix:
    _check_shapes(plant, controller)
    return plant.stack(controller)


def generic_strength(n: int, k: int, plant_rows: int, controller_rows: int):
    """Strength attained by a generic controller with ``controller_rows`` laws.

    Non-autonomous plants (``l < k``) gain ``l + l' - k + 1``; generic
    autonomous plants gain ``l'``; once ``l + l' - k + 1 > n`` the controlled
    system is generically zero and the strength is infinite.
    """
    s = plant_rows + controller_rows - k + 1
    if s > n:
        return INF
    if plant_rows < k:
        return max(s, 0)
    return controller_rows


def _difference(delta_plant, delta_controlled):
    if delta_plant == INF or delta_controlled == INF:
        return INF
    return delta_controlled - delta_plant


def strength(plant: SystemMatrix, controller: SystemMatrix) -> StrengthReport:
    _check_shapes(plant, controller)
    d_plant = degree_of_autonomy(plant)
    d_ctrl = degree_of_autonomy(interconnect(plant, controller))
    sigma = _difference(d_plant, d_ctrl)
    bound = generic_strength(plant.n, plant.k, plant.l, controller.l)
    return StrengthReport(
        n=plant.n,
        k=plant.k,
        plant_rows=plant.l,
        controller_rows=controller.l,
        delta_plant=d_plant,
        delta_controlled=d_ctrl,
        strength=sigma,
        generic_bound=bound,
        max_efficient=sigma == bound,
    )


def is_max_efficient(plant: SystemMatrix, controller: SystemMatrix) -> bool:
    """Certificate: the controller reaches the generic strength for its size."""
    return strength(plant, controller).max_efficient


def _scalar(M: SystemMatrix):
    if M.k != 1:
        raise PreconditionError(f"restriction is only implemented for scalar systems (k=1), got k={M.k}")


def restrict(M: SystemMatrix, emb: SublatticeEmbedding) -> SystemMatrix:
    """Scalar system obtained by restricting ``M`` to a coordinate sublattice.

    The rows are the saturated basis of ``I ∩ A_iota``; a non-autonomous
    restriction therefore has no rows.
    """
    _scalar(M)
    if emb.n != M.n:
        raise ValueError("embedding and system disagree on n")
    if emb.m == 0:
        raise ValueError("restriction to the 0-dimensional lattice has no Laurent ring")
    J = restrict_ideal(characteristic_ideal(M), emb.indices)
    return SystemMatrix(emb.m, 1, tuple((g,) for g in J.gens))


def _largest_free_sublattice(I: LaurentIdeal) -> int:
    n = I.dim
    for m in range(n, 0, -1):
        for S in itertools.combinations(range(n), m):
            if restrict_ideal(I, S).is_zero:
                return m
    # the point lattice: I ∩ Q is zero exactly when I is proper
    return 0


def degree_by_restriction_oracle(M: SystemMatrix):
    """Degree of autonomy straight from the sublattice definition (k = 1).

    ``n - m`` for the largest ``m`` such that some ``m``-dimensional
    coordinate restriction is not autonomous; ``inf`` for the zero behavior.
    """
    _scalar(M)
    I = characteristic_ideal(M)
    if I.is_unit:
        return INF
    return M.n - _largest_free_sublattice(I)


def restrictions(M: SystemMatrix, m: int) -> Iterable[tuple]:
    """``(embedding, restricted system)`` for every ``m``-dimensional coordinate sublattice."""
    for emb in SublatticeEmbedding.all(M.n, m):
        yield emb, restrict(M, emb)
