"""n-D behaviors given by kernel representations over the Laurent ring.

A :class:`SystemMatrix` with ``l`` rows and ``k`` columns presents the
submodule ``R`` of ``A^k`` spanned by its rows.  Its characteristic ideal is
generated by the ``k x k`` minors, and the degree of autonomy is the
codimension of the (torus) characteristic variety.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .ideal import LaurentIdeal, torus_dimension
from .laurent import LaurentPoly

INF = math.inf


@dataclass(frozen=True)
class SystemMatrix:
    n: int
    k: int
    rows: tuple

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("need n >= 1 and k >= 1")
        rows = tuple(tuple(r) for r in self.rows)
        for r in rows:
            if len(r) != self.k:
                raise ValueError(f"row has {len(r)} entries, expected k={self.k}")
            for a in r:
                if not isinstance(a, LaurentPoly) or a.dim != self.n:
                    raise ValueError(f"entry {a!r} is not a Laurent polynomial in {self.n} variables")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[LaurentPoly]], n: Optional[int] = None,
                  k: Optional[int] = None) -> "SystemMatrix":
        rows = [tuple(r) for r in rows]
        if n is None:
            n = rows[0][0].dim
        if k is None:
            k = len(rows[0])
        return cls(n, k, tuple(rows))

    @classmethod
    def column(cls, entries: Sequence[LaurentPoly]) -> "SystemMatrix":
        """Scalar system (``k = 1``) with one law per entry."""
        return cls(entries[0].dim, 1, tuple((a,) for a in entries))

    @classmethod
    def identity(cls, n: int, k: int) -> "SystemMatrix":
        one, zero = LaurentPoly.one(n), LaurentPoly.zero(n)
        return cls(n, k, tuple(tuple(one if i == j else zero for j in range(k)) for i in range(k)))

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def stack(self, other: "SystemMatrix") -> "SystemMatrix":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("cannot stack systems of different shape")
        return SystemMatrix(self.n, self.k, self.rows + other.rows)


def determinant(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Laplace expansion along the first row (``k`` is small here)."""
    size = len(m)
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = LaurentPoly.zero(m[0][0].dim)
    for j in range(size):
        a = m[0][j]
        if a.is_zero:
            continue
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * determinant(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def maximal_minors(M: SystemMatrix) -> list:
    """All ``k x k`` minors, row subsets in lexicographic order."""
    return [determinant([M.rows[i] for i in idx]) for idx in itertools.combinations(range(M.l), M.k)]


def characteristic_ideal(M: SystemMatrix) -> LaurentIdeal:
    return LaurentIdeal.from_gens(maximal_minors(M), M.n)


def is_autonomous(M: SystemMatrix) -> bool:
    if M.l < M.k:
        return False
    return not characteristic_ideal(M).is_zero


def _degree_from_ideal(I: LaurentIdeal):
    if I.is_unit:
        return INF
    if I.is_zero:
        return 0
    return I.dim - torus_dimension(I)


def degree_of_autonomy(M: SystemMatrix):
    """``inf`` for the zero behavior, ``0`` if not autonomous, else ``n - dim V``."""
    return _degree_from_ideal(characteristic_ideal(M))


def is_strongly_autonomous(M: SystemMatrix) -> bool:
    return degree_of_autonomy(M) == M.n


@dataclass
class AutonomyReport:
    n: int
    k: int
    rows: int
    degree: object
    autonomous: bool
    strongly_autonomous: bool
    zero_behavior: bool
    under_determined: bool
    char_ideal_dim: Optional[int]
    char_ideal_gens: list = field(default_factory=list)
    elapsed: float = 0.0


def analyze(M: SystemMatrix) -> AutonomyReport:
    t0 = time.perf_counter()
    I = characteristic_ideal(M)
    delta = _degree_from_ideal(I)
    zero = delta == INF
    return AutonomyReport(
        n=M.n,
        k=M.k,
        rows=M.l,
        degree=delta,
        autonomous=delta != 0,
        strongly_autonomous=delta == M.n,
        zero_behavior=zero,
        under_determined=M.l < M.k,
        char_ideal_dim=None if zero else torus_dimension(I),
        char_ideal_gens=list(I.gens),
        elapsed=time.perf_counter() - t0,
    )
