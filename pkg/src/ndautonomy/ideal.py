"""Ideals of the Laurent ring ``A = Q[s, 1/s]``.

An ideal of ``A`` is stored through its contraction to ``A+ = Q[s]``: every
generator is stripped of its monomial unit, and the resulting polynomial ideal
is saturated by ``s1 * ... * sn``.  Two Laurent ideals are equal exactly when
their saturated reduced grevlex bases are equal.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from . import groebner as gb
from .groebner import GREVLEX, GroebnerBasis
from .laurent import LaurentPoly


class ImproperIdealError(ValueError):
    """Operation needs a proper (non-unit) ideal."""


class LaurentIdeal:
    """Ideal of ``A`` with an eagerly computed saturated Groebner basis."""

    __slots__ = ("dim", "raw_gens", "sat_gb")

    def __init__(self, dim: int, raw_gens: tuple, sat_gb: GroebnerBasis):
        self.dim = dim
        self.raw_gens = raw_gens
        self.sat_gb = sat_gb

    @classmethod
    def from_gens(cls, gens: Iterable[LaurentPoly], dim: Optional[int] = None) -> "LaurentIdeal":
        gens = tuple(gens)
        dims = {g.dim for g in gens} | ({dim} if dim is not None else set())
        if len(dims) != 1:
            raise ValueError("generators must share one dimension (pass dim= for an empty list)")
        n = dims.pop()
        nonzero = [g for g in gens if not g.is_zero]
        if any(g.is_unit for g in nonzero):
            return cls(n, gens, gb.buchberger([LaurentPoly.one(n)], GREVLEX, n))
        parts = [g.content_normalized() for g in nonzero]
        return cls(n, gens, gb.saturated_basis(parts, range(n), n))

    @classmethod
    def zero(cls, dim: int) -> "LaurentIdeal":
        return cls.from_gens((), dim)

    @classmethod
    def unit(cls, dim: int) -> "LaurentIdeal":
        return cls.from_gens([LaurentPoly.one(dim)])

    @property
    def gens(self) -> tuple:
        """Saturated basis generators (polynomials in ``A+``)."""
        return self.sat_gb.gens

    @property
    def is_zero(self) -> bool:
        return self.sat_gb.is_zero

    @property
    def is_unit(self) -> bool:
        return gb.is_unit_ideal(self.sat_gb)

    def __contains__(self, p: LaurentPoly) -> bool:
        if p.is_zero:
            return True
        return gb.normal_form(p.normalize().poly_part, self.sat_gb).is_zero

    def __eq__(self, other):
        if not isinstance(other, LaurentIdeal):
            return NotImplemented
        return self.dim == other.dim and self.sat_gb.gens == other.sat_gb.gens

    def __hash__(self):
        return hash((self.dim, self.sat_gb.gens))

    def __repr__(self):
        return f"LaurentIdeal(dim={self.dim}, sat={self.sat_gb})"


def from_gens(gens: Iterable[LaurentPoly], dim: Optional[int] = None) -> LaurentIdeal:
    return LaurentIdeal.from_gens(gens, dim)


def is_proper(I: LaurentIdeal) -> bool:
    return not I.is_unit


def torus_dimension(I: LaurentIdeal) -> int:
    """Dimension of the characteristic variety in the torus (``n`` for the zero ideal)."""
    if I.is_unit:
        raise ImproperIdealError("the unit ideal has an empty variety")
    return gb.dimension(I.sat_gb)


def height(I: LaurentIdeal) -> int:
    """Codimension ``n - dim V(I)`` of a proper nonzero ideal."""
    if I.is_zero:
        raise ValueError("height of the zero ideal is not used here")
    return I.dim - torus_dimension(I)


def is_nzd_mod(I: LaurentIdeal, f: LaurentPoly) -> bool:
    """Is ``f`` a nonzero divisor on ``A/I``?

    Tested as ``(I : f) == I`` on the saturated contraction; quotients commute
    with localization.
    """
    if f.is_zero:
        raise ValueError("f must be nonzero")
    if I.is_unit:
        raise ImproperIdealError("A/I is the zero ring")
    if I.is_zero:
        return True
    q = gb.ideal_quotient(I.sat_gb, f.normalize().poly_part)
    return q.gens == I.sat_gb.gens


def is_regular_sequence(seq: Sequence[LaurentPoly]) -> bool:
    seq = list(seq)
    if not seq:
        raise ValueError("empty sequence")
    n = seq[0].dim
    if any(a.is_zero for a in seq):
        return False
    if not is_proper(LaurentIdeal.from_gens(seq, n)):
        return False
    prefix = LaurentIdeal.zero(n)
    for i, a in enumerate(seq):
        if not is_nzd_mod(prefix, a):
            return False
        prefix = LaurentIdeal.from_gens(seq[: i + 1], n)
    return True


def restrict_ideal(I: LaurentIdeal, keep: Iterable[int]) -> LaurentIdeal:
    """``I ∩ A_keep`` as an ideal in ``len(keep)`` variables (0-based indices).

    ``keep`` must be nonempty; the 0-dimensional restriction ``I ∩ Q`` is zero
    exactly when ``I`` is proper.
    """
    keep = tuple(sorted(set(keep)))
    n = I.dim
    if not keep:
        raise ValueError("keep must name at least one variable")
    if any(not 0 <= i < n for i in keep):
        raise IndexError("variable index out of range")
    m = len(keep)
    if I.is_unit:
        return LaurentIdeal.unit(m)
    drop = [i for i in range(n) if i not in keep]
    elim = gb.eliminate(I.sat_gb, drop)
    return LaurentIdeal.from_gens([g.substitute_vars(keep) for g in elim.gens], m)
