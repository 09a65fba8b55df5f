"""Sparse Laurent polynomials with exact rational coefficients.

A :class:`LaurentPoly` lives in ``Q[s1, 1/s1, ..., sn, 1/sn]``.  Terms are
kept in a canonical order (descending lexicographic on exponent vectors), so
two polynomials are equal exactly when their term tuples are equal.

Variables are 0-indexed in the Python API; the textual format names them
``s1 .. sn``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Tuple

Exponent = Tuple[int, ...]

#: degree of the zero polynomial
NEG_INF = -math.inf


class DimensionMismatch(ValueError):
    pass


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    # gmpy2.mpq and friends expose numerator/denominator
    try:
        return Fraction(int(c.numerator), int(c.denominator))
    except AttributeError:
        raise TypeError(f"coefficient must be rational, got {type(c).__name__}") from None


class LaurentPoly:
    """Immutable sparse Laurent polynomial in ``dim`` variables."""

    __slots__ = ("dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[Exponent, object] | Iterable = ()):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != dim:
                raise DimensionMismatch(f"exponent {exp} has length {len(exp)}, expected {dim}")
            acc[exp] = acc.get(exp, 0) + _coerce(c)
        self.dim = dim
        self._terms: Tuple[Tuple[Exponent, Fraction], ...] = tuple(
            sorted(((e, c) for e, c in acc.items() if c != 0), reverse=True)
        )
        self._hash = None

    @classmethod
    def _from_sorted(cls, dim: int, terms) -> "LaurentPoly":
        # trusted fast path: terms already canonical with nonzero Fractions
        obj = cls.__new__(cls)
        obj.dim = dim
        obj._terms = tuple(terms)
        obj._hash = None
        return obj

    @classmethod
    def _from_dict(cls, dim: int, d: Mapping[Exponent, Fraction]) -> "LaurentPoly":
        return cls._from_sorted(dim, sorted(((e, c) for e, c in d.items() if c != 0), reverse=True))

    # constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "LaurentPoly":
        return cls(dim)

    @classmethod
    def constant(cls, dim: int, c=1) -> "LaurentPoly":
        return cls(dim, {(0,) * dim: c})

    @classmethod
    def one(cls, dim: int) -> "LaurentPoly":
        return cls.constant(dim, 1)

    @classmethod
    def monomial(cls, exp: Iterable[int], c=1) -> "LaurentPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def variable(cls, dim: int, i: int, power: int = 1) -> "LaurentPoly":
        """The shift ``s_{i+1} ** power``."""
        if not 0 <= i < dim:
            raise IndexError(f"variable index {i} out of range for dimension {dim}")
        exp = [0] * dim
        exp[i] = power
        return cls(dim, {tuple(exp): 1})

    # inspection --------------------------------------------------------

    @property
    def terms(self) -> Tuple[Tuple[Exponent, Fraction], ...]:
        return self._terms

    def as_dict(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def support(self) -> list[Exponent]:
        return [e for e, _ in self._terms]

    def coeff(self, exp: Exponent) -> Fraction:
        return dict(self._terms).get(tuple(exp), Fraction(0))

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(self._terms[0][0]))

    @property
    def is_polynomial(self) -> bool:
        """True when no exponent is negative (the element lies in ``A+``)."""
        return all(min(e) >= 0 for e, _ in self._terms)

    @property
    def degree(self):
        """Largest ``|d1| + ... + |dn|`` over the support; ``-inf`` for zero."""
        if not self._terms:
            return NEG_INF
        return max(sum(abs(x) for x in e) for e, _ in self._terms)

    @property
    def is_unit(self) -> bool:
        return len(self._terms) == 1

    # arithmetic --------------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions differ: {self.dim} vs {other.dim}")

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return LaurentPoly.constant(self.dim, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._from_dict(self.dim, acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._from_sorted(self.dim, ((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, LaurentPoly):
            c = _coerce(other)
            if c == 0:
                return LaurentPoly.zero(self.dim)
            return LaurentPoly._from_sorted(self.dim, ((e, c * v) for e, v in self._terms))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly._from_dict(self.dim, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_unit:
                raise ValueError("only units (single terms) have Laurent inverses")
            return self.inverse() ** (-k)
        result = LaurentPoly.one(self.dim)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit ``c * s^d``, namely ``(1/c) * s^-d``."""
        if not self.is_unit:
            raise ValueError(f"{self} is not a unit of the Laurent ring")
        (e, c), = self._terms
        return LaurentPoly._from_sorted(self.dim, [(tuple(-x for x in e), 1 / c)])

    def shift(self, exp: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial ``s^exp``."""
        exp = tuple(exp)
        if len(exp) != self.dim:
            raise DimensionMismatch("shift vector has the wrong length")
        return LaurentPoly._from_sorted(
            self.dim, ((tuple(a + b for a, b in zip(e, exp)), c) for e, c in self._terms)
        )

    def scale(self, c) -> "LaurentPoly":
        return self * _coerce(c)

    # comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == LaurentPoly.constant(self.dim, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self._terms))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.dim}, {self})"

    def __str__(self):
        return format_poly(self)

    # structure ---------------------------------------------------------

    def normalize(self) -> "PolyNormalization":
        return normalize(self)

    def content_normalized(self) -> "LaurentPoly":
        """Divide out the monomial shift and make the leading coefficient 1.

        The result generates the same Laurent ideal as ``self``.
        """
        part = normalize(self).poly_part
        lead = part._terms[0][1]
        return part * (1 / lead)

    def substitute_vars(self, keep: Iterable[int]) -> "LaurentPoly":
        """Re-read the polynomial in the variables ``keep`` only.

        Raises if a dropped variable actually occurs.
        """
        keep = tuple(keep)
        dropped = [i for i in range(self.dim) if i not in keep]
        out = []
        for e, c in self._terms:
            if any(e[i] for i in dropped):
                raise ValueError("polynomial involves a dropped variable")
            out.append((tuple(e[i] for i in keep), c))
        return LaurentPoly(len(keep), out)

    def embed(self, dim: int, positions: Iterable[int]) -> "LaurentPoly":
        """Place this polynomial's variables at ``positions`` of a ``dim``-variable ring."""
        positions = tuple(positions)
        if len(positions) != self.dim:
            raise DimensionMismatch("need one position per variable")
        out = []
        for e, c in self._terms:
            big = [0] * dim
            for p, x in zip(positions, e):
                big[p] = x
            out.append((tuple(big), c))
        return LaurentPoly(dim, out)

    def evaluate(self, point) -> object:
        total = 0
        for e, c in self._terms:
            v = c
            for x, k in zip(point, e):
                v = v * x ** k
            total += v
        return total


@dataclass(frozen=True)
class PolyNormalization:
    """``original == s^shift * poly_part`` with ``poly_part`` in ``A+``."""

    poly_part: LaurentPoly
    shift: Exponent

    def restore(self) -> LaurentPoly:
        return self.poly_part.shift(self.shift)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._check(q)
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._check(q)
    return p * q


def degree(p: LaurentPoly):
    return p.degree


def is_unit(p: LaurentPoly) -> bool:
    return p.is_unit


def normalize(p: LaurentPoly) -> PolyNormalization:
    """Split off the monomial unit so that the remainder is a polynomial.

    Every variable attains exponent 0 somewhere in the returned part.
    """
    if p.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    shift = tuple(min(e[i] for e, _ in p.terms) for i in range(p.dim))
    neg = tuple(-x for x in shift)
    return PolyNormalization(p.shift(neg), shift)


def count_monomials(n: int, d: int) -> int:
    """Number of Laurent monomials in ``n`` variables of degree at most ``d``."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return sum(2 ** j * math.comb(n, j) * math.comb(d, j) for j in range(n + 1))


def monomials_up_to(n: int, d: int) -> list[Exponent]:
    """All exponent vectors with ``sum |e_i| <= d`` in canonical (descending lex) order."""
    out = [e for e in itertools.product(range(-d, d + 1), repeat=n) if sum(map(abs, e)) <= d]
    out.sort(reverse=True)
    return out


# printing ------------------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(e: Exponent) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 0:
            continue
        parts.append(f"s{i + 1}" if k == 1 else f"s{i + 1}^{k}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Canonical text such as ``3*s1^2*s2^-1 - 4/7``."""
    if p.is_zero:
        return "0"
    out = []
    for idx, (e, c) in enumerate(p.terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _format_monomial(e)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if idx == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
