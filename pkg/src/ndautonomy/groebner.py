"""Buchberger's algorithm over ``Q[s1, ..., sn]``.

Polynomials enter and leave as :class:`~ndautonomy.laurent.LaurentPoly` with
non-negative exponents.  Internally they are plain dicts ``{exp: mpq}`` and
every basis element is kept monic, so coefficients stay in lowest terms.

Pairs are chosen by the normal strategy (smallest lcm first) and pruned with
the Gebauer-Moeller update, which covers Buchberger's product and chain
criteria.

Set ``AUTONOMY_GB_STEP_LIMIT`` to abort any single run after that many
elementary reduction steps (:class:`StepLimitExceeded`).
"""

from __future__ import annotations

import heapq
import itertools
import os
from operator import add, sub
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from gmpy2 import mpq

from .laurent import Exponent, LaurentPoly, _coerce

STEP_LIMIT_ENV = "AUTONOMY_GB_STEP_LIMIT"


class StepLimitExceeded(RuntimeError):
    """A Groebner computation ran past ``AUTONOMY_GB_STEP_LIMIT`` reduction steps."""


class UnitIdealError(ValueError):
    """Raised where an operation is undefined for the unit ideal."""


# monomial orders -------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex``, ``lex`` or a ``block`` elimination order.

    A block order compares the exponents of the ``elim`` variables first
    (graded reverse lex among them) and breaks ties with ``inner`` applied to
    the remaining variables in their original relative order.
    """

    kind: str = "grevlex"
    elim: tuple = ()
    inner: Optional["MonomialOrder"] = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            object.__setattr__(self, "elim", tuple(sorted(set(self.elim))))
            if self.inner is None:
                object.__setattr__(self, "inner", GREVLEX)

    def key(self, exp: Exponent):
        return _sort_key(self)(exp)

    def __str__(self):
        if self.kind == "block":
            return f"block({list(self.elim)}, {self.inner})"
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(elim: Iterable[int], inner: MonomialOrder = GREVLEX) -> MonomialOrder:
    return MonomialOrder("block", tuple(elim), inner)


def _grevlex(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


def _raw_key(order: MonomialOrder) -> Callable:
    # keys are flat int tuples so they can be negated for a min-heap
    if order.kind == "grevlex":
        return _grevlex
    if order.kind == "lex":
        return tuple
    elim = order.elim
    es = set(elim)
    inner = _raw_key(order.inner)

    def block(e):
        return _grevlex(tuple(e[i] for i in elim)) + inner(tuple(x for i, x in enumerate(e) if i not in es))

    return block


def _memoized(fn: Callable) -> Callable:
    memo: dict = {}

    def key(e):
        k = memo.get(e)
        if k is None:
            if len(memo) > 500_000:
                memo.clear()
            k = memo[e] = fn(e)
        return k

    return key


@lru_cache(maxsize=None)
def _sort_key(order: MonomialOrder) -> Callable:
    return _memoized(_raw_key(order))


@lru_cache(maxsize=None)
def _heap_key(order: MonomialOrder) -> Callable:
    raw = _raw_key(order)
    return _memoized(lambda e: tuple(-x for x in raw(e)))


# internal polynomial helpers ------------------------------------------------

Poly = dict  # {Exponent: mpq}


def _to_internal(p: LaurentPoly) -> Poly:
    if not p.is_polynomial:
        raise ValueError(f"negative exponent in {p}; Groebner bases work in A+ only")
    return {e: mpq(c.numerator, c.denominator) for e, c in p.terms}


def _to_laurent(p: Poly, dim: int) -> LaurentPoly:
    return LaurentPoly(dim, {e: _coerce(c) for e, c in p.items()})


def _divides(a: Exponent, b: Exponent) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Exponent, b: Exponent) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _monic(p: Poly, key) -> tuple:
    lm = max(p, key=key)
    c = p[lm]
    if c != 1:
        inv = 1 / c
        p = {e: v * inv for e, v in p.items()}
    return lm, p


class _Counter:
    __slots__ = ("steps", "limit")

    def __init__(self, limit: int = 0):
        self.steps = 0
        self.limit = limit

    def tick(self):
        self.steps += 1
        if self.limit and self.steps > self.limit:
            raise StepLimitExceeded(f"Groebner run exceeded {self.limit} reduction steps")


def _step_limit() -> int:
    raw = os.environ.get(STEP_LIMIT_ENV, "").strip()
    if not raw:
        return 0
    try:
        return max(int(raw), 0)
    except ValueError:
        raise ValueError(f"{STEP_LIMIT_ENV} must be an integer, got {raw!r}") from None


def _reduce(p: Poly, basis: Sequence[tuple], key, counter: Optional[_Counter] = None) -> Poly:
    """Fully reduce ``p`` modulo monic ``basis`` elements ``(lm, poly)``.

    ``key`` is the order's heap key (smallest means largest monomial).
    """
    p = dict(p)
    rem: Poly = {}
    heap = [(key(e), e) for e in p]
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        m = pop(heap)[1]
        c = p.get(m)
        if c is None:
            continue
        for lm, g in basis:
            if _divides(lm, m):
                q = tuple(map(sub, m, lm))
                for e, gc in g.items():
                    e2 = tuple(map(add, e, q))
                    old = p.get(e2)
                    if old is None:
                        p[e2] = -c * gc
                        push(heap, (key(e2), e2))
                    else:
                        v = old - c * gc
                        if v:
                            p[e2] = v
                        else:
                            del p[e2]
                if counter is not None:
                    counter.tick()
                break
        else:
            rem[m] = p.pop(m)
    return rem


def _spoly(lf: Exponent, f: Poly, lg: Exponent, g: Poly) -> Poly:
    L = _lcm(lf, lg)
    qf = tuple(x - y for x, y in zip(L, lf))
    qg = tuple(x - y for x, y in zip(L, lg))
    out: Poly = {}
    for e, c in f.items():
        out[tuple(x + y for x, y in zip(e, qf))] = c
    for e, c in g.items():
        e2 = tuple(x + y for x, y in zip(e, qg))
        v = out.get(e2, 0) - c
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return out


def _interreduce(elems: list, order: MonomialOrder) -> list:
    key, hkey = _sort_key(order), _heap_key(order)
    # drop elements whose leading monomial is divisible by another's
    elems = sorted(elems, key=lambda t: key(t[0]))
    minimal: list = []
    for lm, g in elems:
        if not any(_divides(l2, lm) for l2, _ in minimal):
            minimal.append((lm, g))
    out = []
    for i, (lm, g) in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = dict(g)
        del tail[lm]
        r = _reduce(tail, others, hkey)
        r[lm] = mpq(1)
        out.append((lm, r))
    out.sort(key=lambda t: key(t[0]), reverse=True)
    return out


def _groebner(polys: Iterable[Poly], dim: int, order: MonomialOrder) -> list:
    """Reduced Groebner basis as a list of monic ``(lm, poly)``, largest lm first."""
    key, hkey = _sort_key(order), _heap_key(order)
    counter = _Counter(_step_limit())
    one = (0,) * dim

    inputs = [p for p in polys if p]
    if not inputs:
        return []

    G: list = []  # (lm, poly)
    active: list = []
    pairs: list = []  # (select_key, i, j, lcm)

    def update(h: int):
        lh = G[h][0]
        cand = [(i, _lcm(G[i][0], lh)) for i in range(len(G) - 1) if active[i]]
        kept = []
        while cand:
            i, L = cand.pop(0)
            if _coprime(G[i][0], lh) or not any(
                _divides(L2, L) for _, L2 in itertools.chain(cand, kept)
            ):
                kept.append((i, L))
        new = [(i, L) for i, L in kept if not _coprime(G[i][0], lh)]
        survivors = []
        for pr in pairs:
            _, a, b, L = pr
            if _divides(lh, L) and _lcm(G[a][0], lh) != L and _lcm(G[b][0], lh) != L:
                continue
            survivors.append(pr)
        pairs[:] = survivors
        for i, L in new:
            pairs.append(((sum(L), key(L)), i, h, L))
        for i in range(len(G) - 1):
            if active[i] and _divides(lh, G[i][0]):
                active[i] = False

    def add(p: Poly) -> bool:
        lm, p = _monic(p, key)
        if lm == one:
            return True
        G.append((lm, p))
        active.append(True)
        update(len(G) - 1)
        return False

    for p in sorted(inputs, key=lambda q: key(max(q, key=key))):
        basis = [G[i] for i in range(len(G)) if active[i]]
        r = _reduce(p, basis, hkey, counter)
        if r and add(r):
            return [(one, {one: mpq(1)})]

    while pairs:
        best = min(range(len(pairs)), key=lambda t: pairs[t][0])
        _, i, j, _ = pairs.pop(best)
        s = _spoly(G[i][0], G[i][1], G[j][0], G[j][1])
        basis = [G[t] for t in range(len(G)) if active[t]]
        r = _reduce(s, basis, hkey, counter)
        if r and add(r):
            return [(one, {one: mpq(1)})]

    return _interreduce([G[t] for t in range(len(G)) if active[t]], order)


# public API -----------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis of an ideal of ``Q[s1..sn]``.

    ``gens`` are monic and sorted by leading monomial, largest first, so two
    bases of the same ideal in the same order compare equal.
    """

    order: MonomialOrder
    dim: int
    gens: tuple
    _elems: tuple = field(default=None, compare=False, repr=False)

    @classmethod
    def _from_internal(cls, order, dim, elems) -> "GroebnerBasis":
        gens = tuple(_to_laurent(p, dim) for _, p in elems)
        return cls(order, dim, gens, tuple(elems))

    @property
    def elems(self) -> tuple:
        if self._elems is None:
            key = _sort_key(self.order)
            object.__setattr__(self, "_elems", tuple(_monic(_to_internal(g), key) for g in self.gens))
        return self._elems

    @property
    def leading_monomials(self) -> list:
        return [lm for lm, _ in self.elems]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, p: LaurentPoly) -> bool:
        return normal_form(p, self).is_zero

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.gens) + "}"


def _dim_of(gens: Sequence[LaurentPoly], dim: Optional[int]) -> int:
    dims = {g.dim for g in gens}
    if dim is not None:
        dims.add(dim)
    if not dims:
        raise ValueError("dimension is required for an empty generator list")
    if len(dims) != 1:
        raise ValueError(f"generators live in different dimensions: {sorted(dims)}")
    return dims.pop()


def buchberger(gens: Iterable[LaurentPoly], order: MonomialOrder = GREVLEX,
               dim: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    n = _dim_of(gens, dim)
    elems = _groebner([_to_internal(g) for g in gens], n, order)
    return GroebnerBasis._from_internal(order, n, elems)


def normal_form(p: LaurentPoly, gb: GroebnerBasis) -> LaurentPoly:
    if p.dim != gb.dim:
        raise ValueError("dimension mismatch")
    r = _reduce(_to_internal(p), gb.elems, _heap_key(gb.order))
    return _to_laurent(r, gb.dim)


def s_polynomial(f: LaurentPoly, g: LaurentPoly, order: MonomialOrder = GREVLEX) -> LaurentPoly:
    key = _sort_key(order)
    lf, pf = _monic(_to_internal(f), key)
    lg, pg = _monic(_to_internal(g), key)
    return _to_laurent(_spoly(lf, pf, lg, pg), f.dim)


def is_groebner(gb: GroebnerBasis, criteria: bool = False) -> bool:
    """Check that the S-polynomials of the basis reduce to zero.

    With ``criteria=False`` every pair is reduced.  With ``criteria=True`` a
    pair is skipped when its leading monomials are coprime, or when some
    ``g_k`` has a leading monomial dividing their lcm and both pairs with
    ``g_k`` were already verified; the verdict is the same, only cheaper.
    """
    key = _heap_key(gb.order)
    elems = gb.elems
    pairs = list(itertools.combinations(range(len(elems)), 2))
    if not criteria:
        return all(not _reduce(_spoly(*elems[i], *elems[j]), elems, key) for i, j in pairs)
    lcms = {(i, j): _lcm(elems[i][0], elems[j][0]) for i, j in pairs}
    pairs.sort(key=lambda ij: (sum(lcms[ij]), ij))
    done = set()
    for i, j in pairs:
        m = lcms[(i, j)]
        chained = any(
            k not in (i, j) and _divides(elems[k][0], m)
            and (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done
            for k in range(len(elems))
        )
        if not (chained or _coprime(elems[i][0], elems[j][0])):
            if _reduce(_spoly(*elems[i], *elems[j]), elems, key):
                return False
        done.add((i, j))
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    elems = gb.elems
    for i, (lm, g) in enumerate(elems):
        if g[lm] != 1:
            return False
        for j, (l2, _) in enumerate(elems):
            if i != j and any(_divides(l2, e) for e in g):
                return False
    return True


def is_unit_ideal(gb: GroebnerBasis) -> bool:
    return len(gb.gens) == 1 and gb.gens[0].is_constant


def _extended(p: LaurentPoly, extra: int = 1) -> LaurentPoly:
    return LaurentPoly(p.dim + extra, ((e + (0,) * extra, c) for e, c in p.terms))


def _drop_last(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(p.dim - 1, ((e[:-1], c) for e, c in p.terms))


def _eliminate_last(gens: list, n: int) -> GroebnerBasis:
    """Groebner basis of ``<gens> ∩ Q[s1..sn]`` for gens in ``n + 1`` variables."""
    order = block_order([n], GREVLEX)
    elems = _groebner([_to_internal(g) for g in gens], n + 1, order)
    kept = [(lm[:-1], {e[:-1]: c for e, c in p.items()}) for lm, p in elems if lm[-1] == 0]
    # the block order restricted to t-free monomials is grevlex, so this is
    # already the reduced basis in grevlex
    return GroebnerBasis._from_internal(GREVLEX, n, kept)


def _as_grevlex(I: GroebnerBasis) -> GroebnerBasis:
    return I if I.order == GREVLEX else buchberger(I.gens, GREVLEX, I.dim)


def ideal_quotient(I: GroebnerBasis, f: LaurentPoly) -> GroebnerBasis:
    """``(I : f)`` via ``I ∩ (f)`` computed by elimination, then divided by ``f``."""
    if f.is_zero:
        raise ValueError("quotient by the zero polynomial")
    n = I.dim
    if I.is_zero:
        return buchberger([], GREVLEX, n)
    t = LaurentPoly.variable(n + 1, n)
    F = _extended(f)
    gens = [t * _extended(g) for g in I.gens] + [(1 - t) * F]
    inter = _eliminate_last(gens, n)
    quotients = [exact_divide(h, f) for h in inter.gens]
    return buchberger(quotients, GREVLEX, n)


def saturate(I: GroebnerBasis, f: LaurentPoly) -> GroebnerBasis:
    """``(I : f^inf)``.

    Monomial ``f`` goes through :func:`saturate_variables`; anything else is
    handled by eliminating ``t`` from ``I + (1 - t f)``.
    """
    if f.is_zero:
        raise ValueError("saturation by the zero polynomial")
    n = I.dim
    if I.is_zero:
        return buchberger([], GREVLEX, n)
    if f.is_unit:
        (e, _), = f.terms
        return saturate_variables(I, [i for i, x in enumerate(e) if x])
    t = LaurentPoly.variable(n + 1, n)
    gens = [_extended(g) for g in I.gens] + [1 - t * _extended(f)]
    return _eliminate_last(gens, n)


def _homogenize(p: Poly) -> Poly:
    D = max(sum(e) for e in p)
    return {e + (D - sum(e),): c for e, c in p.items()}


def _dehomogenize(p: Poly) -> Poly:
    out: Poly = {}
    for e, c in p.items():
        e2 = e[:-1]
        v = out.get(e2, 0) + c
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return out


def _permute(p: Poly, perm: Sequence[int]) -> Poly:
    return {tuple(e[j] for j in perm): c for e, c in p.items()}


def _homogenized_basis(I: GroebnerBasis) -> list:
    # homogenizing a degree-compatible basis generates the homogenization of I
    return [_homogenize(p) for _, p in _as_grevlex(I).elems]


def _bayer_saturate(polys: list, dim: int, variables: Sequence[int]) -> list:
    """Saturate a homogeneous ideal in ``dim`` variables by each listed variable.

    For a homogeneous ideal under grevlex with ``x`` the smallest variable,
    dividing each basis element by its largest power of ``x`` gives a basis of
    ``(J : x^inf)`` (Bayer).
    """
    for i in variables:
        perm = [j for j in range(dim) if j != i] + [i]
        inv = [perm.index(j) for j in range(dim)]
        elems = _groebner([_permute(p, perm) for p in polys], dim, GREVLEX)
        polys = []
        for _, p in elems:
            low = min(e[-1] for e in p)
            if low:
                p = {e[:-1] + (e[-1] - low,): c for e, c in p.items()}
            polys.append(_permute(p, inv))
    return polys


def saturate_variables(I: GroebnerBasis, variables: Iterable[int]) -> GroebnerBasis:
    """``(I : (product of the given variables)^inf)``, via the homogenization of ``I``."""
    n = I.dim
    variables = sorted(set(variables))
    if I.is_zero or is_unit_ideal(I) or not variables:
        return _as_grevlex(I)
    polys = _bayer_saturate(_homogenized_basis(I), n + 1, variables)
    elems = _groebner([_dehomogenize(p) for p in polys], n, GREVLEX)
    return GroebnerBasis._from_internal(GREVLEX, n, elems)


def saturated_basis(gens: Iterable[LaurentPoly], variables: Iterable[int], dim: Optional[int] = None) -> GroebnerBasis:
    """Grevlex basis of ``(<gens> : (product of variables)^inf)`` straight from generators.

    The generators are homogenized as they are and the homogenizing variable
    is saturated away first, which recovers the homogenization of the ideal.
    Every Buchberger run is then homogeneous; for dense inhomogeneous input
    this is far cheaper than a basis of ``<gens>`` followed by
    :func:`saturate_variables`.
    """
    gens = [g for g in gens if not g.is_zero]
    n = _dim_of(gens, dim)
    variables = sorted(set(variables))
    if not gens:
        return buchberger([], GREVLEX, n)
    polys = [_homogenize(_to_internal(g)) for g in gens]
    polys = _bayer_saturate(polys, n + 1, [n] + variables)
    elems = _groebner([_dehomogenize(p) for p in polys], n, GREVLEX)
    return GroebnerBasis._from_internal(GREVLEX, n, elems)


def eliminate(I: GroebnerBasis, drop: Iterable[int]) -> GroebnerBasis:
    """Reduced grevlex basis of ``I ∩ Q[kept variables]`` (kept in ``n`` variables).

    The block order runs on the homogenization of ``I`` with the homogenizing
    variable among the kept ones; dehomogenizing commutes with eliminating
    the others.
    """
    drop = tuple(sorted(set(drop)))
    n = I.dim
    if any(not 0 <= i < n for i in drop):
        raise IndexError("variable index out of range")
    if not drop or I.is_zero or is_unit_ideal(I):
        return _as_grevlex(I)
    order = block_order(drop, GREVLEX)
    elems = _groebner(_homogenized_basis(I), n + 1, order)
    # a leading monomial free of the dropped variables is the block-order
    # maximum, so the whole element is free of them
    kept = [_dehomogenize(p) for lm, p in elems if not any(lm[i] for i in drop)]
    return GroebnerBasis._from_internal(GREVLEX, n, _groebner(kept, n, GREVLEX))


def dimension(I: GroebnerBasis) -> int:
    """Krull dimension of ``Q[s]/I``: size of a largest independent variable set.

    A set ``U`` is independent when no leading monomial is supported in ``U``.
    """
    if is_unit_ideal(I):
        raise UnitIdealError("the unit ideal has no dimension")
    n = I.dim
    supports = [frozenset(i for i, x in enumerate(lm) if x) for lm in I.leading_monomials]
    for size in range(n, -1, -1):
        for U in itertools.combinations(range(n), size):
            Us = set(U)
            if not any(s <= Us for s in supports):
                return size
    raise AssertionError("unreachable: the empty set is always independent")


def exact_divide(p: LaurentPoly, f: LaurentPoly, order: MonomialOrder = GREVLEX) -> LaurentPoly:
    """Quotient ``p / f`` in ``A+``; raises if ``f`` does not divide ``p``."""
    key = _sort_key(order)
    lf, g = _monic(_to_internal(f), key)
    lead = _to_internal(f)[lf]
    rest = _to_internal(p)
    q: Poly = {}
    while rest:
        m = max(rest, key=key)
        if not _divides(lf, m):
            raise ValueError(f"{f} does not divide {p}")
        c = rest[m]
        s = tuple(x - y for x, y in zip(m, lf))
        q[s] = q.get(s, 0) + c
        for e, gc in g.items():
            e2 = tuple(x + y for x, y in zip(e, s))
            v = rest.get(e2, 0) - c * gc
            if v:
                rest[e2] = v
            else:
                rest.pop(e2, None)
    return _to_laurent({e: c / lead for e, c in q.items()}, p.dim)


def ideal_equal(I: GroebnerBasis, J: GroebnerBasis) -> bool:
    return _as_grevlex(I).gens == _as_grevlex(J).gens


def contains_ideal(I: GroebnerBasis, J: GroebnerBasis) -> bool:
    """True when ``J ⊆ I``."""
    return all(g in I for g in J.gens)
