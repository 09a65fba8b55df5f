"""Text formats: polynomial expressions, system files and reports.

Expressions use variables ``s1 .. sN``, integer or rational literals
(``3``, ``4/7``), ``+ - *``, parentheses and ``^`` with an integer exponent
(``s1^-2`` and ``s1^(-2)`` are the same).  Negative powers are only allowed on
monomials; there is no division operator.

A system file looks like::

    # n k l
    2 1 2
    s1 - 1
    s2 - 1

with ``l`` rows of ``k`` entries separated by ``;``.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import asdict
from fractions import Fraction
from typing import Union

from .behavior import AutonomyReport, SystemMatrix
from .control import StrengthReport
from .errors import ParseError
from .genericity import ExperimentStats
from .laurent import LaurentPoly, format_poly

__all__ = [
    "parse_poly",
    "format_poly",
    "parse_system",
    "format_system",
    "report_to_dict",
    "write_report",
    "read_report",
]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>s\d+)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, n: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.n = n

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self) -> LaurentPoly:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)
        return p

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        total = self.term() * sign
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def term(self) -> LaurentPoly:
        p = self.factor()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> LaurentPoly:
        _, _, pos = self.peek()
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            k = self.exponent()
            if k < 0 and not base.is_unit:
                raise ParseError("negative powers are only allowed on monomials", pos)
            if base.is_zero and k == 0:
                raise ParseError("0^0 is undefined", pos)
            base = base ** k
        return base

    def exponent(self) -> int:
        paren = self.peek()[1] == "("
        if paren:
            self.take()
        sign = 1
        if self.peek()[1] in ("-", "+") and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        kind, v, pos = self.take()
        if kind != "num":
            raise ParseError("exponent must be an integer", pos)
        if paren:
            self.expect(")")
        return sign * int(v)

    def atom(self) -> LaurentPoly:
        kind, v, pos = self.take()
        if kind == "num":
            c = Fraction(int(v))
            if self.peek()[1] == "/":
                self.take()
                k2, v2, p2 = self.take()
                if k2 != "num":
                    raise ParseError("'/' may only join two integer literals", p2)
                if int(v2) == 0:
                    raise ParseError("zero denominator", p2)
                c = Fraction(int(v), int(v2))
            return LaurentPoly.constant(self.n, c)
        if kind == "var":
            idx = int(v[1:])
            if not 1 <= idx <= self.n:
                raise ParseError(f"variable {v} out of range for n={self.n}", pos)
            return LaurentPoly.variable(self.n, idx - 1)
        if v == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


def parse_poly(text: str, n: int) -> LaurentPoly:
    """Parse an expression such as ``3*s1^2*s2^-1 - 4/7``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _Parser(text, n).parse()


# system files ----------------------------------------------------------------


def _content_lines(text: str):
    """``(lineno, content, column of content)`` for each non-blank line, comments removed."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        line = body.strip()
        if line:
            yield lineno, line, len(body) - len(body.lstrip())


def parse_system(text: str) -> SystemMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing header line 'n k l'")
    lineno, header, _ = lines[0]
    parts = header.split()
    if len(parts) != 3 or not all(re.fullmatch(r"\d+", p) for p in parts):
        raise ParseError(f"header must be three non-negative integers 'n k l', got {header!r}", line=lineno)
    n, k, l = map(int, parts)
    if n < 1 or k < 1:
        raise ParseError("header needs n >= 1 and k >= 1", line=lineno)
    body = lines[1:]
    if len(body) != l:
        raise ParseError(f"header declares {l} rows but the file has {len(body)}", line=lineno)
    rows = []
    for lineno, line, col in body:
        cells = line.split(";")
        if cells and not cells[-1].strip() and len(cells) == k + 1:
            cells = cells[:-1]  # tolerate a trailing separator
        if len(cells) != k:
            raise ParseError(f"row has {len(cells)} entries, expected {k}", line=lineno)
        row = []
        for cell in cells:
            try:
                row.append(parse_poly(cell, n))
            except ParseError as exc:
                pos = None if exc.pos is None else col + exc.pos
                raise ParseError(exc.msg, pos, line=lineno) from None
            col += len(cell) + 1
        rows.append(tuple(row))
    return SystemMatrix(n, k, tuple(rows))


def format_system(M: SystemMatrix, comment: str = "") -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"{M.n} {M.k} {M.l}")
    out.extend("; ".join(format_poly(a) for a in row) for row in M.rows)
    return "\n".join(out) + "\n"


# reports ---------------------------------------------------------------------

INFINITY = "infinity"

Report = Union[AutonomyReport, StrengthReport, ExperimentStats]


def _value(v):
    if isinstance(v, float) and math.isinf(v):
        return INFINITY
    return v


def _hist_key(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    return INFINITY if v == math.inf else str(v)


def report_to_dict(report: Report) -> dict:
    if isinstance(report, AutonomyReport):
        return {
            "n": report.n,
            "k": report.k,
            "rows": report.rows,
            "degree_of_autonomy": _value(report.degree),
            "autonomous": report.autonomous,
            "strongly_autonomous": report.strongly_autonomous,
            "zero_behavior": report.zero_behavior,
            "under_determined": report.under_determined,
            "char_ideal_generators": [format_poly(g) for g in report.char_ideal_gens],
            "char_ideal_dimension": report.char_ideal_dim,
        }
    if isinstance(report, StrengthReport):
        return {
            "n": report.n,
            "k": report.k,
            "rows": report.plant_rows,
            "controller_rows": report.controller_rows,
            "delta_plant": _value(report.delta_plant),
            "delta_controlled": _value(report.delta_controlled),
            "strength": _value(report.strength),
            "generic_bound": _value(report.generic_bound),
            "max_efficient": report.max_efficient,
        }
    if isinstance(report, ExperimentStats):
        spec = asdict(report.spec)
        spec["density"] = str(report.spec.density)
        frac = report.fraction_generic
        d = {
            "experiment": report.experiment,
            "n": report.spec.n,
            "k": report.spec.k,
            "rows": report.spec.rows,
            "degree": report.spec.degree,
            "coeff_range": [report.spec.coeff_low, report.spec.coeff_high],
            "density": str(report.spec.density),
            "seed": report.spec.seed,
            "trials": report.trials,
            "histogram": {_hist_key(k): v for k, v in report.histogram.items()},
            "predicted": _hist_key(report.predicted),
            "fraction_generic": float(frac),
            "fraction_generic_exact": f"{frac.numerator}/{frac.denominator}",
            "wall_time": round(report.wall_time, 6),
        }
        d.update(report.extra)
        return d
    raise TypeError(f"cannot serialize {type(report).__name__}")


def write_report(report: Union[Report, dict], format: str = "json") -> bytes:
    d = report if isinstance(report, dict) else report_to_dict(report)
    if format == "json":
        return (json.dumps(d, indent=2) + "\n").encode()
    if format == "text":
        lines = []
        for key, v in d.items():
            if isinstance(v, list):
                v = ", ".join(map(str, v)) if v else "-"
            elif isinstance(v, dict):
                v = ", ".join(f"{a}: {b}" for a, b in v.items()) if v else "-"
            elif isinstance(v, bool):
                v = str(v).lower()
            elif v is None:
                v = "-"
            lines.append(f"{key}: {v}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {format!r}")


def read_report(data: Union[bytes, str]) -> dict:
    """Inverse of the JSON form of :func:`write_report`."""
    if isinstance(data, bytes):
        data = data.decode()
    return json.loads(data)
