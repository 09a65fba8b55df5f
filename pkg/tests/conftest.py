from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ndautonomy import LaurentPoly, SystemMatrix, parse_poly

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def P(text, n=2):
    return parse_poly(text, n)


def column(*texts, n=2):
    return SystemMatrix.column([P(t, n) for t in texts])


def matrix(rows, n=2):
    return SystemMatrix.from_rows([[P(t, n) for t in row] for row in rows], n=n, k=len(rows[0]))


coeffs = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def laurent_polys(draw, n=2, lo=-2, hi=2, max_terms=4, nonzero=False):
    exps = st.tuples(*[st.integers(lo, hi)] * n)
    terms = draw(st.dictionaries(exps, coeffs.filter(bool), min_size=1 if nonzero else 0, max_size=max_terms))
    return LaurentPoly(n, terms)


@st.composite
def polys(draw, n=2, deg=2, max_terms=3, nonzero=True):
    """Polynomials in ``A+`` with small support."""
    return draw(laurent_polys(n=n, lo=0, hi=deg, max_terms=max_terms, nonzero=nonzero))


def rank(rows):
    """Rank of a list of sparse rational rows (dicts) by Gaussian elimination."""
    rows = [dict(r) for r in rows if r]
    r = 0
    pivots = []
    while rows:
        row = rows.pop()
        for piv, prow in pivots:
            if piv in row:
                c = row[piv] / prow[piv]
                for k, v in prow.items():
                    row[k] = row.get(k, 0) - c * v
                row = {k: v for k, v in row.items() if v}
        if row:
            pivots.append((next(iter(row)), row))
            r += 1
    return r


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
