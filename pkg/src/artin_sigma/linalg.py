"""Exact rank of Laurent-polynomial matrices via fraction-free elimination.

Entries live over a coefficient field (integers are promoted to rationals).
Negative exponents are cleared row by row with monomial units, which does not
change the rank, and the Bareiss scheme keeps every intermediate entry a
polynomial: the division at each step is exact by the Sylvester identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .fields import QQ, ZZ, unify_domains
from .laurent import LaurentPoly


def _lex_leading(f: LaurentPoly):
    lm = max(f.terms)
    return lm, f.terms[lm]


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """f / g when g divides f exactly (polynomial entries, field coefficients)."""
    if g.is_zero():
        raise ZeroDivisionError("exact division by zero polynomial")
    if f.is_zero():
        return f
    dom = unify_domains(f.domain, g.domain)
    f = f.coerce_to(dom)
    g = g.coerce_to(dom)
    glm, glc = _lex_leading(g)
    quot: dict = {}
    rem = f
    while rem.terms:
        lm, lc = _lex_leading(rem)
        diff = tuple(a - b for a, b in zip(lm, glm))
        if any(d < 0 for d in diff):
            raise ArithmeticError("inexact polynomial division")
        c = lc / glc
        quot[diff] = c
        rem = rem - LaurentPoly.monomial(c, diff, f.variables, dom) * g
    return LaurentPoly(f.variables, quot, dom)


@dataclass
class PolyMatrix:
    """A rectangular matrix of Laurent polynomials over one variable list."""

    entries: list

    def __post_init__(self):
        rows = [list(r) for r in self.entries]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise InputError("matrix rows must have equal length")
            vars0 = None
            for r in rows:
                for e in r:
                    if not isinstance(e, LaurentPoly):
                        raise TypeError("matrix entries must be LaurentPoly")
                    if vars0 is None:
                        vars0 = e.variables
                    elif e.variables != vars0:
                        raise InputError("matrix entries must share one variable list")
        self.entries = rows

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0]) if self.entries else 0

    def rank(self) -> int:
        return matrix_rank(self)


def matrix_rank(matrix) -> int:
    """Rank over the fraction field, by Bareiss fraction-free elimination."""
    if isinstance(matrix, PolyMatrix):
        rows = [list(r) for r in matrix.entries]
    else:
        rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0

    domain = None
    variables = rows[0][0].variables
    for r in rows:
        for e in r:
            domain = e.domain if domain is None else unify_domains(domain, e.domain)
    if domain == ZZ:
        domain = QQ
    if not domain.is_field:
        raise InputError(f"rank needs field coefficients, got {domain.name}")

    nvars = len(variables)
    work = []
    for r in rows:
        # clear negative exponents with a per-row monomial unit
        mins = [0] * nvars
        for e in r:
            for exps in e.terms:
                for i, x in enumerate(exps):
                    if x < mins[i]:
                        mins[i] = x
        shift = tuple(-m for m in mins)
        if any(shift):
            mono = LaurentPoly.monomial(domain.one, shift, variables, domain)
            work.append([(e.coerce_to(domain) * mono) for e in r])
        else:
            work.append([e.coerce_to(domain) for e in r])

    nrows = len(work)
    ncols = len(work[0])
    one = LaurentPoly.constant(domain.one, variables, domain)
    zero = LaurentPoly.zero(variables, domain)
    prev = one
    rank = 0
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for i in range(pivot_row, nrows):
            if not work[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != pivot_row:
            work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        p = work[pivot_row][col]
        for i in range(pivot_row + 1, nrows):
            ric = work[i][col]
            for j in range(col + 1, ncols):
                num = p * work[i][j] - ric * work[pivot_row][j]
                work[i][j] = exact_divide(num, prev) if not num.is_zero() else zero
            work[i][col] = zero
        prev = p
        rank += 1
        pivot_row += 1
        if pivot_row == nrows:
            break
    return rank
