"""Multivariate Laurent polynomials with exact coefficients.

Terms are stored sparsely as a dict mapping exponent tuples (aligned with the
variable list, negative entries allowed) to nonzero coefficients from one of
the domains in :mod:`artin_sigma.fields`.

>>> p = parse_poly("1+u*v", ("u", "v"))
>>> q = parse_poly("(u*v)^2 - 1", ("u", "v"))
>>> print((p * q).to_string())
u^3*v^3 + u^2*v^2 - u*v - 1
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError
from .fields import QQ, ZZ, CycloNum, FpElement, PrimeField, unify_domains


def _infer_domain(value):
    if isinstance(value, bool):
        raise TypeError("booleans are not ring elements")
    if isinstance(value, int):
        return ZZ
    if isinstance(value, Fraction):
        return QQ
    if isinstance(value, FpElement):
        return PrimeField(value.p)
    if isinstance(value, CycloNum):
        return value.field
    raise TypeError(f"unsupported coefficient {value!r}")


def _coeff_pow(c, e: int, domain):
    """c**e in the domain; negative e needs an invertible coefficient."""
    if e >= 0:
        out = domain.one
        for _ in range(e):
            out = out * c
        return out
    if domain.is_field:
        return _coeff_pow(domain.one / c, -e, domain)
    if c == 1 or c == -1:
        return _coeff_pow(c, -e, domain)
    raise TypeError(f"{c} is not invertible in {domain.name}")


class LaurentPoly:
    __slots__ = ("variables", "terms", "domain")

    def __init__(self, variables, terms, domain):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for exps, coeff in terms.items():
            if len(exps) != n:
                raise ValueError("exponent tuple does not match variable list")
            coeff = domain.coerce(coeff)
            if coeff == domain.zero:
                continue
            clean[tuple(exps)] = coeff
        self.terms = clean
        self.domain = domain

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, variables, domain=ZZ):
        return cls(variables, {}, domain)

    @classmethod
    def constant(cls, value, variables, domain=None):
        if domain is None:
            domain = _infer_domain(value)
        return cls(variables, {(0,) * len(tuple(variables)): value}, domain)

    @classmethod
    def variable(cls, name, variables, domain=ZZ, power=1):
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        exps = tuple(power if v == name else 0 for v in variables)
        return cls(variables, {exps: domain.one}, domain)

    @classmethod
    def monomial(cls, coeff, exps, variables, domain=None):
        if domain is None:
            domain = _infer_domain(coeff)
        return cls(variables, {tuple(exps): coeff}, domain)

    def _new(self, terms, domain=None):
        return LaurentPoly(self.variables, terms, domain or self.domain)

    # -- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * len(self.variables)}

    def constant_value(self):
        if not self.terms:
            return self.domain.zero
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[(0,) * len(self.variables)]

    def min_exponents(self):
        """Per-variable minimum exponent over all terms (zero poly -> all 0)."""
        n = len(self.variables)
        if not self.terms:
            return (0,) * n
        mins = [min(e[i] for e in self.terms) for i in range(n)]
        return tuple(mins)

    # -- arithmetic ----------------------------------------------------

    def _pair(self, other):
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise ValueError("variable lists differ")
            dom = unify_domains(self.domain, other.domain)
            return self.coerce_to(dom), other.coerce_to(dom)
        try:
            dom = unify_domains(self.domain, _infer_domain(other))
        except TypeError:
            return None, None
        return self.coerce_to(dom), LaurentPoly.constant(dom.coerce(other), self.variables, dom)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, a.domain.zero) + c
        return LaurentPoly(a.variables, terms, a.domain)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, a.domain.zero) - c
        return LaurentPoly(a.variables, terms, a.domain)

    def __rsub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return b - a

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        terms: dict = {}
        zero = a.domain.zero
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                terms[key] = terms.get(key, zero) + c1 * c2
        return LaurentPoly(a.variables, terms, a.domain)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e < 0:
            if len(self.terms) != 1:
                raise InputError("negative power of a non-monomial")
            ((exps, coeff),) = self.terms.items()
            inv_coeff = _coeff_pow(coeff, -1, self.domain)
            inv = LaurentPoly.monomial(inv_coeff, tuple(-x for x in exps), self.variables, self.domain)
            return inv ** (-e)
        out = LaurentPoly.constant(self.domain.one, self.variables, self.domain)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FpElement, CycloNum)):
            a, b = self._pair(other)
            if a is None:
                return NotImplemented
            return a.terms == b.terms
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.variables != other.variables:
            return False
        try:
            a, b = self._pair(other)
        except TypeError:
            return False
        return a.terms == b.terms

    __hash__ = None

    # -- conversions ---------------------------------------------------

    def coerce_to(self, domain) -> "LaurentPoly":
        if domain == self.domain:
            return self
        return LaurentPoly(self.variables, dict(self.terms), domain)

    def reorder_variables(self, new_variables) -> "LaurentPoly":
        new_variables = tuple(new_variables)
        if sorted(new_variables) != sorted(self.variables):
            raise ValueError("new variable list must be a permutation")
        perm = [self.variables.index(v) for v in new_variables]
        terms = {tuple(e[i] for i in perm): c for e, c in self.terms.items()}
        return LaurentPoly(new_variables, terms, self.domain)

    def extend_variables(self, new_variables) -> "LaurentPoly":
        new_variables = tuple(new_variables)
        pos = {}
        for v in self.variables:
            if v not in new_variables:
                raise ValueError(f"variable {v!r} missing from extension")
            pos[v] = new_variables.index(v)
        n = len(new_variables)
        terms = {}
        for e, c in self.terms.items():
            out = [0] * n
            for v, ev in zip(self.variables, e):
                out[pos[v]] = ev
            terms[tuple(out)] = c
        return LaurentPoly(new_variables, terms, self.domain)

    def normalized(self) -> "LaurentPoly":
        """Multiply by the monomial clearing all negative exponents."""
        mins = self.min_exponents()
        shift = tuple(-m if m < 0 else 0 for m in mins)
        if not any(shift):
            return self
        terms = {tuple(x + s for x, s in zip(e, shift)): c for e, c in self.terms.items()}
        return self._new(terms)

    # -- substitution / evaluation ------------------------------------

    def substitute(self, images: dict) -> "LaurentPoly":
        """Map each variable to a one-term Laurent polynomial (a coefficient
        times a monomial) and expand.  All images must share one variable
        list; the result lives over that list."""
        for v in self.variables:
            if v not in images:
                raise ValueError(f"no image for variable {v!r}")
        some = images[self.variables[0]] if self.variables else None
        if some is None:
            # constant polynomial over no variables: nothing to substitute
            return self
        target_vars = some.variables
        dom = self.domain
        for img in images.values():
            if not isinstance(img, LaurentPoly) or img.variables != target_vars:
                raise ValueError("images must share a single variable list")
            if len(img.terms) > 1:
                raise InputError("substitution images must be single-term")
            dom = unify_domains(dom, img.domain)
        n = len(target_vars)
        zero = dom.zero
        out: dict = {}
        for exps, coeff in self.terms.items():
            acc_c = dom.coerce(coeff)
            acc_e = [0] * n
            dead = False
            for v, e in zip(self.variables, exps):
                if e == 0:
                    continue
                img = images[v]
                if not img.terms:
                    if e > 0:
                        dead = True
                        break
                    raise ZeroDivisionError(f"negative power of zero image for {v!r}")
                ((ie, ic),) = img.terms.items()
                acc_c = acc_c * _coeff_pow(dom.coerce(ic), e, dom)
                for i, x in enumerate(ie):
                    acc_e[i] += x * e
            if dead:
                continue
            key = tuple(acc_e)
            out[key] = out.get(key, zero) + acc_c
        return LaurentPoly(target_vars, out, dom)

    def evaluate(self, values: dict):
        """Evaluate at domain elements; negative exponents invert the value."""
        dom = self.domain
        for v in self.variables:
            if v not in values:
                raise ValueError(f"no value for variable {v!r}")
            dom = unify_domains(dom, _infer_domain(values[v]))
        total = dom.zero
        for exps, coeff in self.terms.items():
            acc = dom.coerce(coeff)
            for v, e in zip(self.variables, exps):
                if e:
                    acc = acc * _coeff_pow(dom.coerce(values[v]), e, dom)
            total = total + acc
        return total

    # -- printing ------------------------------------------------------

    def _sorted_exps(self):
        return sorted(self.terms, reverse=True)

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps in self._sorted_exps():
            coeff = self.terms[exps]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps)
                if e != 0
            )
            sign = "+"
            if isinstance(coeff, (int, Fraction)) and coeff < 0:
                sign, coeff = "-", -coeff
            if mono:
                if coeff == 1:
                    body = mono
                else:
                    body = f"{coeff}*{mono}"
            else:
                body = str(coeff)
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"LaurentPoly({self.to_string()!r}, vars={self.variables})"


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z_][A-Za-z0-9_]*|\^|\*|\+|\-|\(|\))")


def _tokenize(text: str) -> list[str]:
    out = []
    text = text.strip()
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InputError(f"bad character in polynomial at position {pos}: {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _PolyParser:
    def __init__(self, text: str, variables, domain):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = tuple(variables)
        self.domain = domain

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> LaurentPoly:
        p = self.expr()
        if self.peek() is not None:
            raise InputError(f"unexpected token {self.peek()!r} in polynomial")
        return p

    def expr(self) -> LaurentPoly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> LaurentPoly:
        p = self.factor()
        while self.peek() == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> LaurentPoly:
        p = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise InputError("exponent must be an integer")
            e = int(tok)
            p = p ** (-e if neg else e)
        return p

    def atom(self) -> LaurentPoly:
        tok = self.take()
        if tok is None:
            raise InputError("unexpected end of polynomial")
        if tok == "(":
            p = self.expr()
            if self.take() != ")":
                raise InputError("unbalanced parentheses in polynomial")
            return p
        if tok == "-":
            return -self.atom()
        if re.fullmatch(r"\d+/\d+|\d+", tok):
            value = Fraction(tok)
            return LaurentPoly.constant(self.domain.coerce(value), self.variables, self.domain)
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            if tok not in self.variables:
                raise InputError(f"unknown variable {tok!r} (declared: {', '.join(self.variables)})")
            return LaurentPoly.variable(tok, self.variables, self.domain)
        raise InputError(f"unexpected token {tok!r} in polynomial")


def parse_poly(text: str, variables, domain=QQ) -> LaurentPoly:
    """Parse ``1 + s*u + (s*u)^2``-style syntax into a LaurentPoly.

    >>> parse_poly("(a*b)^2 - a^2*b", ("a", "b")).to_string()
    'a^2*b^2 - a^2*b'
    """
    return _PolyParser(text, variables, domain).parse()
