"""Exact arithmetic: polynomials, rational functions and power series.

Two layers:

* univariate integer polynomials in ``q`` (ascending coefficient tuples)
  and :class:`UniRat`, a canonical ratio of them;
* :class:`MultiPoly` / :class:`MultiRat` over the four variables
  ``q, t, u, v`` with rational coefficients.  Multivariate fractions are
  never reduced; only results that collapse to univariate ones are
  canonicalized, through :class:`UniRat`.

Everything is exact (``int`` / ``fractions.Fraction``).
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]
Poly = tuple  # ascending coefficients, no trailing zeros; () is zero

VARIABLES = ("q", "t", "u", "v")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}


class ExactAlgError(ArithmeticError):
    pass


class SingularSubstitutionError(ExactAlgError):
    """Denominator vanishes identically under a substitution."""


class NoExpansionError(ExactAlgError):
    """Rational function has a pole at q = 0."""


class SingularSystemError(ExactAlgError):
    pass


# -- univariate polynomials -------------------------------------------------

def ptrim(p: Iterable[Number]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return ptrim([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])


def pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return ptrim(out)


def pscale(a: Poly, c: Number) -> Poly:
    return ptrim(x * c for x in a)


def pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Division with remainder over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(x) for x in a]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        quot[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    return ptrim(quot), ptrim(rem[: len(b) - 1])


def content(a: Poly) -> Fraction:
    """Positive rational c with a / c primitive with integer coefficients."""
    if not a:
        return Fraction(1)
    den = lcm(*(Fraction(x).denominator for x in a))
    num = reduce(gcd, (int(Fraction(x) * den) for x in a))
    return Fraction(abs(num), den)


def primitive(a: Poly) -> Poly:
    c = content(a)
    return tuple(int(Fraction(x) / c) for x in a)


def pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive integer gcd with positive leading coefficient."""
    a, b = ptrim(a), ptrim(b)
    while b:
        a, b = b, primitive(pdivmod(a, b)[1])
    if not a:
        return ()
    a = primitive(a)
    return a if a[-1] > 0 else pneg(a)


def pderiv(a: Poly) -> Poly:
    return ptrim(i * x for i, x in enumerate(a) if i)


def peval(a: Poly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _poly_text(p: Poly, var: str = "q") -> str:
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)\s*(\d+)?\s*(\*?\s*q(?:\^(\d+))?)?")


def _parse_poly(text: str) -> Poly:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        k = 0 if not m.group(3) else int(m.group(4) or 1)
        coeffs[k] = coeffs.get(k, 0) + sign * c
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    if not coeffs:
        raise ValueError("empty polynomial")
    return ptrim(coeffs.get(k, 0) for k in range(max(coeffs) + 1))


# -- univariate rational functions ------------------------------------------

class UniRat:
    """Canonical num/den in q: coprime integer polynomials, den(0) > 0.

    den(0) is +1 whenever the integer content allows it, which covers every
    generating function in this package.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable[Number], den: Iterable[Number] = (1,)):
        num, den = ptrim(num), ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (1,)
            return
        g = pgcd(num, den)
        if len(g) > 1:
            num, den = pdivmod(num, g)[0], pdivmod(den, g)[0]
        # joint integer content; den(0) > 0, or a positive leading coefficient if den(0) == 0
        scale = lcm(*(Fraction(x).denominator for x in num + den))
        num = [int(Fraction(x) * scale) for x in num]
        den = [int(Fraction(x) * scale) for x in den]
        g = reduce(gcd, num + den)
        if (den[0] or den[-1]) < 0:
            g = -g
        self.num = tuple(x // g for x in num)
        self.den = tuple(x // g for x in den)

    @classmethod
    def const(cls, c: Number) -> UniRat:
        c = Fraction(c)
        return cls((c.numerator,), (c.denominator,))

    @classmethod
    def coerce(cls, x) -> UniRat:
        if isinstance(x, UniRat):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, MultiRat):
            return x.to_unirat()
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other):
        other = UniRat.coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return UniRat(padd(self.num, other.num), self.den)
        return UniRat(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return UniRat(pneg(self.num), self.den)

    def __sub__(self, other):
        other = UniRat.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = UniRat.coerce(other)
        if other is NotImplemented:
            return other
        return UniRat(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = UniRat.coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return UniRat(pmul(self.num, other.den), pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return UniRat.coerce(other) / self

    def __eq__(self, other):
        other = UniRat.coerce(other)
        if other is NotImplemented:
            return other
        # cross-multiplication, independent of canonical form
        return pmul(self.num, other.den) == pmul(other.num, self.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return peval(self.num, x) / peval(self.den, x)

    def series(self, n: int) -> list[Fraction]:
        return series(self, n)

    def __str__(self) -> str:
        return f"({_poly_text(self.num)}) / ({_poly_text(self.den)})"

    def __repr__(self) -> str:
        return f"UniRat({list(self.num)}, {list(self.den)})"

    @classmethod
    def parse(cls, text: str) -> UniRat:
        """Inverse of ``str``: ``"(num) / (den)"`` or a bare polynomial."""
        depth = 0
        for i, ch in enumerate(text):
            depth += (ch == "(") - (ch == ")")
            if ch == "/" and depth == 0:
                return cls(_parse_poly(text[:i]), _parse_poly(text[i + 1:]))
        return cls(_parse_poly(text))

    def to_json(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_json(cls, obj: Mapping) -> UniRat:
        return cls(obj["num"], obj["den"])


def series(f, n: int) -> list[Fraction]:
    """Coefficients of q^0..q^n of the Maclaurin expansion of ``f``.

    Solves den * coeffs = num term by term.
    """
    f = UniRat.coerce(f)
    if not f.den[0]:
        raise NoExpansionError("denominator vanishes at q = 0")
    d0 = Fraction(f.den[0])
    out: list[Fraction] = []
    for k in range(n + 1):
        acc = Fraction(f.num[k]) if k < len(f.num) else Fraction(0)
        for j in range(1, min(k, len(f.den) - 1) + 1):
            acc -= f.den[j] * out[k - j]
        out.append(acc / d0)
    return out


def int_series(f, n: int) -> list[int]:
    """``series`` for functions whose coefficients are known to be integers."""
    out = series(f, n)
    bad = [c for c in out if c.denominator != 1]
    if bad:
        raise ExactAlgError(f"non-integer coefficient {bad[0]}")
    return [int(c) for c in out]


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence, *, check: bool = True) -> list[UniRat]:
    """Gaussian elimination over the field of rational functions in q."""
    k = len(matrix)
    if len(rhs) != k or any(len(row) != k for row in matrix):
        raise ValueError("need a square system")
    a = [[UniRat.coerce(x) for x in row] + [UniRat.coerce(b)] for row, b in zip(matrix, rhs)]
    for col in range(k):
        piv = next((r for r in range(col, k) if not a[r][col].is_zero()), None)
        if piv is None:
            raise SingularSystemError(f"no pivot in column {col}")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(k):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    sol = [row[k] for row in a]
    if check:
        for row, b in zip(matrix, rhs):
            lhs = sum((UniRat.coerce(x) * s for x, s in zip(row, sol)), UniRat.const(0))
            if lhs != UniRat.coerce(b):
                raise ExactAlgError("nonzero residual after solve")
    return sol


# -- power series helpers (truncated lists of Fractions) --------------------

def series_mul(a: Sequence, b: Sequence, n: int) -> list:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def series_add(*terms: Sequence, n: int) -> list:
    out = [0] * (n + 1)
    for t in terms:
        for i, x in enumerate(t[: n + 1]):
            out[i] += x
    return out


# -- multivariate polynomials and fractions in q, t, u, v --------------------

Exps = tuple  # (eq, et, eu, ev)


class MultiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exps, Number] | None = None):
        self.terms: dict[Exps, Fraction] = {
            tuple(e): Fraction(c) for e, c in (terms or {}).items() if c
        }

    @classmethod
    def const(cls, c: Number) -> MultiPoly:
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        e = [0, 0, 0, 0]
        e[_INDEX[name]] = 1
        return cls({tuple(e): 1})

    @classmethod
    def coerce(cls, x) -> MultiPoly:
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self, name: str) -> MultiPoly:
        i = _INDEX[name]
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return MultiPoly(out)

    def substitute(self, bindings: Mapping[str, Number]) -> MultiPoly:
        idx = [(_INDEX[k], Fraction(v)) for k, v in bindings.items()]
        out: dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, val in idx:
                c = c * val ** e2[i]
                e2[i] = 0
            if c:
                key = tuple(e2)
                out[key] = out.get(key, 0) + c
        return MultiPoly(out)

    def evaluate(self, point: Mapping[str, Number]) -> Fraction:
        rest = self.substitute(point)
        if any(any(e) for e in rest.terms):
            raise ValueError("evaluate needs a value for every variable present")
        return rest.terms.get((0, 0, 0, 0), Fraction(0))

    def variables(self) -> set[str]:
        return {VARIABLES[i] for e in self.terms for i in range(4) if e[i]}

    def to_uni(self) -> Poly:
        """Coefficients in q; fails if t, u or v still occur."""
        if self.variables() - {"q"}:
            raise ValueError(f"not univariate in q: {sorted(self.variables())}")
        if not self.terms:
            return ()
        deg = max(e[0] for e in self.terms)
        return ptrim(self.terms.get((k, 0, 0, 0), 0) for k in range(deg + 1))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(
                VARIABLES[i] if k == 1 else f"{VARIABLES[i]}^{k}" for i, k in enumerate(e) if k
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


class MultiRat:
    """Unreduced fraction of MultiPolys."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = MultiPoly.coerce(num), MultiPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = MultiPoly.const(1)
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x) -> MultiRat:
        if isinstance(x, MultiRat):
            return x
        if isinstance(x, (int, Fraction, MultiPoly)):
            return cls(x)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = MultiRat.coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return MultiRat(self.num + other.num, self.den)
        return MultiRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return MultiRat(-self.num, self.den)

    def __sub__(self, other):
        other = MultiRat.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = MultiRat.coerce(other)
        if other is NotImplemented:
            return other
        return MultiRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = MultiRat.coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        return MultiRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return MultiRat.coerce(other) / self

    def __pow__(self, k: int):
        return MultiRat(self.num ** k, self.den ** k)

    def evaluate(self, point: Mapping[str, Number]) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(point) / d

    def to_unirat(self) -> UniRat:
        return UniRat(self.num.to_uni(), self.den.to_uni())

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


def differentiate(f: MultiRat, x: str) -> MultiRat:
    """Partial derivative by the quotient rule."""
    if x not in _INDEX:
        raise ValueError(f"unknown variable {x!r}")
    f = MultiRat.coerce(f)
    dn, dd = f.num.derivative(x), f.den.derivative(x)
    if dd.is_zero():
        return MultiRat(dn, f.den)
    return MultiRat(dn * f.den - f.num * dd, f.den * f.den)


def substitute(f: MultiRat, bindings: Mapping[str, Number]) -> MultiRat:
    """Bind some of t, u, v (or q) to rational values."""
    for k in bindings:
        if k not in _INDEX:
            raise ValueError(f"unknown variable {k!r}")
    f = MultiRat.coerce(f)
    den = f.den.substitute(bindings)
    if den.is_zero():
        raise SingularSubstitutionError(f"denominator vanishes at {dict(bindings)}")
    return MultiRat(f.num.substitute(bindings), den)


q, t, u, v = (MultiRat(MultiPoly.var(n)) for n in VARIABLES)
