"""Growth constants and amplitudes of rational generating functions.

The dominant singularity is located and certified in exact rational
arithmetic:

1. a Sturm sequence isolates the smallest positive real root;
2. Graeffe root-squaring followed by Pellet's test proves that the disk
   ``|z| < R`` (with R just above that root) holds exactly one root,
   counted with multiplicity, so the real root is simple and no complex
   root is closer to the origin;
3. bisection on exact signs shrinks the bracket to the requested width.

Floating point is only used to pick the Pellet radius; a bad guess makes
the certificate fail, it can never make it wrong.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exactalg import UniRat, pderiv, pdivmod, peval, pgcd, pmul, pneg, psub, ptrim

DEFAULT_TOL = Fraction(1, 10**9)


class UnsupportedSingularity(ArithmeticError):
    """Dominant singularity is not a simple positive real root."""


class PrecisionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @classmethod
    def point(cls, x) -> Interval:
        return cls(Fraction(x), Fraction(x))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, o):
        o = _iv(o)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, o):
        return self + (-_iv(o))

    def __mul__(self, o):
        o = _iv(o)
        ends = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi]
        return Interval(min(ends), max(ends))

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _iv(o)
        if o.lo <= 0 <= o.hi:
            raise PrecisionError("division by an interval containing zero")
        return self * Interval(1 / o.hi, 1 / o.lo)

    def __rtruediv__(self, o):
        return _iv(o) / self

    def __float__(self):
        return float(self.mid)

    def digits(self, places: int = 6) -> str:
        """Decimal string truncated to ``places`` digits (from the lower end)."""
        scaled = math.floor(self.lo * 10**places)
        sign = "-" if scaled < 0 else ""
        whole, frac = divmod(abs(scaled), 10**places)
        return f"{sign}{whole}.{frac:0{places}d}"


def _iv(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.point(x)


def ieval(p: Sequence[int], x: Interval) -> Interval:
    acc = Interval.point(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


# -- real root isolation -----------------------------------------------------

def sturm_sequence(p: Sequence[int]) -> list[tuple]:
    seq = [ptrim(p), pderiv(ptrim(p))]
    while seq[-1] and len(seq[-1]) > 1:
        rem = pdivmod(seq[-2], seq[-1])[1]
        if not rem:
            break
        seq.append(pneg(rem))
    return seq


def _variations(seq, x) -> int:
    signs = [s for s in (peval(f, x) for f in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(seq, a, b) -> int:
    """Distinct real roots in (a, b] of the squarefree polynomial seq[0]."""
    return _variations(seq, a) - _variations(seq, b)


def squarefree(p: Sequence[int]) -> tuple:
    g = pgcd(p, pderiv(p))
    return ptrim(p) if len(g) <= 1 else pdivmod(ptrim(p), g)[0]


def cauchy_bound(p: Sequence[int]) -> Fraction:
    p = ptrim(p)
    lead = abs(Fraction(p[-1]))
    return 1 + max(abs(Fraction(c)) / lead for c in p[:-1])


def graeffe(p: Sequence[int]) -> tuple:
    """Polynomial whose roots are the squares of the roots of p.

    With p(z) = e(z^2) + z o(z^2): p(z) p(-z) = e(w)^2 - w o(w)^2, w = z^2.
    """
    p = ptrim(p)
    e, o = p[0::2], p[1::2]
    return psub(pmul(e, e), (0,) + pmul(o, o))


def pellet_one(p: Sequence[int], radius: Fraction) -> bool:
    """Pellet's test: exactly one root (with multiplicity) in |z| < radius."""
    if len(p) < 2:
        return False
    rest = abs(p[0]) + sum(abs(c) * radius**j for j, c in enumerate(p) if j >= 2)
    return abs(p[1]) * radius > rest


def certify_single_root_disk(p: Sequence[int], radius: Fraction, max_squarings: int = 10) -> bool:
    g, r = ptrim(p), Fraction(radius)
    for _ in range(max_squarings + 1):
        if pellet_one(g, r):
            return True
        g, r = graeffe(g), r * r
    return False


def _pellet_radii(p, hi: Fraction) -> list[Fraction]:
    """Candidate radii between the real root and the next root modulus."""
    mods = sorted(abs(z) for z in np.roots([float(c) for c in reversed(p)]))
    out = []
    nxt = next((m for m in mods if m > float(hi) * (1 + 1e-9)), None)
    if nxt is not None:
        guess = math.sqrt(float(hi) * nxt)
        out.append(Fraction(guess).limit_denominator(1 << 20))
    out += [hi * (1 + Fraction(1, 2**k)) for k in (1, 2, 3, 5, 8)]
    return [r for r in out if r > hi]


def refine(p: Sequence[int], lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect a sign-change bracket of p down to ``width``."""
    slo = peval(p, lo)
    if slo == 0:
        return lo, lo
    if peval(p, hi) == 0:
        return hi, hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = peval(p, mid)
        if s == 0:
            return mid, mid
        if (s > 0) == (slo > 0):
            lo = mid
        else:
            hi = mid
    return lo, hi


def dominant_root(den: Sequence[int], tol: Fraction = DEFAULT_TOL) -> Interval:
    """Certified bracket of the smallest-modulus root of ``den``."""
    p = ptrim(den)
    if not p or p[0] == 0:
        raise UnsupportedSingularity("denominator must not vanish at 0")
    if len(p) == 1:
        raise UnsupportedSingularity("constant denominator has no singularity")
    sf = squarefree(p)
    seq = sturm_sequence(sf)
    # a power of two keeps every bisection point dyadic, so dyadic roots are hit exactly
    bound = Fraction(2) ** math.ceil(math.log2(cauchy_bound(sf)))
    if count_roots(seq, 0, bound) == 0:
        raise UnsupportedSingularity("no positive real root")
    lo, hi = Fraction(0), bound
    while count_roots(seq, lo, hi) > 1:
        mid = (lo + hi) / 2
        if count_roots(seq, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    lo, hi = refine(sf, lo, hi, Fraction(tol))
    if not any(certify_single_root_disk(p, r) for r in _pellet_radii(p, hi)):
        raise UnsupportedSingularity(
            "could not certify a simple real root as the unique smallest-modulus root"
        )
    return Interval(lo, hi)


@dataclass(frozen=True)
class AsymptoticProfile:
    r1: Interval
    growth: Interval
    amplitude: Interval
    multiplicity: int = 1

    def as_dict(self, places: int = 6) -> dict:
        return {
            "root": self.r1.digits(places + 3),
            "growth": self.growth.digits(places),
            "amplitude": self.amplitude.digits(places),
            "precision": f"truncated to {places} decimals; certified width <= {float(self.max_width):.1e}",
        }

    @property
    def max_width(self) -> Fraction:
        return max(self.r1.width, self.growth.width, self.amplitude.width)


def amplitude(f: UniRat, r1: Interval) -> Interval:
    """c with [q^n] f ~ c * (1/r1)^n, i.e. -num(r1) / (r1 * den'(r1))."""
    return -ieval(f.num, r1) / (r1 * ieval(pderiv(f.den), r1))


def profile(f: UniRat, tol: Fraction = DEFAULT_TOL) -> AsymptoticProfile:
    tol = Fraction(tol)
    root = dominant_root(f.den, tol)
    p = f.den
    while True:
        if root.width == 0:
            growth = Interval.point(1 / root.lo)
        else:
            growth = Interval(1 / root.hi, 1 / root.lo)
        amp = amplitude(f, root)
        prof = AsymptoticProfile(root, growth, amp)
        if prof.max_width <= tol:
            return prof
        lo, hi = refine(p, root.lo, root.hi, root.width / 16)
        root = Interval(lo, hi)


# -- empirical overlays ------------------------------------------------------

def empirical_growth(counts: Sequence[int]) -> list[float]:
    if len(counts) < 3 or any(c <= 0 for c in counts):
        raise ValueError("need at least 3 positive counts")
    return [float(Fraction(b, a)) for a, b in zip(counts, counts[1:])]


def _diffs(growths: Sequence[float]) -> list[float]:
    if len(growths) < 3:
        raise ValueError("need at least 3 growth constants")
    d = [b - a for a, b in zip(growths, growths[1:])]
    if any(x <= 0 for x in d):
        raise ValueError("growth constants must be strictly increasing")
    return d


def extrapolate(growths: Sequence[float], ratio: float = 0.5) -> float:
    """Limit of a sequence whose first differences shrink by ``ratio`` each step.

    With the default ratio of one half the tail sums to one more copy of the
    last difference.
    """
    d = _diffs(growths)
    return growths[-1] + d[-1] * ratio / (1 - ratio)


def extrapolate_fitted(growths: Sequence[float]) -> tuple[float, float]:
    """Heuristic: fit the decay ratio (geometric mean of successive difference ratios).

    Returns ``(limit, ratio)``.
    """
    d = _diffs(growths)
    ratio = (d[-1] / d[0]) ** (1 / (len(d) - 1))
    if ratio >= 1:
        raise ValueError("differences do not decay")
    return extrapolate(growths, ratio), ratio
