"""Functional equations for the last-column generating functions, and their solution.

Each model stores its master equations as labelled terms
``coefficient(q, t[, u, v]) * (linear combination of unknowns)``.  The
unknowns (``A1``, ``B1``, ...) are series in q alone, so differentiating
an equation in t, u or v and then fixing those variables only touches
the coefficients.  Each recipe turns one master equation into one linear
equation over rational functions of q; solving the system gives the area
generating function.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from . import columndp
from .exactalg import (
    MultiRat,
    UniRat,
    differentiate,
    int_series,
    q,
    series,
    series_add,
    series_mul,
    solve_linear,
    substitute,
    t,
    u,
    v,
)

MODELS = ("CC", "L1", "L2", "L3")


class ConsistencyError(RuntimeError):
    """A cataloged model failed to produce a regular system."""


@dataclass(frozen=True)
class Unknown:
    name: str
    base: str
    derivative: str | None
    point: tuple[tuple[str, int], ...]


UNKNOWNS = {
    x.name: x
    for x in [
        Unknown("A1", "A", None, (("t", 1),)),
        Unknown("B1", "A", "t", (("t", 1),)),
        Unknown("C1", "C", None, (("t", 1),)),
        Unknown("D1", "C", "t", (("t", 1),)),
        Unknown("E1", "E", None, (("t", 1),)),
        Unknown("F0", "E", "t", (("t", 0),)),
        Unknown("F1", "E", "t", (("t", 1),)),
        Unknown("G1", "G", None, (("t", 1), ("u", 1), ("v", 1))),
        Unknown("H1", "G", "t", (("t", 1), ("u", 1), ("v", 1))),
        Unknown("I0", "G", "u", (("t", 1), ("u", 0), ("v", 1))),
        Unknown("J0", "G", "v", (("t", 1), ("u", 1), ("v", 0))),
    ]
}


@dataclass(frozen=True)
class Term:
    label: str
    coeff: MultiRat
    combo: tuple[tuple[str, int], ...] = ()  # empty: a constant term

    def value(self, point: Mapping[str, Fraction], unknowns: Mapping[str, Fraction]) -> Fraction:
        weight = sum((k * unknowns[name] for name, k in self.combo), Fraction(0)) if self.combo else 1
        return self.coeff.evaluate(point) * weight


@dataclass(frozen=True)
class MasterEquation:
    lhs: str
    variables: tuple[str, ...]
    terms: tuple[Term, ...]
    # the right-hand side exactly as displayed after summing the cases
    combined: Callable[[Mapping[str, Fraction], Mapping[str, Fraction]], Fraction] = field(
        compare=False, repr=False
    )

    @property
    def constant(self) -> MultiRat:
        return sum((tm.coeff for tm in self.terms if not tm.combo), MultiRat(0))

    def coefficient(self, name: str) -> MultiRat:
        out = MultiRat(0)
        for tm in self.terms:
            for n, k in tm.combo:
                if n == name:
                    out = out + k * tm.coeff
        return out

    def unknowns(self) -> list[str]:
        seen: list[str] = []
        for tm in self.terms:
            for n, _ in tm.combo:
                if n not in seen:
                    seen.append(n)
        return seen

    def rhs_value(self, point, unknowns) -> Fraction:
        return sum((tm.value(point, unknowns) for tm in self.terms), Fraction(0))


@dataclass(frozen=True)
class Recipe:
    equation: str
    derivative: str | None
    point: tuple[tuple[str, int], ...]
    target: str


@dataclass(frozen=True)
class ModelCatalogEntry:
    model: str
    family: str
    equations: dict[str, MasterEquation]
    recipes: tuple[Recipe, ...]
    output: tuple[str, ...]
    closed_form: UniRat | None = None

    @property
    def derivable(self) -> bool:
        return bool(self.recipes)

    @property
    def unknowns(self) -> list[str]:
        return [r.target for r in self.recipes]


def _c(x):
    return lambda p, k: x(p["q"], p["t"], p.get("u"), p.get("v"), k)


def _build_catalog() -> dict[str, ModelCatalogEntry]:
    one = 1 - q * t
    geo = q * t / one          # qt/(1-qt)
    geo2 = q * t / one ** 2    # qt/(1-qt)^2
    hole = q**2 * t**3 / one ** 2

    cc = MasterEquation(
        "A",
        ("q", "t"),
        (
            Term("S_alpha", geo),
            Term("S_beta", geo2, (("A1", 1),)),
            Term("S_gamma", geo, (("B1", 1),)),
        ),
        _c(lambda q, t, u, v, k: q*t/(1-q*t) + q*t/(1-q*t)**2*k["A1"] + q*t/(1-q*t)*k["B1"]),
    )
    l1 = MasterEquation(
        "C",
        ("q", "t"),
        (
            Term("T_alpha", geo),
            Term("T_beta", geo2, (("C1", 1),)),
            Term("T_gamma", geo, (("D1", 1),)),
            Term("T_delta", hole, (("D1", 1), ("C1", -1))),
        ),
        _c(lambda q, t, u, v, k: q*t/(1-q*t) + q*t/(1-q*t)**2*k["C1"] + q*t/(1-q*t)*k["D1"]
           + q**2*t**3/(1-q*t)**2*(k["D1"] - k["C1"])),
    )
    l2e = MasterEquation(
        "E",
        ("q", "t"),
        (
            Term("U_alpha", geo),
            Term("U_beta", geo2, (("E1", 1),)),
            Term("U_gamma", geo, (("F1", 1),)),
            Term("U_delta", hole, (("F1", 1), ("E1", -1))),
            Term("U_epsilon", geo2, (("G1", 1),)),
            Term("U_zeta", q**2 * t**2 / one, (("G1", 1),)),
            Term("U_zeta", geo, (("H1", 1), ("G1", -1))),
            Term("U_eta", 2 * q**3 * t**4 / one ** 2, (("G1", 1),)),
            Term("U_eta", hole, (("H1", 1), ("G1", -3))),
        ),
        _c(lambda q, t, u, v, k: q*t/(1-q*t) + q*t/(1-q*t)**2*k["E1"] + q*t/(1-q*t)*k["F1"]
           + q**2*t**3/(1-q*t)**2*(k["F1"] - k["E1"])
           + q*t/(1-q*t)**2*k["G1"] + q**2*t**2/(1-q*t)*k["G1"] + q*t/(1-q*t)*(k["H1"] - k["G1"])
           + 2*q**3*t**4/(1-q*t)**2*k["G1"] + q**2*t**3/(1-q*t)**2*(k["H1"] - 3*k["G1"])),
    )
    stack = q**2 * t**4 * u * v
    l2g = MasterEquation(
        "G",
        ("q", "t", "u", "v"),
        (
            Term("V_alpha", stack / ((1 - q*t*u) * (1 - q*t*v)), (("F1", 1), ("E1", -2), ("F0", 1))),
            Term("V_beta", stack / ((1 - q*t*u) * (1 - q*t*v)), (("H1", 1), ("G1", -2))),
            Term("V_beta", -stack / (1 - q*t*u), (("G1", 1), ("I0", -1))),
            Term("V_beta", -stack / (1 - q*t*v), (("G1", 1), ("J0", -1))),
        ),
        _c(lambda q, t, u, v, k: q**2*t**4*u*v/((1-q*t*u)*(1-q*t*v))
           * (k["F1"] - 2*k["E1"] + k["F0"] + k["H1"] - 2*k["G1"])
           - q**2*t**4*u*v/(1-q*t*u)*(k["G1"] - k["I0"])
           - q**2*t**4*u*v/(1-q*t*v)*(k["G1"] - k["J0"])),
    )

    def recipes_for(eq: str, names: list[str]) -> tuple[Recipe, ...]:
        return tuple(
            Recipe(eq, UNKNOWNS[n].derivative, UNKNOWNS[n].point, n) for n in names
        )

    return {
        "CC": ModelCatalogEntry("CC", "cc", {"A": cc}, recipes_for("A", ["A1", "B1"]), ("A1",)),
        "L1": ModelCatalogEntry("L1", "cheesy:1", {"C": l1}, recipes_for("C", ["C1", "D1"]), ("C1",)),
        "L2": ModelCatalogEntry(
            "L2",
            "cheesy:2",
            {"E": l2e, "G": l2g},
            recipes_for("E", ["E1", "F0", "F1"]) + recipes_for("G", ["G1", "H1", "I0", "J0"]),
            ("E1", "G1"),
        ),
        "L3": ModelCatalogEntry("L3", "cheesy:3", {}, (), ("L",), closed_form=LEVEL3_FORM),
    }


LEVEL3_FORM = UniRat(
    (0, 1, -11, 49, -114, 146, -94, 5, 71, -143, 176, -154, 100, 24, -121, 90, -61, 19,
     58, -32, -31, 37, 14, -43, -4, 21, -1, -5),
    (1, -14, 80, -243, 423, -413, 174, 106, -350, 533, -546, 427, -148, -261, 383, -253,
     158, 57, -181, 10, 115, -49, -96, 93, 49, -54, -12, 12, 1),
)


@lru_cache(maxsize=None)
def catalog() -> dict[str, ModelCatalogEntry]:
    return _build_catalog()


def _entry(model: str) -> ModelCatalogEntry:
    try:
        return catalog()[model]
    except KeyError:
        raise ValueError(f"unknown model {model!r}; expected one of {MODELS}") from None


def apply_recipe(coeff: MultiRat, recipe: Recipe) -> UniRat:
    if recipe.derivative:
        coeff = differentiate(coeff, recipe.derivative)
    return substitute(coeff, dict(recipe.point)).to_unirat()


@dataclass(frozen=True)
class LinearSystem:
    unknowns: tuple[str, ...]
    matrix: tuple[tuple[UniRat, ...], ...]
    rhs: tuple[UniRat, ...]


def assemble(model: str) -> LinearSystem:
    """One row per recipe: target - sum(coeff_k * unknown_k) = constant."""
    entry = _entry(model)
    if not entry.derivable:
        raise ValueError(f"model {model} has no recipes; only its closed form is stored")
    names = entry.unknowns
    matrix, rhs = [], []
    for recipe in entry.recipes:
        eq = entry.equations[recipe.equation]
        row = [UniRat.const(1 if n == recipe.target else 0) for n in names]
        const = UniRat.const(0)
        for term in eq.terms:
            c = apply_recipe(term.coeff, recipe)
            if not term.combo:
                const = const + c
            for n, k in term.combo:
                i = names.index(n)
                row[i] = row[i] - k * c
        matrix.append(tuple(row))
        rhs.append(const)
    return LinearSystem(tuple(names), tuple(matrix), tuple(rhs))


@lru_cache(maxsize=None)
def solve(model: str) -> dict[str, UniRat]:
    """Closed forms of every unknown of a derivable model."""
    system = assemble(model)
    try:
        sol = solve_linear(system.matrix, system.rhs)
    except ArithmeticError as exc:
        raise ConsistencyError(f"{model}: {exc}") from exc
    return dict(zip(system.unknowns, sol))


def area_gf(model: str) -> UniRat:
    entry = _entry(model)
    if entry.closed_form is not None:
        return entry.closed_form
    sol = solve(model)
    return sum((sol[n] for n in entry.output), UniRat.const(0))


def model_for_family(family: str) -> str:
    for entry in catalog().values():
        if entry.family == family:
            return entry.model
    raise ValueError(f"no generating function for family {family!r}")


def solution_json(model: str) -> str:
    return json.dumps({name: f.to_json() for name, f in solve(model).items()}, indent=2)


# -- independent check of the master equations -------------------------------

def _lhs_weights(model: str):
    """(level, weight-builder) giving each base series from the column DP."""
    def height(pt):
        return lambda s: pt["t"] ** s.height

    def e_part(pt):
        return lambda s: pt["t"] ** s.height if s.g <= 1 else 0

    def g_part(pt):
        # u marks the upper run, v the lower run
        return lambda s: pt["t"] ** s.height * pt["u"] ** s.b * pt["v"] ** s.a if s.g == 2 else 0

    return {
        "CC": (0, {"A": height}),
        "L1": (1, {"C": height}),
        "L2": (2, {"E": e_part, "G": g_part}),
    }[model]


def verify_master(model: str, depth: int, *, points: int = 3, seed: int = 0) -> bool:
    """Check every master equation as a q-series to order ``depth``.

    The left side is counted directly by the column DP with the last column
    weighted by t^height (and u^upper v^lower); the right side uses the
    solved unknowns.  ``points`` random rational values are tried for each
    of t, u, v.
    """
    if not 1 <= depth <= 30:
        raise ValueError("depth must be in 1..30")
    entry = _entry(model)
    if not entry.derivable:
        raise ValueError(f"model {model} has no master equations")
    level, weights = _lhs_weights(model)
    unknown_series = {n: series(f, depth) for n, f in solve(model).items()}
    rng = random.Random(seed)

    for name, eq in entry.equations.items():
        for _ in range(points):
            pt = {x: Fraction(rng.randint(1, 9), rng.randint(2, 11)) for x in eq.variables if x != "q"}
            lhs = columndp.last_column_series(level, depth, weights[name](pt))
            parts = []
            for term in eq.terms:
                coeff = series(substitute(term.coeff, pt).to_unirat(), depth)
                if term.combo:
                    combo = series_add(*([k * c for c in unknown_series[n]] for n, k in term.combo), n=depth)
                    coeff = series_mul(coeff, combo, depth)
                parts.append(coeff)
            rhs = series_add(*parts, n=depth)
            if [Fraction(x) for x in lhs] != [Fraction(x) for x in rhs]:
                return False
    return True


def check_transcription(model: str, point: Mapping[str, Fraction], unknowns: Mapping[str, Fraction]) -> bool:
    """Labelled per-case terms sum to the displayed combined right-hand side."""
    entry = _entry(model)
    return all(
        eq.rhs_value(point, unknowns) == eq.combined(point, unknowns)
        for eq in entry.equations.values()
    )


def gf_terms(model: str, n: int) -> list[int]:
    """Counts for areas 1..n from the closed form."""
    return int_series(area_gf(model), n)[1:]
