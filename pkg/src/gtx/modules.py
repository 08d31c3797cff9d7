"""Finite windows of tableau modules and the checks run on them.

A ``ModuleSpec`` is an ambient module (a ``GTModule``) plus a basis predicate
on lattice points.  Lattice points are integer vectors in shift order; in the
generic regime they are just the shifts z, in the singular regime they are
the (m, n, k) table coordinates laid out as (k, m, n) (see ``point_of``).
"""

from __future__ import annotations

import itertools
import random
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from . import singular
from .gt_action import Basis, GTModule, Vector, lie_bracket, vsub
from .scalars import ONE, Rational, fmt, is_nonneg_integer
from .tableaux import Tableau, omega_plus, shift

# --------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class Window:
    lo: tuple[int, ...]
    hi: tuple[int, ...]

    def __post_init__(self):
        if len(self.lo) != len(self.hi) or any(a > b for a, b in zip(self.lo, self.hi)):
            raise ValueError("window needs lo <= hi coordinatewise")

    @classmethod
    def box(cls, dim: int, radius: int, center: Sequence[int] | None = None) -> "Window":
        center = tuple(center) if center is not None else (0,) * dim
        return cls(tuple(c - radius for c in center), tuple(c + radius for c in center))

    def contains(self, p: Sequence[int]) -> bool:
        return all(a <= x <= b for a, x, b in zip(self.lo, p, self.hi))

    def grow(self, margin: int) -> "Window":
        return Window(tuple(a - margin for a in self.lo), tuple(b + margin for b in self.hi))

    def slack(self, p: Sequence[int]) -> int:
        return min(min(x - a, b - x) for a, x, b in zip(self.lo, p, self.hi))

    def points(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))

    def to_json(self) -> dict:
        return {"lo": list(self.lo), "hi": list(self.hi)}


# --------------------------------------------------------------------------
# region predicates over (m, n, k) := (z21, z22, z11)

_VARS = ("m", "n", "k", "t")
_TOKEN = re.compile(r"\s*([+-]?)\s*(\d*)\s*([mnkt]?)")
_CMP = re.compile(r"(<=|<)")


def _parse_linear(expr: str) -> tuple[int, ...]:
    """'-t', '0', 'm', 'n+1' -> coefficients over (m, n, k, t, 1)."""
    coeffs = [0] * 5
    expr = expr.replace(" ", "")
    if not expr:
        raise ValueError("empty expression")
    pos = 0
    while pos < len(expr):
        mt = _TOKEN.match(expr, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse {expr!r}")
        sign, num, var = mt.groups()
        if not num and not var:
            raise ValueError(f"cannot parse {expr!r}")
        c = int(num) if num else 1
        c = -c if sign == "-" else c
        coeffs[_VARS.index(var) if var else 4] += c
        pos = mt.end()
    return tuple(coeffs)


@dataclass(frozen=True)
class Inequality:
    """sum(coeffs * (m, n, k, t, 1)) < 0 (strict) or <= 0."""

    coeffs: tuple[int, ...]
    strict: bool

    def holds(self, m: int, n: int, k: int, t: int) -> bool:
        a, b, c, d, e = self.coeffs
        val = a * m + b * n + c * k + d * t + e
        return val < 0 if self.strict else val <= 0


def parse_system(text: str) -> tuple[Inequality, ...]:
    """'-t<n<=0, m<=0, k<=m' -> conjunction of inequalities."""
    out = []
    for chain in text.split(","):
        parts = _CMP.split(chain.strip())
        exprs, ops = parts[0::2], parts[1::2]
        if not ops:
            raise ValueError(f"no comparison in {chain!r}")
        for left, op, right in zip(exprs, ops, exprs[1:]):
            lc, rc = _parse_linear(left), _parse_linear(right)
            out.append(Inequality(tuple(x - y for x, y in zip(lc, rc)), op == "<"))
    return tuple(out)


@dataclass(frozen=True)
class RegionPredicate:
    """Union of systems of integer inequalities in (m, n, k), parametrized by t."""

    systems: tuple[tuple[Inequality, ...], ...]
    text: tuple[str, ...] = ()

    @classmethod
    def parse(cls, blocks: Iterable[str]) -> "RegionPredicate":
        blocks = tuple(blocks)
        return cls(tuple(parse_system(b) for b in blocks), blocks)

    def contains(self, m: int, n: int, k: int, t: int = 0) -> bool:
        return any(all(q.holds(m, n, k, t) for q in sys) for sys in self.systems)

    def blocks_containing(self, m: int, n: int, k: int, t: int = 0) -> list[int]:
        return [i for i, sys in enumerate(self.systems) if all(q.holds(m, n, k, t) for q in sys)]


# --------------------------------------------------------------------------
# basis predicates


class Predicate:
    name = "predicate"

    def contains(self, spec: "ModuleSpec", p: tuple[int, ...]) -> bool:
        raise NotImplementedError

    def to_json(self) -> dict:
        return {"kind": self.name}


class FullLattice(Predicate):
    name = "full"

    def contains(self, spec, p):
        return True


@dataclass
class OmegaClass(Predicate):
    reference: tuple[int, ...]
    name = "omega-class"

    def contains(self, spec, p):
        if spec.module.regime != "generic":
            raise ValueError("Omega classes are only used for generic modules")
        return omega_plus(shift(spec.seed, p)) == spec.omega_ref(self.reference)

    def to_json(self):
        return {"kind": self.name, "reference": list(self.reference)}


class Verma(Predicate):
    """Omega^+ equal to {(r, s, s)}, the Verma basis of a Verma-type seed."""

    name = "verma"

    def contains(self, spec, p):
        target = frozenset(
            (r, s, s) for r in range(2, spec.n + 1) for s in range(1, r)
        )
        return omega_plus(shift(spec.seed, p)) == target


@dataclass
class Region(Predicate):
    region: RegionPredicate
    t: int
    name = "region"

    def contains(self, spec, p):
        k, m, n = p
        return self.region.contains(m, n, k, self.t)

    def to_json(self):
        return {"kind": self.name, "blocks": list(self.region.text), "t": self.t}


@dataclass
class Induced(Predicate):
    """w_rs - w_{r-1,s} in Z_{>=0} for sub_rank < r <= n and 1 <= s < r."""

    sub_rank: int
    name = "induced"

    def contains(self, spec, p):
        rows = spec.module.rows(p)
        for r in range(spec.sub_rank_start(self.sub_rank), spec.n + 1):
            for s in range(1, r):
                if not is_nonneg_integer(rows[r - 1][s - 1] - rows[r - 2][s - 1]):
                    return False
        return True

    def to_json(self):
        return {"kind": self.name, "sub_rank": self.sub_rank}


# --------------------------------------------------------------------------
# module specs


@lru_cache(maxsize=None)
def shared_module(seed: Tableau, regime: str | None = None, relabel: tuple | None = None) -> GTModule:
    """One ambient module (and action cache) per seed, shared by all specs on it."""
    return GTModule(seed, regime=regime, relabel=relabel)


@dataclass
class ModuleSpec:
    module: GTModule
    predicate: Predicate = field(default_factory=FullLattice)
    label: str = ""
    # singular lattice layout: "tab" puts plain tableaux at m <= n, "canonical" at m >= n
    convention: str = "tab"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self._omega_cache: dict = {}
        if self.convention not in ("tab", "canonical"):
            raise ValueError("convention must be 'tab' or 'canonical'")

    @property
    def seed(self) -> Tableau:
        return self.module.seed

    @property
    def n(self) -> int:
        return self.module.n

    @property
    def dim(self) -> int:
        return self.module.dim

    def omega_ref(self, ref):
        if ref not in self._omega_cache:
            self._omega_cache[ref] = omega_plus(shift(self.seed, ref))
        return self._omega_cache[ref]

    def sub_rank_start(self, sub_rank: int) -> int:
        return sub_rank + 1

    # lattice point <-> basis element
    def basis_of(self, p: tuple[int, ...]) -> Basis:
        if self.module.regime == "generic":
            return Basis(tuple(p))
        k, m, n = p
        if self.convention == "tab":
            return singular.from_tab(m, n, k)
        return singular.from_canonical(m, n, k)

    def point_of(self, b: Basis) -> tuple[int, ...]:
        if self.module.regime == "generic":
            return b.z
        if self.convention == "tab":
            m, n, k = singular.tab_coords(b)
        else:
            m, n, k = singular.canonical_coords(b)
        return (k, m, n)

    def contains(self, p: tuple[int, ...]) -> bool:
        return self.predicate.contains(self, p)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "seed": self.seed.to_json(),
            "regime": self.module.regime,
            "relabel": list(self.module.relabel),
            "predicate": self.predicate.to_json(),
            "convention": self.convention,
            **({"meta": self.meta} if self.meta else {}),
        }


def enumerate_points(spec: ModuleSpec, w: Window) -> list[tuple[int, ...]]:
    return [p for p in w.points() if spec.contains(p)]


def enumerate_basis(spec: ModuleSpec, w: Window) -> list[Basis]:
    return [spec.basis_of(p) for p in enumerate_points(spec, w)]


# --------------------------------------------------------------------------
# closure


def simple_generators(n: int) -> list[tuple[int, int]]:
    return [(k, k + 1) for k in range(1, n)] + [(k + 1, k) for k in range(1, n)]


@dataclass
class ClosureReport:
    members: int
    escapes: int
    censored: int
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "members": self.members,
            "escapes": self.escapes,
            "censored": self.censored,
            "violations": self.violations[:20],
            "violation_count": len(self.violations),
        }


def verify_closure(spec: ModuleSpec, w: Window) -> ClosureReport:
    """Check that the basis in the window spans a subquotient.

    Edges are nonzero coefficients of simple generators.  Targets outside the
    basis but inside the window ("escapes") must span part of a submodule, so
    no path starting at an escape may come back into the basis.  Targets that
    leave the window are censored.
    """
    module = spec.module
    gens = simple_generators(spec.n)
    members = set(enumerate_points(spec, w))

    def neighbours(p):
        b = spec.basis_of(p)
        for g in gens:
            for tb in module.act(*g, b):
                yield g, spec.point_of(tb)

    escapes: dict = {}
    censored = 0
    for p in sorted(members):
        for g, q in neighbours(p):
            if q in members:
                continue
            if not w.contains(q):
                censored += 1
            elif q not in escapes:
                escapes[q] = (p, g)
    violations = []
    seen = set(escapes)
    queue = deque(escapes)
    parent: dict = {}
    while queue:
        p = queue.popleft()
        for g, q in neighbours(p):
            if not w.contains(q) or q in seen and q not in members:
                continue
            if q in members:
                root = p
                while root in parent:
                    root = parent[root]
                violations.append(
                    {"from": list(escapes[root][0]), "escape": list(root), "back_into": list(q),
                     "via": list(g)}
                )
                continue
            seen.add(q)
            parent[q] = p
            queue.append(q)
    return ClosureReport(len(members), len(escapes), censored, violations)


# --------------------------------------------------------------------------
# relations


def all_pairs(n: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return [(a, c) for a in gens for c in gens]


@dataclass
class RelationReport:
    probes: int
    pairs: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"pass": self.passed, "probes": self.probes, "pairs": self.pairs,
                "failures": self.failures[:20]}


def relation_defect(module: GTModule, a, c, b: Basis) -> Vector:
    v = {b: ONE}
    lhs = vsub(module.apply(*a, module.apply(*c, v)), module.apply(*c, module.apply(*a, v)))
    return vsub(lhs, module.apply_ue(lie_bracket(a, c), v))


def verify_relations(
    spec: ModuleSpec,
    w: Window,
    pairs: str | Sequence = "all",
    probes: int | None = None,
    seed: int = 0,
    sample_pairs: int = 40,
) -> RelationReport:
    """[E_ab, E_cd] - (delta_bc E_ad - delta_da E_cb) must kill each probed basis element.

    The check runs in the ambient module, which is stronger than checking the
    subquotient.  ``probes`` samples that many basis elements of the window.
    """
    rng = random.Random(seed)
    points = enumerate_points(spec, w)
    if probes is not None and probes < len(points):
        points = rng.sample(points, probes)
    if pairs == "all":
        plist = all_pairs(spec.n)
    elif pairs == "sample":
        full = all_pairs(spec.n)
        plist = rng.sample(full, min(sample_pairs, len(full)))
    else:
        plist = list(pairs)
    failures = []
    for p in points:
        b = spec.basis_of(p)
        for a, c in plist:
            d = relation_defect(spec.module, a, c, b)
            if d:
                failures.append({"point": list(p), "pair": [list(a), list(c)], "terms": len(d)})
    return RelationReport(len(points), len(plist), failures)


# --------------------------------------------------------------------------
# weight censuses


def multiplicity_census(spec: ModuleSpec, w: Window) -> Counter:
    return Counter(spec.module.weight(spec.basis_of(p)) for p in enumerate_points(spec, w))


def interior_census(spec: ModuleSpec, w: Window, margin: int = 2) -> dict:
    """Weights of the window whose counts do not change when the window grows by ``margin``."""
    small = multiplicity_census(spec, w)
    big = multiplicity_census(spec, w.grow(margin))
    return {wt: c for wt, c in small.items() if big[wt] == c}


def census_to_json(census: dict) -> dict:
    return {",".join(fmt(x) for x in wt): c for wt, c in sorted(census.items())}


def sl_weight(gl_weight: Sequence[Rational]) -> tuple[Rational, ...]:
    return tuple(a - b for a, b in zip(gl_weight, gl_weight[1:]))
