"""Tableau realizations of sl_n-modules parabolically induced from sl_2 or sl_3.

The inner module sits on the upper-left corner chain.  For sl_2 the seed is
v_ij = v_j (i >= 2), v_11 = u_11; for sl_3 it is v_ij = v_j (i >= 3) and the
inner rows 1, 2 come from u.  Basis: w_rs - w_{r-1,s} in Z_{>=0} for the rows
above the inner block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .admissibility import AdmissibleLevel, is_admissible_level, restricted_level, sl_to_gl_weight
from .classification import ParameterClash
from .modules import Induced, ModuleSpec, shared_module
from .scalars import Q, Rational, fmt, is_integer
from .tableaux import Tableau, is_critical, is_generic, make_tableau


class ConstraintViolation(ValueError):
    pass


@dataclass
class InducedSpec:
    n: int
    sub_rank: int
    inner: tuple  # sl_2: (u21, u22, u11); sl_3: (u31, u32, u33, u21, u22, u11)
    outer: tuple  # v_{sub_rank+1}, ..., v_n
    seed: Tableau
    spec: ModuleSpec
    data: dict = field(default_factory=dict)

    @property
    def top(self) -> tuple[Rational, ...]:
        return self.seed.top

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sub_rank": self.sub_rank,
            "inner": [fmt(x) for x in self.inner],
            "outer": [fmt(x) for x in self.outer],
            "seed": self.seed.to_json(),
            **self.data,
        }


def _inner_top(sub_rank: int, inner: Sequence[Rational]) -> tuple:
    return tuple(inner[:2]) if sub_rank == 2 else tuple(inner[:3])


def induced_seed(n: int, sub_rank: int, inner: Sequence, outer: Sequence) -> Tableau:
    inner = tuple(Q(x) for x in inner)
    outer = tuple(Q(x) for x in outer)
    if sub_rank not in (2, 3):
        raise ValueError("sub_rank must be 2 or 3")
    if len(inner) != (3 if sub_rank == 2 else 6):
        raise ValueError("inner seed has the wrong number of entries")
    if len(outer) != n - sub_rank:
        raise ValueError(f"need {n - sub_rank} outer parameters")
    v = _inner_top(sub_rank, inner) + outer
    if sub_rank == 2:
        low = [[inner[2]]]
    else:
        u31, u32, u33, u21, u22, u11 = inner
        low = [[u11], [u21, u22]]
    rows = low + [list(v[:i]) for i in range(len(low) + 1, n + 1)]
    return make_tableau(n, rows)


def build_induced(sub_rank: int, inner: Sequence, outer: Sequence, n: int | None = None) -> InducedSpec:
    inner = tuple(Q(x) for x in inner)
    outer = tuple(Q(x) for x in outer)
    n = n if n is not None else sub_rank + len(outer)
    v = _inner_top(sub_rank, inner) + outer
    for (i, a), (j, b) in itertools.combinations(enumerate(v, start=1), 2):
        if is_integer(a - b):
            raise ParameterClash(f"v{i} - v{j} = {fmt(a - b)} is an integer")
    seed = induced_seed(n, sub_rank, inner, outer)
    if is_generic(seed):
        regime = "generic"
    elif n == 3 and is_critical(seed):
        regime = "singular"
    else:
        raise ParameterClash("the assembled seed is neither generic nor a critical sl3 seed")
    module = shared_module(seed, regime)
    spec = ModuleSpec(module, Induced(sub_rank), label=f"induced-sl{sub_rank}")
    return InducedSpec(n, sub_rank, inner, outer, seed, spec)


def simplicity_flags(ispec: InducedSpec) -> dict:
    """Integral pairs that obstruct simplicity of the induced subquotient."""
    u = ispec.inner
    if ispec.sub_rank == 2:
        rows = [[u[2]], [u[0], u[1]]]
    else:
        rows = [[u[5]], [u[3], u[4]], [u[0], u[1], u[2]]]
    witnesses = [
        (r, s, t)
        for r in range(2, len(rows) + 1)
        for s in range(1, r + 1)
        for t in range(1, r)
        if is_integer(rows[r - 1][s - 1] - rows[r - 2][t - 1])
    ]
    return {"simple": not witnesses, "witnesses": [list(w) for w in witnesses]}


_FREE_STEPS = (Q(1, 7), Q(2, 11), Q(3, 13), Q(4, 17), Q(5, 19), Q(6, 23), Q(7, 29))


def _free_value(base: Rational, avoid: Sequence[Rational]) -> Rational:
    for step in _FREE_STEPS:
        cand = base + step
        if all(not is_integer(cand - x) for x in avoid):
            return cand
    raise RuntimeError("no free value found")  # pragma: no cover


def admissible_induced_parameters(
    level: AdmissibleLevel,
    sub_rank: int,
    lambdas: Sequence[int],
    mus: Sequence[int],
) -> InducedSpec:
    n, p, q = level.n, level.p, level.q
    lambdas, mus = list(lambdas), list(mus)
    if len(lambdas) != n - 1 or len(mus) != n - 1:
        raise ConstraintViolation(f"need {n - 1} lambdas and {n - 1} mus")
    if min(lambdas + mus) < 0:
        raise ConstraintViolation("lambdas and mus must be nonnegative")
    if p < n or q < n:
        raise ConstraintViolation(f"need p, q >= n (p={p}, q={q}, n={n})")
    if sum(lambdas) > p - n:
        raise ConstraintViolation(f"sum of lambdas {sum(lambdas)} > p - n = {p - n}")
    if sum(mus) > q - n:
        raise ConstraintViolation(f"sum of mus {sum(mus)} > q - n = {q - n}")
    s = level.shifted
    weight = tuple(Q(l) - s * (m + 1) for l, m in zip(lambdas, mus))
    gl = sl_to_gl_weight(weight)
    v = tuple(a - i for i, a in enumerate(gl))
    if sub_rank == 2:
        u11 = _free_value(v[0], v[:2])
        inner = (v[0], v[1], u11)
    else:
        u21 = _free_value(v[0], v[:3])
        u22 = _free_value(u21, v[:3] + (u21,))
        u11 = _free_value(u22, (u21, u22))
        inner = (v[0], v[1], v[2], u21, u22, u11)
    ispec = build_induced(sub_rank, inner, v[sub_rank:], n)
    k_sub = restricted_level(level, sub_rank)
    inner_level = is_admissible_level(sub_rank, k_sub)
    ispec.data = {
        "level": level.to_json(),
        "weight": [fmt(x) for x in weight],
        "inner_weight": [fmt(x) for x in weight[: sub_rank - 1]],
        "k_sub": fmt(k_sub),
        "inner_admissible": inner_level is not None,
    }
    return ispec
