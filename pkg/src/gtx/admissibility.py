"""Admissible levels and weight combinatorics for sl_n.

sl_n weights are tuples of n-1 rationals in the fundamental-weight basis
(so rho is all ones).  For the dot action they are converted to centered
epsilon-coordinates, on which the Weyl group S_n acts by permutations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .scalars import Q, Rational, RationalLike, fmt, is_integer

SlWeight = tuple  # tuple[Rational, ...] of length n-1


class OrbitEmpty(ValueError):
    pass


@dataclass(frozen=True)
class AdmissibleLevel:
    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.p <= 0 or self.q <= 0 or gcd(self.p, self.q) != 1:
            raise ValueError("need coprime positive p, q")
        if self.p < self.n:
            raise ValueError(f"p={self.p} < n={self.n}: level is not admissible")

    @property
    def k(self) -> Rational:
        return Q(self.p, self.q) - self.n

    @property
    def shifted(self) -> Rational:
        """k + n = p/q."""
        return Q(self.p, self.q)

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p, "q": self.q, "k": fmt(self.k)}


def is_admissible_level(n: int, k: RationalLike) -> AdmissibleLevel | None:
    if n < 2:
        raise ValueError("need n >= 2")
    s = Q(k) + n
    p, q = int(s.numerator), int(s.denominator)
    if p < n:
        return None
    return AdmissibleLevel(n, p, q)


def level_from_pq(n: int, p: int, q: int) -> AdmissibleLevel:
    return AdmissibleLevel(n, p, q)


def orbit_for_denominator(n: int, q: int) -> tuple[int, ...]:
    """Dense orbit among nilpotents with Jordan blocks of size <= q: (q, ..., q, r)."""
    if q < 1:
        raise ValueError("need q >= 1")
    if q >= n:
        return (n,)
    parts = [q] * (n // q)
    if n % q:
        parts.append(n % q)
    return tuple(parts)


def orbit_name(n: int, partition: Sequence[int]) -> str:
    partition = tuple(partition)
    if partition == (n,):
        return "principal"
    if partition == (1,) * n:
        return "zero"
    if partition == (2,) + (1,) * (n - 2):
        return "minimal"
    return "partition " + ",".join(map(str, partition))


# --------------------------------------------------------------------------
# weights


def eps_coords(lam: Sequence[Rational]) -> tuple[Rational, ...]:
    """Centered epsilon-coordinates: e_i = sum_{k>=i} lam_k, e_n = 0, then subtract the mean."""
    n = len(lam) + 1
    e = [sum(lam[i:], Q(0)) for i in range(n - 1)] + [Q(0)]
    mean = sum(e, Q(0)) / n
    return tuple(x - mean for x in e)


def rho(n: int) -> tuple[Rational, ...]:
    return tuple(Q(1) for _ in range(n - 1))


def _plus(a, b):
    return tuple(x + y for x, y in zip(a, b))


def dot_equivalent(lam: Sequence, mu: Sequence) -> tuple[int, ...] | None:
    """Some w in S_n (0-based one-line notation) with mu = w(lam + rho) - rho, or None."""
    lam, mu = tuple(Q(x) for x in lam), tuple(Q(x) for x in mu)
    if len(lam) != len(mu):
        raise ValueError("weights of different rank")
    n = len(lam) + 1
    a = eps_coords(_plus(lam, rho(n)))
    b = eps_coords(_plus(mu, rho(n)))
    if sorted(a) != sorted(b):
        return None
    for w in itertools.permutations(range(n)):
        if all(b[i] == a[w[i]] for i in range(n)):
            return w
    return None


def pairing(lam: Sequence[Rational], i: int, j: int) -> Rational:
    """<lam, (e_i - e_j)^vee> for i < j (1-based)."""
    return sum(lam[i - 1 : j - 1], Q(0))


def integral_roots(lam: Sequence) -> frozenset[tuple[int, int]]:
    lam = tuple(Q(x) for x in lam)
    n = len(lam) + 1
    return frozenset(
        (i, j) for i in range(1, n) for j in range(i + 1, n + 1) if is_integer(pairing(lam, i, j))
    )


def var_dimension(lam: Sequence) -> int:
    n = len(lam) + 1
    return n * (n - 1) - 2 * len(integral_roots(lam))


def _boxes(count: int, total: int):
    """Nonnegative integer tuples of length ``count`` with sum <= total."""
    for t in itertools.product(range(total + 1), repeat=count):
        if sum(t) <= total:
            yield t


def _candidates(level: AdmissibleLevel, orbit: str) -> list[tuple[Rational, ...]]:
    n, p, q = level.n, level.p, level.q
    s = Q(p, q)
    if orbit == "zero":
        return [tuple(Q(x) for x in lam) for lam in _boxes(n - 1, p - n)]
    if orbit == "minimal":
        if q < 2:
            raise OrbitEmpty("the minimal family needs q >= 2")
        out = []
        for a in range(1, q):
            for lam in _boxes(n - 1, p - n):
                out.append((Q(lam[0]) - a * s,) + tuple(Q(x) for x in lam[1:]))
        return out
    if orbit == "principal":
        if q < n:
            raise OrbitEmpty(f"the principal family needs q >= n, got q={q}")
        out = []
        for lam in _boxes(n - 1, p - n):
            for mu in _boxes(n - 1, q - n):
                out.append(tuple(Q(l) - s * (m + 1) for l, m in zip(lam, mu)))
        return out
    raise ValueError(f"unknown orbit {orbit!r}")


def enumerate_pr_with_collisions(level: AdmissibleLevel, orbit: str) -> tuple[list, int]:
    reps: list = []
    collisions = 0
    for lam in _candidates(level, orbit):
        if any(dot_equivalent(lam, r) is not None for r in reps):
            collisions += 1
        else:
            reps.append(lam)
    return reps, collisions


def enumerate_pr(level: AdmissibleLevel, orbit: str) -> list[tuple[Rational, ...]]:
    return enumerate_pr_with_collisions(level, orbit)[0]


def sl_to_gl_weight(lam: Sequence) -> tuple[Rational, ...]:
    return eps_coords(tuple(Q(x) for x in lam))


def gl_to_sl_weight(a: Sequence) -> tuple[Rational, ...]:
    return tuple(x - y for x, y in zip(a, a[1:]))


def gl_to_top_row(a: Sequence) -> tuple[Rational, ...]:
    return tuple(Q(x) - i for i, x in enumerate(a))


def restricted_level(level: AdmissibleLevel, n_sub: int) -> Rational:
    if not 2 <= n_sub < level.n:
        raise ValueError("need 2 <= n_sub < n")
    return level.shifted - n_sub


def weight_report(lam: Sequence, orbit_label: str) -> dict:
    gl = sl_to_gl_weight(lam)
    return {
        "weight": [fmt(x) for x in lam],
        "orbit": orbit_label,
        "var_dimension": var_dimension(lam),
        "gl_weight": [fmt(x) for x in gl],
        "top_row": [fmt(x) for x in gl_to_top_row(gl)],
    }
