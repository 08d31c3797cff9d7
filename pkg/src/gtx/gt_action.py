"""Gelfand-Tsetlin action of gl_n on tableau modules.

A module is a seed tableau plus the integer lattice of shifts of its lower
rows.  Basis elements are ``Basis(z, deriv)``; vectors are plain dicts mapping
basis elements to nonzero rationals.  The simple generators act by the
classical formulas; every other E_ij is obtained by commutators of simple
ones, with the pivot fixed at j-1 (above the diagonal) or j+1 (below).
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, NamedTuple, Sequence, Tuple

from .scalars import ONE, ZERO, Q, Rational, fmt
from .tableaux import Tableau, is_critical, is_generic, shift_position

Word = Tuple[Tuple[int, int], ...]
UEElement = Dict[Word, Rational]


class Basis(NamedTuple):
    z: tuple
    deriv: bool = False

    def to_json(self) -> dict:
        return {"kind": "deriv" if self.deriv else "plain", "z": list(self.z)}

    @classmethod
    def from_json(cls, data: dict) -> "Basis":
        return cls(tuple(int(x) for x in data["z"]), data.get("kind", "plain") == "deriv")


Vector = Dict[Basis, Rational]


class DenominatorZero(ZeroDivisionError):
    pass


class NotEigenvector(ArithmeticError):
    pass


class RegimeError(ValueError):
    pass


# --------------------------------------------------------------------------
# vectors


def vadd(acc: Vector, vec: Vector, scale: Rational = ONE) -> Vector:
    for b, c in vec.items():
        x = acc.get(b, ZERO) + scale * c
        if x:
            acc[b] = x
        else:
            acc.pop(b, None)
    return acc


def vsub(a: Vector, b: Vector) -> Vector:
    return vadd(dict(a), b, -ONE)


def vscale(vec: Vector, c: Rational) -> Vector:
    if not c:
        return {}
    return {b: c * x for b, x in vec.items()}


def vector_to_json(vec: Vector) -> list:
    return [{"basis": b.to_json(), "coeff": fmt(c)} for b, c in sorted(vec.items())]


def vector_from_json(data: list) -> Vector:
    out: Vector = {}
    for item in data:
        vadd(out, {Basis.from_json(item["basis"]): Q(item["coeff"])})
    return out


# --------------------------------------------------------------------------
# the classical formulas, written over any ring whose elements support + - *


def _prod(factors: Iterable, one):
    out = one
    for f in factors:
        out = out * f
    return out


def raise_terms(rows, k: int, one=ONE):
    """E_{k,k+1}: yields (i, numerator, denominator) for target v + delta^{ki}."""
    rk, rk1 = rows[k - 1], rows[k]
    for i in range(k):
        num = -_prod((rk[i] - y for y in rk1), one)
        den = _prod((rk[i] - rk[j] for j in range(k) if j != i), one)
        yield i, num, den


def lower_terms(rows, k: int, one=ONE):
    """E_{k+1,k}: yields (i, numerator, denominator) for target v - delta^{ki}."""
    rk = rows[k - 1]
    rkm = rows[k - 2] if k >= 2 else ()
    for i in range(k):
        num = _prod((rk[i] - y for y in rkm), one)
        den = _prod((rk[i] - rk[j] for j in range(k) if j != i), one)
        yield i, num, den


def diag_value(rows, k: int):
    below = sum(rows[k - 2]) if k >= 2 else 0
    return (k - 1) + sum(rows[k - 1]) - below


def bump(z: tuple, k: int, i: int, step: int) -> tuple:
    pos = shift_position(k, i + 1)
    zz = list(z)
    zz[pos] += step
    return tuple(zz)


# --------------------------------------------------------------------------
# universal enveloping algebra words


def ue_add(a: UEElement, b: UEElement, scale: Rational = ONE) -> UEElement:
    out = dict(a)
    for w, c in b.items():
        x = out.get(w, ZERO) + scale * c
        if x:
            out[w] = x
        else:
            out.pop(w, None)
    return out


def ue_mul(a: UEElement, b: UEElement) -> UEElement:
    out: UEElement = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            out = ue_add(out, {wa + wb: ca * cb})
    return out


def ue_bracket(a: UEElement, b: UEElement) -> UEElement:
    return ue_add(ue_mul(a, b), ue_mul(b, a), -ONE)


def gen(i: int, j: int) -> UEElement:
    return {((i, j),): ONE}


def lie_bracket(a: tuple[int, int], b: tuple[int, int]) -> UEElement:
    """[E_ab, E_cd] = delta_bc E_ad - delta_da E_cb, as a linear element."""
    (i, j), (k, l) = a, b
    out: UEElement = {}
    if j == k:
        out = ue_add(out, gen(i, l))
    if l == i:
        out = ue_add(out, gen(k, j), -ONE)
    return out


def casimir_generator(m: int, k: int) -> UEElement:
    """c_{mk}: sum over (i1..ik) in {1..m}^k of E_{i1 i2} E_{i2 i3} ... E_{ik i1}."""
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    out: UEElement = {}
    for idx in itertools.product(range(1, m + 1), repeat=k):
        word = tuple((idx[s], idx[(s + 1) % k]) for s in range(k))
        out[word] = out.get(word, ZERO) + ONE
    return out


# --------------------------------------------------------------------------
# modules


class GTModule:
    """The module V(T(seed)) with the gl_n action, generic or 1-singular (n=3).

    ``relabel`` realizes the same module along a Weyl-conjugated chain:
    E_ab acts as the tableau operator of E_{pi(a) pi(b)}.
    """

    def __init__(
        self,
        seed: Tableau,
        regime: str | None = None,
        relabel: Sequence[int] | None = None,
        strict: bool = True,
    ):
        self.seed = seed
        self.n = seed.n
        if regime is None:
            if is_generic(seed):
                regime = "generic"
            elif seed.n == 3 and is_critical(seed):
                regime = "singular"
            elif strict:
                raise RegimeError("seed is neither generic nor a critical sl3 tableau")
            else:
                regime = "generic"
        if strict:
            if regime == "generic" and not is_generic(seed):
                raise RegimeError("generic regime needs a generic seed")
            if regime == "singular" and not (seed.n == 3 and is_critical(seed)):
                raise RegimeError("singular regime needs a critical n=3 seed")
        if regime not in ("generic", "singular"):
            raise RegimeError(f"unknown regime {regime!r}")
        self.regime = regime
        self.relabel = tuple(relabel) if relabel else tuple(range(1, self.n + 1))
        if sorted(self.relabel) != list(range(1, self.n + 1)):
            raise ValueError("relabel must be a permutation of 1..n")
        self.dim = self.n * (self.n - 1) // 2
        self.origin = Basis((0,) * self.dim)
        self._cache: dict = {}

    def __repr__(self):
        return f"GTModule(n={self.n}, regime={self.regime}, top={[fmt(x) for x in self.seed.top]})"

    # rows of seed + z, bottom-up
    def rows(self, z: Sequence[int]) -> list[list[Rational]]:
        out = []
        pos = 0
        for i, row in enumerate(self.seed.rows[: self.n - 1], start=1):
            out.append([x + z[pos + j] for j, x in enumerate(row)])
            pos += i
        out.append(list(self.seed.top))
        return out

    def tableau(self, b: Basis) -> Tableau:
        return Tableau(self.n, tuple(tuple(r) for r in self.rows(b.z)))

    # -- simple generators along the tableau chain
    def simple(self, which: str, k: int, b: Basis) -> Vector:
        if self.regime == "singular":
            from .singular import singular_apply

            return singular_apply(which, k, b, self.seed)
        if b.deriv:
            raise RegimeError("derivative tableaux only exist in the singular regime")
        rows = self.rows(b.z)
        if which == "diag":
            c = diag_value(rows, k)
            return {b: c} if c else {}
        terms = raise_terms(rows, k) if which == "raise" else lower_terms(rows, k)
        step = 1 if which == "raise" else -1
        out: Vector = {}
        for i, num, den in terms:
            if not num:
                continue
            if not den:
                raise DenominatorZero(f"zero row difference in row {k} at z={b.z}")
            out[Basis(bump(b.z, k, i, step))] = num / den
        return out

    def _chain(self, i: int, j: int, b: Basis) -> Vector:
        key = (i, j, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if i == j:
            out = self.simple("diag", i, b)
        elif j == i + 1:
            out = self.simple("raise", i, b)
        elif i == j + 1:
            out = self.simple("lower", j, b)
        else:
            p = j - 1 if i < j else j + 1
            one = {b: ONE}
            a1 = self._chain_vec(i, p, self._chain_vec(p, j, one))
            a2 = self._chain_vec(p, j, self._chain_vec(i, p, one))
            out = vsub(a1, a2)
        self._cache[key] = out
        return out

    def _chain_vec(self, i: int, j: int, vec: Vector) -> Vector:
        out: Vector = {}
        for b, c in vec.items():
            vadd(out, self._chain(i, j, b), c)
        return out

    # -- the module action
    def act(self, i: int, j: int, b: Basis) -> Vector:
        pi = self.relabel
        return self._chain(pi[i - 1], pi[j - 1], b)

    def apply(self, i: int, j: int, vec: Vector) -> Vector:
        out: Vector = {}
        for b, c in vec.items():
            vadd(out, self.act(i, j, b), c)
        return out

    def apply_word(self, word: Word, vec: Vector) -> Vector:
        for i, j in reversed(word):
            if not vec:
                break
            vec = self.apply(i, j, vec)
        return vec

    def apply_ue(self, u: UEElement, vec: Vector) -> Vector:
        out: Vector = {}
        for word, c in u.items():
            if c:
                vadd(out, self.apply_word(word, vec), c)
        return out

    def weight(self, b: Basis) -> tuple[Rational, ...]:
        rows = self.rows(b.z)
        gamma = [diag_value(rows, k) for k in range(1, self.n + 1)]
        return tuple(gamma[p - 1] for p in self.relabel)

    def central_character(self, probe: Basis | None = None) -> tuple[Rational, ...]:
        probe = probe or self.origin
        return tuple(
            eigenvalue(self, casimir_generator(self.n, k), probe) for k in range(1, self.n + 1)
        )


def eigenvalue(module: GTModule, u: UEElement, probe: Basis) -> Rational:
    out = module.apply_ue(u, {probe: ONE})
    extra = [b for b in out if b != probe]
    if extra:
        raise NotEigenvector(f"{len(extra)} off-diagonal terms at {probe}")
    return out.get(probe, ZERO)


# spec-level entry points


def apply_simple_generator(which: str, k: int, b: Basis, module: GTModule) -> Vector:
    return module.simple(which, k, b)


def apply_generator(i: int, j: int, vec: Vector, module: GTModule) -> Vector:
    return module.apply(i, j, vec)


def apply_ue_element(u: UEElement, vec: Vector, module: GTModule) -> Vector:
    return module.apply_ue(u, vec)


def weight_of(b: Basis, module: GTModule) -> tuple[Rational, ...]:
    return module.weight(b)


def central_character(module: GTModule, probe: Basis | None = None) -> tuple[Rational, ...]:
    return module.central_character(probe)
