"""Twisted localization with respect to a root vector f = E_ij (i > j).

Theta_a(u) = sum_i binom(a, i) (ad f)^i(u) f^{-i} is kept as a dict
{(word, e): coeff} meaning word * f^e.  For integer a it equals f^a u f^{-a}.

Tableau modules only invert f directly when f acts by a single term.  On the
standard chain that is E_21 (coefficient 1); for the other roots the module is
realized along a Weyl-conjugated chain on which f becomes the tableau E_21.

Elements of twisted modules are ``TwistedVector(s, vec)``, read as the formal
f^s . vec.  They are normalized to 0 <= s < 1 by absorbing the integer part
of s into vec.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from .gt_action import (
    Basis,
    GTModule,
    UEElement,
    Vector,
    Word,
    casimir_generator,
    gen,
    lie_bracket,
    ue_add,
    ue_bracket,
    vadd,
    vscale,
    vsub,
)
from .modules import Window
from .scalars import ONE, ZERO, Q, Rational, RationalLike, binom_rational, fmt
from .tableaux import Tableau

LocalizedElement = Dict[Tuple[Word, int], Rational]
Root = Tuple[int, int]


class NotInvertible(ArithmeticError):
    pass


def parse_root(text: str | Sequence[int]) -> Root:
    if isinstance(text, str):
        text = text.strip().replace(",", "")
        if len(text) != 2:
            raise ValueError("roots are written as two digits, e.g. 21")
        return (int(text[0]), int(text[1]))
    i, j = text
    return (int(i), int(j))


def chain_for_root(alpha: Root, n: int = 3) -> tuple[int, ...]:
    """Relabeling pi with pi(i) = 2, pi(j) = 1 so that E_ij acts as the tableau E_21."""
    i, j = alpha
    if not (1 <= j < i <= n):
        raise ValueError(f"need a negative root E_ij with i > j, got {alpha}")
    pi = [0] * n
    pi[i - 1], pi[j - 1] = 2, 1
    rest = iter(range(3, n + 1))
    for a in range(n):
        if pi[a] == 0:
            pi[a] = next(rest)
    return tuple(pi)


def localization_module(seed: Tableau, alpha: Root) -> GTModule:
    return GTModule(seed, relabel=chain_for_root(alpha, seed.n))


# --------------------------------------------------------------------------
# the algebra side


def ad_power(f: Root, u: UEElement, i: int) -> UEElement:
    if i < 0:
        raise ValueError("ad power must be nonnegative")
    out = dict(u)
    for _ in range(i):
        if not out:
            break
        if all(len(w) == 1 for w in out):
            nxt: UEElement = {}
            for (g,), c in out.items():
                nxt = ue_add(nxt, lie_bracket(f, g), c)
            out = nxt
        else:
            out = ue_bracket(gen(*f), out)
    return out


def theta(u: UEElement, f: Root, a: RationalLike, max_terms: int = 16) -> LocalizedElement:
    a = Q(a)
    out: LocalizedElement = {}
    term = dict(u)
    for i in range(max_terms):
        if not term:
            return out
        coef = binom_rational(a, i)
        if coef:
            for w, c in term.items():
                key = (w, -i)
                x = out.get(key, ZERO) + coef * c
                if x:
                    out[key] = x
                else:
                    out.pop(key, None)
        term = ad_power(f, term, 1)
    raise RuntimeError("ad f did not become nilpotent on the input")


def localized_to_json(x: LocalizedElement) -> list:
    return [
        {"word": [f"E{i}{j}" for i, j in w], "f_power": e, "coeff": fmt(c)}
        for (w, e), c in sorted(x.items())
    ]


# --------------------------------------------------------------------------
# the module side


def _inv_cache(module: GTModule) -> dict:
    cache = getattr(module, "_inverse_cache", None)
    if cache is None:
        cache = module._inverse_cache = {}
    return cache


def inverse_f_action(f: Root, b: Basis, module: GTModule) -> Vector:
    """The unique preimage of b under f, when f acts by single nonzero terms."""
    cache = _inv_cache(module)
    key = (f, b)
    if key in cache:
        return cache[key]
    image = module.act(*f, b)
    if len(image) != 1:
        raise NotInvertible(f"E{f[0]}{f[1]} is not monomial at {b.z}: {len(image)} terms")
    (target,) = image
    delta = tuple(x - y for x, y in zip(target.z, b.z))
    pre = Basis(tuple(x - d for x, d in zip(b.z, delta)), b.deriv)
    back = module.act(*f, pre)
    if set(back) != {b}:
        raise NotInvertible(f"E{f[0]}{f[1]} does not map {pre.z} onto {b.z}")
    coef = back[b]
    if not coef:  # pragma: no cover - zero coefficients are never stored
        raise NotInvertible(f"vanishing coefficient at {pre.z}")
    out = {pre: ONE / coef}
    cache[key] = out
    return out


def f_power(f: Root, e: int, vec: Vector, module: GTModule) -> Vector:
    for _ in range(abs(e)):
        if not vec:
            break
        if e > 0:
            vec = module.apply(*f, vec)
        else:
            nxt: Vector = {}
            for b, c in vec.items():
                vadd(nxt, inverse_f_action(f, b, module), c)
            vec = nxt
    return vec


def apply_localized(x: LocalizedElement, f: Root, vec: Vector, module: GTModule) -> Vector:
    out: Vector = {}
    for (word, e), c in x.items():
        vadd(out, module.apply_word(word, f_power(f, e, vec, module)), c)
    return out


def twisted_action(u: UEElement, f: Root, a: RationalLike, vec: Vector, module: GTModule) -> Vector:
    """u acting on the twisted module: Theta_a(u) . vec."""
    return apply_localized(theta(u, f, a), f, vec, module)


def twisted_word_action(word: Word, f: Root, a: RationalLike, vec: Vector, module: GTModule) -> Vector:
    for g in reversed(word):
        if not vec:
            break
        vec = twisted_action(gen(*g), f, a, vec, module)
    return vec


@dataclass(frozen=True)
class TwistedVector:
    s: Rational
    vec: tuple  # sorted (Basis, coeff) pairs, so the value is hashable and comparable

    @classmethod
    def make(cls, s: RationalLike, vec: Vector, f: Root, module: GTModule) -> "TwistedVector":
        s = Q(s)
        whole = math.floor(s)
        vec = f_power(f, int(whole), vec, module)
        return cls(s - whole, tuple(sorted(vec.items())))

    def as_dict(self) -> Vector:
        return dict(self.vec)


def f_marker(a: RationalLike, tv: TwistedVector, f: Root, module: GTModule) -> TwistedVector:
    """f^a . (f^s . v) = f^{a+s} . v."""
    return TwistedVector.make(Q(a) + tv.s, tv.as_dict(), f, module)


def act_on_twisted(u: UEElement, tv: TwistedVector, f: Root, module: GTModule) -> TwistedVector:
    """u . (f^s . v) = f^s . (Theta_{-s}(u) . v)."""
    return TwistedVector.make(tv.s, twisted_action(u, f, -tv.s, tv.as_dict(), module), f, module)


# --------------------------------------------------------------------------
# checks


def _generators(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def verify_localization_lemma(
    alpha: Root,
    a: RationalLike,
    b: RationalLike,
    module: GTModule,
    w: Window,
    probes: int | None = None,
    seed: int = 0,
) -> dict:
    """Exact checks of the twisting identities on basis elements of the window.

    composition   f^a . (f^b . v) = f^{a+b} . v
    conjugation   f^a . (u . (f^{-a} . v)) = Theta_a(u) . v   for every generator u
    plus Theta_0 = id, preservation of all gl_n brackets by the twisted
    action, and invariance of the central character.
    """
    a, b = Q(a), Q(b)
    f = tuple(alpha)
    n = module.n
    points = list(w.points())
    if probes is not None and probes < len(points):
        points = random.Random(seed).sample(points, probes)
    gens = _generators(n)
    fails: dict = {k: [] for k in ("composition", "conjugation", "theta0", "brackets", "central")}
    base_char = module.central_character(Basis(points[0]))
    casimirs = [casimir_generator(n, k) for k in range(1, n + 1)]
    for p in points:
        v0 = Basis(p)
        v = {v0: ONE}
        lhs = f_marker(a, TwistedVector.make(b, v, f, module), f, module)
        if lhs != TwistedVector.make(a + b, v, f, module):
            fails["composition"].append(list(p))
        for g in gens:
            u = gen(*g)
            inner = act_on_twisted(u, TwistedVector.make(-a, v, f, module), f, module)
            left = f_marker(a, inner, f, module)
            right = TwistedVector.make(0, twisted_action(u, f, a, v, module), f, module)
            if left != right:
                fails["conjugation"].append([list(p), list(g)])
            if vsub(twisted_action(u, f, 0, v, module), module.apply(*g, v)):
                fails["theta0"].append([list(p), list(g)])
        tw = {g: twisted_action(gen(*g), f, a, v, module) for g in gens}
        for g1 in gens:
            for g2 in gens:
                l1 = twisted_action(gen(*g1), f, a, tw[g2], module)
                l2 = twisted_action(gen(*g2), f, a, tw[g1], module)
                r = twisted_action(lie_bracket(g1, g2), f, a, v, module)
                if vsub(vsub(l1, l2), r):
                    fails["brackets"].append([list(p), list(g1), list(g2)])
        for k, cas in enumerate(casimirs):
            out: Vector = {}
            for word, c in cas.items():
                vadd(out, twisted_word_action(word, f, a, v, module), c)
            if vsub(out, vscale(v, base_char[k])):
                fails["central"].append([list(p), k + 1])
    checks = {k: not v for k, v in fails.items()}
    return {
        "alpha": list(alpha),
        "a": fmt(a),
        "b": fmt(b),
        "relabel": list(module.relabel),
        "probes": len(points),
        "checks": checks,
        "failures": {k: v[:10] for k, v in fails.items() if v},
        "central_character": [fmt(x) for x in base_char],
        "pass": all(checks.values()),
    }
