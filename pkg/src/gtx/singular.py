"""The 1-singular sl_3 engine.

The seed v̄ has v21 = v22 = x̄.  Row-2 entries of a shifted tableau are
written x̄ + z21 + t and x̄ + z22 - t, so every coefficient of the generic
formulas becomes a rational function of the single variable t, and the
derivative operator at v̄ is half the t-derivative at t = 0.

Basis elements: plain T(v̄+z) with z21 >= z22 and derivative DT(v̄+z) with
z21 < z22.  T(v̄+w) = T(v̄+τw) and DT(v̄+w) = -DT(v̄+τw), where τ swaps z21 and
z22; DT of a τ-fixed shift is zero.  Shift vectors are in the usual order
(z11, z21, z22).
"""

from __future__ import annotations

from typing import NamedTuple

from .gt_action import Basis, Vector, bump, diag_value, lower_terms, raise_terms, vadd
from .scalars import (
    ONE,
    PoleAtPoint,
    Poly,
    RationalFunction1V,
    rf_derivative_at_zero,
    rf_eval,
)
from .tableaux import Tableau, is_critical


class ZeroElement(ValueError):
    """A derivative tableau with τ-fixed shift, which is zero."""


class NonRemovableSingularity(ArithmeticError):
    pass


class SymbolicTerm(NamedTuple):
    coeff: RationalFunction1V
    target: tuple


def tau(z: tuple) -> tuple:
    return (z[0], z[2], z[1])


def canonicalize(deriv: bool, z: tuple) -> tuple[Basis, int]:
    z = tuple(z)
    if not deriv:
        return (Basis(z), 1) if z[1] >= z[2] else (Basis(tau(z)), 1)
    if z[1] == z[2]:
        raise ZeroElement(f"derivative tableau at τ-fixed shift {z}")
    return (Basis(z, True), 1) if z[1] < z[2] else (Basis(tau(z), True), -1)


def tab_coords(b: Basis) -> tuple[int, int, int]:
    """(m, n, k) of the table representative: plain when m <= n, derivative when n < m.

    This is τ of the canonical sector; the map basis -> Z^3 is a bijection.
    """
    z11, z21, z22 = b.z
    return (z22, z21, z11)


def from_tab(m: int, n: int, k: int) -> Basis:
    return Basis((k, n, m), deriv=n < m)


def canonical_coords(b: Basis) -> tuple[int, int, int]:
    z11, z21, z22 = b.z
    return (z21, z22, z11)


def from_canonical(m: int, n: int, k: int) -> Basis:
    return Basis((k, m, n), deriv=m < n)


def _check_seed(seed: Tableau) -> None:
    if not (seed.n == 3 and is_critical(seed)):
        raise ValueError("the singular engine needs a critical n=3 seed")


def symbolic_rows(seed: Tableau, z: tuple) -> list[list[Poly]]:
    xbar = seed[2, 1]
    return [
        [Poly.const(seed[1, 1] + z[0])],
        [Poly.linear(xbar + z[1], 1), Poly.linear(xbar + z[2], -1)],
        [Poly.const(x) for x in seed.top],
    ]


def symbolic_generic_action(which: str, k: int, z: tuple, seed: Tableau) -> list[SymbolicTerm]:
    _check_seed(seed)
    rows = symbolic_rows(seed, z)
    if which == "diag":
        return [SymbolicTerm(RationalFunction1V(diag_value(rows, k)), tuple(z))]
    one = Poly.const(ONE)
    terms = raise_terms(rows, k, one) if which == "raise" else lower_terms(rows, k, one)
    step = 1 if which == "raise" else -1
    out = []
    for i, num, den in terms:
        if num.is_zero():
            continue
        out.append(SymbolicTerm(RationalFunction1V(num, den), bump(z, k, i, step)))
    return out


_TWO_T = RationalFunction1V(Poly.linear(0, 2))


def _emit(out: Vector, deriv_part, value_part, target: tuple) -> None:
    if deriv_part:
        b, s = canonicalize(False, target)
        vadd(out, {b: s * deriv_part})
    if value_part and target[1] != target[2]:
        b, s = canonicalize(True, target)
        vadd(out, {b: s * value_part})


def singular_apply(which: str, k: int, b: Basis, seed: Tableau) -> Vector:
    """Action of a simple generator on a canonical singular basis element."""
    z = b.z
    out: Vector = {}
    for term in symbolic_generic_action(which, k, z, seed):
        g = term.coeff * _TWO_T if not b.deriv else term.coeff
        try:
            d = rf_derivative_at_zero(g)
            v = rf_eval(g, 0)
        except PoleAtPoint as exc:
            raise NonRemovableSingularity(
                f"{which}({k}) at {'D' if b.deriv else ''}T(z={z}): {exc}"
            ) from None
        _emit(out, d, v, term.target)
    return out
