"""Explicit sl_3 families: seeds, regions and verification drivers.

Minimal-orbit families L1..L20 are parametrized by (p, q, lambda1, lambda2, a);
principal-orbit singular families S-L1..S-L10 by (p, q, lambda1, lambda2,
mu1, mu2).  Regions are integer inequality systems over (m, n, k) =
(z21, z22, z11); see ``modules.RegionPredicate``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .admissibility import AdmissibleLevel, OrbitEmpty, sl_to_gl_weight
from .gt_action import NotEigenvector
from .modules import (
    FullLattice,
    ModuleSpec,
    Region,
    RegionPredicate,
    Window,
    census_to_json,
    interior_census,
    multiplicity_census,
    shared_module,
    verify_closure,
    verify_relations,
)
from .scalars import Q, Rational, fmt, is_integer
from .tableaux import tableau_from_vector


class ParameterClash(ValueError):
    pass


@dataclass(frozen=True)
class FamilyDescriptor:
    fid: str
    seed: str
    regime: str
    params: tuple[str, ...]
    profile: str  # bounded | equal | unbounded | infinite
    kind: str  # highest-weight | sl2-induced | cuspidal
    blocks: tuple[str, ...]  # empty means the full lattice

    @property
    def region(self) -> RegionPredicate | None:
        return RegionPredicate.parse(self.blocks) if self.blocks else None


def _fam(fid, seed, regime, params, profile, kind, *blocks):
    return FamilyDescriptor(fid, seed, regime, tuple(params), profile, kind, tuple(blocks))


# seed recipes as (v31, v32, v33, v21, v22, v11)
MINIMAL_SEEDS = {
    "v": ("c", "x", "x-t", "c", "x", "c"),
    "v1": ("c", "x", "x-t", "c", "x", "z"),
    "v2": ("c", "x", "x-t", "y", "x", "z"),
    "v3": ("c", "x", "x-t", "z", "x", "z"),
    "u": ("c", "x", "x-t", "x", "c", "x"),
    "u1": ("c", "x", "x-t", "x", "y", "x"),
    "vbar": ("c", "x", "x-t", "x", "x", "x"),
    "vbar1": ("c", "x", "x-t", "x", "x", "z"),
}

PRINCIPAL_SEEDS = {
    "vbar": ("x", "y", "z", "x", "x", "x"),
    "vbar1": ("x", "y", "z", "x", "x", "a"),
    "vbar2": ("x", "y", "z", "a", "a", "a"),
    "vbar3": ("x", "y", "z", "a", "a", "c"),
}

G, S = "generic", "singular"
HW, IND, CUSP = "highest-weight", "sl2-induced", "cuspidal"

MINIMAL_FAMILIES = {
    f.fid: f
    for f in [
        _fam("L1", "v", G, [], "bounded", HW, "-t<n<=0, m<=0, k<=m"),
        _fam("L2", "v", G, [], "bounded", HW, "m<=0, -t<n<=0, m<k"),
        _fam("L3", "v", G, [], "bounded", HW, "0<m, -t<n<=0, k<=m"),
        _fam("L4", "v", G, [], "bounded", HW, "0<m, -t<n<=0, m<k"),
        _fam("L5", "v1", G, ["z"], "bounded", IND, "-t<n<=0, m<=0"),
        _fam("L6", "v1", G, ["z"], "bounded", IND, "-t<n<=0, 0<m"),
        _fam("L7", "v2", G, ["z", "y"], "equal", CUSP, "-t<n<=0"),
        _fam("L8", "v3", G, ["z"], "bounded", IND, "-t<n<=0, m<k"),
        _fam("L9", "v3", G, ["z"], "bounded", IND, "-t<n<=0, k<=m"),
        _fam("L10", "u", G, [], "bounded", HW, "-t<m<=0, n<=0, k<=m"),
        _fam("L11", "u", G, [], "bounded", HW, "-t<m<=0, n<=0, m<k"),
        _fam("L12", "u", G, [], "bounded", HW, "-t<m<=0, 0<n, k<=m"),
        _fam("L13", "u", G, [], "bounded", HW, "-t<m<=0, 0<n, m<k"),
        _fam("L14", "u1", G, ["y"], "bounded", IND, "-t<m<=0, k<=m"),
        _fam("L15", "u1", G, ["y"], "bounded", IND, "-t<m<=0, m<k"),
        _fam("L16", "vbar", S, [], "bounded", HW, "-t<n<=0, m<=-t, m<k<=n"),
        _fam("L17", "vbar", S, [], "bounded", HW, "-t<m<=0, 0<n, m<k<=n"),
        _fam(
            "L18", "vbar", S, [], "bounded", HW,
            "m<=n, -t<m<=0, 0<n, k<=m",
            "m<=n, -t<m<=0, n<=0, k<=n",
            "n<m, -t<m<=0, k<=n",
        ),
        _fam(
            "L19", "vbar", S, [], "bounded", HW,
            "m<=n, -t<m<=0, n<k",
            "n<m, -t<m<=0, n<=-t, m<k",
            "n<m, -t<m<=0, -t<n<=0, n<k",
        ),
        _fam("L20", "vbar1", S, ["z"], "equal", CUSP, "m<=n, -t<m<=0", "n<m, -t<n<=0"),
    ]
}

PRINCIPAL_FAMILIES = {
    f.fid: f
    for f in [
        _fam("S-L1", "vbar", S, [], "unbounded", IND, "m<=0, 0<n, k<=m", "m<=0, n<=0, k<=n"),
        _fam("S-L2", "vbar", S, [], "unbounded", IND, "0<m, 0<n, n<k", "0<m, n<=0, m<k"),
        _fam("S-L3", "vbar", S, [], "unbounded", IND, "m<=0, n<k"),
        _fam("S-L4", "vbar", S, [], "unbounded", IND, "0<m, k<=n"),
        _fam("S-L5", "vbar", S, [], "infinite", CUSP, "m<=0<n, m<k<=n"),
        _fam("S-L6", "vbar1", S, ["a"], "infinite", CUSP, "m<=n, m<=0", "n<m, m<=0"),
        _fam("S-L7", "vbar1", S, ["a"], "infinite", CUSP, "m<=n, 0<m", "n<m, 0<m"),
        _fam("S-L8", "vbar2", S, ["a"], "infinite", CUSP, "m<=n, k<=n", "n<m, k<=n"),
        _fam("S-L9", "vbar2", S, ["a"], "infinite", CUSP, "m<=n, n<k", "n<m, n<k"),
        _fam("S-L10", "vbar3", S, ["a", "c"], "infinite", CUSP),
    ]
}

ALL_FAMILIES = {**MINIMAL_FAMILIES, **PRINCIPAL_FAMILIES}

PARAM_ORDER = ("z", "y", "a", "c")
_PRIMES = (7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# which differences must be non-integral for each free parameter
MINIMAL_CONSTRAINTS = {"z": ("c", "x"), "y": ("c", "x", "z")}
PRINCIPAL_CONSTRAINTS = {"a": ("x", "y", "z"), "c": ("a",)}


def choose_free_parameters(constants: dict, needed: Iterable[str], base: Rational | None = None) -> dict:
    """Deterministic rational choices base + j/p_j avoiding integral differences.

    Each chosen parameter must differ non-integrally from every constant and
    every previously chosen parameter.
    """
    needed = [p for p in PARAM_ORDER if p in set(needed)]
    base = Q(constants["x"]) if base is None else base
    chosen: dict = {}
    for name in needed:
        avoid = list(constants.values()) + list(chosen.values())
        for j, prime in enumerate(_PRIMES, start=1):
            cand = base + Q(j, prime)
            if all(not is_integer(cand - Q(v)) for v in avoid):
                chosen[name] = cand
                break
        else:  # pragma: no cover - the candidate list is far longer than needed
            raise RuntimeError("no free parameter candidate found")
    return chosen


def minimal_constants(p: int, q: int, lam1: int, lam2: int, a: int) -> dict:
    level = AdmissibleLevel(3, p, q)
    if not 1 <= a <= q - 1:
        raise OrbitEmpty(f"need 1 <= a <= q-1, got a={a}, q={q}")
    if lam1 < 0 or lam2 < 0 or lam1 + lam2 > p - 3:
        raise OrbitEmpty("need lambda_i >= 0 and lambda1 + lambda2 <= p - 3")
    s = a * level.shifted
    c = (lam2 + 2 * lam1 - 2 * s) / 3
    x = (lam2 - lam1 + s) / 3 - 1
    return {"c": c, "x": x, "t": lam2 + 1}


def principal_constants(p: int, q: int, lam1: int, lam2: int, mu1: int, mu2: int) -> dict:
    level = AdmissibleLevel(3, p, q)
    if q < 3:
        raise OrbitEmpty("the principal orbit needs q >= 3")
    if min(lam1, lam2, mu1, mu2) < 0 or lam1 + lam2 > p - 3 or mu1 + mu2 > q - 3:
        raise OrbitEmpty("need lambda1 + lambda2 <= p - 3 and mu1 + mu2 <= q - 3")
    s = level.shifted
    lam = (lam1 - s * (mu1 + 1), lam2 - s * (mu2 + 1))
    a1, a2, a3 = sl_to_gl_weight(lam)
    return {"x": a1, "y": a2 - 1, "z": a3 - 2}


def _check_params(constants: dict, params: dict, constraints: dict) -> None:
    for name, others in constraints.items():
        if name not in params:
            continue
        for o in others:
            if o in params or o in constants:
                val = params.get(o, constants.get(o))
                if is_integer(params[name] - val):
                    raise ParameterClash(f"{name} - {o} = {fmt(params[name] - val)} is an integer")
    if "y" in params and "z" in params and is_integer(params["y"] - params["z"]):
        raise ParameterClash("z - y is an integer")


def family_seed(fid: str, constants: dict, params: dict):
    fam = ALL_FAMILIES[fid]
    recipes = MINIMAL_SEEDS if fid in MINIMAL_FAMILIES else PRINCIPAL_SEEDS
    env = {**constants, **params}
    vals = []
    for sym in recipes[fam.seed]:
        if sym == "x-t":
            vals.append(env["x"] - env["t"])
        else:
            vals.append(Q(env[sym]))
    return tableau_from_vector(vals)


def build_family(
    fid: str,
    p: int,
    q: int,
    lam1: int = 0,
    lam2: int = 0,
    a_or_mu: int | Sequence[int] = 1,
    params: dict | None = None,
    convention: str = "tab",
) -> ModuleSpec:
    if fid not in ALL_FAMILIES:
        raise KeyError(f"unknown family {fid!r}")
    fam = ALL_FAMILIES[fid]
    if fid in MINIMAL_FAMILIES:
        a = a_or_mu if isinstance(a_or_mu, int) else a_or_mu[0]
        constants = minimal_constants(p, q, lam1, lam2, a)
        constraints = MINIMAL_CONSTRAINTS
        data = {"p": p, "q": q, "lambda": [lam1, lam2], "a": a}
    else:
        mu = (a_or_mu, 0) if isinstance(a_or_mu, int) else tuple(a_or_mu)
        constants = principal_constants(p, q, lam1, lam2, *mu)
        constraints = PRINCIPAL_CONSTRAINTS
        data = {"p": p, "q": q, "lambda": [lam1, lam2], "mu": list(mu)}
    numeric = {k: v for k, v in constants.items() if k != "t"}
    if params:
        params = {k: Q(v) for k, v in params.items()}
        _check_params(numeric, params, constraints)
        missing = set(fam.params) - set(params)
        params.update(choose_free_parameters({**numeric, **params}, missing))
    else:
        params = choose_free_parameters(numeric, fam.params)
    seed = family_seed(fid, constants, params)
    module = shared_module(seed, fam.regime)
    t = int(constants.get("t", 0))
    predicate = Region(fam.region, t) if fam.blocks else FullLattice()
    meta = {
        **data,
        "t": t if fid in MINIMAL_FAMILIES else None,
        "constants": {k: fmt(Q(v)) for k, v in constants.items()},
        "params": {k: fmt(v) for k, v in params.items()},
        "profile": fam.profile,
        "kind": fam.kind,
    }
    return ModuleSpec(module, predicate, label=fid, convention=convention, meta=meta)


# --------------------------------------------------------------------------
# verification


def _probe(spec: ModuleSpec, w: Window):
    from .modules import enumerate_points

    pts = enumerate_points(spec, w)
    if not pts:
        return None
    return spec.basis_of(max(pts, key=lambda p: (w.slack(p), [-abs(x) for x in p])))


def check_profile(spec: ModuleSpec, radius: int, growth_radii: Sequence[int] = (4, 6, 8)) -> dict:
    profile = spec.meta.get("profile", "bounded")
    t = spec.meta.get("t")
    out: dict = {"profile": profile}
    if profile in ("bounded", "equal"):
        w = Window.box(spec.dim, radius)
        full = multiplicity_census(spec, w)
        interior = interior_census(spec, w)
        out["t"] = t
        out["max_count"] = max(full.values()) if full else 0
        out["interior_weights"] = len(interior)
        out["interior_counts"] = sorted(set(interior.values()))
        if profile == "bounded":
            out["pass"] = bool(interior) and all(c <= t for c in full.values())
        else:
            out["pass"] = bool(interior) and all(c == t for c in interior.values())
    else:
        maxima = []
        for r in growth_radii:
            cen = multiplicity_census(spec, Window.box(spec.dim, r))
            maxima.append(max(cen.values()) if cen else 0)
        out["radii"] = list(growth_radii)
        out["max_counts"] = maxima
        out["pass"] = all(a < b for a, b in zip(maxima, maxima[1:]))
    return out


def verify_family(
    spec: ModuleSpec,
    radius: int = 6,
    relation_probes: int | None = None,
    growth_radii: Sequence[int] = (4, 6, 8),
    profile: bool = True,
) -> dict:
    w = Window.box(spec.dim, radius)
    closure = verify_closure(spec, w)
    relations = verify_relations(spec, w, probes=relation_probes)
    report = {
        "family": spec.label,
        "spec": spec.to_json(),
        "window": w.to_json(),
        "closure": closure.to_json(),
        "relations": relations.to_json(),
    }
    ok = closure.passed and relations.passed
    if profile:
        prof = check_profile(spec, radius, growth_radii)
        report["profile"] = prof
        ok = ok and prof["pass"]
    report["pass"] = ok
    return report


def family_census(spec: ModuleSpec, radius: int) -> dict:
    return census_to_json(interior_census(spec, Window.box(spec.dim, radius)))


def cross_character_check(specs: Sequence[ModuleSpec], radius: int = 3) -> dict:
    """Central characters at interior probes must agree across the given families."""
    chars = {}
    errors = {}
    for spec in specs:
        b = _probe(spec, Window.box(spec.dim, radius))
        if b is None:
            errors[spec.label] = "empty window"
            continue
        try:
            chars[spec.label] = spec.module.central_character(b)
        except NotEigenvector as exc:
            errors[spec.label] = str(exc)
    values = set(chars.values())
    return {
        "pass": not errors and len(values) == 1,
        "characters": {k: [fmt(x) for x in v] for k, v in chars.items()},
        "errors": errors,
    }
