"""Command line entry point: ``gtx <command>``, JSON on stdout."""

from __future__ import annotations

import json
import sys

import click

from .admissibility import (
    AdmissibleLevel,
    OrbitEmpty,
    enumerate_pr_with_collisions,
    orbit_for_denominator,
    orbit_name,
    weight_report,
)
from .classification import (
    ALL_FAMILIES,
    MINIMAL_FAMILIES,
    PRINCIPAL_FAMILIES,
    build_family,
    cross_character_check,
    family_census,
    verify_family,
)
from .induced import ConstraintViolation, admissible_induced_parameters, simplicity_flags
from .localization import (
    chain_for_root,
    localization_module,
    localized_to_json,
    parse_root,
    theta,
    verify_localization_lemma,
)
from .gt_action import gen
from .modules import (
    Window,
    census_to_json,
    interior_census,
    verify_closure,
    verify_relations,
)
from .scalars import Q, fmt
from .tableaux import Tableau

ORBITS = {"min": "minimal", "minimal": "minimal", "prin": "principal",
          "principal": "principal", "zero": "zero"}


def emit(obj) -> None:
    click.echo(json.dumps(obj, indent=2))


def fail(msg: str, code: int = 2) -> None:
    emit({"error": msg})
    sys.exit(code)


@click.group()
def main():
    """Exact verification of Gelfand-Tsetlin realizations of admissible modules."""


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--p", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--orbit", type=click.Choice(sorted(ORBITS)), default="min")
def admissible(n, p, q, orbit):
    """List admissible weight representatives for an orbit."""
    try:
        level = AdmissibleLevel(n, p, q)
        reps, collisions = enumerate_pr_with_collisions(level, ORBITS[orbit])
    except (ValueError, OrbitEmpty) as exc:
        fail(str(exc))
    part = orbit_for_denominator(n, q)
    emit({
        "level": level.to_json(),
        "orbit_for_q": {"partition": list(part), "name": orbit_name(n, part)},
        "orbit": ORBITS[orbit],
        "collisions": collisions,
        "weights": [weight_report(lam, ORBITS[orbit]) for lam in reps],
    })


def _family_ids(family: str) -> list[str]:
    if family == "all":
        return list(ALL_FAMILIES)
    if family == "minimal":
        return list(MINIMAL_FAMILIES)
    if family == "principal":
        return list(PRINCIPAL_FAMILIES)
    if family not in ALL_FAMILIES:
        fail(f"unknown family {family}; choose from {', '.join(ALL_FAMILIES)}")
    return [family]


@main.command()
@click.option("--p", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--lambda1", type=int, default=0)
@click.option("--lambda2", type=int, default=0)
@click.option("--a", "a", type=int, default=1, help="minimal-orbit parameter a")
@click.option("--mu1", type=int, default=0)
@click.option("--mu2", type=int, default=0)
@click.option("--family", default="all", help="L1..L20, S-L1..S-L10, minimal, principal or all")
@click.option("--radius", type=int, default=6)
@click.option("--verify", is_flag=True, help="run closure, relation and multiplicity checks")
@click.option("--probes", type=int, default=None, help="sample this many relation probes")
@click.option("--convention", type=click.Choice(["tab", "canonical"]), default="tab")
def classify(p, q, lambda1, lambda2, a, mu1, mu2, family, radius, verify, probes, convention):
    """Build (and optionally verify) the explicit sl3 families."""
    reports, specs, skipped = [], [], {}
    for fid in _family_ids(family):
        arg = a if fid in MINIMAL_FAMILIES else (mu1, mu2)
        try:
            spec = build_family(fid, p, q, lambda1, lambda2, arg, convention=convention)
        except (ValueError, OrbitEmpty) as exc:
            skipped[fid] = str(exc)
            continue
        specs.append(spec)
        if verify:
            reports.append(verify_family(spec, radius, relation_probes=probes))
        else:
            reports.append({"family": fid, "spec": spec.to_json(),
                            "census": family_census(spec, radius)})
    out = {"families": reports}
    if skipped:
        out["skipped"] = skipped
    if verify and len(specs) > 1:
        out["cross_character"] = cross_character_check(specs)
    if verify:
        out["pass"] = all(r["pass"] for r in reports) and out.get("cross_character", {}).get("pass", True)
    emit(out)
    if verify and not out["pass"]:
        sys.exit(1)


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--sub", "sub_rank", type=click.Choice(["2", "3"]), default="2")
@click.option("--p", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--lambdas", default=None, help="comma separated, n-1 entries")
@click.option("--mus", default=None, help="comma separated, n-1 entries")
@click.option("--radius", type=int, default=3)
@click.option("--verify", is_flag=True)
@click.option("--probes", type=int, default=30)
def induce(n, sub_rank, p, q, lambdas, mus, radius, verify, probes):
    """Admissible modules induced from sl2 or sl3."""
    lam = [int(x) for x in lambdas.split(",")] if lambdas else [0] * (n - 1)
    mu = [int(x) for x in mus.split(",")] if mus else [0] * (n - 1)
    try:
        ispec = admissible_induced_parameters(AdmissibleLevel(n, p, q), int(sub_rank), lam, mu)
    except (ValueError, ConstraintViolation) as exc:
        fail(str(exc))
    out = {"induced": ispec.to_json(), "simplicity": simplicity_flags(ispec)}
    if verify:
        w = Window.box(ispec.spec.dim, radius)
        closure = verify_closure(ispec.spec, w)
        relations = verify_relations(ispec.spec, w, probes=probes)
        out.update({
            "window": w.to_json(),
            "closure": closure.to_json(),
            "relations": relations.to_json(),
            "census": census_to_json(interior_census(ispec.spec, w)),
            "pass": closure.passed and relations.passed and ispec.data["inner_admissible"],
        })
    emit(out)
    if verify and not out["pass"]:
        sys.exit(1)


def _load_seed(path: str) -> Tableau:
    with open(path) as fh:
        data = json.load(fh)
    if "families" in data:
        data = data["families"][0]
    if "spec" in data:
        data = data["spec"]
    if "seed" in data:
        data = data["seed"]
    return Tableau.from_json(data)


@main.command()
@click.option("--alpha", default="21", help="negative root E_ij as two digits: 21, 32 or 31")
@click.option("--a", "a", default="1/2", help="twist parameter (rational)")
@click.option("--b", "b", default="1/3", help="second parameter for the composition identity")
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.option("--radius", type=int, default=4)
@click.option("--probes", type=int, default=None)
@click.option("--verify-lemma", is_flag=True)
def twist(alpha, a, b, spec_path, radius, probes, verify_lemma):
    """Twisted localization of a generic tableau module."""
    try:
        root = parse_root(alpha)
        seed = _load_seed(spec_path)
        module = localization_module(seed, root)
    except (ValueError, KeyError) as exc:
        fail(str(exc))
    gens = [(i, j) for i in range(1, seed.n + 1) for j in range(1, seed.n + 1)]
    out = {
        "alpha": list(root),
        "relabel": list(chain_for_root(root, seed.n)),
        "a": fmt(Q(a)),
        "theta": {f"E{i}{j}": localized_to_json(theta(gen(i, j), root, a)) for i, j in gens},
    }
    if verify_lemma:
        rep = verify_localization_lemma(root, a, b, module, Window.box(module.dim, radius), probes)
        out["lemma"] = rep
        out["pass"] = rep["pass"]
    emit(out)
    if verify_lemma and not out["pass"]:
        sys.exit(1)


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.option("--radius", type=int, default=2)
@click.option("--probes", type=int, default=None)
def relations(spec_path, radius, probes):
    """Check all gl_n commutation relations on the full module of a seed."""
    from .modules import ModuleSpec, shared_module

    seed = _load_seed(spec_path)
    spec = ModuleSpec(shared_module(seed))
    rep = verify_relations(spec, Window.box(spec.dim, radius), probes=probes)
    emit(rep.to_json())
    if not rep.passed:
        sys.exit(1)


if __name__ == "__main__":  # pragma: no cover
    main()
