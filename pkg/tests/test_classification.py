import itertools

import pytest

from gtx.admissibility import OrbitEmpty
from gtx.classification import (
    ALL_FAMILIES,
    MINIMAL_FAMILIES,
    PRINCIPAL_FAMILIES,
    ParameterClash,
    build_family,
    check_profile,
    choose_free_parameters,
    cross_character_check,
    minimal_constants,
    principal_constants,
    verify_family,
)
from gtx.modules import (
    ModuleSpec,
    Region,
    RegionPredicate,
    Window,
    interior_census,
    verify_closure,
)
from gtx.scalars import Q
from gtx.tableaux import is_critical, is_generic

BOX = list(itertools.product(range(-4, 5), repeat=3))


def test_family_tables():
    assert len(MINIMAL_FAMILIES) == 20 and len(PRINCIPAL_FAMILIES) == 10
    assert list(ALL_FAMILIES)[:2] == ["L1", "L2"]
    assert PRINCIPAL_FAMILIES["S-L10"].blocks == ()
    assert MINIMAL_FAMILIES["L20"].blocks == ("m<=n, -t<m<=0", "n<m, -t<n<=0")


def test_minimal_constants():
    assert minimal_constants(3, 2, 0, 0, 1) == {"c": -1, "x": Q(-1, 2), "t": 1}
    assert minimal_constants(4, 3, 0, 1, 1)["t"] == 2
    with pytest.raises(OrbitEmpty):
        minimal_constants(3, 2, 0, 0, 2)
    with pytest.raises(OrbitEmpty):
        minimal_constants(3, 2, 1, 0, 1)


def test_principal_constants():
    assert principal_constants(4, 3, 0, 0, 0, 0) == {"x": Q(-4, 3), "y": -1, "z": Q(-2, 3)}
    with pytest.raises(OrbitEmpty):
        principal_constants(3, 2, 0, 0, 0, 0)


def test_free_parameter_choice():
    params = choose_free_parameters({"c": Q(-1), "x": Q(-1, 2)}, ["y", "z"])
    assert params["z"] == Q(-5, 14)
    assert params["y"] == Q(-1, 2) + Q(2, 11)


def test_seeds():
    assert build_family("L1", 3, 2).seed.to_json()["rows"] == [["-1"], ["-1", "-1/2"], ["-1", "-1/2", "-3/2"]]
    l5 = build_family("L5", 3, 2)
    assert l5.seed[1, 1] == Q(-5, 14)
    assert is_generic(l5.seed)
    assert is_critical(build_family("L16", 3, 2).seed)
    sl10 = build_family("S-L10", 4, 3, a_or_mu=(0, 0))
    assert sl10.seed[2, 1] == sl10.seed[2, 2] != sl10.seed[1, 1]


def test_explicit_parameters_are_checked():
    with pytest.raises(ParameterClash):
        build_family("L5", 3, 2, params={"z": 3})
    spec = build_family("L7", 3, 2, params={"z": Q(1, 3)})
    assert spec.meta["params"]["z"] == "1/3" and "y" in spec.meta["params"]
    with pytest.raises(KeyError):
        build_family("L21", 3, 2)


@pytest.mark.parametrize("group", [["L1", "L2", "L3", "L4"], ["L10", "L11", "L12", "L13"]])
def test_highest_weight_families_tile_their_slab(group):
    regions = [MINIMAL_FAMILIES[f].region for f in group]
    for t in (1, 2):
        for m, n, k in BOX:
            hits = sum(r.contains(m, n, k, t) for r in regions)
            slab = -t < n <= 0 if group[0] == "L1" else -t < m <= 0
            assert hits == (1 if slab else 0)


@pytest.mark.parametrize("fid", ["L1", "L10", "L16", "L18", "L19"])
def test_minimal_family_small_window(fid):
    rep = verify_family(build_family(fid, 3, 2), radius=3, relation_probes=10)
    assert rep["pass"], rep


def test_principal_family_small_window():
    spec = build_family("S-L3", 4, 3, a_or_mu=(0, 0))
    rep = verify_family(spec, radius=3, relation_probes=10, profile=False)
    assert rep["pass"]


def test_bounded_profile_reports_counts():
    prof = check_profile(build_family("L5", 3, 2), radius=4)
    assert prof["pass"] and prof["interior_counts"] == [1]


def test_cross_character_agrees_on_minimal_families():
    specs = [build_family(f, 3, 2) for f in ("L1", "L7", "L16", "L20")]
    rep = cross_character_check(specs)
    assert rep["pass"], rep


def test_canonical_layout_breaks_closure():
    # putting plain tableaux at m >= n does not give subquotients
    w = Window.box(3, 3)
    assert verify_closure(build_family("L18", 3, 2), w).passed
    assert not verify_closure(build_family("L18", 3, 2, convention="canonical"), w).passed
    spec = build_family("S-L1", 4, 3, a_or_mu=(0, 0))
    assert verify_closure(spec, w).passed
    assert not verify_closure(build_family("S-L1", 4, 3, a_or_mu=(0, 0), convention="canonical"), w).passed


def test_l20_transcribed_region_is_not_a_subquotient():
    w = Window.box(3, 4)
    for conv in ("tab", "canonical"):
        assert not verify_closure(build_family("L20", 3, 2, convention=conv), w).passed
    counts = set(interior_census(build_family("L20", 4, 3, 0, 1, 1), w).values())
    assert max(counts) == 4  # 2t, twice the expected multiplicity


@pytest.mark.parametrize("p, q, lam2, t", [(3, 2, 0, 1), (4, 3, 1, 2)])
def test_l20_with_both_blocks_bounded_by_m(p, q, lam2, t):
    spec = build_family("L20", p, q, 0, lam2, 1)
    fixed = RegionPredicate.parse(["m<=n, -t<m<=0", "n<m, -t<m<=0"])
    alt = ModuleSpec(spec.module, Region(fixed, t))
    w = Window.box(3, 4)
    assert verify_closure(alt, w).passed
    assert set(interior_census(alt, w).values()) == {t}
