import pytest

from gtx.admissibility import AdmissibleLevel, is_admissible_level
from gtx.classification import ParameterClash
from gtx.induced import (
    ConstraintViolation,
    admissible_induced_parameters,
    build_induced,
    induced_seed,
    simplicity_flags,
)
from gtx.modules import Window, enumerate_points, verify_closure, verify_relations
from gtx.scalars import Q


def test_seed_layout_sl2():
    T = induced_seed(3, 2, ["1/3", "1/5", "1/7"], ["1/11"])
    assert T.top == (Q(1, 3), Q(1, 5), Q(1, 11))
    assert T.rows[1] == (Q(1, 3), Q(1, 5))
    assert T[1, 1] == Q(1, 7)


def test_seed_layout_sl3():
    T = induced_seed(4, 3, ["1/3", "1/5", "1/7", "1/2", "1/4", "1/9"], ["1/11"])
    assert T.top == (Q(1, 3), Q(1, 5), Q(1, 7), Q(1, 11))
    assert T.rows[2] == (Q(1, 3), Q(1, 5), Q(1, 7))
    assert T.rows[1] == (Q(1, 2), Q(1, 4))


def test_seed_validation():
    with pytest.raises(ValueError):
        induced_seed(3, 4, [], [])
    with pytest.raises(ValueError):
        induced_seed(3, 2, ["1/3", "1/5"], ["1/11"])
    with pytest.raises(ValueError):
        induced_seed(4, 2, ["1/3", "1/5", "1/7"], ["1/11"])
    with pytest.raises(ParameterClash):
        build_induced(2, ["1/3", "4/3", "1/7"], ["1/11"])


def test_admissible_parameters_n3():
    ispec = admissible_induced_parameters(AdmissibleLevel(3, 4, 3), 2, [0, 0], [0, 0])
    assert ispec.inner == (Q(-4, 3), -1, Q(-25, 21))
    assert ispec.outer == (Q(-2, 3),)
    assert ispec.data["k_sub"] == "-2/3"
    assert ispec.data["inner_admissible"]
    assert is_admissible_level(2, Q(-2, 3)) == AdmissibleLevel(2, 4, 3)


def test_constraints():
    with pytest.raises(ConstraintViolation):
        admissible_induced_parameters(AdmissibleLevel(3, 3, 2), 2, [0, 0], [0, 0])
    with pytest.raises(ConstraintViolation):
        admissible_induced_parameters(AdmissibleLevel(3, 4, 3), 2, [1, 1], [0, 0])
    with pytest.raises(ConstraintViolation):
        admissible_induced_parameters(AdmissibleLevel(3, 4, 3), 2, [0], [0, 0])
    with pytest.raises(ConstraintViolation):
        admissible_induced_parameters(AdmissibleLevel(3, 4, 3), 2, [-1, 0], [0, 0])


def test_simplicity_flags():
    simple = build_induced(2, ["1/3", "1/5", "1/7"], ["1/11"])
    assert simplicity_flags(simple) == {"simple": True, "witnesses": []}
    reducible = build_induced(2, ["1/3", "1/5", "4/3"], ["1/11"])
    assert simplicity_flags(reducible)["witnesses"] == [[2, 1, 1]]


def test_induced_window_is_a_submodule():
    ispec = admissible_induced_parameters(AdmissibleLevel(3, 4, 3), 2, [0, 0], [0, 0])
    w = Window.box(3, 3)
    rep = verify_closure(ispec.spec, w)
    assert rep.passed and rep.escapes == 0
    # the top row sits above row 2 column by column, so z21, z22 <= 0
    pts = enumerate_points(ispec.spec, w)
    assert all(p[1] <= 0 and p[2] <= 0 for p in pts)
    assert verify_relations(ispec.spec, w, probes=15).passed


def test_sl3_induction_n4():
    ispec = admissible_induced_parameters(AdmissibleLevel(4, 5, 4), 3, [0, 0, 0], [0, 0, 0])
    assert ispec.sub_rank == 3 and len(ispec.outer) == 1
    w = Window.box(ispec.spec.dim, 1)
    assert verify_closure(ispec.spec, w).passed
    assert verify_relations(ispec.spec, w, probes=5).passed
