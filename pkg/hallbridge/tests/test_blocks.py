#!/usr/bin/env python3
"""Tests for blocks."""

import numpy as np
from pytest import fixture, mark, skip

from hallbridge import blocks
from hallbridge.conftest import A2, THREE_VERTEX, TWO_CYCLE
from hallbridge.objects import HallLab
from hallbridge.operations import algdef
from hallbridge.operations.ffalg import TCoeff


def _lab(data, bound, **kwargs):
    return HallLab(algdef.presentation_from_dict(data), bound, **kwargs).certify_gldim().enumerate()


@fixture(scope="module")
def a2_lab():
    return _lab(A2, 2)


@fixture(scope="module")
def a2_lab_small():
    return _lab(A2, 1, workers=2)


@fixture(scope="module")
def two_cycle_lab():
    return _lab(TWO_CYCLE, 1)


BOUND_3 = {
    "a2": A2,
    "a2_f3": dict(A2, q=3),
    "two_cycle": TWO_CYCLE,
    "three_vertex": THREE_VERTEX,
}


@fixture(scope="module", params=list(BOUND_3))
def bound3_lab(request):
    return request.param, _lab(BOUND_3[request.param], 3)


# ### Unit tests
def test_check_result():
    result = blocks.CheckResult("main", 3, [])
    assert result.passed
    assert result.to_dict() == {"name": "main", "pairs_tested": 3, "passed": True,
                                "failures": []}
    failing = result._replace(failures=[{"key": "x", "left": 1, "right": 2}])
    assert not failing.passed
    assert failing.to_dict()["passed"] is False


def test_failure_serialisation():
    out = blocks._failure(["k"], {b"\x01": TCoeff(1, 0, 2)}, {})
    assert out["key"] == ["k"]
    assert out["left"] == {b"\x01": TCoeff(1, 0, 2)}
    result = blocks.CheckResult("main", 1, [out])
    data = result.to_dict(labels=lambda key: "M")
    assert data["failures"][0]["key"] == ["k"]
    assert data["failures"][0]["left"][0]["key"] == "M"
    assert data["failures"][0]["right"] == []
    renamed = {b"\x02": b"\x05"}.get
    zero = (0, 0)
    out = blocks._failure(["k"], {(zero, zero, b"\x02"): TCoeff(1, 0, 2)}, {})
    data = result._replace(failures=[out]).to_dict(complexes=renamed)
    assert data["failures"][0]["left"][0]["key"]["complex"] == "05"


def test_checks_registry():
    assert tuple(blocks.CHECKS) == blocks.SUPPORTED_CHECKS


@mark.parametrize("name", blocks.SUPPORTED_CHECKS)
def test_checks_a2(a2_lab, name):
    result = blocks.CHECKS[name](a2_lab)
    assert result.name == name
    assert result.pairs_tested > 0
    assert result.passed, result.failures


def test_main_pairs(a2_lab):
    result = blocks.check_main(a2_lab)
    assert result.pairs_tested == 17


@mark.parametrize("name", ["main", "reduced", "minus", "assoc", "relations"])
def test_checks_with_workers(a2_lab_small, name):
    assert blocks.CHECKS[name](a2_lab_small).passed


@mark.parametrize(
    "name", ["structure", "main", "reduced", "minus", "phi", "extiso", "epad", "rp"]
)
def test_checks_two_cycle(two_cycle_lab, name):
    result = blocks.CHECKS[name](two_cycle_lab)
    assert result.passed, result.failures


@mark.parametrize("name", ["main", "reduced"])
def test_checks_bound3(bound3_lab, name):
    alg_name, lab = bound3_lab
    result = blocks.CHECKS[name](lab)
    assert result.passed, result.failures
    if name == "main":
        expected = {"a2": 45, "a2_f3": 45, "two_cycle": 57, "three_vertex": 130}
        assert result.pairs_tested == expected[alg_name]


@mark.parametrize(
    "name", [n for n in blocks.SUPPORTED_CHECKS if n not in ("main", "reduced")]
)
def test_checks_bound3_all(bound3_lab, name):
    alg_name, lab = bound3_lab
    if alg_name.startswith("a2"):
        skip("covered at bound 2 by test_checks_a2")
    result = blocks.CHECKS[name](lab)
    assert result.pairs_tested > 0
    assert result.passed, result.failures


def test_c_of_class(a2_lab):
    ctx = a2_lab.ctx
    cid = a2_lab.classes[1]
    assert blocks.c_of_class(ctx, cid) is blocks.c_of_class(ctx, cid)


def test_sample():
    rng = np.random.default_rng(0)
    items = list(range(blocks.N_ASSOC_SAMPLES + 10))
    picked = blocks._sample(items, rng)
    assert len(picked) == blocks.N_ASSOC_SAMPLES
    assert picked == sorted(picked)
    assert blocks._sample([1, 2], rng) == [1, 2]


# ### Break tests
def test_break_independence(a2_lab_small):
    ctx = a2_lab_small.ctx
    elem = {next(iter(a2_lab_small.classes)): ctx.one()}
    out = blocks._independence(a2_lab_small, "main", [elem, elem])
    assert out[0]["key"] == "main_linear_independence"
