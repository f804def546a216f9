#!/usr/bin/env python3
"""Tests for objects."""

from pytest import raises

from hallbridge import io, operations
from hallbridge.errors import GlobalDimensionExceeded
from hallbridge.objects import HallLab
from hallbridge.operations import algdef, hall


# ### Unit tests
def test_HallLab(a2_file):
    lab = HallLab.from_file(a2_file, 2, workers=2)
    assert lab.q == 2
    assert lab.n_vertices == 2
    assert lab.fingerprint == io.fingerprint(lab.presentation)
    assert lab.universe is None
    assert lab.alg is None

    lab.certify_gldim()
    assert lab.gldim == 1
    assert lab.alg.dim == 3

    lab.enumerate()
    assert len(lab.classes) == 7
    s1 = lab.universe.classify(algdef.standard_modules(lab.alg, 0, "simple"))
    s2 = lab.universe.classify(algdef.standard_modules(lab.alg, 1, "simple"))
    assert lab.label(s1) == "M[1,0]#0"
    assert lab.representative(s1).dim_vector == (1, 0)
    assert lab.hall_product(s2, s1) == {
        lab.universe.classify(operations.modcat.direct_sum(
            lab.representative(s1), lab.representative(s2))): 1
    }
    assert lab.e(s1) == hall.e_of_class(lab.ctx, s1)
    assert lab.map(lambda x: x * 2, range(5)) == [0, 2, 4, 6, 8]


def test_HallLab_enumerate_builds_basis(two_cycle_file):
    lab = HallLab.from_file(two_cycle_file, 1).enumerate()
    assert lab.alg.dim == 5
    assert len(lab.classes) == 3


# ### Break tests
def test_break_HallLab(a2_file):
    pres = io.load_presentation_file(a2_file)
    with raises(ValueError) as errorinfo:
        HallLab(pres, -1)
    assert "non-negative" in str(errorinfo.value)
    with raises(ValueError) as errorinfo:
        HallLab(pres, 2, workers=0)
    assert "worker" in str(errorinfo.value)


def test_break_certify_gldim():
    data = {
        "q": 2,
        "vertices": ["1", "2", "3", "4"],
        "arrows": [
            {"name": "a", "from": "1", "to": "2"},
            {"name": "b", "from": "2", "to": "3"},
            {"name": "c", "from": "3", "to": "4"},
        ],
        "relations": [
            [{"coef": 1, "path": ["a", "b"]}],
            [{"coef": 1, "path": ["b", "c"]}],
        ],
    }
    lab = HallLab(algdef.presentation_from_dict(data), 1)
    with raises(GlobalDimensionExceeded):
        lab.certify_gldim()
