#!/usr/bin/env python3
"""Tests for operations.algdef."""

import json

import numpy as np
from pytest import mark, raises

from hallbridge.conftest import A2, ONE_LOOP, THREE_VERTEX, TWO_CYCLE
from hallbridge.errors import (
    NotAdmissible,
    NotFiniteDimensional,
    ParseError,
    UnknownVertexOrArrow,
)
from hallbridge.operations import algdef


def _with(base, **changes):
    data = json.loads(json.dumps(base))
    data.update(changes)
    return data


# ### Unit tests
def test_load_presentation():
    pres = algdef.load_presentation(json.dumps(A2).encode("utf-8"))
    assert pres.q == 2
    assert pres.n_vertices == 2
    assert pres.arrows == (algdef.Arrow("a", 0, 1),)
    assert pres.relations == ()
    assert pres.dim_cap == algdef.DIM_CAP
    assert algdef.load_presentation(json.dumps(A2)) == pres


def test_presentation_to_dict():
    pres = algdef.presentation_from_dict(TWO_CYCLE)
    data = pres.to_dict()
    assert algdef.presentation_from_dict(data) == pres
    assert data["relations"] == [[{"coef": 1, "path": ["alpha", "beta"]}]]


def test_relation_terms_are_merged():
    rel = [
        {"coef": 1, "path": ["alpha", "beta"]},
        {"coef": 2, "path": ["alpha", "beta"]},
    ]
    pres = algdef.presentation_from_dict(_with(TWO_CYCLE, q=5, relations=[rel]))
    assert pres.relations == (((3, (0, 1)),),)


@mark.parametrize(
    "data, dim, dims0, dims1",
    [
        (A2, 3, (1, 1), (0, 1)),
        (TWO_CYCLE, 5, (1, 1), (1, 2)),
        (THREE_VERTEX, 6, (1, 1, 1), (0, 1, 1)),
    ],
)
def test_path_basis(data, dim, dims0, dims1):
    alg = algdef.path_basis(algdef.presentation_from_dict(data))
    assert alg.dim == dim
    assert alg.projective_matrices(0)[0] == dims0
    assert alg.projective_matrices(1)[0] == dims1
    assert alg.cartan.sum() == dim
    for i in range(alg.n_vertices):
        trivial = alg.basis[alg.by_pair[i][i][0]]
        assert trivial.length == 0 and trivial.source == i


def test_path_basis_two_cycle():
    alg = algdef.path_basis(algdef.presentation_from_dict(TWO_CYCLE))
    assert alg.max_length == 2
    paths = {p.arrows for p in alg.basis}
    assert paths == {(), (1, 0)}.union({(0,), (1,)})
    alpha = next(i for i, p in enumerate(alg.basis) if p.arrows == (0,))
    beta = next(i for i, p in enumerate(alg.basis) if p.arrows == (1,))
    assert alg.multiply(alpha, beta) == {}
    assert alg.multiply(alpha, alpha) == {}
    beta_alpha = alg.multiply(beta, alpha)
    assert len(beta_alpha) == 1
    assert alg.basis[next(iter(beta_alpha))].arrows == (1, 0)
    # cartan[j, i] is the dimension at j of the projective at i
    assert (alg.cartan == np.array([[1, 1], [1, 2]])).all()


def test_commutativity_relation():
    square = {
        "q": 3,
        "vertices": ["1", "2", "3", "4"],
        "arrows": [
            {"name": "a", "from": "1", "to": "2"},
            {"name": "b", "from": "2", "to": "4"},
            {"name": "c", "from": "1", "to": "3"},
            {"name": "d", "from": "3", "to": "4"},
        ],
        "relations": [
            [{"coef": 1, "path": ["a", "b"]}, {"coef": 2, "path": ["c", "d"]}]
        ],
    }
    alg = algdef.path_basis(algdef.presentation_from_dict(square))
    # 4 trivial paths, 4 arrows, one surviving path of length two
    assert alg.dim == 9
    assert alg.projective_matrices(0)[0] == (1, 1, 1, 1)


def test_projective_matrices_two_cycle():
    alg = algdef.path_basis(algdef.presentation_from_dict(TWO_CYCLE))
    dims, mats = alg.projective_matrices(1)
    assert dims == (1, 2)
    # alpha sends beta to beta*alpha, beta sends e2 to beta and kills beta*alpha
    assert mats[0].shape == (2, 1)
    assert mats[0].sum() == 1
    assert mats[1].shape == (1, 2)
    assert mats[1].sum() == 1
    assert (mats[1] @ mats[0] % 2 == 0).all()


def test_canonical_algebra():
    pres = algdef.canonical_algebra((2, 2, 2), (2,), 3)
    assert pres.n_vertices == 5
    assert len(pres.arrows) == 6
    assert len(pres.relations) == 1
    alg = algdef.path_basis(pres)
    # the projective at the source has dimension 1 + 3 + 2
    assert sum(alg.projective_matrices(0)[0]) == 6


def test_standard_modules(a2):
    simple = algdef.standard_modules(a2, 1, "simple")
    assert simple.dim_vector == (0, 1)
    proj = algdef.standard_modules(a2, 0, "projective")
    assert proj.dim_vector == (1, 1)


def test_relation_matrix(two_cycle):
    dims, mats = two_cycle.projective_matrices(0)
    rel = two_cycle.presentation.relations[0]
    assert not algdef.relation_matrix(two_cycle, dims, mats, rel).any()


def test_path_basis_mixed_lengths():
    data = {
        "q": 3,
        "vertices": ["1", "2", "3", "4", "5"],
        "arrows": [
            {"name": "a", "from": "1", "to": "2"},
            {"name": "b", "from": "2", "to": "4"},
            {"name": "c", "from": "1", "to": "3"},
            {"name": "d", "from": "3", "to": "5"},
            {"name": "e", "from": "5", "to": "4"},
        ],
        "relations": [[{"coef": 1, "path": ["a", "b"]},
                       {"coef": 2, "path": ["c", "d", "e"]}]],
    }
    alg = algdef.path_basis(algdef.presentation_from_dict(data))
    # 14 paths, with a*b and c*d*e identified
    assert alg.dim == 13
    assert alg.cartan[3, 0] == 1


def test_has_oriented_cycle():
    for data, expected in [(A2, False), (THREE_VERTEX, False), (TWO_CYCLE, True),
                           (ONE_LOOP, True)]:
        pres = algdef.presentation_from_dict(data)
        assert algdef._has_oriented_cycle(pres.n_vertices, pres.arrows) is expected


# ### Break tests
@mark.parametrize(
    "changes, error, message",
    [
        ({"q": 4}, ParseError, "not supported"),
        ({"q": "2"}, ParseError, "must be an integer"),
        ({"vertices": []}, ParseError, "non-empty"),
        ({"vertices": ["1", "1"]}, ParseError, "unique"),
        ({"color": "red"}, ParseError, "Unknown keys"),
        ({"arrows": [{"name": "a", "from": "1", "to": "9"}]}, UnknownVertexOrArrow,
         "unknown vertex"),
        ({"relations": [[{"coef": 1, "path": ["z", "a"]}]]}, UnknownVertexOrArrow,
         "Unknown arrow"),
        ({"relations": [[{"coef": 1, "path": ["a"]}]]}, NotAdmissible, "length 1"),
        ({"relations": [[{"coef": 1, "path": ["a", "a"]}]]}, NotAdmissible,
         "not composable"),
        ({"dim_cap": 0}, ParseError, "dim_cap"),
    ],
)
def test_break_presentation_from_dict(changes, error, message):
    with raises(error) as errorinfo:
        algdef.presentation_from_dict(_with(A2, **changes))
    assert message in str(errorinfo.value)


def test_break_relations():
    with raises(NotAdmissible) as errorinfo:
        algdef.presentation_from_dict(
            _with(TWO_CYCLE, relations=[[{"coef": 2, "path": ["alpha", "beta"]}]])
        )
    assert "vanishes" in str(errorinfo.value)
    with raises(NotAdmissible) as errorinfo:
        algdef.presentation_from_dict(
            _with(TWO_CYCLE, relations=[[{"coef": 1, "path": ["alpha", "beta"]},
                                         {"coef": 1, "path": ["beta", "alpha"]}]])
        )
    assert "share source and target" in str(errorinfo.value)


@mark.parametrize(
    "base, relation",
    [
        (ONE_LOOP, [{"coef": 1, "path": ["x", "x"]},
                    {"coef": 1, "path": ["x", "x", "x"]}]),
        (TWO_CYCLE, [{"coef": 1, "path": ["alpha", "beta"]},
                     {"coef": 1, "path": ["alpha", "beta", "alpha", "beta"]}]),
    ],
)
def test_break_mixed_length_relations(base, relation):
    with raises(NotAdmissible) as errorinfo:
        algdef.presentation_from_dict(_with(base, relations=[relation]))
    assert "mixing path lengths" in str(errorinfo.value)


def test_break_load_presentation():
    with raises(ParseError) as errorinfo:
        algdef.load_presentation("{not json")
    assert "not valid JSON" in str(errorinfo.value)
    with raises(ParseError) as errorinfo:
        algdef.load_presentation(b"\xff\xfe")
    assert "not UTF-8" in str(errorinfo.value)


def test_break_path_basis():
    with raises(NotFiniteDimensional) as errorinfo:
        algdef.path_basis(algdef.presentation_from_dict(_with(ONE_LOOP, dim_cap=4)))
    assert "infinite dimensional" in str(errorinfo.value)


def test_break_canonical_algebra():
    with raises(NotAdmissible):
        algdef.canonical_algebra((2, 1, 2), (2,), 3)
    with raises(ValueError) as errorinfo:
        algdef.canonical_algebra((2, 2, 2), (), 3)
    assert "parameters" in str(errorinfo.value)


def test_break_standard_modules(a2):
    with raises(NotImplementedError) as errorinfo:
        algdef.standard_modules(a2, 0, "injective")
    assert "not supported" in str(errorinfo.value)
    with raises(ValueError) as errorinfo:
        algdef.standard_modules(a2, 2, "simple")
    assert "out of range" in str(errorinfo.value)
