#!/usr/bin/env python3
"""Tests for operations.modcat."""

import numpy as np
from pytest import fixture, mark, raises

from hallbridge.errors import BoundExceeded, GlobalDimensionExceeded, SearchBudgetExceeded
from hallbridge.operations import algdef, modcat


def simple(alg, i):
    return algdef.standard_modules(alg, i, "simple")


def proj(alg, i):
    return algdef.standard_modules(alg, i, "projective")


@fixture(scope="module")
def a2_universe(a2):
    return modcat.ModuleUniverse(a2, 2)


# ### Unit tests
def test_representation(a2):
    rep = modcat.Representation(a2, (1, 1), [[[3]]])
    assert rep.mats[0].tolist() == [[1]]
    assert rep.total_dim == 2
    assert rep.kclass.tolist() == [1, 1]
    assert rep.encode() == bytes([2, 1, 1, 1])
    assert simple(a2, 0).encode() == bytes([2, 1, 0])
    assert rep.satisfies_relations()


def test_projective_sum(two_cycle):
    rep = modcat.projective_sum(two_cycle, (1, 0, 1))
    assert rep.dim_vector == (3, 5)
    assert rep.summands == (1, 0, 1)
    assert rep.satisfies_relations()
    assert modcat.summand_offsets(two_cycle, (1, 0, 1)) == [[0, 1, 2], [0, 2, 3]]


@mark.parametrize(
    "a, b, dim",
    [(0, 2, 0), (2, 0, 1), (1, 2, 1), (2, 1, 0), (0, 0, 1), (2, 2, 1)],
)
def test_hom_basis_a2(a2, a, b, dim):
    # 0 and 1 are the simples, 2 the projective cover of the first simple
    mods = [simple(a2, 0), simple(a2, 1), proj(a2, 0)]
    homs = modcat.hom_basis(mods[a], mods[b])
    assert homs.dim == dim
    for f in homs.basis:
        assert modcat.is_morphism(f, mods[a], mods[b])


def test_morphism_helpers(a2):
    p = proj(a2, 0)
    ident = modcat.identity(p)
    assert modcat.is_morphism(ident, p, p)
    zero = modcat.zero_map(p, simple(a2, 0))
    assert [z.shape for z in zero] == [(1, 1), (0, 1)]
    shapes = modcat.map_shapes(p, p)
    assert modcat.unflatten(modcat.flatten(ident), shapes)[0].tolist() == [[1]]
    assert modcat.combine([ident], [2], 2) is None
    assert modcat.compose(ident, ident, 2)[1].tolist() == [[1]]


def test_isomorphism(a2):
    s = simple(a2, 0)
    twisted = modcat.Representation(a2, (1, 1), [[[1]]])
    assert modcat.is_isomorphic(twisted, proj(a2, 0))
    iso = modcat.find_isomorphism(twisted, proj(a2, 0))
    assert modcat.is_morphism(iso, twisted, proj(a2, 0))
    split = modcat.direct_sum(s, simple(a2, 1))
    assert not modcat.is_isomorphic(split, proj(a2, 0))
    assert not modcat.is_isomorphic(s, simple(a2, 1))


def diagonal_basis(n, missing=0):
    """Unit diagonal matrices: only their full sum is invertible over F_2."""
    basis = []
    for i in range(n - missing):
        unit = np.zeros((n, n), dtype=np.int64)
        unit[i, i] = 1
        basis.append((unit,))
    return basis


def test_has_invertible_rare(monkeypatch):
    monkeypatch.setattr(modcat, "N_CANDIDATES", 0)
    shapes = [(24, 24)]
    assert modcat.has_invertible(diagonal_basis(24), shapes, 2, cap=1000)
    assert not modcat.has_invertible(diagonal_basis(24, 1), shapes, 2, cap=1000)
    with raises(SearchBudgetExceeded):
        modcat.find_invertible(diagonal_basis(24), shapes, 2, cap=1000)
    # exhaustive answer when it fits in the cap
    assert not modcat.has_invertible(diagonal_basis(6, 1), [(6, 6)], 2, cap=None)
    assert modcat.has_invertible(diagonal_basis(6), [(6, 6)], 2, cap=None)
    assert modcat.has_invertible([], [(0, 0)], 2)
    assert not modcat.has_invertible(diagonal_basis(2), [(2, 3)], 2)


def test_has_invertible_default_candidates():
    assert modcat.has_invertible(diagonal_basis(30), [(30, 30)], 2, cap=1000)
    assert not modcat.has_invertible(diagonal_basis(30, 2), [(30, 30)], 2, cap=1000)


@mark.parametrize(
    "q, n, k", [(2, 1, 11), (2, 30, 13), (3, 1, 7), (13, 1, 3), (13, 100, 5)]
)
def test_extension_degree(q, n, k):
    assert modcat.extension_degree(q, n) == k


def test_isomorphism_over_extension(a2, monkeypatch):
    monkeypatch.setattr(modcat, "N_CANDIDATES", 0)
    s1, s2, p = simple(a2, 0), simple(a2, 1), proj(a2, 0)
    twisted = modcat.Representation(a2, (1, 1), [[[1]]])
    assert modcat.is_isomorphic(twisted, p, cap=1)
    assert not modcat.is_isomorphic(modcat.direct_sum(s1, s2), p, cap=1)
    left = modcat.direct_sum(modcat.direct_sum(s1, p), modcat.direct_sum(s2, s1))
    right = modcat.direct_sum(modcat.direct_sum(s2, s1), modcat.direct_sum(s1, twisted))
    assert modcat.is_isomorphic(left, right, cap=1)
    assert not modcat.is_isomorphic(left, modcat.direct_sum(right, s2), cap=1)


@mark.parametrize("q, order", [(2, 6), (3, 48)])
def test_aut_order(a2, a2_f3, q, order):
    alg = a2 if q == 2 else a2_f3
    s = simple(alg, 0)
    assert modcat.aut_order(modcat.direct_sum(s, s)) == order
    assert modcat.aut_order(proj(alg, 0)) == q - 1


def test_sub_and_quotient(a2):
    p = proj(a2, 0)
    rad = modcat.radical_bases(p)
    assert [b.shape[1] for b in rad] == [0, 1]
    assert modcat.top_dims(p) == (1, 0)
    sub, inc = modcat.subrepresentation(p, rad)
    assert sub.dim_vector == (0, 1)
    assert modcat.is_morphism(inc, sub, p)
    quo, projs = modcat.quotient_representation(p, rad)
    assert modcat.is_isomorphic(quo, simple(a2, 0))
    assert modcat.is_morphism(projs, p, quo)


def test_projective_cover(a2, two_cycle):
    cover, surj = modcat.projective_cover(simple(a2, 1))
    assert cover.summands == (1,)
    assert modcat.is_morphism(surj, cover, simple(a2, 1))
    kernel, _ = modcat.kernel_representation(*modcat.projective_cover(simple(a2, 0))[::-1])
    assert modcat.is_isomorphic(kernel, simple(a2, 1))
    cover, surj = modcat.projective_cover(proj(two_cycle, 1))
    assert cover.summands == (1,)
    coker, _ = modcat.cokernel_representation(surj, proj(two_cycle, 1))
    assert coker.total_dim == 0


def test_minimal_resolution(a2, two_cycle):
    res = modcat.minimal_resolution(simple(a2, 0))
    assert res.length == 1
    assert res.p0.summands == (0,)
    assert res.p1.summands == (1,)
    assert res.is_exact() and res.is_minimal()
    res = modcat.minimal_resolution(simple(two_cycle, 0))
    assert res.length == 2
    assert (res.p0.summands, res.p1.summands, res.p2.summands) == ((0,), (1,), (0,))
    assert res.is_exact() and res.is_minimal()
    assert modcat.minimal_resolution(proj(two_cycle, 1)).length == 0


def test_gldim_certificate(a2, two_cycle, three_vertex, one_vertex):
    assert modcat.gldim_certificate(one_vertex) == 0
    assert modcat.gldim_certificate(a2) == 1
    assert modcat.gldim_certificate(two_cycle) == 2
    assert modcat.gldim_certificate(three_vertex) <= 2


def test_euler_form(a2):
    euler = modcat.euler_form(a2)
    assert euler.matrix.tolist() == [[1, -1], [0, 1]]
    assert euler.pair((1, 0), (0, 1)) == -1
    assert euler.pair((0, 1), (1, 0)) == 0
    assert euler.sym((1, 1), (1, 1)) == 2


@mark.parametrize("alg_name", ["a2", "two_cycle", "three_vertex"])
def test_euler_form_matches_ext_dims(alg_name, request):
    alg = request.getfixturevalue(alg_name)
    euler = modcat.euler_form(alg)
    mods = [simple(alg, i) for i in range(alg.n_vertices)]
    mods += [proj(alg, i) for i in range(alg.n_vertices)]
    for a in mods:
        for b in mods:
            hom, ext1, ext2 = modcat.ext_dims(a, b)
            assert euler.pair(a.kclass, b.kclass) == hom - ext1 + ext2


def test_ext_dims(a2, two_cycle):
    assert modcat.ext_dims(simple(a2, 0), simple(a2, 1)) == (0, 1, 0)
    assert modcat.ext_dims(simple(a2, 1), simple(a2, 0)) == (0, 0, 0)
    assert modcat.ext_dims(simple(two_cycle, 0), simple(two_cycle, 0)) == (1, 0, 1)


def test_module_universe(a2, a2_universe):
    assert len(a2_universe) == 7
    assert len(modcat.ModuleUniverse(a2, 1)) == 3
    assert modcat.enumerate_modules(a2, 0) == [a2_universe.zero()]
    assert a2_universe.label(a2_universe.zero()) == "M[0,0]#0"
    labels = sorted(a2_universe.label(cid) for cid in a2_universe)
    assert labels == sorted(["M[0,0]#0", "M[0,1]#0", "M[1,0]#0", "M[0,2]#0",
                             "M[1,1]#0", "M[1,1]#1", "M[2,0]#0"])
    cid = a2_universe.classify(proj(a2, 0))
    assert cid in a2_universe
    assert a2_universe.dim_vector(cid) == (1, 1)
    assert a2_universe.total_dim(cid) == 2
    assert modcat.is_isomorphic(a2_universe.representative(cid), proj(a2, 0))


def test_module_universe_two_cycle(two_cycle):
    universe = modcat.ModuleUniverse(two_cycle, 2)
    # 0, two simples, their squares, S1+S2, and the two uniserials of length 2
    assert len(universe) == 8


def test_ext1_with_middles(a2, a2_universe):
    s1, s2 = simple(a2, 0), simple(a2, 1)
    tallies = modcat.ext1_with_middles(s1, s2, a2_universe.classify)
    assert tallies == {
        a2_universe.classify(modcat.direct_sum(s1, s2)): 1,
        a2_universe.classify(proj(a2, 0)): 1,
    }
    tallies = modcat.ext1_with_middles(s2, s1, a2_universe.classify)
    assert tallies == {a2_universe.classify(modcat.direct_sum(s1, s2)): 1}


@mark.parametrize("alg_name, q", [("a2", 2), ("a2_f3", 3)])
def test_hall_number_double_simple(alg_name, q, request):
    alg = request.getfixturevalue(alg_name)
    s = simple(alg, 0)
    assert modcat.hall_number_oracle(s, modcat.direct_sum(s, s), s) == q + 1
    assert modcat.hall_number_oracle(s, proj(alg, 0), simple(alg, 1)) == 1
    assert modcat.hall_number_oracle(simple(alg, 1), proj(alg, 0), s) == 0


def test_riedtmann_check(a2_universe):
    reps = [a2_universe.representative(cid) for cid in a2_universe]
    for a in reps:
        for c in reps:
            for b in reps:
                if b.total_dim != a.total_dim + c.total_dim or b.total_dim == 0:
                    continue
                lhs, rhs = modcat.riedtmann_check(a, b, c, a2_universe.classify)
                assert lhs == rhs


def test_module_invariant_and_dim_vectors(a2):
    assert modcat.dim_vectors(2, 1) == [(0, 0), (0, 1), (1, 0)]
    assert modcat.module_invariant(proj(a2, 0)) == ((1, 1), (1,))


# ### Break tests
def test_break_representation(a2):
    with raises(ValueError) as errorinfo:
        modcat.Representation(a2, (1,), [[[1]]])
    assert "does not match" in str(errorinfo.value)
    with raises(ValueError) as errorinfo:
        modcat.Representation(a2, (1, 1), [])
    assert "Expected 1 matrices" in str(errorinfo.value)


def test_break_module_universe(a2, a2_universe):
    with raises(BoundExceeded) as errorinfo:
        a2_universe.classify(modcat.projective_sum(a2, (0, 0)))
    assert "outside the universe" in str(errorinfo.value)
    with raises(SearchBudgetExceeded) as errorinfo:
        modcat.ModuleUniverse(a2, 4, raw_cap=10)
    assert "above the cap" in str(errorinfo.value)
    with raises(ValueError):
        modcat.ModuleUniverse(a2, -1)


def test_break_aut_order(a2):
    s = simple(a2, 0)
    with raises(SearchBudgetExceeded) as errorinfo:
        modcat.aut_order(modcat.direct_sum(s, s), cap=8)
    assert "automorphism count" in str(errorinfo.value)


def test_break_minimal_resolution():
    a4 = algdef.path_basis(
        algdef.presentation_from_dict(
            {
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
        )
    )
    with raises(GlobalDimensionExceeded) as errorinfo:
        modcat.minimal_resolution(simple(a4, 0))
    assert "global dimension exceeds 2" in str(errorinfo.value)
    with raises(GlobalDimensionExceeded):
        modcat.gldim_certificate(a4)
    assert modcat.minimal_resolution(simple(a4, 1)).p2.dim_vector == (0, 0, 0, 1)
