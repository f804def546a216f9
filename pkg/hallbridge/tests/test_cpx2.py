#!/usr/bin/env python3
"""Tests for operations.cpx2."""

from pytest import mark, raises

from hallbridge.errors import NotProjective, SearchBudgetExceeded
from hallbridge.operations import algdef, cpx2, modcat


def simple(alg, i):
    return algdef.standard_modules(alg, i, "simple")


def proj(alg, i):
    return algdef.standard_modules(alg, i, "projective")


def is_zero_rep(rep):
    return rep.total_dim == 0


# ### Unit tests
def test_c_of_module_a2(a2):
    cpx = cpx2.c_of_module(simple(a2, 0))
    assert cpx.m1.summands == (1,)
    assert cpx.m0.summands == (0,)
    assert cpx.is_complex()
    assert cpx.kclass.tolist() == [1, 0]
    h0, h1 = cpx2.homology(cpx)
    assert modcat.is_isomorphic(h0, simple(a2, 0))
    assert is_zero_rep(h1)
    assert not cpx2.is_acyclic(cpx)


def test_c_of_module_two_cycle(two_cycle):
    a = simple(two_cycle, 0)
    cpx = cpx2.c_of_module(a)
    assert cpx.m1.summands == (1,)
    assert cpx.m0.summands == (0, 0)
    assert cpx.is_complex()
    assert cpx.kclass.tolist() == [1, 0]
    h0, h1 = cpx2.homology(cpx)
    assert modcat.is_isomorphic(h0, a)
    assert is_zero_rep(h1)
    assert not cpx2.has_acyclic_summand(cpx)


@mark.parametrize("kind", ["plus", "star"])
def test_k_acyclic(two_cycle, kind):
    p = modcat.projective_sum(two_cycle, (0, 1))
    cpx = cpx2.k_acyclic(p, kind)
    assert cpx.is_complex()
    assert cpx2.is_acyclic(cpx)
    h0, h1 = cpx2.homology(cpx)
    assert is_zero_rep(h0) and is_zero_rep(h1)
    assert cpx.kclass.tolist() == [0, 0]
    assert cpx2.has_acyclic_summand(cpx)


def test_shift(a2_f3):
    p = proj(a2_f3, 0)
    plus, star = cpx2.k_acyclic(p, "plus"), cpx2.k_acyclic(p, "star")
    assert cpx2.is_isomorphic_c2(cpx2.shift(plus), star)
    assert not cpx2.is_isomorphic_c2(plus, star)
    cpx = cpx2.c_of_module(simple(a2_f3, 0))
    assert cpx2.shift(cpx2.shift(cpx)).encode() == cpx.encode()
    zero = cpx2.zero_complex(a2_f3)
    assert cpx2.shift(zero).encode() == zero.encode()
    assert (cpx2.shift(cpx).kclass == -cpx.kclass).all()


def test_direct_sum_c2(a2):
    a = cpx2.c_of_module(simple(a2, 0))
    b = cpx2.k_acyclic(proj(a2, 1), "star")
    total = cpx2.direct_sum_c2(a, b)
    assert total.m1.summands == (1, 1)
    assert total.m0.summands == (0, 1)
    assert total.is_complex()
    assert (total.kclass == a.kclass).all()


def test_hom_c2(a2):
    cpx = cpx2.c_of_module(simple(a2, 0))
    assert cpx2.hom_count_c2(cpx, cpx) == 2
    for f in cpx2.hom_basis_c2(cpx, cpx).basis:
        s1, s0 = f[:2], f[2:]
        assert modcat.is_morphism(s1, cpx.m1, cpx.m1)
        assert modcat.is_morphism(s0, cpx.m0, cpx.m0)
    zero = cpx2.zero_complex(a2)
    assert cpx2.hom_count_c2(zero, cpx) == 1


def test_ext_c2_a2(a2):
    c1 = cpx2.c_of_module(simple(a2, 0))
    c2 = cpx2.c_of_module(simple(a2, 1))
    assert a2.q ** cpx2.ext_data_c2(c1, c2).dim == 2
    assert cpx2.ext_data_c2(c2, c1).dim == 0
    store = cpx2.ComplexStore()
    tallies = cpx2.ext1_with_middles_c2(c1, c2, store)
    assert sum(tallies.values()) == 2
    split = cpx2.complex_class_id(cpx2.direct_sum_c2(c1, c2), store)
    assert tallies[split] == 1
    # the non split middle is K_P(2) plus the complex of P(1)
    nonsplit = cpx2.complex_class_id(cpx2.c_of_module(proj(a2, 0)), store)
    assert tallies[((0, 1), (0, 0), nonsplit[2])] == 1
    assert cpx2.ext1_with_middles_c2(c1, c2, store, exhaustive=True) == tallies


@mark.parametrize("alg_name", ["a2", "two_cycle"])
def test_ext_c2_matches_modules(alg_name, request):
    alg = request.getfixturevalue(alg_name)
    mods = [simple(alg, i) for i in range(alg.n_vertices)]
    mods += [proj(alg, i) for i in range(alg.n_vertices)]
    for a in mods:
        for b in mods:
            data = cpx2.ext_data_c2(cpx2.c_of_module(a), cpx2.c_of_module(b))
            assert data.dim == modcat.ext_dims(a, b)[1]


def test_ext_c2_middles_of_acyclics(a2):
    k = cpx2.k_acyclic(proj(a2, 0), "plus")
    store = cpx2.ComplexStore()
    for key in cpx2.ext1_with_middles_c2(k, k, store):
        assert cpx2.is_acyclic(store.representative(key[2]))


def test_strip_acyclics(a2):
    p, q = proj(a2, 0), proj(a2, 1)
    cpx = cpx2.direct_sum_c2(cpx2.k_acyclic(p, "plus"), cpx2.k_acyclic(q, "star"))
    pplus, pstar, core = cpx2.strip_acyclics(cpx)
    assert pplus.summands == (0,)
    assert pstar.summands == (1,)
    assert core.total_dim == 0
    a = cpx2.c_of_module(simple(a2, 0))
    pplus, pstar, core = cpx2.strip_acyclics(a)
    assert pplus.summands == () and pstar.summands == ()
    assert core.encode() == a.encode()


@mark.parametrize("r0, r1", [((0,), (1,)), ((1, 1), ()), ((), (0, 1))])
def test_strip_padded(two_cycle, r0, r1):
    a = simple(two_cycle, 0)
    padded = cpx2.c_of_module_padded(
        a, modcat.projective_sum(two_cycle, r0), modcat.projective_sum(two_cycle, r1)
    )
    assert padded.is_complex()
    assert (padded.kclass == a.kclass).all()
    pplus, pstar, core = cpx2.strip_acyclics(padded)
    assert pplus.summands == tuple(sorted(r0))
    assert pstar.summands == tuple(sorted(r1))
    assert cpx2.is_isomorphic_c2(core, cpx2.c_of_module(a))
    # shifting swaps the roles of the two paddings
    splus, sstar, _ = cpx2.strip_acyclics(cpx2.shift(padded), order=[1, 0])
    assert splus.summands == pstar.summands
    assert sstar.summands == pplus.summands


def test_multiplicities(two_cycle):
    assert cpx2.multiplicities(modcat.projective_sum(two_cycle, (1, 0, 1))) == (1, 2)


def test_complex_store(a2):
    store = cpx2.ComplexStore()
    a = cpx2.c_of_module(simple(a2, 0))
    cid = store.register(a)
    assert store.register(cpx2.c_of_module(simple(a2, 0))) == cid
    assert store.label(cid) == "Y0"
    assert cid in store and len(store) == 1
    assert store.representative(cid) is a
    # C_S2 has an empty first component, so its encoding comes first
    other = store.register(cpx2.c_of_module(simple(a2, 1)))
    assert other != cid and store.label(other) == "Y0"
    assert store.label(cid) == "Y1"
    assert store.canonical(cid) == a.encode()


@mark.parametrize("reverse", [False, True])
def test_complex_store_order_independent(a2, reverse):
    c_s1, c_s2 = cpx2.c_of_module(simple(a2, 0)), cpx2.c_of_module(simple(a2, 1))
    split = cpx2.direct_sum_c2(c_s1, c_s2)
    swapped = cpx2.direct_sum_c2(c_s2, c_s1)
    assert split.encode() < swapped.encode()
    cpxs = [swapped, c_s1, split, c_s2]
    if reverse:
        cpxs = cpxs[::-1]
    store = cpx2.ComplexStore()
    handles = [store.register(cpx) for cpx in cpxs]
    assert len(store) == 3
    assert store.register(swapped) == store.register(split)
    cid = store.register(split)
    assert store.canonical(cid) == split.encode()
    assert store.canonical(swapped.encode()) == split.encode()
    assert store.representative(cid).encode() == split.encode()
    labels = {store.canonical(h): store.label(h) for h in handles}
    assert labels == {
        c_s2.encode(): "Y0",
        c_s1.encode(): "Y1",
        split.encode(): "Y2",
    }


def test_complex_class_id(a2):
    store = cpx2.ComplexStore()
    k = cpx2.k_acyclic(proj(a2, 0), "plus")
    pmult, qmult, core = cpx2.complex_class_id(k, store)
    assert (pmult, qmult) == ((1, 0), (0, 0))
    assert store.representative(core).total_dim == 0


# ### Break tests
def test_break_complex2(a2):
    s = simple(a2, 0)
    with raises(NotProjective) as errorinfo:
        cpx2.Complex2(s, s, modcat.identity(s), modcat.zero_map(s, s))
    assert "sums of standard projectives" in str(errorinfo.value)
    with raises(NotProjective):
        cpx2.k_acyclic(s, "plus")
    with raises(NotProjective):
        cpx2.c_of_module_padded(s, r0=s)
    with raises(NotImplementedError) as errorinfo:
        cpx2.k_acyclic(proj(a2, 0), "minus")
    assert "not supported" in str(errorinfo.value)


def test_break_ext_c2(a2):
    c1 = cpx2.c_of_module(simple(a2, 0))
    c2 = cpx2.c_of_module(simple(a2, 1))
    with raises(SearchBudgetExceeded) as errorinfo:
        list(cpx2.homotopy_classes(c1, c2, cap=1))
    assert "complex extension enumeration" in str(errorinfo.value)
