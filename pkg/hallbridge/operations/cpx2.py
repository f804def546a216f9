#!/usr/bin/env python3
"""
2-periodic complexes of projective modules.

A complex ``M1 <-> M0`` has components that are sums of standard projectives
and differentials ``d1: M1 -> M0`` and ``d0: M0 -> M1`` composing to zero both
ways. Chain maps, homotopies and extensions are all solved as linear systems
over F_q on the flattened vertex matrices.
"""

import logging
from collections import Counter
from threading import RLock
from typing import NamedTuple

import numpy as np

from ..errors import NotProjective
from . import ffalg
from .modcat import (
    ISO_SEARCH_CAP,
    SEED,
    HomSpace,
    compose,
    direct_sum,
    flatten,
    has_invertible,
    hom_basis,
    identity,
    is_morphism,
    map_shapes,
    minimal_resolution,
    projective_sum,
    quotient_representation,
    subrepresentation,
    summand_offsets,
    unflatten,
    zero_map,
)

LGR = logging.getLogger(__name__)


def _neg(f, q):
    return tuple((-m) % q for m in f)


def _assemble(rows, cols, blocks, q):
    """
    Vertexwise block matrices from a dict ``(i, j) -> morphism cols[j] -> rows[i]``.

    Missing blocks are zero.
    """
    out = []
    for v in range(rows[0].alg.n_vertices):
        mat = np.zeros(
            (sum(r.dim_vector[v] for r in rows), sum(c.dim_vector[v] for c in cols)),
            dtype=np.int64,
        )
        top = 0
        for i, row in enumerate(rows):
            left = 0
            for j, col in enumerate(cols):
                if (i, j) in blocks:
                    mat[top : top + row.dim_vector[v], left : left + col.dim_vector[v]] = (
                        blocks[(i, j)][v]
                    )
                left += col.dim_vector[v]
            top += row.dim_vector[v]
        out.append(mat % q)
    return tuple(out)


def _sum_all(alg, reps):
    out = projective_sum(alg, ())
    for rep in reps:
        out = direct_sum(out, rep)
    return out


class Complex2:
    """
    A 2-periodic complex of projectives.

    Parameters
    ----------
    m1, m0 : hallbridge.operations.modcat.Representation
        Components, both sums of standard projectives.
    d1 : tuple of numpy.ndarray
        Vertex matrices of ``M1 -> M0``.
    d0 : tuple of numpy.ndarray
        Vertex matrices of ``M0 -> M1``.

    Raises
    ------
    NotProjective
        If a component does not record its projective summands.
    """

    def __init__(self, m1, m0, d1, d0):
        """Initialise Complex2 (see class docstring)."""
        if m1.summands is None or m0.summands is None:
            raise NotProjective(
                "Complex components must be sums of standard projectives."
            )
        q = m1.q
        self.m1 = m1
        self.m0 = m0
        self.d1 = tuple(
            ffalg.mod(f, q).reshape(shape) for f, shape in zip(d1, map_shapes(m1, m0))
        )
        self.d0 = tuple(
            ffalg.mod(f, q).reshape(shape) for f, shape in zip(d0, map_shapes(m0, m1))
        )

    @property
    def alg(self):
        """The algebra."""
        return self.m1.alg

    @property
    def q(self):
        """Field size."""
        return self.m1.q

    @property
    def kclass(self):
        """Class in the Grothendieck group: ``M0 - M1`` in the basis of simples."""
        return self.m0.kclass - self.m1.kclass

    @property
    def total_dim(self):
        """Total dimension of both components."""
        return self.m1.total_dim + self.m0.total_dim

    def is_complex(self):
        """Check that differentials are morphisms composing to zero both ways."""
        if not (is_morphism(self.d1, self.m1, self.m0)
                and is_morphism(self.d0, self.m0, self.m1)):
            return False
        return not any(
            (a @ b % self.q).any()
            for a, b in zip(self.d0, self.d1)
        ) and not any((b @ a % self.q).any() for a, b in zip(self.d0, self.d1))

    def encode(self):
        """Byte encoding: summand lists, then both differentials."""
        s1, s0 = self.m1.summands, self.m0.summands
        head = bytes([len(s1)]) + bytes(s1) + bytes([len(s0)]) + bytes(s0)
        return head + flatten(self.d1 + self.d0).astype(np.uint8).tobytes()

    def __repr__(self):
        return f"Complex2(m1={self.m1.summands}, m0={self.m0.summands})"


def zero_complex(alg):
    """The zero complex."""
    zero = projective_sum(alg, ())
    return Complex2(zero, zero, zero_map(zero, zero), zero_map(zero, zero))


def shift(cpx):
    """Swap the components and negate both differentials."""
    q = cpx.q
    return Complex2(cpx.m0, cpx.m1, _neg(cpx.d0, q), _neg(cpx.d1, q))


def direct_sum_c2(a, b):
    """Direct sum of two complexes, summands concatenated."""
    q = a.q
    d1 = _assemble([a.m0, b.m0], [a.m1, b.m1], {(0, 0): a.d1, (1, 1): b.d1}, q)
    d0 = _assemble([a.m1, b.m1], [a.m0, b.m0], {(0, 0): a.d0, (1, 1): b.d0}, q)
    return Complex2(direct_sum(a.m1, b.m1), direct_sum(a.m0, b.m0), d1, d0)


def _subquotient(rep, outer, inner):
    """``span(outer) / span(inner)`` for nested vertexwise bases of `rep`."""
    q = rep.q
    sub, _ = subrepresentation(rep, outer)
    coords = []
    for out_v, in_v in zip(outer, inner):
        _, inv = ffalg.basis_extension(out_v, q)
        coords.append(ffalg.colspace(inv[: out_v.shape[1]] @ in_v % q, q))
    quo, _ = quotient_representation(sub, coords)
    return quo


def homology(cpx):
    """
    Homology of a complex.

    Returns
    -------
    Representation
        ``H0 = ker d0 / im d1``.
    Representation
        ``H1 = ker d1 / im d0``.
    """
    q = cpx.q
    h0 = _subquotient(
        cpx.m0,
        [ffalg.nullspace(f, q) for f in cpx.d0],
        [ffalg.colspace(f, q) for f in cpx.d1],
    )
    h1 = _subquotient(
        cpx.m1,
        [ffalg.nullspace(f, q) for f in cpx.d1],
        [ffalg.colspace(f, q) for f in cpx.d0],
    )
    return h0, h1


def is_acyclic(cpx):
    """Return True if both homologies vanish."""
    q = cpx.q
    for v in range(cpx.alg.n_vertices):
        r1 = ffalg.rank(cpx.d1[v], q)
        r0 = ffalg.rank(cpx.d0[v], q)
        if cpx.m0.dim_vector[v] != r0 + r1 or cpx.m1.dim_vector[v] != r0 + r1:
            return False
    return True


def k_acyclic(proj, kind):
    """
    The contractible complex on a projective.

    Parameters
    ----------
    proj : Representation
        A sum of standard projectives.
    kind : 'plus' or 'star'
        ``plus`` has ``d1`` the identity and ``d0`` zero, ``star`` the reverse.

    Raises
    ------
    NotProjective
        If `proj` does not record its summands.
    NotImplementedError
        If `kind` is not supported.
    """
    if proj.summands is None:
        raise NotProjective("Acyclic complexes need a sum of standard projectives.")
    if kind == "plus":
        return Complex2(proj, proj, identity(proj), zero_map(proj, proj))
    if kind == "star":
        return Complex2(proj, proj, zero_map(proj, proj), identity(proj))
    raise NotImplementedError(f"Acyclic complex kind {kind} is not supported.")


def c_of_module(rep, res=None):
    """
    The complex ``P1 <-> P0 + P2`` of a minimal resolution of `rep`.

    ``d1 = (a1, 0)`` and ``d0 = (0, a2)``.

    Raises
    ------
    GlobalDimensionExceeded
        If `rep` has projective dimension above 2.
    """
    return c_of_module_padded(rep, None, None, res)


def c_of_module_padded(rep, r0=None, r1=None, res=None):
    """
    The complex of a minimal resolution padded by two projectives.

    The components are ``M1 = R0 + P1 + R1`` and ``M0 = R0 + P0 + R1 + P2``;
    ``d1`` is the identity from R0 to R0 and a1 from P1 to P0,
    ``d0`` is a2 from P2 to P1 and the identity from R1 to R1.
    The result is isomorphic to ``C_A + K_R0 + K*_R1``.

    Parameters
    ----------
    rep : Representation
    r0, r1 : Representation or None, optional
        Sums of standard projectives; None stands for zero.
    res : Resolution or None, optional
        Minimal resolution of `rep`, computed if not given.

    Raises
    ------
    NotProjective
        If a padding is not a sum of standard projectives.
    """
    alg, q = rep.alg, rep.q
    res = res if res is not None else minimal_resolution(rep)
    zero = projective_sum(alg, ())
    r0 = zero if r0 is None else r0
    r1 = zero if r1 is None else r1
    if r0.summands is None or r1.summands is None:
        raise NotProjective("Paddings must be sums of standard projectives.")
    rows0 = [r0, res.p0, r1, res.p2]
    cols1 = [r0, res.p1, r1]
    d1 = _assemble(rows0, cols1, {(0, 0): identity(r0), (1, 1): res.a1}, q)
    d0 = _assemble(cols1, rows0, {(1, 3): res.a2, (2, 2): identity(r1)}, q)
    return Complex2(_sum_all(alg, cols1), _sum_all(alg, rows0), d1, d0)


# ### Chain maps
def _columns(vectors, nrows):
    if not vectors:
        return np.zeros((nrows, 0), dtype=np.int64)
    return np.stack(vectors, axis=1)


def hom_basis_c2(a, b):
    """
    Basis of chain maps ``a -> b``.

    Each element is the tuple of vertex matrices of ``s1: a.M1 -> b.M1``
    followed by those of ``s0: a.M0 -> b.M0``, with ``s0 d1 = d1' s1`` and
    ``s1 d0 = d0' s0``.

    Returns
    -------
    hallbridge.operations.modcat.HomSpace
    """
    q = a.q
    n = a.alg.n_vertices
    homs1 = hom_basis(a.m1, b.m1).basis
    homs0 = hom_basis(a.m0, b.m0).basis
    nrows = sum(r * c for r, c in map_shapes(a.m1, b.m0) + map_shapes(a.m0, b.m1))
    cols = [
        flatten(_neg(compose(b.d1, s1, q), q) + compose(s1, a.d0, q)) for s1 in homs1
    ] + [
        flatten(compose(s0, a.d1, q) + _neg(compose(b.d0, s0, q), q)) for s0 in homs0
    ]
    kernel = ffalg.nullspace(_columns(cols, nrows), q)
    basis = []
    for k in range(kernel.shape[1]):
        coeffs = kernel[:, k]
        s1 = _span(homs1, coeffs[: len(homs1)], map_shapes(a.m1, b.m1), q)
        s0 = _span(homs0, coeffs[len(homs1) :], map_shapes(a.m0, b.m0), q)
        basis.append(s1 + s0)
    LGR.debug(f"Chain maps between {n}-vertex complexes: dimension {len(basis)}.")
    return HomSpace(len(basis), basis)


def _span(basis, coeffs, shapes, q):
    out = [np.zeros(shape, dtype=np.int64) for shape in shapes]
    for c, mor in zip(coeffs, basis):
        if c:
            out = [o + int(c) * m for o, m in zip(out, mor)]
    return tuple(o % q for o in out)


def hom_count_c2(a, b):
    """Number of chain maps ``a -> b``."""
    return a.q ** hom_basis_c2(a, b).dim


def _quick_invariant(cpx):
    q = cpx.q
    return (
        tuple(sorted(cpx.m1.summands)),
        tuple(sorted(cpx.m0.summands)),
        tuple(ffalg.rank(f, q) for f in cpx.d1),
        tuple(ffalg.rank(f, q) for f in cpx.d0),
    )


def is_isomorphic_c2(a, b, cap=ISO_SEARCH_CAP, seed=SEED):
    """
    Decide whether two complexes are isomorphic.

    See `hallbridge.operations.modcat.has_invertible` for how the search is
    bounded by `cap`.
    """
    if _quick_invariant(a) != _quick_invariant(b):
        return False
    homs = hom_basis_c2(a, b)
    shapes = map_shapes(a.m1, b.m1) + map_shapes(a.m0, b.m0)
    return has_invertible(homs.basis, shapes, a.q, cap, seed)


# ### Extensions
class ExtC2Data(NamedTuple):
    """Chain maps ``M -> N*`` modulo null-homotopic ones, flattened as ``f1 + f0``."""

    source: Complex2
    target: Complex2
    cocycles: np.ndarray
    coboundary_rank: int
    complement: np.ndarray

    @property
    def dim(self):
        """Dimension of the Ext^1 group."""
        return self.complement.shape[1]

    @property
    def shapes(self):
        """Vertex shapes of ``f1: M1 -> N0`` followed by ``f0: M0 -> N1``."""
        return map_shapes(self.source.m1, self.target.m0) + map_shapes(
            self.source.m0, self.target.m1
        )


def ext_data_c2(m, n):
    """
    Ext^1 of `m` by `n` in the category of complexes.

    Cocycles are pairs ``f1: M1 -> N0``, ``f0: M0 -> N1`` with
    ``d0' f1 + f0 d1 = 0`` and ``d1' f0 + f1 d0 = 0``. Coboundaries are
    ``f1 = h0 d1 - d1' h1`` and ``f0 = h1 d0 - d0' h0``.
    """
    q = m.q
    homs1 = hom_basis(m.m1, n.m0).basis
    homs0 = hom_basis(m.m0, n.m1).basis
    full = [flatten(f1 + zero_map(m.m0, n.m1)) for f1 in homs1] + [
        flatten(zero_map(m.m1, n.m0) + f0) for f0 in homs0
    ]
    conds = [
        flatten(compose(n.d0, f1, q) + compose(f1, m.d0, q)) for f1 in homs1
    ] + [
        flatten(compose(f0, m.d1, q) + compose(n.d1, f0, q)) for f0 in homs0
    ]
    nflat = sum(r * c for r, c in map_shapes(m.m1, n.m0) + map_shapes(m.m0, n.m1))
    ncond = sum(r * c for r, c in map_shapes(m.m1, n.m1) + map_shapes(m.m0, n.m0))
    kernel = ffalg.nullspace(_columns(conds, ncond), q)
    cocycles = _columns(full, nflat) @ kernel % q

    bounds = [
        flatten(compose(h0, m.d1, q) + _neg(compose(n.d0, h0, q), q))
        for h0 in hom_basis(m.m0, n.m0).basis
    ] + [
        flatten(_neg(compose(n.d1, h1, q), q) + compose(h1, m.d0, q))
        for h1 in hom_basis(m.m1, n.m1).basis
    ]
    coboundaries = _columns(bounds, nflat)
    complement = ffalg.complement_columns(coboundaries, cocycles, q)
    return ExtC2Data(m, n, cocycles, ffalg.rank(coboundaries, q), complement)


def extension_middle(m, n, f1, f0):
    """
    Middle of the extension ``0 -> n -> X -> m -> 0`` given by ``(f1, f0)``.

    ``X1 = N1 + M1``, ``X0 = N0 + M0`` with upper triangular differentials.
    """
    q = m.q
    d1 = _assemble([n.m0, m.m0], [n.m1, m.m1], {(0, 0): n.d1, (0, 1): f1, (1, 1): m.d1}, q)
    d0 = _assemble([n.m1, m.m1], [n.m0, m.m0], {(0, 0): n.d0, (0, 1): f0, (1, 1): m.d0}, q)
    return Complex2(direct_sum(n.m1, m.m1), direct_sum(n.m0, m.m0), d1, d0)


def homotopy_classes(m, n, cap=ISO_SEARCH_CAP, data=None):
    """
    Yield one cocycle ``(f1, f0)`` per element of Ext^1 of `m` by `n`.

    Raises
    ------
    SearchBudgetExceeded
        If the number of classes exceeds `cap`.
    """
    q = m.q
    data = data if data is not None else ext_data_c2(m, n)
    ffalg.count_check(q, data.dim, cap, "complex extension enumeration")
    split = len(map_shapes(m.m1, n.m0))
    for chunk in ffalg.iter_coefficients(data.dim, q):
        for coeffs in chunk:
            blocks = unflatten(data.complement @ coeffs % q, data.shapes)
            yield blocks[:split], blocks[split:]


def ext1_with_middles_c2(m, n, store=None, cap=ISO_SEARCH_CAP, exhaustive=False):
    """
    Tally the elements of Ext^1 of `m` by `n` by the class of their middle.

    Parameters
    ----------
    m, n : Complex2
        The extensions are ``0 -> n -> X -> m -> 0``.
    store : ComplexStore or None, optional
        Registry of acyclic-free classes; a fresh one is used if None.
    cap : int, optional
        Enumeration budget.
    exhaustive : bool, optional
        Enumerate every cocycle and divide by the number of coboundaries,
        instead of one cocycle per class.

    Returns
    -------
    dict
        `complex_class_id` of the middle -> number of Ext^1 elements.

    Raises
    ------
    SearchBudgetExceeded
        If the enumeration exceeds `cap`.
    """
    q = m.q
    store = store if store is not None else ComplexStore(cap=cap)
    data = ext_data_c2(m, n)
    tallies = Counter()
    if not exhaustive:
        for f1, f0 in homotopy_classes(m, n, cap, data):
            tallies[complex_class_id(extension_middle(m, n, f1, f0), store)] += 1
        return dict(tallies)

    ncocycles = data.cocycles.shape[1]
    ffalg.count_check(q, ncocycles, cap, "cocycle enumeration")
    split = len(map_shapes(m.m1, n.m0))
    for chunk in ffalg.iter_coefficients(ncocycles, q):
        for coeffs in chunk:
            blocks = unflatten(data.cocycles @ coeffs % q, data.shapes)
            middle = extension_middle(m, n, blocks[:split], blocks[split:])
            tallies[complex_class_id(middle, store)] += 1
    homotopic = q**data.coboundary_rank
    out = {}
    for key, count in tallies.items():
        if count % homotopic:
            raise ArithmeticError(
                f"Tally {count} is not divisible by {homotopic} null-homotopic maps."
            )
        out[key] = count // homotopic
    return out


# ### Acyclic summands
def _top_pivot(cpx, order):
    """Find summands c of M1 and r of M0 at one vertex with an invertible block of d1."""
    alg = cpx.alg
    off1 = summand_offsets(alg, cpx.m1.summands)
    off0 = summand_offsets(alg, cpx.m0.summands)
    for i in order:
        for c, vc in enumerate(cpx.m1.summands):
            if vc != i:
                continue
            for r, vr in enumerate(cpx.m0.summands):
                if vr == i and cpx.d1[i][off0[i][r], off1[i][c]]:
                    return c, r
    return None


def _peel(cpx, c, r):
    """Split off the contractible summand through summand c of M1 and r of M0."""
    alg, q = cpx.alg, cpx.q
    s1, s0 = cpx.m1.summands, cpx.m0.summands
    off1 = summand_offsets(alg, s1)
    off0 = summand_offsets(alg, s0)
    d1, d0 = [], []
    for v in range(alg.n_vertices):
        size = int(alg.cartan[v, s1[c]])
        cols = np.arange(off1[v][c], off1[v][c] + size)
        rows = np.arange(off0[v][r], off0[v][r] + size)
        rest1 = np.setdiff1d(np.arange(cpx.m1.dim_vector[v]), cols)
        rest0 = np.setdiff1d(np.arange(cpx.m0.dim_vector[v]), rows)
        mat = cpx.d1[v]
        u = mat[np.ix_(rows, cols)]
        beta = mat[np.ix_(rows, rest1)]
        gamma = mat[np.ix_(rest0, cols)]
        delta = mat[np.ix_(rest0, rest1)]
        if size:
            delta = delta - gamma @ ffalg.inverse(u, q) @ beta
        d1.append(delta % q)
        d0.append(cpx.d0[v][np.ix_(rest1, rest0)])
    m1 = projective_sum(alg, s1[:c] + s1[c + 1 :])
    m0 = projective_sum(alg, s0[:r] + s0[r + 1 :])
    return Complex2(m1, m0, d1, d0)


def _strip_plus(cpx, order):
    peeled = []
    while True:
        pivot = _top_pivot(cpx, order)
        if pivot is None:
            return peeled, cpx
        peeled.append(cpx.m1.summands[pivot[0]])
        cpx = _peel(cpx, *pivot)


def strip_acyclics(cpx, order=None):
    """
    Split a complex as ``K_P + K*_Q + Y`` with Y free of acyclic summands.

    Contractible summands ``K_P(i)`` are found as invertible entries of d1
    between tops of P(i) summands and removed by a Schur complement; ``K*``
    summands are removed the same way on the shifted complex.

    Parameters
    ----------
    cpx : Complex2
    order : sequence of int or None, optional
        Order in which vertices are scanned.

    Returns
    -------
    Representation
        P, a sum of standard projectives.
    Representation
        Q, a sum of standard projectives.
    Complex2
        Y.
    """
    alg = cpx.alg
    order = range(alg.n_vertices) if order is None else order
    plus, cpx = _strip_plus(cpx, order)
    star, shifted = _strip_plus(shift(cpx), order)
    return (
        projective_sum(alg, sorted(plus)),
        projective_sum(alg, sorted(star)),
        shift(shifted),
    )


def multiplicities(proj):
    """Number of summands of each standard projective in `proj`."""
    counts = [0] * proj.alg.n_vertices
    for vertex in proj.summands:
        counts[vertex] += 1
    return tuple(counts)


class ComplexStore:
    """
    Thread-safe registry of acyclic-free complexes up to isomorphism.

    Every encoding registered is remembered as an alias of its class. The
    canonical id of a class is the least encoding registered in it, whatever
    the order of registration; it is also the encoding of the representative.
    `register` returns a handle, the first encoding met, which stays valid
    as a key for the life of the store.

    Parameters
    ----------
    cap : int, optional
        Budget of each isomorphism search.
    seed : int, optional
        Seed of the random isomorphism candidates.
    """

    def __init__(self, cap=ISO_SEARCH_CAP, seed=SEED):
        """Initialise ComplexStore (see class docstring)."""
        self.cap = cap
        self.seed = seed
        self._lock = RLock()
        self._buckets = {}
        self._reps = {}
        self._least = {}
        self._aliases = {}

    def __len__(self):
        return len(self._reps)

    def __contains__(self, cid):
        return cid in self._reps

    def register(self, cpx):
        """Return the handle of the class of `cpx`, inserting it if new."""
        code = cpx.encode()
        inv = _quick_invariant(cpx)
        with self._lock:
            if code in self._aliases:
                return self._aliases[code]
            cid = next(
                (
                    cid
                    for cid in self._buckets.get(inv, [])
                    if is_isomorphic_c2(self._reps[cid], cpx, self.cap, self.seed)
                ),
                None,
            )
            if cid is None:
                cid = code
                self._buckets.setdefault(inv, []).append(cid)
                self._least[cid] = code
                self._reps[cid] = cpx
                LGR.debug(f"Registered complex class {code.hex()}.")
            elif code < self._least[cid]:
                self._least[cid] = code
                self._reps[cid] = cpx
            self._aliases[code] = cid
            return cid

    def representative(self, cid):
        """The member of the class with the least encoding."""
        return self._reps[cid]

    def canonical(self, cid):
        """Least encoding registered in the class of handle `cid`."""
        with self._lock:
            return self._least[self._aliases.get(cid, cid)]

    def label(self, cid):
        """Short label ``Y<n>``, n the rank of the canonical id among all classes."""
        with self._lock:
            ranked = sorted(self._least.values())
            return f"Y{ranked.index(self.canonical(cid))}"


def complex_class_id(cpx, store, order=None):
    """
    Canonical id of any complex: acyclic multiplicities and the class of the rest.

    Returns
    -------
    tuple
        ``(P multiplicities, Q multiplicities, id of Y in store)``.
    """
    pplus, pstar, core = strip_acyclics(cpx, order)
    return multiplicities(pplus), multiplicities(pstar), store.register(core)


def has_acyclic_summand(cpx):
    """Return True if `cpx` has a summand K_P or K*_P."""
    vertices = range(cpx.alg.n_vertices)
    return _top_pivot(cpx, vertices) is not None or _top_pivot(shift(cpx), vertices) is not None


"""
Copyright 2024, hallbridge developers.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""
