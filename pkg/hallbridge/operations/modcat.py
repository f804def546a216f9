#!/usr/bin/env python3
"""
Modules over a quiver algebra as representations over F_q.

Morphisms are tuples of matrices, one per vertex. Counting is always done as
``q**dim`` of a solution space, except for isomorphism searches and the subspace
oracle, which enumerate explicitly under a budget.

Attributes
----------
LGR
    Logger
ISO_SEARCH_CAP
    Default cap on the number of candidates of an exhaustive search.
RAW_REPRESENTATION_CAP
    Default cap on the number of arrow-matrix tuples enumerated.
N_CANDIDATES
    Number of random candidates tried before an exhaustive isomorphism search.
EXTENSION_MARGIN
    Least ratio between the size of the extension field used by
    `has_invertible` and the degree of the determinant.
EXTENSION_TRIALS
    Number of random candidates over the extension field.
"""

import logging
from itertools import product
from typing import NamedTuple

import numpy as np

from ..errors import BoundExceeded, GlobalDimensionExceeded, SearchBudgetExceeded
from . import ffalg
from .algdef import relation_matrix

LGR = logging.getLogger(__name__)

ISO_SEARCH_CAP = 10**6
RAW_REPRESENTATION_CAP = 10**7
N_CANDIDATES = 64
EXTENSION_MARGIN = 2**8
EXTENSION_TRIALS = 8
SEED = 42


class Representation:
    """
    A representation of the quiver of `alg` satisfying its relations.

    Parameters
    ----------
    alg : hallbridge.operations.algdef.AlgebraData
        The algebra.
    dim_vector : sequence of int
        Dimension at each vertex.
    mats : sequence of numpy.ndarray
        One matrix per arrow ``x: u -> v``, of shape ``(dim_v, dim_u)``.
    summands : sequence of int or None, optional
        For direct sums of standard projectives, the vertex of each summand.
    """

    def __init__(self, alg, dim_vector, mats, summands=None):
        """Initialise Representation (see class docstring)."""
        self.alg = alg
        self.dim_vector = tuple(int(d) for d in dim_vector)
        if len(self.dim_vector) != alg.n_vertices:
            raise ValueError(
                f"Dimension vector {self.dim_vector} does not match "
                f"{alg.n_vertices} vertices."
            )
        if len(mats) != len(alg.arrows):
            raise ValueError(f"Expected {len(alg.arrows)} matrices, got {len(mats)}.")
        checked = []
        for mat, arrow in zip(mats, alg.arrows):
            shape = (self.dim_vector[arrow.target], self.dim_vector[arrow.source])
            mat = ffalg.mod(mat, alg.q).reshape(shape)
            checked.append(mat)
        self.mats = tuple(checked)
        self.summands = None if summands is None else tuple(summands)

    @classmethod
    def zero_arrows(cls, alg, dim_vector):
        """Semisimple representation with all arrows acting as zero."""
        mats = [
            np.zeros((dim_vector[a.target], dim_vector[a.source]), dtype=np.int64)
            for a in alg.arrows
        ]
        return cls(alg, dim_vector, mats)

    @property
    def q(self):
        """Field size."""
        return self.alg.q

    @property
    def total_dim(self):
        """Total dimension."""
        return sum(self.dim_vector)

    @property
    def kclass(self):
        """Class in the Grothendieck group, in the basis of simples."""
        return np.array(self.dim_vector, dtype=np.int64)

    def encode(self):
        """Byte encoding: dimension vector, then arrow matrices row by row."""
        head = bytes([len(self.dim_vector)]) + bytes(self.dim_vector)
        return head + b"".join(m.astype(np.uint8).tobytes() for m in self.mats)

    def path_matrix(self, path):
        """Matrix of a path (`hallbridge.operations.algdef.Path`)."""
        mat = np.eye(self.dim_vector[path.source], dtype=np.int64)
        for x in path.arrows:
            mat = self.mats[x] @ mat % self.q
        return mat

    def satisfies_relations(self):
        """Return True if every relation acts as zero."""
        return all(
            not relation_matrix(self.alg, self.dim_vector, self.mats, rel).any()
            for rel in self.alg.presentation.relations
        )

    def __repr__(self):
        return f"Representation(dim_vector={self.dim_vector})"


def _block_diag(a, b):
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=np.int64)
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0] :, a.shape[1] :] = b
    return out


def direct_sum(a, b):
    """Direct sum of two representations; summands are concatenated if known."""
    mats = [_block_diag(x, y) for x, y in zip(a.mats, b.mats)]
    dims = tuple(x + y for x, y in zip(a.dim_vector, b.dim_vector))
    summands = None
    if a.summands is not None and b.summands is not None:
        summands = a.summands + b.summands
    return Representation(a.alg, dims, mats, summands)


def projective_sum(alg, summands):
    """
    Direct sum of standard projectives, one per entry of `summands`.

    At each vertex the basis lists the paths of the first summand, then those
    of the second, and so on.
    """
    summands = tuple(int(i) for i in summands)
    rep = Representation.zero_arrows(alg, (0,) * alg.n_vertices)
    rep.summands = ()
    for vertex in summands:
        dims, mats = alg.projective_matrices(vertex)
        rep = direct_sum(rep, Representation(alg, dims, mats, (vertex,)))
    return rep


def summand_offsets(alg, summands):
    """``offsets[v][s]`` is the first coordinate of summand s at vertex v."""
    offsets = []
    for v in range(alg.n_vertices):
        start, row = 0, []
        for vertex in summands:
            row.append(start)
            start += int(alg.cartan[v, vertex])
        offsets.append(row)
    return offsets


# ### Morphisms
def compose(f, g, q):
    """Vertexwise composite ``f o g``."""
    return tuple(fv @ gv % q for fv, gv in zip(f, g))


def is_morphism(f, source, target):
    """Return True if the vertex maps `f` commute with every arrow."""
    q = source.q
    return all(
        not ((target.mats[x] @ f[a.source] - f[a.target] @ source.mats[x]) % q).any()
        for x, a in enumerate(source.alg.arrows)
    )


def identity(rep):
    """Identity morphism of `rep`."""
    return tuple(np.eye(d, dtype=np.int64) for d in rep.dim_vector)


def zero_map(source, target):
    """Zero morphism from `source` to `target`."""
    return tuple(
        np.zeros((dt, ds), dtype=np.int64)
        for ds, dt in zip(source.dim_vector, target.dim_vector)
    )


def flatten(maps):
    """Concatenate vertex matrices of one or more morphisms into a vector."""
    parts = [np.asarray(m, dtype=np.int64).ravel() for m in maps]
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(parts)


def unflatten(vec, shapes):
    """Inverse of `flatten` for the given matrix shapes."""
    out, start = [], 0
    for rows, cols in shapes:
        out.append(np.asarray(vec[start : start + rows * cols]).reshape(rows, cols))
        start += rows * cols
    return tuple(out)


def map_shapes(source, target):
    """Vertex matrix shapes of a morphism `source` -> `target`."""
    return [(dt, ds) for ds, dt in zip(source.dim_vector, target.dim_vector)]


def combine(basis, coeffs, q):
    """Linear combination of morphisms with the given coefficients."""
    out = None
    for c, mor in zip(coeffs, basis):
        if c % q == 0:
            continue
        term = tuple(int(c) * m for m in mor)
        out = term if out is None else tuple(a + b for a, b in zip(out, term))
    if out is None:
        return None
    return tuple(m % q for m in out)


class HomSpace(NamedTuple):
    """A basis of a Hom space; its cardinality is ``q**dim``."""

    dim: int
    basis: list


def hom_basis(a, b):
    """
    Basis of ``Hom(a, b)``: vertex maps commuting with every arrow.

    For each arrow ``x: u -> v`` the unknowns satisfy
    ``b_x @ phi_u == phi_v @ a_x``, written with row-major vectorisation.

    Parameters
    ----------
    a, b : Representation

    Returns
    -------
    HomSpace
    """
    q = a.q
    shapes = map_shapes(a, b)
    sizes = [r * c for r, c in shapes]
    starts = np.cumsum([0] + sizes)
    nvar = int(starts[-1])
    if nvar == 0:
        return HomSpace(0, [])
    blocks = []
    for x, arrow in enumerate(a.alg.arrows):
        u, v = arrow.source, arrow.target
        nrows = b.dim_vector[v] * a.dim_vector[u]
        if nrows == 0:
            continue
        block = np.zeros((nrows, nvar), dtype=np.int64)
        if sizes[u]:
            block[:, starts[u] : starts[u + 1]] += np.kron(
                b.mats[x], np.eye(a.dim_vector[u], dtype=np.int64)
            )
        if sizes[v]:
            block[:, starts[v] : starts[v + 1]] -= np.kron(
                np.eye(b.dim_vector[v], dtype=np.int64), a.mats[x].T
            )
        blocks.append(block % q)
    system = np.vstack(blocks) if blocks else np.zeros((0, nvar), dtype=np.int64)
    kernel = ffalg.nullspace(system, q)
    basis = [unflatten(kernel[:, k], shapes) for k in range(kernel.shape[1])]
    return HomSpace(len(basis), basis)


# ### Invertibility searches
def _stacks(basis, nblocks):
    """Per block position, the array (h, r, c) of basis matrices."""
    return [np.stack([mor[k] for mor in basis]) for k in range(nblocks)]


def _invertible_mask(coeffs, stacks, q):
    mask = np.ones(coeffs.shape[0], dtype=bool)
    for stack in stacks:
        if stack.shape[1] == 0:
            continue
        mats = np.tensordot(coeffs, stack, axes=(1, 0)) % q
        mask &= ffalg.batch_invertible(mats, q)
    return mask


def find_invertible(basis, shapes, q, cap=ISO_SEARCH_CAP, seed=SEED):
    """
    Find a blockwise invertible element in the span of `basis`.

    Random candidates are tried first; then all ``q**len(basis)`` combinations
    are enumerated.

    Parameters
    ----------
    basis : list of tuple of numpy.ndarray
        Spanning morphisms, each a tuple of blocks.
    shapes : list of tuple of int
        Block shapes; every block must be square for a solution to exist.
    q : int
        Field size.
    cap : int, optional
        Budget for the exhaustive phase.
    seed : int, optional
        Seed of the random phase.

    Returns
    -------
    tuple of numpy.ndarray or None

    Raises
    ------
    SearchBudgetExceeded
        If the exhaustive phase is needed and exceeds `cap`.
    """
    if any(r != c for r, c in shapes):
        return None
    if all(r == 0 for r, _ in shapes):
        return tuple(np.zeros(shape, dtype=np.int64) for shape in shapes)
    if not basis:
        return None
    stacks = _stacks(basis, len(shapes))
    found = _random_hit(basis, stacks, q, np.random.default_rng(seed))
    if found is not None:
        return found
    ffalg.count_check(q, len(basis), cap, "isomorphism search")
    return _exhaustive(basis, stacks, q)


def _random_hit(basis, stacks, q, rng):
    candidates = rng.integers(0, q, size=(N_CANDIDATES, len(basis)))
    mask = _invertible_mask(candidates, stacks, q)
    if mask.any():
        return combine(basis, candidates[int(mask.argmax())], q)
    return None


def _exhaustive(basis, stacks, q):
    for coeffs in ffalg.iter_coefficients(len(basis), q):
        mask = _invertible_mask(coeffs, stacks, q)
        if mask.any():
            return combine(basis, coeffs[int(mask.argmax())], q)
    return None


def extension_degree(q, n):
    """Least prime k with ``q**k >= EXTENSION_MARGIN * n``."""
    k = 2
    while q**k < EXTENSION_MARGIN * max(n, 1) or not ffalg.is_prime(k):
        k += 1
    return k


def _lifted_invertible(stack, scalars, q):
    """Invertibility of ``sum_i stack[i] * scalars[i]`` over the extension field."""
    r, k = stack.shape[1], scalars.shape[1]
    if r == 0:
        return True
    lifted = np.einsum("irc,iab->racb", stack, scalars).reshape(r * k, r * k) % q
    return ffalg.rank(lifted, q) == r * k


def _extension_invertible(stacks, q, rng):
    """
    Look for an invertible element of the span over a field extension of F_q.

    Scalars of the extension act on F_q**k as matrices, so that an element
    ``sum_i c_i B_i`` is the F_q matrix ``sum_i kron(B_i, c_i)``. Its
    determinant is a polynomial of degree n in the c_i, nonzero at a random
    point with probability at least ``1 - n / q**k`` when it is nonzero.
    """
    n = sum(stack.shape[1] for stack in stacks)
    k = extension_degree(q, n)
    comp = ffalg.extension_field(q, k)
    dim = stacks[0].shape[0]
    for _ in range(EXTENSION_TRIALS):
        scalars = ffalg.extension_elements(rng.integers(0, q, size=(dim, k)), comp, q)
        if all(_lifted_invertible(stack, scalars, q) for stack in stacks):
            return True
    return False


def has_invertible(basis, shapes, q, cap=ISO_SEARCH_CAP, seed=SEED):
    """
    Decide whether the span of `basis` has a blockwise invertible element.

    Random candidates over F_q are tried first, then random candidates over a
    field extension: modules isomorphic over an extension of F_q are
    isomorphic over F_q, so a hit there is conclusive. Without a hit the
    exhaustive search gives the exact answer when ``q**len(basis)`` fits in
    `cap`; otherwise the answer is False, wrong with probability at most
    ``EXTENSION_MARGIN**-EXTENSION_TRIALS``.

    Parameters
    ----------
    basis, shapes, q, cap, seed
        As in `find_invertible`.

    Returns
    -------
    bool
    """
    if any(r != c for r, c in shapes):
        return False
    if all(r == 0 for r, _ in shapes):
        return True
    if not basis:
        return False
    stacks = _stacks(basis, len(shapes))
    rng = np.random.default_rng(seed)
    if _random_hit(basis, stacks, q, rng) is not None:
        return True
    if _extension_invertible(stacks, q, rng):
        return True
    if cap is None or q ** len(basis) <= cap:
        return _exhaustive(basis, stacks, q) is not None
    LGR.debug(f"No invertible element in a span of dimension {len(basis)}, "
              "decided over a field extension.")
    return False


def count_invertible(basis, shapes, q, cap=ISO_SEARCH_CAP):
    """Number of blockwise invertible elements in the span of `basis`."""
    if any(r != c for r, c in shapes):
        return 0
    if not basis:
        return int(all(r == 0 for r, _ in shapes))
    stacks = _stacks(basis, len(shapes))
    ffalg.count_check(q, len(basis), cap, "automorphism count")
    return int(
        sum(_invertible_mask(c, stacks, q).sum()
            for c in ffalg.iter_coefficients(len(basis), q))
    )


def find_isomorphism(a, b, cap=ISO_SEARCH_CAP, seed=SEED):
    """Return an isomorphism ``a -> b`` or None."""
    if a.dim_vector != b.dim_vector:
        return None
    homs = hom_basis(a, b)
    return find_invertible(homs.basis, map_shapes(a, b), a.q, cap, seed)


def is_isomorphic(a, b, cap=ISO_SEARCH_CAP, seed=SEED):
    """
    Decide whether two representations are isomorphic.

    See `has_invertible` for how the search is bounded by `cap`.
    """
    if a.dim_vector != b.dim_vector:
        return False
    homs = hom_basis(a, b)
    return has_invertible(homs.basis, map_shapes(a, b), a.q, cap, seed)


def aut_order(a, cap=ISO_SEARCH_CAP):
    """Order of the automorphism group of `a`, by enumerating End(a)."""
    ends = hom_basis(a, a)
    return count_invertible(ends.basis, map_shapes(a, a), a.q, cap)


# ### Sub- and quotient representations
def subrepresentation(rep, bases):
    """
    Subrepresentation spanned vertexwise by the columns of `bases`.

    Returns
    -------
    Representation
        The subrepresentation in the coordinates of `bases`.
    tuple of numpy.ndarray
        The inclusion morphism.
    """
    q = rep.q
    bases = tuple(ffalg.mod(b, q) for b in bases)
    lefts = []
    for basis in bases:
        _, inv = ffalg.basis_extension(basis, q)
        lefts.append(inv[: basis.shape[1]])
    mats = [
        lefts[a.target] @ rep.mats[x] @ bases[a.source] % q
        for x, a in enumerate(rep.alg.arrows)
    ]
    dims = tuple(b.shape[1] for b in bases)
    return Representation(rep.alg, dims, mats), bases


def quotient_representation(rep, bases):
    """
    Quotient of `rep` by the subrepresentation spanned by `bases`.

    Returns
    -------
    Representation
        The quotient.
    tuple of numpy.ndarray
        The projection morphism.
    """
    q = rep.q
    projs, comps = [], []
    for basis in bases:
        basis = ffalg.mod(basis, q)
        full, inv = ffalg.basis_extension(basis, q)
        projs.append(inv[basis.shape[1] :])
        comps.append(full[:, basis.shape[1] :])
    mats = [
        projs[a.target] @ rep.mats[x] @ comps[a.source] % q
        for x, a in enumerate(rep.alg.arrows)
    ]
    dims = tuple(p.shape[0] for p in projs)
    return Representation(rep.alg, dims, mats), tuple(projs)


def kernel_representation(f, source):
    """Kernel of ``f: source -> ?`` with its inclusion."""
    bases = [ffalg.nullspace(fv, source.q) for fv in f]
    return subrepresentation(source, bases)


def image_bases(f, q):
    """Vertexwise bases of the image of a morphism."""
    return [ffalg.colspace(fv, q) for fv in f]


def cokernel_representation(f, target):
    """Cokernel of ``f: ? -> target`` with its projection."""
    return quotient_representation(target, image_bases(f, target.q))


def radical_bases(rep):
    """Vertexwise bases of the radical: the span of all arrow images."""
    q = rep.q
    out = []
    for v, dim in enumerate(rep.dim_vector):
        incoming = [rep.mats[x] for x, a in enumerate(rep.alg.arrows) if a.target == v]
        if incoming:
            out.append(ffalg.colspace(np.hstack(incoming), q))
        else:
            out.append(np.zeros((dim, 0), dtype=np.int64))
    return out


def top_dims(rep):
    """Dimension vector of the top ``rep / rad rep``."""
    return tuple(
        d - b.shape[1] for d, b in zip(rep.dim_vector, radical_bases(rep))
    )


def lands_in_radical(f, target):
    """Return True if the image of `f` lies in the radical of `target`."""
    q = target.q
    for fv, rad in zip(f, radical_bases(target)):
        if fv.size and ffalg.rank(np.hstack([rad, fv]), q) != rad.shape[1]:
            return False
    return True


# ### Projective resolutions
def projective_cover(rep):
    """
    Projective cover of `rep`.

    A complement of the radical is chosen at each vertex; each of its vectors
    generates one standard projective summand.

    Returns
    -------
    Representation
        The cover, a sum of standard projectives.
    tuple of numpy.ndarray
        The surjection onto `rep`.
    """
    alg, q = rep.alg, rep.q
    gens = []
    for v, rad in enumerate(radical_bases(rep)):
        top = ffalg.complement_columns(
            rad, np.eye(rep.dim_vector[v], dtype=np.int64), q
        )
        gens += [(v, top[:, k]) for k in range(top.shape[1])]
    cover = projective_sum(alg, [v for v, _ in gens])
    surj = []
    for v in range(alg.n_vertices):
        cols = [
            rep.path_matrix(alg.basis[idx]) @ gen % q
            for vertex, gen in gens
            for idx in alg.by_pair[vertex][v]
        ]
        if cols:
            surj.append(np.stack(cols, axis=1))
        else:
            surj.append(np.zeros((rep.dim_vector[v], 0), dtype=np.int64))
    return cover, tuple(surj)


class Resolution(NamedTuple):
    """Minimal projective resolution ``0 -> P2 -> P1 -> P0 -> target -> 0``."""

    target: Representation
    p0: Representation
    p1: Representation
    p2: Representation
    a0: tuple
    a1: tuple
    a2: tuple

    @property
    def length(self):
        """Projective dimension of the target."""
        if self.p2.total_dim:
            return 2
        return int(self.p1.total_dim > 0)

    def is_minimal(self):
        """Return True if a1 and a2 land in the radicals of their targets."""
        return lands_in_radical(self.a1, self.p0) and lands_in_radical(
            self.a2, self.p1
        )

    def is_exact(self):
        """Check exactness at every term by ranks."""
        q = self.target.q
        for v in range(self.target.alg.n_vertices):
            r0 = ffalg.rank(self.a0[v], q)
            r1 = ffalg.rank(self.a1[v], q)
            r2 = ffalg.rank(self.a2[v], q)
            if r0 != self.target.dim_vector[v]:
                return False
            if self.p0.dim_vector[v] - r0 != r1:
                return False
            if self.p1.dim_vector[v] - r1 != r2:
                return False
            if r2 != self.p2.dim_vector[v]:
                return False
        return True


def minimal_resolution(rep):
    """
    Minimal projective resolution of `rep`.

    Parameters
    ----------
    rep : Representation

    Returns
    -------
    Resolution

    Raises
    ------
    GlobalDimensionExceeded
        If the second syzygy is not projective.
    """
    q = rep.q
    p0, a0 = projective_cover(rep)
    syz0, inc0 = kernel_representation(a0, p0)
    p1, c1 = projective_cover(syz0)
    a1 = compose(inc0, c1, q)
    syz1, inc1 = kernel_representation(c1, p1)
    p2, c2 = projective_cover(syz1)
    if p2.total_dim != syz1.total_dim:
        raise GlobalDimensionExceeded(
            f"The second syzygy of the module with dimension vector "
            f"{rep.dim_vector} is not projective: global dimension exceeds 2."
        )
    a2 = compose(inc1, c2, q)
    return Resolution(rep, p0, p1, p2, a0, a1, a2)


class EulerForm:
    """
    Euler form on the Grothendieck group, in the basis of simples.

    ``matrix[i, j]`` is the Euler pairing of the simples at i and j.
    """

    def __init__(self, matrix):
        """Initialise EulerForm (see class docstring)."""
        self.matrix = np.asarray(matrix, dtype=np.int64)

    def pair(self, x, y):
        """Euler pairing of two classes."""
        return int(np.asarray(x, dtype=np.int64) @ self.matrix @ np.asarray(y, dtype=np.int64))

    def sym(self, x, y):
        """Symmetrised Euler form."""
        return self.pair(x, y) + self.pair(y, x)


def euler_form(alg):
    """
    Euler form of `alg`, from the minimal resolutions of its simples.

    Raises
    ------
    GlobalDimensionExceeded
        If some simple has projective dimension above 2.
    """
    from .algdef import standard_modules

    n = alg.n_vertices
    simples = [standard_modules(alg, j, "simple") for j in range(n)]
    matrix = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        res = minimal_resolution(simples[i])
        for j in range(n):
            matrix[i, j] = (
                hom_basis(res.p0, simples[j]).dim
                - hom_basis(res.p1, simples[j]).dim
                + hom_basis(res.p2, simples[j]).dim
            )
    return EulerForm(matrix)


def gldim_certificate(alg):
    """Global dimension of `alg` (at most 2), from the resolutions of simples."""
    from .algdef import standard_modules

    return max(
        minimal_resolution(standard_modules(alg, i, "simple")).length
        for i in range(alg.n_vertices)
    )


# ### Extensions
class ExtData(NamedTuple):
    """Cocycle data of ``Ext^1(A, C)`` computed from a resolution of A."""

    resolution: Resolution
    target: Representation
    cocycles: np.ndarray
    coboundaries: np.ndarray
    complement: np.ndarray
    hom_dim: int
    ext2_dim: int

    @property
    def ext1_dim(self):
        """Dimension of the Ext^1 group."""
        return self.complement.shape[1]


def ext_data(a, c, res=None):
    """
    Cocycles modulo coboundaries for ``Ext^1(a, c)``.

    Maps ``P1 -> c`` are flattened; cocycles vanish on the image of a2,
    coboundaries factor through a1. `complement` holds one representative
    direction per dimension of Ext^1.
    """
    q = a.q
    res = res if res is not None else minimal_resolution(a)
    homs1 = hom_basis(res.p1, c).basis
    n1 = sum(r * k for r, k in map_shapes(res.p1, c))
    h1 = np.zeros((n1, len(homs1)), dtype=np.int64)
    restricted = np.zeros((sum(r * k for r, k in map_shapes(res.p2, c)), len(homs1)),
                          dtype=np.int64)
    for k, h in enumerate(homs1):
        h1[:, k] = flatten(h)
        restricted[:, k] = flatten(compose(h, res.a2, q))
    cocycles = h1 @ ffalg.nullspace(restricted, q) % q
    homs0 = hom_basis(res.p0, c).basis
    coboundaries = np.zeros((n1, len(homs0)), dtype=np.int64)
    for k, g in enumerate(homs0):
        coboundaries[:, k] = flatten(compose(g, res.a1, q))
    complement = ffalg.complement_columns(coboundaries, cocycles, q)
    ext2_dim = hom_basis(res.p2, c).dim - ffalg.rank(restricted, q)
    return ExtData(res, c, cocycles, coboundaries, complement, hom_basis(a, c).dim,
                   ext2_dim)


def ext_dims(a, b, res=None):
    """Return ``(dim Hom, dim Ext^1, dim Ext^2)`` of ``(a, b)``."""
    data = ext_data(a, b, res)
    return data.hom_dim, data.ext1_dim, data.ext2_dim


def pushout_middle(res, c, cocycle):
    """
    Middle term of the extension of ``res.target`` by `c` given by a cocycle.

    The middle is the cokernel of ``P1 -> c + P0``, ``x -> (f(x), -a1(x))``.
    """
    q = c.q
    glued = tuple(
        np.vstack([fv, -a1v]) % q for fv, a1v in zip(cocycle, res.a1)
    )
    middle, _ = cokernel_representation(glued, direct_sum(c, res.p0))
    return middle


def iter_extension_middles(a, c, res=None, cap=ISO_SEARCH_CAP):
    """
    Yield one middle term per element of ``Ext^1(a, c)``.

    Raises
    ------
    SearchBudgetExceeded
        If ``|Ext^1(a, c)|`` exceeds `cap`.
    """
    q = a.q
    data = ext_data(a, c, res)
    ffalg.count_check(q, data.ext1_dim, cap, "extension enumeration")
    shapes = map_shapes(data.resolution.p1, c)
    for chunk in ffalg.iter_coefficients(data.ext1_dim, q):
        for coeffs in chunk:
            cocycle = unflatten(data.complement @ coeffs % q, shapes)
            yield pushout_middle(data.resolution, c, cocycle)


def ext1_with_middles(a, c, classify, res=None, cap=ISO_SEARCH_CAP):
    """
    Tally the elements of ``Ext^1(a, c)`` by the class of their middle term.

    Parameters
    ----------
    a, c : Representation
        The extension is ``0 -> c -> B -> a -> 0``.
    classify : callable
        Maps a representation to its class id (e.g. `ModuleUniverse.classify`).
    res : Resolution or None, optional
        Resolution of `a`, computed if not given.
    cap : int, optional
        Enumeration budget.

    Returns
    -------
    dict
        Class id -> number of Ext elements with that middle.
    """
    tallies = {}
    for middle in iter_extension_middles(a, c, res, cap):
        key = classify(middle)
        tallies[key] = tallies.get(key, 0) + 1
    return tallies


def hall_number_oracle(a, b, c, cap=ISO_SEARCH_CAP):
    """
    Count subrepresentations U of `b` with ``U ~ c`` and ``b/U ~ a``.

    Every tuple of vertexwise subspaces of the right dimensions is enumerated.

    Raises
    ------
    SearchBudgetExceeded
        If the number of subspace tuples exceeds `cap`.
    """
    q = b.q
    if tuple(x + y for x, y in zip(a.dim_vector, c.dim_vector)) != b.dim_vector:
        return 0
    total = 1
    for n, k in zip(b.dim_vector, c.dim_vector):
        total *= ffalg.gaussian_binomial(n, k, q)
    if total > cap:
        raise SearchBudgetExceeded(
            f"Subspace enumeration needs {total} candidates, above the cap of {cap}."
        )
    choices = [
        list(ffalg.enumerate_subspaces(n, k, q))
        for n, k in zip(b.dim_vector, c.dim_vector)
    ]
    count = 0
    for bases in product(*choices):
        closed = all(
            ffalg.rank(np.hstack([bases[x.target], b.mats[i] @ bases[x.source]]), q)
            == bases[x.target].shape[1]
            for i, x in enumerate(b.alg.arrows)
        )
        if not closed:
            continue
        sub, _ = subrepresentation(b, bases)
        quo, _ = quotient_representation(b, bases)
        if is_isomorphic(sub, c, cap) and is_isomorphic(quo, a, cap):
            count += 1
    return count


# ### Enumeration of isomorphism classes
def module_invariant(rep):
    """Isomorphism invariant: dimension vector and ranks of all basis paths."""
    ranks = tuple(
        ffalg.rank(rep.path_matrix(path), rep.q)
        for path in rep.alg.basis
        if path.length > 0
    )
    return rep.dim_vector, ranks


def dim_vectors(n, bound):
    """All dimension vectors with total dimension <= bound, by total then lexically."""
    out = [dims for dims in product(range(bound + 1), repeat=n) if sum(dims) <= bound]
    return sorted(out, key=lambda dims: (sum(dims), dims))


class ModuleUniverse:
    """
    All isomorphism classes of representations up to a total dimension.

    Class ids are the byte encodings of the lexicographically least member,
    which is the first member met since tuples are enumerated in lexical order.

    Parameters
    ----------
    alg : AlgebraData
    max_total_dim : int
    search_cap : int, optional
        Budget of each isomorphism search.
    raw_cap : int, optional
        Budget on the number of raw arrow-matrix tuples.
    seed : int, optional
        Seed of the random isomorphism candidates.
    """

    def __init__(self, alg, max_total_dim, search_cap=ISO_SEARCH_CAP,
                 raw_cap=RAW_REPRESENTATION_CAP, seed=SEED):
        """Initialise ModuleUniverse (see class docstring)."""
        if max_total_dim < 0:
            raise ValueError(f"Bound must be non-negative, got {max_total_dim}.")
        self.alg = alg
        self.bound = int(max_total_dim)
        self.search_cap = search_cap
        self.seed = seed
        self.classes = []
        self._reps = {}
        self._labels = {}
        self._buckets = {}

        q = alg.q
        sizes = {}
        raw = 0
        for dims in dim_vectors(alg.n_vertices, self.bound):
            sizes[dims] = sum(dims[a.target] * dims[a.source] for a in alg.arrows)
            raw += q ** sizes[dims]
        if raw > raw_cap:
            raise SearchBudgetExceeded(
                f"Enumeration needs {raw} arrow-matrix tuples, above the cap of "
                f"{raw_cap}."
            )
        for dims, nentries in sizes.items():
            found = 0
            for entries in product(range(q), repeat=nentries):
                rep = self._build(dims, entries)
                if not rep.satisfies_relations():
                    continue
                if self._lookup(rep) is None:
                    self._insert(rep, f"M[{','.join(map(str, dims))}]#{found}")
                    found += 1
        LGR.info(f"Enumerated {len(self.classes)} isomorphism classes of total "
                 f"dimension <= {self.bound}.")

    def _build(self, dims, entries):
        mats, start = [], 0
        for a in self.alg.arrows:
            rows, cols = dims[a.target], dims[a.source]
            mats.append(np.array(entries[start : start + rows * cols],
                                 dtype=np.int64).reshape(rows, cols))
            start += rows * cols
        return Representation(self.alg, dims, mats)

    def _lookup(self, rep):
        for cid in self._buckets.get(module_invariant(rep), []):
            if is_isomorphic(self._reps[cid], rep, self.search_cap, self.seed):
                return cid
        return None

    def _insert(self, rep, label):
        cid = rep.encode()
        self.classes.append(cid)
        self._reps[cid] = rep
        self._labels[cid] = label
        self._buckets.setdefault(module_invariant(rep), []).append(cid)
        return cid

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    def __contains__(self, cid):
        return cid in self._reps

    def representative(self, cid):
        """Distinguished representative of a class."""
        return self._reps[cid]

    def label(self, cid):
        """Human readable label of a class."""
        return self._labels[cid]

    def dim_vector(self, cid):
        """Dimension vector of a class."""
        return self._reps[cid].dim_vector

    def total_dim(self, cid):
        """Total dimension of a class."""
        return self._reps[cid].total_dim

    def zero(self):
        """Id of the zero module."""
        return self.classes[0]

    def classify(self, rep):
        """
        Class id of `rep`.

        Raises
        ------
        BoundExceeded
            If `rep` is larger than the enumeration bound.
        """
        if rep.total_dim > self.bound:
            raise BoundExceeded(
                f"Module of dimension {rep.total_dim} is outside the universe "
                f"bounded by {self.bound}."
            )
        cid = self._lookup(rep)
        if cid is None:
            raise ValueError(
                f"No enumerated class matches the module {rep.dim_vector}; "
                "it does not satisfy the relations."
            )
        return cid


def enumerate_modules(alg, max_total_dim, search_cap=ISO_SEARCH_CAP,
                      raw_cap=RAW_REPRESENTATION_CAP, seed=SEED):
    """
    List the isomorphism classes of total dimension <= `max_total_dim`.

    Returns
    -------
    list of bytes
        Class ids, the zero module first.

    Raises
    ------
    SearchBudgetExceeded
        If more than `raw_cap` arrow-matrix tuples would be enumerated.
    """
    return list(ModuleUniverse(alg, max_total_dim, search_cap, raw_cap, seed))


def riedtmann_check(a, b, c, classify, cap=ISO_SEARCH_CAP):
    """
    Both sides of ``g * |Aut a| * |Aut c| * |Hom(a, c)| = |Ext^1(a, c)_b| * |Aut b|``.

    Returns
    -------
    tuple of int
        Left and right hand side.
    """
    q = a.q
    g = hall_number_oracle(a, b, c, cap)
    tallies = ext1_with_middles(a, c, classify, cap=cap)
    ext_b = tallies.get(classify(b), 0)
    lhs = g * aut_order(a, cap) * aut_order(c, cap) * q ** hom_basis(a, c).dim
    rhs = ext_b * aut_order(b, cap)
    return lhs, rhs


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
