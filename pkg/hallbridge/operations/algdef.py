#!/usr/bin/env python3
"""
Finite-dimensional algebras given by a quiver with relations.

Paths compose left to right: the path ``[a, b]`` means "a then b" and requires
``target(a) == source(b)``. A representation assigns to an arrow ``x: u -> v``
a matrix of shape ``(dim V_v, dim V_u)``.

Attributes
----------
LGR
    Logger
DIM_CAP
    Default bound on the path length explored by `path_basis`.
PRESENTATION_KEYS
    Keys accepted in a presentation file.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ..errors import NotAdmissible, NotFiniteDimensional, ParseError
from ..errors import UnknownVertexOrArrow
from . import ffalg

LGR = logging.getLogger(__name__)

DIM_CAP = 12
PRESENTATION_KEYS = ("q", "vertices", "arrows", "relations", "dim_cap")
ARROW_KEYS = ("name", "from", "to")
TERM_KEYS = ("coef", "path")


class Arrow(NamedTuple):
    """Arrow of a quiver, with vertex indices as endpoints."""

    name: str
    source: int
    target: int


class Path(NamedTuple):
    """Path of a quiver: arrow indices, composed left to right."""

    source: int
    target: int
    arrows: tuple

    @property
    def length(self):
        """Number of arrows."""
        return len(self.arrows)


@dataclass(frozen=True)
class QuiverPresentation:
    """
    A quiver with admissible relations over F_q.

    Each relation is a tuple of ``(coefficient, arrow-index path)`` terms, all
    paths sharing the same source and target.
    """

    q: int
    vertices: tuple
    arrows: tuple
    relations: tuple = ()
    dim_cap: int = DIM_CAP

    @property
    def n_vertices(self):
        """Number of vertices."""
        return len(self.vertices)

    def relation_endpoints(self, relation):
        """Return (source, target) of a relation."""
        _, path = relation[0]
        return self.arrows[path[0]].source, self.arrows[path[-1]].target

    def to_dict(self):
        """Return the presentation in its JSON input form."""
        return {
            "q": self.q,
            "vertices": list(self.vertices),
            "arrows": [
                {"name": a.name, "from": self.vertices[a.source],
                 "to": self.vertices[a.target]}
                for a in self.arrows
            ],
            "relations": [
                [
                    {"coef": int(c), "path": [self.arrows[x].name for x in path]}
                    for c, path in rel
                ]
                for rel in self.relations
            ],
            "dim_cap": self.dim_cap,
        }


def _check_keys(obj, allowed, where, required=None):
    if not isinstance(obj, dict):
        raise ParseError(f"{where} must be a JSON object, got {type(obj).__name__}.")
    unknown = set(obj) - set(allowed)
    if unknown:
        raise ParseError(f"Unknown keys in {where}: {sorted(unknown)}")
    missing = set(allowed if required is None else required) - set(obj)
    if missing:
        raise ParseError(f"Missing keys in {where}: {sorted(missing)}")


def _as_int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where} must be an integer, got {value!r}.")
    return value


def _has_oriented_cycle(n_vertices, arrows):
    """Return True if the quiver has an oriented cycle (loops included)."""
    adj = np.zeros((n_vertices, n_vertices), dtype=np.int64)
    for arrow in arrows:
        adj[arrow.source, arrow.target] = 1
    reach = adj.copy()
    for _ in range(n_vertices):
        reach = np.minimum(reach + reach @ adj, 1)
    return bool(np.trace(reach))


def presentation_from_dict(data):
    """
    Validate a decoded presentation and build a `QuiverPresentation`.

    Parameters
    ----------
    data : dict
        Mapping with keys ``q``, ``vertices``, ``arrows`` and optionally
        ``relations`` and ``dim_cap``.

    Returns
    -------
    QuiverPresentation

    Raises
    ------
    ParseError
        If keys or value types are wrong, or q is not a supported field.
    UnknownVertexOrArrow
        If an arrow endpoint or a relation arrow is not declared.
    NotAdmissible
        If a relation has a path of length < 2, non-composable or non-parallel
        paths, or vanishes mod q. Also if a relation mixes path lengths while
        the quiver has an oriented cycle.
    """
    _check_keys(data, PRESENTATION_KEYS, "presentation", ("q", "vertices", "arrows"))

    try:
        q = ffalg.check_field(_as_int(data["q"], "q"))
    except ValueError as err:
        raise ParseError(str(err))

    vertices = data["vertices"]
    if not isinstance(vertices, list) or not vertices:
        raise ParseError("vertices must be a non-empty list.")
    vertices = tuple(str(v) for v in vertices)
    if len(set(vertices)) != len(vertices):
        raise ParseError(f"Vertex names must be unique: {vertices}")
    vidx = {v: i for i, v in enumerate(vertices)}

    if not isinstance(data["arrows"], list):
        raise ParseError("arrows must be a list.")
    arrows = []
    for entry in data["arrows"]:
        _check_keys(entry, ARROW_KEYS, "arrow")
        name = str(entry["name"])
        for end in ("from", "to"):
            if str(entry[end]) not in vidx:
                raise UnknownVertexOrArrow(
                    f"Arrow {name} uses unknown vertex {entry[end]!r}."
                )
        arrows.append(Arrow(name, vidx[str(entry["from"])], vidx[str(entry["to"])]))
    names = [a.name for a in arrows]
    if len(set(names)) != len(names):
        raise ParseError(f"Arrow names must be unique: {names}")
    aidx = {a.name: i for i, a in enumerate(arrows)}

    relations = []
    raw_relations = data.get("relations", [])
    if not isinstance(raw_relations, list):
        raise ParseError("relations must be a list.")
    for raw in raw_relations:
        if not isinstance(raw, list) or not raw:
            raise ParseError("Each relation must be a non-empty list of terms.")
        terms = {}
        endpoints = set()
        for term in raw:
            _check_keys(term, TERM_KEYS, "relation term")
            coef = _as_int(term["coef"], "coef")
            if not isinstance(term["path"], list):
                raise ParseError("A relation path must be a list of arrow names.")
            path = []
            for name in term["path"]:
                if str(name) not in aidx:
                    raise UnknownVertexOrArrow(f"Unknown arrow {name!r} in relation.")
                path.append(aidx[str(name)])
            if len(path) < 2:
                raise NotAdmissible(
                    f"Relation path {term['path']} has length {len(path)} < 2."
                )
            for x, y in zip(path[:-1], path[1:]):
                if arrows[x].target != arrows[y].source:
                    raise NotAdmissible(f"Relation path {term['path']} is not composable.")
            endpoints.add((arrows[path[0]].source, arrows[path[-1]].target))
            terms[tuple(path)] = (terms.get(tuple(path), 0) + coef) % q
        if len(endpoints) != 1:
            raise NotAdmissible("Paths of a relation must share source and target.")
        rel = tuple((c, path) for path, c in sorted(terms.items()) if c != 0)
        if not rel:
            raise NotAdmissible(f"Relation {raw} vanishes over F_{q}.")
        relations.append(rel)
    mixed = [rel for rel in relations if len({len(path) for _, path in rel}) > 1]
    if mixed and _has_oriented_cycle(len(vertices), arrows):
        raise NotAdmissible(
            "Relations mixing path lengths are only supported on acyclic quivers, "
            f"got {len(mixed)} such relation(s)."
        )

    dim_cap = _as_int(data.get("dim_cap", DIM_CAP), "dim_cap")
    if dim_cap < 1:
        raise ParseError(f"dim_cap must be positive, got {dim_cap}.")

    return QuiverPresentation(q, vertices, tuple(arrows), tuple(relations), dim_cap)


def load_presentation(text):
    """
    Parse a JSON presentation.

    Parameters
    ----------
    text : bytes or str
        The JSON document.

    Returns
    -------
    QuiverPresentation

    Raises
    ------
    ParseError
        If the text is not valid JSON (see also `presentation_from_dict`).
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as err:
            raise ParseError(f"Presentation is not UTF-8: {err}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"Presentation is not valid JSON: {err}")
    return presentation_from_dict(data)


def canonical_algebra(p, lambdas, q, dim_cap=DIM_CAP):
    """
    Build the canonical algebra of weight type `p` and parameters `lambdas`.

    The quiver has a source ``0``, a sink ``w`` and one arm of ``p[i]`` arrows
    ``X{i}_1 ... X{i}_{p[i]}`` per weight, with relations
    ``X_i^{p_i} = X_0^{p_0} - lambda_i X_1^{p_1}`` for ``i >= 2``.

    Parameters
    ----------
    p : tuple of int
        Arm lengths.
    lambdas : tuple of int
        One field element per arm from the third on.
    q : int
        Field size.
    dim_cap : int, optional
        Path-length cap stored in the presentation.

    Returns
    -------
    QuiverPresentation

    Raises
    ------
    NotAdmissible
        If an arm involved in a relation has length 1.
    ValueError
        If the number of parameters does not match the number of arms.
    """
    if len(p) < 2:
        raise ValueError("A canonical algebra needs at least two arms.")
    if len(lambdas) != max(len(p) - 2, 0):
        raise ValueError(f"Expected {len(p) - 2} parameters, got {len(lambdas)}.")
    if len(p) > 2 and min(p) < 2:
        raise NotAdmissible(f"Arms of weight 1 give relations of length 1: {p}")

    vertices = ["0"]
    arrows = []
    arms = []
    for i, weight in enumerate(p):
        inner = [f"x{i}_{k}" for k in range(1, weight)]
        vertices += inner
        chain = ["0"] + inner + ["w"]
        names = [f"X{i}_{k}" for k in range(1, weight + 1)]
        arrows += [
            {"name": nm, "from": src, "to": tgt}
            for nm, src, tgt in zip(names, chain[:-1], chain[1:])
        ]
        arms.append(names)
    vertices.append("w")

    relations = []
    for i, lam in enumerate(lambdas, start=2):
        terms = [{"coef": 1, "path": arms[i]}, {"coef": q - 1, "path": arms[0]}]
        if lam % q:
            terms.append({"coef": int(lam) % q, "path": arms[1]})
        relations.append(terms)

    return presentation_from_dict(
        {"q": q, "vertices": vertices, "arrows": arrows,
         "relations": relations, "dim_cap": dim_cap}
    )


def _paths_up_to(pres, length):
    """All paths of length <= `length`, shortest first."""
    paths = [Path(i, i, ()) for i in range(pres.n_vertices)]
    frontier = list(paths)
    for _ in range(length):
        frontier = [
            Path(path.source, arrow.target, path.arrows + (x,))
            for path in frontier
            for x, arrow in enumerate(pres.arrows)
            if arrow.source == path.target
        ]
        paths += frontier
    return paths


def _ideal_rows(pres, paths, length, column):
    """Rows u*r*v of the relation ideal, truncated to paths of length <= `length`."""
    ending = {}
    starting = {}
    for path in paths:
        ending.setdefault(path.target, []).append(path)
        starting.setdefault(path.source, []).append(path)
    rows = []
    for rel in pres.relations:
        src, tgt = pres.relation_endpoints(rel)
        shortest = min(len(path) for _, path in rel)
        for left in ending.get(src, []):
            for right in starting.get(tgt, []):
                if left.length + right.length + shortest > length:
                    continue
                row = np.zeros(len(column), dtype=np.int64)
                for coef, middle in rel:
                    word = left.arrows + middle + right.arrows
                    if len(word) <= length:
                        row[column[Path(left.source, right.target, word)]] += coef
                rows.append(row % pres.q)
    if not rows:
        return np.zeros((0, len(column)), dtype=np.int64)
    return np.vstack(rows)


def _sorted_for_elimination(paths):
    """Longest paths first, so that short paths survive as basis elements."""
    return sorted(paths, key=lambda path: (-path.length, path.source, path.target,
                                           path.arrows))


@dataclass
class AlgebraData:
    """
    The path basis of ``B = kQ/I`` with its multiplication.

    Attributes
    ----------
    presentation : QuiverPresentation
    basis : tuple of Path
        Basis paths, shortest first.
    max_length : int
        Paths longer than this vanish in B.
    normal_forms : dict
        Path -> {basis index: coefficient}, for every path up to `max_length`.
    by_pair : list of list of list of int
        ``by_pair[i][j]`` lists the basis indices of paths from i to j.
    cartan : numpy.ndarray
        ``cartan[j, i]`` is the dimension at j of the projective at i.
    """

    presentation: QuiverPresentation
    basis: tuple
    max_length: int
    normal_forms: dict
    by_pair: list = field(repr=False)
    cartan: np.ndarray = field(repr=False)

    @property
    def q(self):
        """Field size."""
        return self.presentation.q

    @property
    def n_vertices(self):
        """Number of vertices."""
        return self.presentation.n_vertices

    @property
    def arrows(self):
        """Arrows of the quiver."""
        return self.presentation.arrows

    @property
    def dim(self):
        """Dimension of the algebra."""
        return len(self.basis)

    def position(self, index):
        """Position of a basis path inside its ``by_pair`` list."""
        path = self.basis[index]
        return self.by_pair[path.source][path.target].index(index)

    def reduce(self, path):
        """Return the normal form of `path` as {basis index: coefficient}."""
        if path.length > self.max_length:
            return {}
        return self.normal_forms[path]

    def multiply(self, i, j):
        """Product of basis paths `i` and `j` as {basis index: coefficient}."""
        left, right = self.basis[i], self.basis[j]
        if left.target != right.source:
            return {}
        return self.reduce(Path(left.source, right.target, left.arrows + right.arrows))

    def projective_matrices(self, vertex):
        """
        Dimension vector and arrow matrices of the projective at `vertex`.

        The basis at vertex j consists of the basis paths from `vertex` to j;
        an arrow acts by composing on the right.
        """
        q = self.q
        lists = self.by_pair[vertex]
        dims = tuple(len(lists[j]) for j in range(self.n_vertices))
        mats = []
        for x, arrow in enumerate(self.arrows):
            mat = np.zeros((dims[arrow.target], dims[arrow.source]), dtype=np.int64)
            rows = {idx: r for r, idx in enumerate(lists[arrow.target])}
            for col, idx in enumerate(lists[arrow.source]):
                path = self.basis[idx]
                image = self.reduce(
                    Path(path.source, arrow.target, path.arrows + (x,))
                )
                for target_idx, coef in image.items():
                    mat[rows[target_idx], col] = (mat[rows[target_idx], col] + coef) % q
            mats.append(mat)
        return dims, mats


def path_basis(pres):
    """
    Compute a path basis of the algebra presented by `pres`.

    Degrees are explored one at a time: at length L the relation ideal is
    truncated to paths of length <= L and row reduced; exploration stops at
    the first L whose paths all lie in the ideal. The basis then consists of the
    paths of length < L that are not leading terms of the reduced ideal.
    Relations mixing path lengths only occur on acyclic quivers (see
    `presentation_from_dict`), where the truncation is exact.

    Parameters
    ----------
    pres : QuiverPresentation

    Returns
    -------
    AlgebraData

    Raises
    ------
    NotFiniteDimensional
        If new paths survive at length `pres.dim_cap`.
    """
    q = pres.q
    halt = None
    for length in range(1, pres.dim_cap + 1):
        paths = _paths_up_to(pres, length)
        top = [path for path in paths if path.length == length]
        if not top:
            halt = length
            break
        column = {path: c for c, path in enumerate(paths)}
        rows = _ideal_rows(pres, paths, length, column)
        units = np.zeros((len(top), len(paths)), dtype=np.int64)
        for r, path in enumerate(top):
            units[r, column[path]] = 1
        if ffalg.rank(rows, q) == ffalg.rank(np.vstack([rows, units]), q):
            halt = length
            break
        LGR.debug(f"Paths of length {length} survive the relations.")
    if halt is None:
        raise NotFiniteDimensional(
            f"Paths of length {pres.dim_cap} are not all in the relation ideal: "
            "the algebra is infinite dimensional or dim_cap is too small."
        )

    max_length = halt - 1
    paths = _sorted_for_elimination(_paths_up_to(pres, max_length))
    column = {path: c for c, path in enumerate(paths)}
    red, pivots = ffalg.rref(_ideal_rows(pres, paths, max_length, column), q)
    survivors = sorted(
        (path for c, path in enumerate(paths) if c not in pivots),
        key=lambda path: (path.length, path.source, path.target, path.arrows),
    )
    index = {path: i for i, path in enumerate(survivors)}

    normal_forms = {path: {i: 1} for path, i in index.items()}
    for r, pc in enumerate(pivots):
        normal_forms[paths[pc]] = {
            index[paths[c]]: int(-red[r, c] % q)
            for c in np.nonzero(red[r])[0]
            if c != pc
        }

    n = pres.n_vertices
    by_pair = [[[] for _ in range(n)] for _ in range(n)]
    for i, path in enumerate(survivors):
        by_pair[path.source][path.target].append(i)
    cartan = np.array(
        [[len(by_pair[i][j]) for i in range(n)] for j in range(n)], dtype=np.int64
    )
    LGR.info(f"Path basis of dimension {len(survivors)}, paths vanish from length "
             f"{halt}.")
    return AlgebraData(pres, tuple(survivors), max_length, normal_forms, by_pair, cartan)


def standard_modules(alg, vertex, kind):
    """
    Return the simple or the indecomposable projective module at `vertex`.

    Parameters
    ----------
    alg : AlgebraData
    vertex : int
        Vertex index.
    kind : 'projective' or 'simple'

    Returns
    -------
    hallbridge.operations.modcat.Representation

    Raises
    ------
    NotImplementedError
        If `kind` is not supported.
    ValueError
        If `vertex` is not a vertex index.
    """
    from .modcat import Representation, projective_sum

    if not 0 <= vertex < alg.n_vertices:
        raise ValueError(f"Vertex {vertex} out of range.")
    if kind == "projective":
        return projective_sum(alg, (vertex,))
    if kind == "simple":
        dims = tuple(int(j == vertex) for j in range(alg.n_vertices))
        return Representation.zero_arrows(alg, dims)
    raise NotImplementedError(f"Module kind {kind} is not supported.")


def relation_matrix(alg, dims, mats, relation):
    """
    Matrix of a relation acting on a representation.

    Parameters
    ----------
    alg : AlgebraData
    dims : tuple of int
        Dimension vector.
    mats : sequence of numpy.ndarray
        Arrow matrices.
    relation : tuple
        Relation terms ``(coefficient, arrow path)``.

    Returns
    -------
    numpy.ndarray
    """
    src, tgt = alg.presentation.relation_endpoints(relation)
    total = np.zeros((dims[tgt], dims[src]), dtype=np.int64)
    for coef, path in relation:
        mat = np.eye(dims[src], dtype=np.int64)
        for x in path:
            mat = mats[x] @ mat % alg.q
        total = (total + coef * mat) % alg.q
    return total


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
