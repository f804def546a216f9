#!/usr/bin/env python3
"""
Blocks of code for workflows: one verification check per function.

Every check takes a `HallLab` whose universe is enumerated and returns a
`CheckResult`. Failures carry the offending key and both sides of the
identity, serialised exactly.

Attributes
----------
LGR
    Logger
SUPPORTED_CHECKS
    Names of the checks, in running order.
N_ASSOC_SAMPLES
    Number of sampled triples per associativity test.
"""

import logging
from itertools import product
from typing import NamedTuple

import numpy as np

from . import io, utils
from .operations import cpx2, hall, modcat
from .operations.algdef import standard_modules

LGR = logging.getLogger(__name__)

SUPPORTED_CHECKS = (
    "structure",
    "main",
    "reduced",
    "minus",
    "phi",
    "extiso",
    "epad",
    "relations",
    "rp",
    "assoc",
)
N_ASSOC_SAMPLES = 200


class CheckResult(NamedTuple):
    """Outcome of one check."""

    name: str
    pairs_tested: int
    failures: list

    @property
    def passed(self):
        """Return True if no counterexample was found."""
        return not self.failures

    def to_dict(self, labels=None, complexes=None):
        """
        Return the result in report form.

        Algebra elements held by the failures are serialised with
        `hallbridge.io.element_to_list`, with the given `labels` and
        `complexes` maps.
        """
        failures = [
            {
                field: io.element_to_list(value, labels, complexes)
                if isinstance(value, dict) else value
                for field, value in failure.items()
            }
            for failure in self.failures
        ]
        return {
            "name": self.name,
            "pairs_tested": self.pairs_tested,
            "passed": self.passed,
            "failures": failures,
        }


def _failure(key, left, right):
    return {"key": key, "left": left, "right": right}


def _collect(name, lab, func, items):
    """Run `func` on all items through the lab's workers and gather failures."""
    items = list(items)
    failures = []
    for found in lab.map(func, items):
        failures += found
    LGR.info(f"Check {name}: {len(items)} cases, {len(failures)} failures.")
    return CheckResult(name, len(items), failures)


def c_of_class(ctx, cid):
    """`cpx2.c_of_module` of a class id, memoised in the context."""
    return ctx.memo(
        "c", cid,
        lambda: cpx2.c_of_module(ctx.universe.representative(cid), ctx.resolution(cid)),
    )


def _independence(lab, name, elems):
    if hall.linear_independence_check(elems, lab.q):
        return []
    LGR.warning(f"Images of the {name} embedding are linearly dependent.")
    return [{"key": f"{name}_linear_independence", "left": [], "right": []}]


def _homomorphism(lab, name, image, product):
    """Check ``image([A] * [C]) == product(image(A), image(C))`` on in-bound pairs."""
    ctx = lab.ctx

    def one(pair):
        a, c = pair
        left = image(hall.hall_mul(ctx, hall.module_element(ctx, a),
                                   hall.module_element(ctx, c)))
        right = product(image(hall.module_element(ctx, a)),
                        image(hall.module_element(ctx, c)))
        if left == right:
            return []
        return [_failure([lab.label(a), lab.label(c)], left, right)]

    result = _collect(name, lab, one, hall.in_bound_pairs(ctx))
    elems = [image(hall.module_element(ctx, cid)) for cid in lab.classes]
    return result._replace(failures=result.failures + _independence(lab, name, elems))


def check_main(lab):
    """``I+([A] * [C]) == I+([A]) * I+([C])`` and independence of the E_A."""
    ctx = lab.ctx
    return _homomorphism(
        lab, "main", lambda x: hall.i_plus(ctx, x), lambda x, y: hall.dh_mul(ctx, x, y)
    )


def check_reduced(lab):
    """The main identity after reduction, and independence of the reduced E_A."""
    ctx = lab.ctx
    return _homomorphism(
        lab, "reduced",
        lambda x: hall.reduce_dh(hall.i_plus(ctx, x)),
        lambda x, y: hall.dhred_mul(ctx, x, y),
    )


def check_minus(lab):
    """The identity for ``[A] -> F_A``, the shifted embedding."""
    ctx = lab.ctx
    return _homomorphism(
        lab, "minus", lambda x: hall.i_minus(ctx, x), lambda x, y: hall.dh_mul(ctx, x, y)
    )


def check_phi(lab):
    """
    Cardinality of chain maps between the complexes of two modules.

    ``|Hom(C_A1, C_A2)| * |Hom(P0, Q2)|`` must equal
    ``|Hom(A1, A2)| * |Hom(P2, Q0)| * |Hom(P1, Q2)| * |Hom(P0, Q1)|``
    for minimal resolutions P of A1 and Q of A2.
    """
    ctx, q = lab.ctx, lab.q

    def one(pair):
        a1, a2 = pair
        res1, res2 = ctx.resolution(a1), ctx.resolution(a2)
        left = cpx2.hom_count_c2(c_of_class(ctx, a1), c_of_class(ctx, a2))
        left *= q ** modcat.hom_basis(res1.p0, res2.p2).dim
        right = q ** (
            modcat.hom_basis(lab.representative(a1), lab.representative(a2)).dim
            + modcat.hom_basis(res1.p2, res2.p0).dim
            + modcat.hom_basis(res1.p1, res2.p2).dim
            + modcat.hom_basis(res1.p0, res2.p1).dim
        )
        if left == right:
            return []
        return [{"key": [lab.label(a1), lab.label(a2)], "left": left, "right": right}]

    return _collect("phi", lab, one, product(lab.classes, repeat=2))


def check_extiso(lab):
    """``|Ext^1(C_A1, C_A2)| == |Ext^1(A1, A2)|`` for all pairs."""
    ctx, q = lab.ctx, lab.q

    def one(pair):
        a1, a2 = pair
        left = q ** cpx2.ext_data_c2(c_of_class(ctx, a1), c_of_class(ctx, a2)).dim
        _, ext1, _ = modcat.ext_dims(
            lab.representative(a1), lab.representative(a2), ctx.resolution(a1)
        )
        if left == q**ext1:
            return []
        return [{"key": [lab.label(a1), lab.label(a2)], "left": left, "right": q**ext1}]

    return _collect("extiso", lab, one, product(lab.classes, repeat=2))


def check_epad(lab):
    """E_A computed from padded resolutions equals E_A, for small paddings."""
    ctx, alg = lab.ctx, lab.alg
    pads = utils.padding_pairs(alg.n_vertices)

    def one(item):
        cid, (r0, r1) = item
        padded = hall.e_of_padded(
            ctx, lab.representative(cid), modcat.projective_sum(alg, r0),
            modcat.projective_sum(alg, r1), ctx.resolution(cid),
        )
        expected = lab.e(cid)
        if padded == expected:
            return []
        return [_failure([lab.label(cid), list(r0), list(r1)], padded, expected)]

    return _collect("epad", lab, one, product(lab.classes, pads))


def _relation_failures(ctx, vertex, cpx, name):
    alg, euler = ctx.alg, ctx.euler
    proj = modcat.projective_sum(alg, (vertex,))
    phat, mhat = proj.kclass, cpx.kclass
    t = ctx.t
    failures = []
    for kind, sign in (("plus", 1), ("star", -1)):
        acyclic = cpx2.k_acyclic(proj, kind)
        left_mul = hall.raw_c2_product(ctx, acyclic, cpx)
        right_mul = hall.raw_c2_product(ctx, cpx, acyclic)
        joint = hall.complex_element(ctx, cpx2.direct_sum_c2(acyclic, cpx))
        identities = (
            ("left", left_mul, hall.scale(joint, t(sign * euler.pair(phat, mhat)))),
            ("right", right_mul, hall.scale(joint, t(-sign * euler.pair(mhat, phat)))),
            ("commute", left_mul, hall.scale(right_mul, t(sign * euler.sym(phat, mhat)))),
        )
        for what, left, right in identities:
            if left != right:
                failures.append(_failure([f"{kind}_{what}", vertex, name], left, right))
    kelem = hall.k_element(ctx, phat)
    melem = hall.complex_element(ctx, cpx)
    left = hall.dh_mul(ctx, kelem, melem)
    right = hall.scale(hall.dh_mul(ctx, melem, kelem), t(euler.sym(phat, mhat)))
    if left != right:
        failures.append(_failure(["normal_form_commute", vertex, name], left, right))
    return failures


def check_relations(lab):
    """
    Products of contractible complexes with any complex.

    For every standard projective P and every complex M among the C_A and
    their shifts: ``[K_P] * [M] = t**<P, M> [K_P + M]``,
    ``[M] * [K_P] = t**-<M, P> [K_P + M]``, the same with opposite signs for
    ``K*_P``, and the commutation rules both from raw products and in normal
    form. Also ``[K_P] * [K_Q] = [K_P + K_Q]`` and
    ``[K_P] * [K*_Q] = [K_P + K*_Q]``.
    """
    ctx, alg = lab.ctx, lab.alg
    complexes = []
    for cid in lab.classes:
        cpx = c_of_class(ctx, cid)
        complexes += [(cpx, lab.label(cid)), (cpx2.shift(cpx), f"{lab.label(cid)}*")]
    vertices = range(alg.n_vertices)

    def one(item):
        if item[0] == "module":
            _, vertex, (cpx, name) = item
            return _relation_failures(ctx, vertex, cpx, name)
        _, i, j = item
        kp = cpx2.k_acyclic(modcat.projective_sum(alg, (i,)), "plus")
        failures = []
        for kind in ("plus", "star"):
            other = cpx2.k_acyclic(modcat.projective_sum(alg, (j,)), kind)
            left = hall.raw_c2_product(ctx, kp, other)
            right = hall.complex_element(ctx, cpx2.direct_sum_c2(kp, other))
            if left != right:
                failures.append(_failure([f"acyclic_{kind}", i, j], left, right))
        return failures

    items = [("module", v, m) for v in vertices for m in complexes]
    items += [("acyclic", i, j) for i in vertices for j in vertices]
    return _collect("relations", lab, one, items)


def check_rp(lab):
    """
    Hall numbers by subspace counting against extension counting.

    ``g * |Aut A| * |Aut C| * |Hom(A, C)| == |Ext^1(A, C)_B| * |Aut B|`` on all
    triples, and ``g = q + 1`` for ``B = S + S``, A and C simple.
    """
    universe, cap, q = lab.universe, lab.budget, lab.q

    def one(item):
        a, b, c = (lab.representative(cid) for cid in item)
        left, right = modcat.riedtmann_check(a, b, c, universe.classify, cap)
        if left == right:
            return []
        return [{"key": [lab.label(cid) for cid in item], "left": left, "right": right}]

    triples = [
        (a, b, c)
        for a, b, c in product(lab.classes, repeat=3)
        if universe.total_dim(b) == universe.total_dim(a) + universe.total_dim(c)
        and all(
            x + y == z for x, y, z in zip(universe.dim_vector(a), universe.dim_vector(c),
                                          universe.dim_vector(b))
        )
    ]
    result = _collect("rp", lab, one, triples)
    failures = list(result.failures)
    if lab.max_total_dim >= 2:
        for vertex in range(lab.n_vertices):
            simple = standard_modules(lab.alg, vertex, "simple")
            double = modcat.direct_sum(simple, simple)
            g = modcat.hall_number_oracle(simple, double, simple, cap)
            if g != q + 1:
                failures.append({"key": ["double_simple", vertex], "left": g, "right": q + 1})
    return result._replace(failures=failures)


def _sample(items, rng):
    if len(items) <= N_ASSOC_SAMPLES:
        return items
    picked = rng.choice(len(items), size=N_ASSOC_SAMPLES, replace=False)
    return [items[i] for i in sorted(picked)]


def check_assoc(lab):
    """Associativity of both products on sampled triples of basis elements."""
    ctx = lab.ctx
    rng = np.random.default_rng(lab.seed)
    universe = lab.universe
    hall_triples = [
        triple
        for triple in product(lab.classes, repeat=3)
        if sum(universe.total_dim(cid) for cid in triple) <= lab.max_total_dim
    ]
    store = ctx.store
    pool = sorted(
        {key for cid in lab.classes for key in lab.e(cid)},
        key=lambda key: (key[0], key[1], store.canonical(key[2])),
    )
    pool = [{key: ctx.one()} for key in pool]
    for vertex in range(lab.n_vertices):
        phat = modcat.projective_sum(lab.alg, (vertex,)).kclass
        pool += [hall.k_element(ctx, phat), hall.kstar_element(ctx, phat)]
    dh_triples = list(product(range(len(pool)), repeat=3))

    def one(item):
        kind, triple = item
        if kind == "hall":
            x, y, z = (hall.module_element(ctx, cid) for cid in triple)
            mul, key = hall.hall_mul, [lab.label(cid) for cid in triple]
        else:
            x, y, z = (pool[i] for i in triple)
            mul, key = hall.dh_mul, list(triple)
        left = mul(ctx, mul(ctx, x, y), z)
        right = mul(ctx, x, mul(ctx, y, z))
        if left == right:
            return []
        return [_failure([kind] + key, left, right)]

    items = [("hall", t) for t in _sample(hall_triples, rng)]
    items += [("dh", t) for t in _sample(dh_triples, rng)]
    return _collect("assoc", lab, one, items)


def check_structure(lab):
    """
    Sanity of the complexes of modules and of the Euler form.

    ``H0(C_A) = A``, ``H1(C_A) = 0``, the class of C_A is that of A, C_A has
    no acyclic summand, stripping padded complexes recovers the paddings in
    any vertex order, and the Euler form matches Hom/Ext dimensions.
    """
    ctx, alg, euler = lab.ctx, lab.alg, lab.ctx.euler
    reversed_order = list(reversed(range(alg.n_vertices)))

    def one_module(cid):
        rep = lab.representative(cid)
        cpx = c_of_class(ctx, cid)
        h0, h1 = cpx2.homology(cpx)
        failures = []
        if not modcat.is_isomorphic(h0, rep, lab.budget) or h1.total_dim:
            failures.append({"key": ["homology", lab.label(cid)], "left": list(h0.dim_vector),
                             "right": list(rep.dim_vector)})
        if tuple(cpx.kclass) != rep.dim_vector:
            failures.append({"key": ["kclass", lab.label(cid)], "left": list(map(int, cpx.kclass)),
                             "right": list(rep.dim_vector)})
        if cpx2.has_acyclic_summand(cpx):
            failures.append({"key": ["acyclic_free", lab.label(cid)], "left": 1, "right": 0})
        for r0, r1 in utils.padding_pairs(alg.n_vertices, 2):
            padded = cpx2.c_of_module_padded(
                rep, modcat.projective_sum(alg, r0), modcat.projective_sum(alg, r1),
                ctx.resolution(cid),
            )
            for order in (None, reversed_order):
                pplus, pstar, core = cpx2.strip_acyclics(padded, order)
                if (
                    pplus.summands != tuple(sorted(r0))
                    or pstar.summands != tuple(sorted(r1))
                    or not cpx2.is_isomorphic_c2(core, cpx, lab.budget)
                ):
                    failures.append({"key": ["strip", lab.label(cid), list(r0), list(r1)],
                                     "left": [list(pplus.summands), list(pstar.summands)],
                                     "right": [list(r0), list(r1)]})
        return failures

    def one_pair(pair):
        a, b = pair
        rep_a, rep_b = lab.representative(a), lab.representative(b)
        hom, ext1, ext2 = modcat.ext_dims(rep_a, rep_b, ctx.resolution(a))
        left = euler.pair(rep_a.kclass, rep_b.kclass)
        if left == hom - ext1 + ext2:
            return []
        return [{"key": ["euler", lab.label(a), lab.label(b)], "left": left,
                 "right": hom - ext1 + ext2}]

    def one(item):
        kind, payload = item
        return one_module(payload) if kind == "module" else one_pair(payload)

    items = [("module", cid) for cid in lab.classes]
    items += [("pair", pair) for pair in product(lab.classes, repeat=2)]
    return _collect("structure", lab, one, items)


CHECKS = {
    "structure": check_structure,
    "main": check_main,
    "reduced": check_reduced,
    "minus": check_minus,
    "phi": check_phi,
    "extiso": check_extiso,
    "epad": check_epad,
    "relations": check_relations,
    "rp": check_rp,
    "assoc": check_assoc,
}


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
