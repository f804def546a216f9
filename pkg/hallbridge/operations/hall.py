#!/usr/bin/env python3
"""
Twisted Hall algebra of modules and the localized Hall algebra of complexes.

Elements are plain dicts from basis keys to `TCoeff`, without zero entries:

- Hall elements are keyed by module class ids of a `ModuleUniverse`.
- Localized elements are keyed by ``(alpha, beta, complex id)``, standing for
  ``K_alpha * K*_beta * [Y]`` with Y free of acyclic summands.
- Reduced elements are keyed by ``(gamma, complex id)``, with
  ``K*_beta == K_(-beta)``.

Classes alpha, beta, gamma are tuples in the basis of simples.
"""

import logging
from fractions import Fraction
from threading import RLock

import numpy as np

from ..errors import BoundExceeded
from . import ffalg
from .cpx2 import (
    ComplexStore,
    c_of_module,
    c_of_module_padded,
    complex_class_id,
    ext1_with_middles_c2,
    hom_basis_c2,
    shift,
    zero_complex,
)
from .modcat import (
    ISO_SEARCH_CAP,
    RAW_REPRESENTATION_CAP,
    SEED,
    ModuleUniverse,
    euler_form,
    ext1_with_middles,
    hom_basis,
    minimal_resolution,
)

LGR = logging.getLogger(__name__)


def _vec(x):
    return tuple(int(v) for v in x)


def _add(*vecs):
    return _vec(np.sum([np.asarray(v, dtype=np.int64) for v in vecs], axis=0))


def accumulate(out, key, coeff):
    """Add ``coeff`` to ``out[key]``, dropping the entry if it cancels."""
    total = out.get(key, 0) + coeff
    if total:
        out[key] = total
    else:
        out.pop(key, None)
    return out


def scale(x, coeff):
    """Multiply every coefficient of `x` by `coeff`."""
    out = {}
    for key, value in x.items():
        accumulate(out, key, value * coeff)
    return out


def add(x, y):
    """Sum of two elements."""
    out = dict(x)
    for key, value in y.items():
        accumulate(out, key, value)
    return out


class HallContext:
    """
    Shared state of all algebra computations over one algebra.

    Parameters
    ----------
    alg : hallbridge.operations.algdef.AlgebraData
        The algebra.
    max_total_dim : int
        Bound of the module universe.
    cap : int, optional
        Budget of every exhaustive search.
    raw_cap : int, optional
        Budget of the module enumeration.
    seed : int, optional
        Seed of random isomorphism candidates.
    universe : ModuleUniverse or None, optional
        Pre-computed universe with the same bound.

    Attributes
    ----------
    euler : hallbridge.operations.modcat.EulerForm
    store : hallbridge.operations.cpx2.ComplexStore
    """

    def __init__(self, alg, max_total_dim, cap=ISO_SEARCH_CAP,
                 raw_cap=RAW_REPRESENTATION_CAP, seed=SEED, universe=None):
        """Initialise HallContext (see class docstring)."""
        self.alg = alg
        self.q = alg.q
        self.cap = cap
        self.seed = seed
        self.universe = (
            universe
            if universe is not None
            else ModuleUniverse(alg, max_total_dim, cap, raw_cap, seed)
        )
        self.euler = euler_form(alg)
        self.store = ComplexStore(cap, seed)
        self.zero_id = self.store.register(zero_complex(alg))
        self._lock = RLock()
        self._memo = {}

    @property
    def bound(self):
        """Bound of the module universe."""
        return self.universe.bound

    @property
    def zero_class(self):
        """The zero class of the Grothendieck group."""
        return (0,) * self.alg.n_vertices

    def one(self):
        """The coefficient 1."""
        return ffalg.TCoeff(1, 0, self.q)

    def t(self, k):
        """``t**k``."""
        return ffalg.tpow(k, self.q)

    def memo(self, table, key, func):
        """
        Memoised ``func()`` under ``(table, key)``.

        The value is computed outside the lock; concurrent callers keep the
        first inserted result.
        """
        with self._lock:
            if (table, key) in self._memo:
                return self._memo[(table, key)]
        value = func()
        with self._lock:
            return self._memo.setdefault((table, key), value)

    def memo_size(self):
        """Number of memoised entries."""
        with self._lock:
            return len(self._memo)

    def resolution(self, cid):
        """Minimal resolution of a module class."""
        return self.memo(
            "resolution", cid,
            lambda: minimal_resolution(self.universe.representative(cid)),
        )

    def projective_class(self, multiplicities):
        """Class of the projective with the given summand multiplicities."""
        return _vec(self.alg.cartan @ np.asarray(multiplicities, dtype=np.int64))


# ### Twisted Hall algebra of modules
def hall_unit(ctx):
    """The unit ``[0]``."""
    return {ctx.universe.zero(): ctx.one()}


def module_element(ctx, cid):
    """The basis element ``[A]``."""
    return {cid: ctx.one()}


def hall_basis_product(ctx, a, c):
    """
    ``[A] * [C]`` for two module class ids.

    Raises
    ------
    BoundExceeded
        If ``dim A + dim C`` exceeds the universe bound.
    """

    def compute():
        universe = ctx.universe
        rep_a, rep_c = universe.representative(a), universe.representative(c)
        if rep_a.total_dim + rep_c.total_dim > ctx.bound:
            raise BoundExceeded(
                f"Product of {universe.label(a)} and {universe.label(c)} has "
                f"middle terms beyond the bound {ctx.bound}."
            )
        tallies = ext1_with_middles(
            rep_a, rep_c, universe.classify, ctx.resolution(a), ctx.cap
        )
        homs = ctx.q ** hom_basis(rep_a, rep_c).dim
        twist = ctx.t(ctx.euler.pair(rep_a.kclass, rep_c.kclass))
        out = {}
        for b, count in tallies.items():
            accumulate(out, b, twist * Fraction(count, homs))
        return out

    return ctx.memo("hall", (a, c), compute)


def hall_mul(ctx, x, y):
    """
    Product in the twisted Hall algebra.

    ``[A] * [C] = t**<A, C> * sum_B |Ext^1(A, C)_B| / |Hom(A, C)| [B]``,
    extended bilinearly.

    Raises
    ------
    BoundExceeded
        If a middle term falls outside the enumerated universe.
    """
    out = {}
    for a, ca in x.items():
        for c, cc in y.items():
            for b, cb in hall_basis_product(ctx, a, c).items():
                accumulate(out, b, ca * cc * cb)
    return out


def in_bound_pairs(ctx):
    """Pairs of class ids whose products stay within the bound."""
    universe = ctx.universe
    return [
        (a, c)
        for a in universe
        for c in universe
        if universe.total_dim(a) + universe.total_dim(c) <= ctx.bound
    ]


# ### Localized Hall algebra of complexes
def _normal_term(ctx, prefix, class_id, coeff):
    """Key and coefficient of ``K_a K*_b [K_P + K*_Q + Y]`` in normal form."""
    pmult, qmult, yid = class_id
    phat = ctx.projective_class(pmult)
    qhat = ctx.projective_class(qmult)
    yhat = ctx.store.representative(yid).kclass
    factor = ctx.t(ctx.euler.pair(np.subtract(qhat, phat), yhat))
    key = (_add(prefix[0], phat), _add(prefix[1], qhat), yid)
    return key, coeff * factor


def normalize_dh(ctx, prefix, cpx, coeff):
    """
    Rewrite ``K_alpha * K*_beta * [X]`` in normal form.

    With X split as ``K_P + K*_Q + Y``, the result is
    ``coeff * t**<Q - P, Y>`` on the key ``(alpha + P, beta + Q, Y)``.

    Parameters
    ----------
    ctx : HallContext
    prefix : tuple
        ``(alpha, beta)``.
    cpx : hallbridge.operations.cpx2.Complex2
    coeff : TCoeff or int

    Returns
    -------
    dict
    """
    key, value = _normal_term(ctx, prefix, complex_class_id(cpx, ctx.store), coeff)
    return accumulate({}, key, value)


def dh_unit(ctx):
    """The unit: the zero complex with trivial prefix."""
    return {(ctx.zero_class, ctx.zero_class, ctx.zero_id): ctx.one()}


def k_element(ctx, alpha):
    """``K_alpha``."""
    return {(_vec(alpha), ctx.zero_class, ctx.zero_id): ctx.one()}


def kstar_element(ctx, beta):
    """``K*_beta``."""
    return {(ctx.zero_class, _vec(beta), ctx.zero_id): ctx.one()}


def complex_element(ctx, cpx):
    """``[X]`` for any complex, in normal form."""
    return normalize_dh(ctx, (ctx.zero_class, ctx.zero_class), cpx, ctx.one())


def raw_c2_product(ctx, m, n):
    """
    ``[M] * [N]`` computed from the extensions of two arbitrary complexes.

    ``t**(<M0, N0> + <M1, N1>) * sum_X |Ext^1(M, N)_X| / |Hom(M, N)| [X]``,
    with every middle X rewritten in normal form.
    """
    euler, q = ctx.euler, ctx.q
    twist = ctx.t(euler.pair(m.m0.kclass, n.m0.kclass) + euler.pair(m.m1.kclass, n.m1.kclass))
    homs = q ** hom_basis_c2(m, n).dim
    tallies = ext1_with_middles_c2(m, n, ctx.store, ctx.cap)
    out = {}
    zero = (ctx.zero_class, ctx.zero_class)
    for class_id in sorted(tallies):
        key, value = _normal_term(ctx, zero, class_id, twist * Fraction(tallies[class_id], homs))
        accumulate(out, key, value)
    return out


def _core_product(ctx, m, n):
    store = ctx.store
    return ctx.memo(
        "dh", (m, n),
        lambda: raw_c2_product(ctx, store.representative(m), store.representative(n)),
    )


def dh_mul(ctx, x, y):
    """
    Product in the localized Hall algebra, in normal form.

    On basis keys,
    ``(K_a K*_b [M]) * (K_c K*_d [N]) = t**((d, M) - (c, M)) K_(a+c) K*_(b+d) [M] * [N]``,
    with ``(-, -)`` the symmetrised Euler form.

    Raises
    ------
    SearchBudgetExceeded
        If an extension enumeration exceeds the budget.
    """
    euler = ctx.euler
    out = {}
    for (alpha, beta, m), cx in x.items():
        mhat = ctx.store.representative(m).kclass
        for (gamma, delta, n), cy in y.items():
            twist = ctx.t(euler.sym(delta, mhat) - euler.sym(gamma, mhat))
            for (phat, qhat, yid), c in _core_product(ctx, m, n).items():
                key = (_add(alpha, gamma, phat), _add(beta, delta, qhat), yid)
                accumulate(out, key, cx * cy * twist * c)
    return out


def e_of_module(ctx, rep, res=None):
    """
    ``E_A = t**<P1 - 2 P2, A> K_(-P1) K_(P2) K*_(-P2) [C_A]``.

    P0, P1, P2 are the terms of the minimal resolution of A.

    Raises
    ------
    GlobalDimensionExceeded
        If A has projective dimension above 2.
    """
    res = res if res is not None else minimal_resolution(rep)
    return _e_element(ctx, rep, res.p1.kclass, res.p2.kclass, c_of_module(rep, res))


def _e_element(ctx, rep, p1, p2, cpx):
    coeff = ctx.t(ctx.euler.pair(p1 - 2 * p2, rep.kclass))
    prefix = (_vec(p2 - p1), _vec(-p2))
    return normalize_dh(ctx, prefix, cpx, coeff)


def e_of_padded(ctx, rep, r0, r1, res=None):
    """
    `e_of_module` computed from a resolution padded by projectives R0 and R1.

    The padded resolution has terms ``R0 + P0``, ``R0 + P1 + R1`` and
    ``R1 + P2``; its complex is `c_of_module_padded`. The result does not
    depend on the padding.
    """
    res = res if res is not None else minimal_resolution(rep)
    p1 = res.p1.kclass + r0.kclass + r1.kclass
    p2 = res.p2.kclass + r1.kclass
    return _e_element(ctx, rep, p1, p2, c_of_module_padded(rep, r0, r1, res))


def e_of_class(ctx, cid):
    """`e_of_module` of a module class id, memoised."""
    return ctx.memo(
        "e", cid,
        lambda: e_of_module(ctx, ctx.universe.representative(cid), ctx.resolution(cid)),
    )


def i_plus(ctx, x):
    """The embedding ``[A] -> E_A``, extended linearly."""
    out = {}
    for cid, coeff in x.items():
        for key, value in e_of_class(ctx, cid).items():
            accumulate(out, key, coeff * value)
    return out


def _shift_id(ctx, yid):
    store = ctx.store
    return ctx.memo(
        "shift", yid, lambda: store.register(shift(store.representative(yid)))
    )


def shift_dh(ctx, x):
    """The involution ``K_a K*_b [M] -> K_b K*_a [M*]``."""
    out = {}
    for (alpha, beta, m), coeff in x.items():
        accumulate(out, (beta, alpha, _shift_id(ctx, m)), coeff)
    return out


def i_minus(ctx, x):
    """The embedding ``[A] -> F_A``, the shift of ``E_A``."""
    return shift_dh(ctx, i_plus(ctx, x))


# ### Reduced algebra
def reduce_dh(x):
    """Set ``K*_b = K_(-b)``: key ``(a, b, M) -> (a - b, M)``."""
    out = {}
    for (alpha, beta, m), coeff in x.items():
        accumulate(out, (_vec(np.subtract(alpha, beta)), m), coeff)
    return out


def _lift(ctx, x):
    return {(gamma, ctx.zero_class, m): coeff for (gamma, m), coeff in x.items()}


def dhred_mul(ctx, x, y):
    """Product in the reduced algebra."""
    return reduce_dh(dh_mul(ctx, _lift(ctx, x), _lift(ctx, y)))


def dhred_unit(ctx):
    """Unit of the reduced algebra."""
    return reduce_dh(dh_unit(ctx))


def linear_independence_check(elems, q):
    """
    Decide linear independence of algebra elements over the coefficient field.

    Parameters
    ----------
    elems : list of dict
        Elements of any of the algebras above.
    q : int
        Field size.

    Returns
    -------
    bool
    """
    keys = sorted({key for elem in elems for key in elem})
    rows = [[elem.get(key, 0) for key in keys] for elem in elems]
    return ffalg.tcoeff_rank(rows, q) == len(elems)


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
