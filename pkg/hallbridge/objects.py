#!/usr/bin/env python3
"""
The main object of `hallbridge`.

It holds everything computed for one algebra: the presentation, its path
basis, the module universe, the Euler form and the memoised Hall products.

Contains duplications of operations, allowing a more object oriented approach
to interact with `hallbridge`.

Attributes
----------
LGR
    Logger
"""

import logging
from concurrent.futures import ThreadPoolExecutor

from . import io, operations
from .operations.hall import HallContext
from .operations.modcat import ISO_SEARCH_CAP, RAW_REPRESENTATION_CAP, SEED

LGR = logging.getLogger(__name__)


class HallLab:
    """
    Main module object, bundling an algebra with its computed structure.

    Parameters
    ----------
    presentation : hallbridge.operations.algdef.QuiverPresentation
        The algebra.
    max_total_dim : int
        Bound of the module enumeration.
    budget : int, optional
        Cap of every exhaustive search.
    raw_cap : int, optional
        Cap of the raw enumeration of arrow matrices.
    seed : int, optional
        Seed of random isomorphism candidates and of sampled checks.
    workers : int, optional
        Number of threads used by `map`.
    """

    def __init__(self, presentation, max_total_dim, budget=ISO_SEARCH_CAP,
                 raw_cap=RAW_REPRESENTATION_CAP, seed=SEED, workers=1):
        """Initialise HallLab (see class docstring)."""
        if max_total_dim < 0:
            raise ValueError(f"Bound must be non-negative, got {max_total_dim}.")
        if workers < 1:
            raise ValueError(f"At least one worker is needed, got {workers}.")
        self.presentation = presentation
        self.max_total_dim = int(max_total_dim)
        self.budget = budget
        self.raw_cap = raw_cap
        self.seed = seed
        self.workers = int(workers)
        self.alg = None
        self.gldim = None
        self.ctx = None

    @classmethod
    def from_file(cls, fname, max_total_dim, **kwargs):
        """Create a HallLab from a JSON presentation file."""
        return cls(io.load_presentation_file(fname), max_total_dim, **kwargs)

    # # Properties
    @property
    def q(self):
        """Return the field size."""
        return self.presentation.q

    @property
    def n_vertices(self):
        """Return the number of vertices."""
        return self.presentation.n_vertices

    @property
    def fingerprint(self):
        """Return the sha256 fingerprint of the presentation."""
        return io.fingerprint(self.presentation)

    @property
    def universe(self):
        """Return the module universe (once enumerated)."""
        return None if self.ctx is None else self.ctx.universe

    @property
    def classes(self):
        """Return the enumerated class ids."""
        return list(self.universe)

    # # Methods
    def build_basis(self):
        """Compute the path basis of the algebra."""
        self.alg = operations.path_basis(self.presentation)
        return self

    def certify_gldim(self):
        """Compute the global dimension certificate (at most 2)."""
        if self.alg is None:
            self.build_basis()
        self.gldim = operations.gldim_certificate(self.alg)
        LGR.info(f"Global dimension certificate: {self.gldim}")
        return self

    def enumerate(self):
        """Enumerate the module universe and set up the algebra context."""
        if self.alg is None:
            self.build_basis()
        self.ctx = HallContext(self.alg, self.max_total_dim, self.budget,
                               self.raw_cap, self.seed)
        return self

    def representative(self, cid):
        """Implement ModuleUniverse.representative as class method."""
        return self.universe.representative(cid)

    def label(self, cid):
        """Implement ModuleUniverse.label as class method."""
        return self.universe.label(cid)

    def hall_product(self, a, c):
        """Product ``[A] * [C]`` of two class ids."""
        ctx = self.ctx
        return operations.hall_mul(
            ctx, operations.hall.module_element(ctx, a),
            operations.hall.module_element(ctx, c),
        )

    def e(self, cid):
        """Implement hall.e_of_class as class method."""
        return operations.hall.e_of_class(self.ctx, cid)

    def map(self, func, items):
        """
        Apply `func` to every item, with `workers` threads, keeping the order.
        """
        items = list(items)
        if self.workers == 1:
            return [func(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(func, items))


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
