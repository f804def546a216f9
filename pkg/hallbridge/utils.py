#!/usr/bin/env python3
"""
General utils.

Attributes
----------
LGR
    Logger
"""

import logging
from itertools import combinations_with_replacement

from numpy import asarray, ndarray

LGR = logging.getLogger(__name__)


def change_var_type(var, dtype, varname="an input variable", stop=True, silent=False):
    """
    Make sure `var` is of type `dtype`.

    Parameters
    ----------
    var : str, int, list, or tuple
        Variable to change type of.
    dtype : type
        Type to change ``var`` to.
    varname : str, optional
        The name of the variable.
    stop : bool, optional
        If True, raises TypeError if ``var`` is not of ``dtype``.
    silent : bool, optional
        If True, log the change at debug level only.

    Returns
    -------
    int, str, list, tuple, or numpy.ndarray
        The given `var` in the given ``dtype``.

    Raises
    ------
    NotImplementedError
        If dtype is not int, str, list, tuple, or numpy.ndarray.
    TypeError
        If variable var is not of type and stop is True.
    """
    if varname != "an input variable":
        varname = f"variable {varname}"
    if type(var) is not dtype and stop:
        raise TypeError(f"{varname} is not of type {dtype}")

    if dtype is int:
        tmpvar = int(var)
    elif dtype is str:
        tmpvar = str(var)
    elif dtype is ndarray:
        tmpvar = asarray(var)
    elif dtype is list:
        tmpvar = list(var) if isinstance(var, (list, tuple)) else [var]
    elif dtype is tuple:
        tmpvar = tuple(var) if isinstance(var, (list, tuple)) else (var,)
    else:
        raise NotImplementedError(f"Type {dtype.__name__} not supported")

    if type(tmpvar) is not type(var):
        msg = f"Changing type of {varname} from {type(var)} to {dtype}"
        if silent:
            LGR.debug(msg)
        else:
            LGR.warning(msg)

    return tmpvar


def parse_checks(checks, supported):
    """
    Normalise a selection of verification checks.

    Parameters
    ----------
    checks : str, list of str, or None
        Comma separated names, a list of names (possibly comma separated
        themselves), or None for every supported check.
    supported : tuple of str
        Supported check names, in running order.

    Returns
    -------
    list of str
        The selected names, in the order of `supported`, without repetitions.

    Raises
    ------
    NotImplementedError
        If a name is not supported.
    """
    if checks in (None, "", []):
        return list(supported)
    names = []
    for item in change_var_type(checks, list, "checks", stop=False, silent=True):
        names += [name.strip().lower() for name in item.split(",") if name.strip()]
    for name in names:
        if name not in supported:
            raise NotImplementedError(
                f"Check {name} is not supported. Supported checks are: {supported}"
            )
    return [name for name in supported if name in names]


def padding_pairs(n_vertices, max_summands=2):
    """
    Pairs of projective summand lists ``(R0, R1)`` with few summands in total.

    Lists are sorted vertex indices; pairs are sorted by total size, then
    lexically.
    """
    lists = [
        combo
        for size in range(max_summands + 1)
        for combo in combinations_with_replacement(range(n_vertices), size)
    ]
    pairs = [
        (r0, r1) for r0 in lists for r1 in lists if len(r0) + len(r1) <= max_summands
    ]
    return sorted(pairs, key=lambda pair: (len(pair[0]) + len(pair[1]), pair))


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
