#!/usr/bin/env python3
"""
I/O and related utils.

Algebras are read from, and every result is written to, JSON files.

Attributes
----------
EXT_JSON : list
    List of supported JSON file extensions, in lower case.
LGR
    Logger
"""

import hashlib
import json
import logging
from fractions import Fraction
from os import makedirs
from os.path import dirname, exists

from .operations import ffalg
from .operations.algdef import load_presentation

EXT_JSON = [".json"]

LGR = logging.getLogger(__name__)


def check_ext(all_ext, fname, remove=False):
    """
    Check which extension a file has, and possibly remove it.

    Parameters
    ----------
    all_ext : list
        All possible extensions to check within.
    fname : str or os.PathLike
        The filename to check.
    remove : bool, optional
        Remove the extension from fname if it has one.

    Returns
    -------
    bool
        True if the file has one of the given extensions.
    str
        The file name, without extension if `remove` is True.
    str or None
        The extension found, if any.
    """
    fname = str(fname)
    for ext in all_ext:
        if fname.lower().endswith(ext):
            LGR.debug(f"{fname} ends with extension {ext}")
            if remove:
                fname = fname[: -len(ext)]
            return True, fname, ext
    return False, fname, None


def load_presentation_file(fname):
    """
    Load an algebra presentation from a JSON file.

    Parameters
    ----------
    fname : str or os.PathLike
        The file to read.

    Returns
    -------
    hallbridge.operations.algdef.QuiverPresentation

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    hallbridge.errors.ParseError
        If the content is not a valid presentation.
    """
    if not exists(fname):
        raise FileNotFoundError(f"Algebra file {fname} not found.")
    LGR.info(f"Loading algebra presentation from {fname}")
    with open(fname, "rb") as f:
        return load_presentation(f.read())


def fingerprint(presentation):
    """Sha256 of the canonical JSON form of a presentation."""
    text = json.dumps(presentation.to_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def tcoeff_to_dict(coeff):
    """Exact encoding ``{a_num, a_den, b_num, b_den}`` of ``a + b*t``."""
    return {
        "a_num": coeff.a.numerator,
        "a_den": coeff.a.denominator,
        "b_num": coeff.b.numerator,
        "b_den": coeff.b.denominator,
    }


def tcoeff_from_dict(data, q):
    """Inverse of `tcoeff_to_dict`."""
    return ffalg.TCoeff(
        Fraction(data["a_num"], data["a_den"]),
        Fraction(data["b_num"], data["b_den"]),
        q,
    )


def describe_key(key, labels=None, complexes=None):
    """
    JSON-friendly form of an algebra basis key.

    Parameters
    ----------
    key : bytes or tuple
        A module class id, a ``(alpha, beta, complex id)`` key or a
        ``(gamma, complex id)`` key.
    labels : callable or None, optional
        Maps module class ids to labels.
    complexes : callable or None, optional
        Maps complex ids to the bytes written out, e.g.
        `hallbridge.operations.cpx2.ComplexStore.canonical`.

    Returns
    -------
    str or dict
    """
    if isinstance(key, bytes):
        return labels(key) if labels is not None else key.hex()
    if len(key) not in (2, 3):
        raise ValueError(f"Unknown key shape: {key}")
    cid = key[-1] if complexes is None else complexes(key[-1])
    if len(key) == 3:
        return {"alpha": list(key[0]), "beta": list(key[1]), "complex": cid.hex()}
    return {"gamma": list(key[0]), "complex": cid.hex()}


def element_to_list(elem, labels=None, complexes=None):
    """
    Serialise an algebra element as a list of ``{key, coeff}``.

    Entries are sorted by their serialised key, so that the output does not
    depend on the internal ids.
    """
    entries = [
        {"key": describe_key(key, labels, complexes), "coeff": tcoeff_to_dict(coeff)}
        for key, coeff in elem.items()
    ]
    return sorted(entries, key=lambda entry: json.dumps(entry["key"], sort_keys=True))


def export_json(obj, fname):
    """
    Export an object into a JSON file with sorted keys.

    Parameters
    ----------
    obj : dict or list
        JSON-serialisable data.
    fname : str or os.PathLike
        Name of the output file. The ``.json`` extension is added if missing.

    Returns
    -------
    str
        The file written.
    """
    has_ext, fname, _ = check_ext(EXT_JSON, fname, remove=True)
    if not has_ext:
        LGR.warning("Extension not specified or not supported, exporting as JSON.")
    fname = f"{fname}.json"
    folder = dirname(fname)
    if folder:
        makedirs(folder, exist_ok=True)
    LGR.info(f"Exporting data into {fname}.")
    with open(fname, "w", encoding="utf-8") as f:
        json.dump(obj, f, sort_keys=True, indent=2)
        f.write("\n")
    return fname


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
