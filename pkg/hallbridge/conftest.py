from __future__ import annotations  # c.f. PEP 563, PEP 649

import json
import os
from typing import TYPE_CHECKING

from pytest import fixture

from hallbridge.operations import algdef

if TYPE_CHECKING:
    from pytest import Config


def pytest_configure(config: Config) -> None:
    """Configure pytest options."""
    warnings_lines = r"""
    error::
    """
    for warning_line in warnings_lines.split("\n"):
        warning_line = warning_line.strip()
        if warning_line and not warning_line.startswith("#"):
            config.addinivalue_line("filterwarnings", warning_line)


A2 = {
    "q": 2,
    "vertices": ["1", "2"],
    "arrows": [{"name": "a", "from": "1", "to": "2"}],
    "relations": [],
}

TWO_CYCLE = {
    "q": 2,
    "vertices": ["1", "2"],
    "arrows": [
        {"name": "alpha", "from": "1", "to": "2"},
        {"name": "beta", "from": "2", "to": "1"},
    ],
    "relations": [[{"coef": 1, "path": ["alpha", "beta"]}]],
}

THREE_VERTEX = {
    "q": 2,
    "vertices": ["1", "2", "3"],
    "arrows": [
        {"name": "alpha", "from": "1", "to": "2"},
        {"name": "beta", "from": "2", "to": "3"},
        {"name": "gamma", "from": "1", "to": "3"},
    ],
    "relations": [[{"coef": 1, "path": ["alpha", "beta"]}]],
}

ONE_LOOP = {
    "q": 2,
    "vertices": ["1"],
    "arrows": [{"name": "x", "from": "1", "to": "1"}],
    "relations": [],
}

ONE_VERTEX = {"q": 2, "vertices": ["1"], "arrows": [], "relations": []}


def write_presentation(path, filename, data):
    """Write `data` as JSON to `path`/`filename` and return the full path."""
    full_path = os.path.join(path, filename)
    with open(full_path, "w", encoding="utf-8") as f:
        json.dump(data, f)
    return full_path


@fixture(scope="session")
def testdir(tmp_path_factory):
    """Test path that will be used to write all input files."""
    return tmp_path_factory.getbasetemp()


@fixture(scope="function")
def a2_file(testdir):
    return write_presentation(testdir, "a2_f2.json", A2)


@fixture(scope="function")
def a2_f3_file(testdir):
    return write_presentation(testdir, "a2_f3.json", dict(A2, q=3))


@fixture(scope="function")
def two_cycle_file(testdir):
    return write_presentation(testdir, "two_cycle.json", TWO_CYCLE)


@fixture(scope="function")
def one_loop_file(testdir):
    return write_presentation(testdir, "one_loop.json", ONE_LOOP)


@fixture(scope="session")
def a2():
    return algdef.path_basis(algdef.presentation_from_dict(A2))


@fixture(scope="session")
def a2_f3():
    return algdef.path_basis(algdef.presentation_from_dict(dict(A2, q=3)))


@fixture(scope="session")
def two_cycle():
    return algdef.path_basis(algdef.presentation_from_dict(TWO_CYCLE))


@fixture(scope="session")
def three_vertex():
    return algdef.path_basis(algdef.presentation_from_dict(THREE_VERTEX))


@fixture(scope="session")
def one_vertex():
    return algdef.path_basis(algdef.presentation_from_dict(ONE_VERTEX))
