#!/usr/bin/env python3
"""Tests for utils."""

from numpy import ndarray
from pytest import mark, raises

from hallbridge import utils
from hallbridge.blocks import SUPPORTED_CHECKS


# ### Unit tests
@mark.parametrize(
    "var, dtype",
    [
        (6, int),
        ("hello", str),
        ([1, 1, 2], ndarray),
        ("6", int),
        (42, str),
        ("hi", list),
        ([1, 2], tuple),
        (3, tuple),
    ],
)
def test_change_var_type(var, dtype):
    var_out = utils.change_var_type(var, dtype, stop=False)
    assert isinstance(var_out, dtype)


@mark.parametrize(
    "checks, expected",
    [
        (None, list(SUPPORTED_CHECKS)),
        ("main", ["main"]),
        ("phi,main", ["main", "phi"]),
        (["Reduced", "main, reduced"], ["main", "reduced"]),
    ],
)
def test_parse_checks(checks, expected):
    assert utils.parse_checks(checks, SUPPORTED_CHECKS) == expected


def test_padding_pairs():
    pairs = utils.padding_pairs(2)
    assert pairs[0] == ((), ())
    assert len(pairs) == len(set(pairs))
    assert all(len(r0) + len(r1) <= 2 for r0, r1 in pairs)
    # one empty pair, 2 + 2 with one summand, 3 + 3 + 4 with two
    assert len(pairs) == 1 + 4 + 10
    assert utils.padding_pairs(3, max_summands=0) == [((), ())]


# ### Break tests
@mark.parametrize("var, dtype", [("6", int), (42, str), ("hi", list)])
def test_break_change_var_type(var, dtype):
    with raises(TypeError) as errorinfo:
        utils.change_var_type(var, dtype)
    assert "is not of type" in str(errorinfo.value)


def test_break_change_var_type_dtype():
    with raises(NotImplementedError) as errorinfo:
        utils.change_var_type(6, bool, stop=False)
    assert "not supported" in str(errorinfo.value)


def test_break_parse_checks():
    with raises(NotImplementedError) as errorinfo:
        utils.parse_checks("main,magic", SUPPORTED_CHECKS)
    assert "magic is not supported" in str(errorinfo.value)
