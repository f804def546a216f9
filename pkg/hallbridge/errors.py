#!/usr/bin/env python3
"""
Exceptions raised throughout `hallbridge`.

They subclass builtin exceptions, so catching ``ValueError`` or ``RuntimeError``
keeps working, and they carry the exit code used by the command line interface.
"""


class HallbridgeError(Exception):
    """Base of all `hallbridge` specific errors."""

    exit_code = 2


class DivisionByZero(HallbridgeError, ZeroDivisionError):
    """Division by the zero coefficient."""


class ParseError(HallbridgeError, ValueError):
    """Malformed algebra presentation."""


class NotAdmissible(HallbridgeError, ValueError):
    """A relation is not a combination of parallel paths of length at least 2."""


class UnknownVertexOrArrow(HallbridgeError, ValueError):
    """A vertex or an arrow name is not declared in the presentation."""


class NotFiniteDimensional(HallbridgeError, ValueError):
    """The path basis does not stabilise within the dimension cap."""


class NotProjective(HallbridgeError, ValueError):
    """A representation is not given as a sum of standard projectives."""


class GlobalDimensionExceeded(HallbridgeError, ValueError):
    """A second syzygy is not projective."""


class SearchBudgetExceeded(HallbridgeError, RuntimeError):
    """An exhaustive enumeration would exceed its configured cap."""


class BoundExceeded(HallbridgeError, RuntimeError):
    """A module falls outside the enumerated universe."""


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
