#!/usr/bin/env python3
"""
Exact linear algebra over prime fields and the coefficient ring of twists.

Matrices over F_q are ``numpy`` arrays of ``int64`` with entries reduced mod q.
Twisted coefficients live in the ring of rationals adjoined ``t`` with
``t**2 == q``, which is a field since q is prime.

Attributes
----------
LGR
    Logger
SUPPORTED_FIELDS
    Prime field sizes accepted by the package.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import NamedTuple, Optional

import numpy as np

from ..errors import DivisionByZero, SearchBudgetExceeded

LGR = logging.getLogger(__name__)

SUPPORTED_FIELDS = (2, 3, 5, 7, 11, 13)


def check_field(q):
    """
    Check that `q` is a supported prime field size.

    Parameters
    ----------
    q : int
        Number of elements of the field.

    Returns
    -------
    int
        The field size.

    Raises
    ------
    ValueError
        If `q` is not a prime between 2 and 13.
    """
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)):
        raise ValueError(f"Field size must be an integer, got {type(q)}.")
    if int(q) not in SUPPORTED_FIELDS:
        raise ValueError(
            f"Field size {q} is not supported. Supported sizes are: "
            f"{SUPPORTED_FIELDS}"
        )
    return int(q)


class TCoeff:
    """
    Exact element ``a + b*t`` of the rationals adjoined ``t``, with ``t**2 == q``.

    Integers and fractions are promoted automatically in arithmetic.
    Instances are immutable and hashable.
    """

    __slots__ = ("a", "b", "q")

    def __init__(self, a=0, b=0, q=2):
        """Initialise TCoeff (see class docstring)."""
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "q", int(q))

    def __setattr__(self, name, value):
        raise AttributeError("TCoeff is immutable")

    def _coerce(self, other):
        if isinstance(other, TCoeff):
            if other.q != self.q:
                raise ValueError(
                    f"Cannot combine coefficients over q={self.q} and q={other.q}"
                )
            return other
        if isinstance(other, np.integer):
            other = int(other)
        if isinstance(other, (int, Fraction)):
            return TCoeff(other, 0, self.q)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TCoeff(self.a + other.a, self.b + other.b, self.q)

    __radd__ = __add__

    def __neg__(self):
        return TCoeff(-self.a, -self.b, self.q)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TCoeff(self.a - other.a, self.b - other.b, self.q)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TCoeff(
            self.a * other.a + self.b * other.b * self.q,
            self.a * other.b + self.b * other.a,
            self.q,
        )

    __rmul__ = __mul__

    def inverse(self):
        """
        Return the multiplicative inverse.

        Raises
        ------
        DivisionByZero
            If the coefficient is zero.
        """
        norm = self.a * self.a - self.q * self.b * self.b
        if norm == 0:
            raise DivisionByZero("Division by the zero coefficient.")
        return TCoeff(self.a / norm, -self.b / norm, self.q)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = TCoeff(1, 0, self.q)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, TCoeff):
            return NotImplemented
        return (self.a, self.b, self.q) == (other.a, other.b, other.q)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.q))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_zero(self):
        """Return True if the coefficient is zero."""
        return not self

    def __repr__(self):
        return f"TCoeff({self.a}, {self.b}, q={self.q})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*t"
        return f"{self.a} + {self.b}*t"


def tcoeff_arith(x, y, op):
    """
    Apply ``op`` (one of 'add', 'mul', 'div') to two coefficients.

    Raises
    ------
    DivisionByZero
        If dividing by zero.
    NotImplementedError
        If `op` is not supported.
    """
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise NotImplementedError(f"Operation {op} is not supported.")


def tpow(k, q):
    """
    Return ``t**k`` exactly, for any integer `k`.

    ``t**(2m) = q**m`` and ``t**(2m+1) = q**m * t``.

    Parameters
    ----------
    k : int
        The exponent, possibly negative.
    q : int
        The field size.

    Returns
    -------
    TCoeff
    """
    m, r = divmod(int(k), 2)
    scale = Fraction(q) ** m
    if r == 0:
        return TCoeff(scale, 0, q)
    return TCoeff(0, scale, q)


def mod(mat, q):
    """Return `mat` as an int64 array reduced mod `q`."""
    return np.asarray(mat, dtype=np.int64) % q


@lru_cache(maxsize=None)
def inverse_table(q):
    """Return the array of multiplicative inverses mod `q` (0 maps to 0)."""
    return np.array([0] + [pow(x, q - 2, q) for x in range(1, q)], dtype=np.int64)


def rref(mat, q):
    """
    Compute the reduced row echelon form of `mat` over F_q.

    Parameters
    ----------
    mat : array-like
        2D matrix.
    q : int
        Field size.

    Returns
    -------
    numpy.ndarray
        The reduced matrix.
    tuple of int
        The pivot columns.
    """
    red = mod(mat, q).copy()
    if red.ndim != 2:
        raise ValueError(f"Expected a 2D matrix, got {red.ndim} dimensions.")
    inv = inverse_table(q)
    nrows, ncols = red.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nonzero = np.nonzero(red[row:, col])[0]
        if nonzero.size == 0:
            continue
        piv = row + nonzero[0]
        if piv != row:
            red[[row, piv]] = red[[piv, row]]
        red[row] = (red[row] * inv[red[row, col]]) % q
        factors = red[:, col].copy()
        factors[row] = 0
        touched = factors != 0
        if touched.any():
            red[touched] = (
                red[touched] - np.outer(factors[touched], red[row])
            ) % q
        pivots.append(col)
        row += 1
    return red, tuple(pivots)


def rank(mat, q):
    """Return the rank of `mat` over F_q."""
    mat = np.asarray(mat)
    if mat.size == 0:
        return 0
    return len(rref(mat, q)[1])


def nullspace(mat, q):
    """
    Return a basis of the right kernel of `mat` over F_q, as columns.

    Parameters
    ----------
    mat : array-like
        2D matrix of shape (m, n).
    q : int
        Field size.

    Returns
    -------
    numpy.ndarray
        Matrix of shape (n, k), k the kernel dimension.
    """
    mat = mod(mat, q)
    ncols = mat.shape[1]
    red, pivots = rref(mat, q)
    free = [j for j in range(ncols) if j not in pivots]
    basis = np.zeros((ncols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-red[i, f]) % q
    return basis


class SolutionSpace(NamedTuple):
    """Affine solution set of a linear system: ``particular + span(basis)``."""

    dim: int
    particular: Optional[np.ndarray]
    basis: np.ndarray


def solution_space(amat, bvec, q):
    """
    Solve ``amat @ x = bvec`` over F_q.

    Parameters
    ----------
    amat : array-like
        Matrix of shape (m, n).
    bvec : array-like
        Vector of length m (or column of shape (m, 1)).
    q : int
        Field size.

    Returns
    -------
    SolutionSpace
        `particular` is None when the system has no solution. `basis` holds the
        kernel of `amat` as columns, so the solution set has q**dim elements.
    """
    amat = mod(amat, q)
    nrows, ncols = amat.shape
    bvec = mod(bvec, q).reshape(nrows, 1)
    red, pivots = rref(np.hstack([amat, bvec]), q)
    basis = nullspace(amat, q)
    if ncols in pivots:
        return SolutionSpace(basis.shape[1], None, basis)
    particular = np.zeros(ncols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        particular[pc] = red[i, ncols]
    return SolutionSpace(basis.shape[1], particular, basis)


def colspace(mat, q):
    """Return a basis (as columns) of the column space of `mat` over F_q."""
    mat = mod(mat, q)
    if mat.shape[1] == 0:
        return np.zeros((mat.shape[0], 0), dtype=np.int64)
    red, pivots = rref(mat.T, q)
    return red[: len(pivots)].T.copy()


def complement_columns(sub, space, q):
    """
    Select columns of `space` that extend ``span(sub)`` to ``span(sub, space)``.

    Parameters
    ----------
    sub : numpy.ndarray
        Matrix (n, s), spanning the subspace to extend.
    space : numpy.ndarray
        Matrix (n, t), candidate columns.
    q : int
        Field size.

    Returns
    -------
    numpy.ndarray
        The selected columns of `space`, chosen greedily from the left.
    """
    sub = mod(sub, q)
    space = mod(space, q)
    nsub = sub.shape[1]
    if space.shape[1] == 0:
        return space.copy()
    _, pivots = rref(np.hstack([sub, space]), q)
    picked = [p - nsub for p in pivots if p >= nsub]
    return space[:, picked].copy()


def basis_extension(sub, q):
    """
    Complete the independent columns of `sub` to a basis of F_q^n.

    Returns
    -------
    numpy.ndarray
        Invertible matrix ``[sub | extra]``.
    numpy.ndarray
        Its inverse.
    """
    sub = mod(sub, q)
    n = sub.shape[0]
    extra = complement_columns(sub, np.eye(n, dtype=np.int64), q)
    full = np.hstack([sub, extra])
    return full, inverse(full, q)


def inverse(mat, q):
    """
    Invert a square matrix over F_q.

    Raises
    ------
    ValueError
        If the matrix is singular.
    """
    mat = mod(mat, q)
    n = mat.shape[0]
    if mat.shape != (n, n):
        raise ValueError(f"Cannot invert a matrix of shape {mat.shape}.")
    if n == 0:
        return mat.copy()
    red, pivots = rref(np.hstack([mat, np.eye(n, dtype=np.int64)]), q)
    if pivots[:n] != tuple(range(n)):
        raise ValueError("Matrix is singular.")
    return red[:, n:].copy()


def batch_invertible(mats, q):
    """
    Decide invertibility of a stack of square matrices over F_q at once.

    Parameters
    ----------
    mats : numpy.ndarray
        Array of shape (N, n, n).
    q : int
        Field size.

    Returns
    -------
    numpy.ndarray
        Boolean array of length N.
    """
    red = mod(mats, q).copy()
    nmat, n, _ = red.shape
    ok = np.ones(nmat, dtype=bool)
    if n == 0 or nmat == 0:
        return ok
    inv = inverse_table(q)
    idx = np.arange(nmat)
    for c in range(n):
        nonzero = red[:, c:, c] != 0
        ok &= nonzero.any(axis=1)
        piv = c + nonzero.argmax(axis=1)
        row_c = red[idx, c].copy()
        red[idx, c] = red[idx, piv]
        red[idx, piv] = row_c
        red[:, c] = (red[:, c] * inv[red[:, c, c]][:, np.newaxis]) % q
        factors = red[:, :, c].copy()
        factors[:, c] = 0
        red = (red - factors[:, :, np.newaxis] * red[:, c][:, np.newaxis, :]) % q
    return ok


def is_prime(n):
    """Return True if `n` is a prime number."""
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def matrix_power(mat, exponent, q):
    """Return ``mat**exponent`` over F_q, by repeated squaring."""
    out = np.eye(mat.shape[0], dtype=np.int64)
    base = mod(mat, q)
    while exponent:
        if exponent & 1:
            out = (out @ base) % q
        base = (base @ base) % q
        exponent >>= 1
    return out


def companion(coeffs, q):
    """Companion matrix of the monic polynomial ``x**k + sum_i coeffs[i] x**i``."""
    k = len(coeffs)
    comp = np.zeros((k, k), dtype=np.int64)
    comp[1:, :-1] = np.eye(k - 1, dtype=np.int64)
    comp[:, -1] = (-np.asarray(coeffs, dtype=np.int64)) % q
    return comp


@lru_cache(maxsize=None)
def extension_field(q, k):
    """
    Generator of the field with ``q**k`` elements, as a matrix over F_q.

    Returns the companion matrix C of the first monic irreducible polynomial
    of degree `k` in lexical order of its coefficients, so that the
    polynomials in C of degree < k form the field.

    A polynomial of prime degree k with no root in F_q is irreducible exactly
    when it divides ``x**(q**k) - x``, that is when ``C**(q**k) == C``.

    Parameters
    ----------
    q : int
        Field size.
    k : int
        Extension degree, a prime.

    Returns
    -------
    numpy.ndarray
        Matrix of shape (k, k).

    Raises
    ------
    ValueError
        If `k` is not prime.
    """
    if not is_prime(k):
        raise ValueError(f"Extension degree must be a prime, got {k}.")
    for coeffs in product(range(q), repeat=k):
        has_root = any(
            (pow(x, k, q) + sum(c * pow(x, i, q) for i, c in enumerate(coeffs))) % q == 0
            for x in range(q)
        )
        if has_root:
            continue
        comp = companion(coeffs, q)
        if np.array_equal(matrix_power(comp, q**k, q), comp):
            LGR.debug(f"Field of {q}^{k} elements from x^{k} + {list(coeffs)}.")
            return comp
    raise ValueError(f"No irreducible polynomial of degree {k} over F_{q}.")


def extension_elements(coeffs, comp, q):
    """
    Elements of the field generated by `comp`, as matrices over F_q.

    Parameters
    ----------
    coeffs : numpy.ndarray
        Array of shape (N, k): coordinates in the basis ``1, C, ..., C**(k-1)``.
    comp : numpy.ndarray
        Output of `extension_field`.
    q : int
        Field size.

    Returns
    -------
    numpy.ndarray
        Array of shape (N, k, k).
    """
    k = comp.shape[0]
    powers = np.stack([matrix_power(comp, j, q) for j in range(k)])
    return np.tensordot(mod(coeffs, q), powers, axes=(1, 0)) % q


def count_check(q, dim, cap, what="search"):
    """
    Raise if an enumeration of ``q**dim`` candidates exceeds `cap`.

    Raises
    ------
    SearchBudgetExceeded
        If ``q**dim > cap``.
    """
    if cap is not None and q**dim > cap:
        raise SearchBudgetExceeded(
            f"The {what} needs {q}^{dim} candidates, above the cap of {cap}."
        )


def iter_coefficients(dim, q, chunk=4096):
    """
    Yield every coefficient vector of F_q^dim, in chunks.

    Parameters
    ----------
    dim : int
        Length of the vectors.
    q : int
        Field size.
    chunk : int, optional
        Number of vectors per yielded block.

    Yields
    ------
    numpy.ndarray
        Array of shape (k, dim), k <= chunk.
    """
    total = q**dim
    radix = q ** np.arange(dim, dtype=np.int64)
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (codes[:, np.newaxis] // radix) % q


def enumerate_subspaces(n, k, q):
    """
    Yield every k-dimensional subspace of F_q^n, as a basis in columns.

    Each subspace is produced once, from its reduced row echelon form.

    Yields
    ------
    numpy.ndarray
        Matrix of shape (n, k).
    """
    if k < 0 or k > n:
        return
    for pivots in combinations(range(n), k):
        free = [
            (i, j)
            for i, pc in enumerate(pivots)
            for j in range(pc + 1, n)
            if j not in pivots
        ]
        for values in product(range(q), repeat=len(free)):
            echelon = np.zeros((k, n), dtype=np.int64)
            for i, pc in enumerate(pivots):
                echelon[i, pc] = 1
            for (i, j), v in zip(free, values):
                echelon[i, j] = v
            yield echelon.T.copy()


def gaussian_binomial(n, k, q):
    """Return the number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def tcoeff_rank(rows, q):
    """
    Rank of a matrix with TCoeff entries, over the field Q(t).

    Parameters
    ----------
    rows : list of list of TCoeff
        The matrix, row by row.
    q : int
        Field size.

    Returns
    -------
    int
    """
    work = [[TCoeff(0, 0, q) + entry for entry in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rnk = 0
    for col in range(ncols):
        piv = next((i for i in range(rnk, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rnk], work[piv] = work[piv], work[rnk]
        lead = work[rnk][col].inverse()
        work[rnk] = [entry * lead for entry in work[rnk]]
        for i in range(len(work)):
            if i != rnk and work[i][col]:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[rnk])]
        rnk += 1
        if rnk == len(work):
            break
    return rnk


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
