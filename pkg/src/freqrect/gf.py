"""Exact arithmetic over prime fields and over the integers.

Two rank computations live here, and both are exact:

* ``rank_gf`` -- rank of a matrix with entries in [0, q) over the prime
  field of q elements.  For q = 2 the rows are bit-packed and reduced
  with word XORs; other moduli use ordinary modular elimination.
* ``rank_exact`` -- rank of an arbitrary-precision integer matrix over
  the rationals, via fraction-free (Bareiss) elimination.  No floating
  point is used anywhere, so Gram/spectrum checks downstream stay sound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import gf2_rank_rows


class FieldError(ValueError):
    """Raised for non-prime moduli or undefined field operations."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The field of q elements, q prime.  Elements are ints in [0, q)."""

    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise FieldError(f"modulus {self.q} is not prime")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise FieldError("0 has no multiplicative inverse")
        return pow(a, self.q - 2, self.q)


def field_arith(field: FieldSpec, a: int, b: int, op: str) -> int:
    """Dispatch one field operation; ``b`` is ignored for ``inv``."""
    if op == "add":
        return field.add(a, b)
    if op == "sub":
        return field.sub(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "inv":
        return field.inv(a)
    raise ValueError(f"unknown op {op!r}")


def _rank_mod_generic(m: np.ndarray, q: int) -> int:
    """Plain Gaussian elimination mod q.  Also the reference path for q=2."""
    a = np.array(m, dtype=np.int64) % q
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if a[r, c] % q != 0:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, c]), q - 2, q)
        a[rank] = (a[rank] * inv) % q
        for r in range(rows):
            if r != rank and a[r, c] != 0:
                a[r] = (a[r] - a[r, c] * a[rank]) % q
        rank += 1
        if rank == rows:
            break
    return rank


def rank_gf(m, q: int, *, force_generic: bool = False) -> int:
    """Rank of ``m`` (2-D array-like, entries in [0, q)) over the q-element field.

    q = 2 takes a bit-packed fast path unless ``force_generic`` is set;
    both paths agree (tested).
    """
    if not is_prime(q):
        raise FieldError(f"modulus {q} is not prime")
    a = np.atleast_2d(np.asarray(m, dtype=np.int64))
    if a.size == 0:
        return 0
    if q == 2 and not force_generic:
        ncols = a.shape[1]
        packed = []
        for row in a % 2:
            v = 0
            for j in np.flatnonzero(row):
                v |= 1 << int(j)
            packed.append(v)
        return gf2_rank_rows(packed, ncols)
    return _rank_mod_generic(a, q)


def rank_exact(m) -> int:
    """Exact rank over the rationals of an integer matrix.

    Fraction-free single-step elimination on Python ints; entries may be
    arbitrarily large.  The input is not modified.
    """
    a = [[int(x) for x in row] for row in np.atleast_2d(np.asarray(m, dtype=object))]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    # Eliminating along the short axis keeps the work quadratic in rank.
    if rows > cols:
        a = [[a[r][c] for r in range(rows)] for c in range(cols)]
        rows, cols = cols, rows
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if a[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            a[rank], a[pivot] = a[pivot], a[rank]
        for r in range(rank + 1, rows):
            arc = a[r][c]
            for j in range(c + 1, cols):
                a[r][j] = (a[rank][c] * a[r][j] - arc * a[rank][j]) // prev
            a[r][c] = 0
        prev = a[rank][c]
        rank += 1
        if rank == rows:
            break
    return rank
