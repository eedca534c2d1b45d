"""Core design objects and their validity checks.

All objects validate eagerly: a constructed instance is guaranteed to
satisfy its defining counting conditions, so downstream transforms never
need to re-check their inputs.  Symbols are always 0..q-1; Hadamard
entries are +1/-1 and live in a separate type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np


class ShapeError(ValueError):
    """Dimensions incompatible with the requested object."""


class ValidationError(ValueError):
    """A counting condition failed; carries a structured witness."""

    def __init__(self, message: str, **witness):
        super().__init__(message)
        self.witness = witness


def _as_grid(grid) -> np.ndarray:
    a = np.asarray(grid, dtype=np.int64)
    if a.ndim != 2:
        raise ShapeError(f"expected a 2-D grid, got shape {a.shape}")
    return a


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FrequencyRectangle:
    """m x n grid over symbols [0, q): each symbol appears n/q times in
    every row and m/q times in every column."""

    cells: np.ndarray
    q: int

    def __post_init__(self):
        a = _as_grid(self.cells)
        m, n = a.shape
        q = self.q
        if q < 2:
            raise ShapeError(f"need at least 2 symbols, got q={q}")
        if m % q or n % q:
            raise ShapeError(f"q={q} must divide both m={m} and n={n}")
        if a.min() < 0 or a.max() >= q:
            raise ValidationError(f"symbols must lie in [0, {q})")
        row_freq = n // q
        col_freq = m // q
        for i in range(m):
            counts = np.bincount(a[i], minlength=q)
            bad = np.flatnonzero(counts != row_freq)
            if bad.size:
                s = int(bad[0])
                raise ValidationError(
                    f"row {i}: symbol {s} appears {counts[s]} times, expected {row_freq}",
                    axis="row", index=i, symbol=s,
                    found=int(counts[s]), expected=row_freq)
        for j in range(n):
            counts = np.bincount(a[:, j], minlength=q)
            bad = np.flatnonzero(counts != col_freq)
            if bad.size:
                s = int(bad[0])
                raise ValidationError(
                    f"column {j}: symbol {s} appears {counts[s]} times, expected {col_freq}",
                    axis="column", index=j, symbol=s,
                    found=int(counts[s]), expected=col_freq)
        object.__setattr__(self, "cells", _freeze(a))

    @property
    def m(self) -> int:
        return self.cells.shape[0]

    @property
    def n(self) -> int:
        return self.cells.shape[1]

    def __eq__(self, other):
        return (isinstance(other, FrequencyRectangle)
                and self.q == other.q
                and self.cells.shape == other.cells.shape
                and bool(np.array_equal(self.cells, other.cells)))

    def __hash__(self):
        return hash((self.q, self.cells.shape, self.cells.tobytes()))


def validate_fr(grid, q: int) -> FrequencyRectangle:
    return FrequencyRectangle(_as_grid(grid), q)


def complement(f):
    """Interchange 0s and 1s of a binary grid or binary FrequencyRectangle."""
    if isinstance(f, FrequencyRectangle):
        if f.q != 2:
            raise ShapeError(f"complement needs q=2, got q={f.q}")
        return FrequencyRectangle(1 - f.cells, 2)
    a = _as_grid(f)
    if a.min() < 0 or a.max() > 1:
        raise ShapeError("complement needs a binary grid")
    return 1 - a


@dataclass(frozen=True)
class OrthogonalArray:
    """N x k grid over [0, q) in which every t columns contain each
    ordered t-tuple exactly N / q^t times."""

    rows: np.ndarray
    q: int
    strength: int

    def __post_init__(self):
        a = _as_grid(self.rows)
        runs, k = a.shape
        q, t = self.q, self.strength
        if q < 2:
            raise ShapeError(f"need at least 2 symbols, got q={q}")
        if not 1 <= t <= k:
            raise ShapeError(f"strength t={t} must satisfy 1 <= t <= k={k}")
        if runs % q ** t:
            raise ShapeError(f"q^t={q ** t} must divide the run count N={runs}")
        if a.min() < 0 or a.max() >= q:
            raise ValidationError(f"symbols must lie in [0, {q})")
        expected = runs // q ** t
        for cols in combinations(range(k), t):
            codes = np.zeros(runs, dtype=np.int64)
            for c in cols:
                codes = codes * q + a[:, c]
            counts = np.bincount(codes, minlength=q ** t)
            bad = np.flatnonzero(counts != expected)
            if bad.size:
                code = int(bad[0])
                tup = tuple((code // q ** (t - 1 - i)) % q for i in range(t))
                raise ValidationError(
                    f"columns {cols}: tuple {tup} appears {counts[code]} times, "
                    f"expected {expected}",
                    columns=cols, tuple=tup,
                    found=int(counts[code]), expected=expected)
        object.__setattr__(self, "rows", _freeze(a))

    @property
    def runs(self) -> int:
        return self.rows.shape[0]

    @property
    def factors(self) -> int:
        return self.rows.shape[1]

    def __eq__(self, other):
        return (isinstance(other, OrthogonalArray)
                and (self.q, self.strength) == (other.q, other.strength)
                and self.rows.shape == other.rows.shape
                and bool(np.array_equal(self.rows, other.rows)))

    def __hash__(self):
        return hash((self.q, self.strength, self.rows.shape, self.rows.tobytes()))


def validate_oa(grid, q: int, t: int) -> OrthogonalArray:
    return OrthogonalArray(_as_grid(grid), q, t)


@dataclass(frozen=True)
class HadamardMatrix:
    """n x n matrix over {+1, -1} with pairwise orthogonal rows."""

    entries: np.ndarray

    def __post_init__(self):
        a = _as_grid(self.entries)
        n, n2 = a.shape
        if n != n2:
            raise ShapeError(f"Hadamard matrix must be square, got {a.shape}")
        if not np.all(np.abs(a) == 1):
            raise ValidationError("entries must be +1 or -1")
        gram = a @ a.T
        if not np.array_equal(gram, n * np.eye(n, dtype=np.int64)):
            bad = np.argwhere(gram != n * np.eye(n, dtype=np.int64))[0]
            raise ValidationError(
                f"rows {bad[0]} and {bad[1]} are not orthogonal",
                rows=(int(bad[0]), int(bad[1])))
        object.__setattr__(self, "entries", _freeze(a))

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other):
        return (isinstance(other, HadamardMatrix)
                and self.order == other.order
                and bool(np.array_equal(self.entries, other.entries)))

    def __hash__(self):
        return hash((self.order, self.entries.tobytes()))


def validate_hadamard(grid) -> HadamardMatrix:
    return HadamardMatrix(_as_grid(grid))


@dataclass(frozen=True)
class VectorSet:
    """Ordered list of distinct vectors over the q-element field."""

    q: int
    length: int
    vectors: tuple = field(default=())

    def __post_init__(self):
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        for v in vecs:
            if len(v) != self.length:
                raise ShapeError(
                    f"vector {v} has length {len(v)}, expected {self.length}")
            if any(not 0 <= x < self.q for x in v):
                raise ValidationError(f"vector {v} has entries outside [0, {self.q})")
        if len(set(vecs)) != len(vecs):
            raise ValidationError("vectors must be pairwise distinct")
        object.__setattr__(self, "vectors", vecs)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]


@dataclass(frozen=True)
class PairCountTable:
    """q x q table: counts[x][y] = number of cells where the first grid
    holds x and the second holds y.  Total equals m*n."""

    q: int
    counts: np.ndarray

    def __post_init__(self):
        a = _as_grid(self.counts)
        if a.shape != (self.q, self.q):
            raise ShapeError(f"counts must be {self.q}x{self.q}, got {a.shape}")
        if a.min() < 0:
            raise ValidationError("counts must be non-negative")
        object.__setattr__(self, "counts", _freeze(a))

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def __getitem__(self, xy):
        x, y = xy
        return int(self.counts[x, y])

    def __eq__(self, other):
        return (isinstance(other, PairCountTable)
                and self.q == other.q
                and bool(np.array_equal(self.counts, other.counts)))

    def __hash__(self):
        return hash((self.q, self.counts.tobytes()))
