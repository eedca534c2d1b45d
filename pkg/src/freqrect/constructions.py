"""Constructions turning orthogonal arrays, Hadamard matrices, and
vector sets into (t-orthogonal) sets of frequency rectangles, plus the
reverse transforms.

Every construction verifies its own output with the relevant checker
before returning, so a returned set is always certified.
"""

from __future__ import annotations

import numpy as np

from .designs import (
    FrequencyRectangle,
    HadamardMatrix,
    OrthogonalArray,
    ShapeError,
    ValidationError,
    VectorSet,
    complement,
    validate_fr,
    validate_oa,
)
from .hadamard import normalize
from .verify import is_orthogonal_pair, is_t_independent, is_t_orthogonal


def _check_pairwise(fs) -> list[FrequencyRectangle]:
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if not is_orthogonal_pair(fs[i], fs[j]):
                raise ValidationError(
                    f"rectangles {i} and {j} are not orthogonal", pair=(i, j))
    return fs


def _check_t(fs, t: int) -> list[FrequencyRectangle]:
    rep = is_t_orthogonal(fs, t)
    if not rep:
        raise ValidationError(
            f"output is not {t}-orthogonal: subset {rep.subset}, "
            f"tuple {rep.symbol_tuple} appears {rep.found} times "
            f"(expected {rep.expected})", report=rep)
    return fs


def oa_to_mofr_double(oa: OrthogonalArray, m: int, n: int) -> list[FrequencyRectangle]:
    """Each OA(mn, k, 2, 2) column, reshaped to an m x n array B, yields
    the 2m x 2n rectangle [[B, B'], [B', B]] with B' the complement; the
    k rectangles are mutually orthogonal."""
    if oa.q != 2 or oa.strength < 2:
        raise ShapeError("need a binary orthogonal array of strength >= 2")
    if oa.runs != m * n:
        raise ShapeError(f"run count {oa.runs} != m*n = {m * n}")
    out = []
    for b in range(oa.factors):
        B = oa.rows[:, b].reshape(m, n)
        Bc = complement(B)
        L = np.block([[B, Bc], [Bc, B]])
        out.append(validate_fr(L, 2))
    return _check_pairwise(out)


def mofr2_to_oa(fs) -> OrthogonalArray:
    """For a k-member orthogonal set of 2 x 2n binary rectangles, column
    i of the OA(2n, k, 2, 2) is the first row of rectangle i."""
    _check_pairwise(list(fs))
    if any(f.m != 2 or f.q != 2 for f in fs):
        raise ShapeError("need binary rectangles with 2 rows")
    cols = [f.cells[0] for f in fs]
    return validate_oa(np.column_stack(cols), 2, 2 if len(fs) >= 2 else 1)


def oa_to_mofr2(oa: OrthogonalArray) -> list[FrequencyRectangle]:
    """Each OA(2n, k, 2, 2) column c gives the 2 x 2n rectangle with
    rows (c, complement of c)."""
    if oa.q != 2:
        raise ShapeError("need a binary orthogonal array")
    out = []
    for b in range(oa.factors):
        c = oa.rows[:, b]
        out.append(validate_fr(np.vstack([c, 1 - c]), 2))
    return _check_pairwise(out)


def hadamard_to_mofr_4(h: HadamardMatrix) -> list[FrequencyRectangle]:
    """From an order-4a Hadamard matrix, produce 4a-2 mutually
    orthogonal 4 x 2a binary rectangles: normalize, map -1 -> 0, sort
    rows so the second column reads 1...1 0...0, then stack each
    remaining column's 2 x 2a reshape over its complement."""
    n = h.order
    if n < 4 or n % 4:
        raise ShapeError(f"order {n} must be a multiple of 4, at least 4")
    a2 = n // 2
    bits = (normalize(h).entries + 1) // 2
    order = np.argsort(-bits[:, 1], kind="stable")
    bits = bits[order]
    out = []
    for col in range(2, n):
        B = bits[:, col].reshape(2, a2)
        out.append(validate_fr(np.vstack([B, complement(B)]), 2))
    return _check_pairwise(out)


def oa_cyclic_to_mofr(oa: OrthogonalArray) -> list[FrequencyRectangle]:
    """Each OA(2m, k, 2, t) column v becomes a 2m x 2m square whose
    column i is v rotated right i times; the set is t-orthogonal."""
    if oa.q != 2:
        raise ShapeError("need a binary orthogonal array")
    N = oa.runs
    out = []
    for b in range(oa.factors):
        v = oa.rows[:, b]
        sq = np.empty((N, N), dtype=np.int64)
        for i in range(N):
            sq[:, i] = np.roll(v, i)
        out.append(validate_fr(sq, 2))
    return _check_t(out, min(oa.strength, len(out)))


def mofr_to_oa(fs, t: int) -> OrthogonalArray:
    """Column i of the OA(mn, k, q, t) is the row-major flattening of
    rectangle i of a t-orthogonal set."""
    fs = list(fs)
    _check_t(fs, t)
    cols = [f.cells.ravel() for f in fs]
    return validate_oa(np.column_stack(cols), fs[0].q, t)


def _digits(value: int, q: int, width: int) -> list[int]:
    return [(value // q ** (width - 1 - i)) % q for i in range(width)]


def vectors_to_mofr(s: VectorSet, M: int, N: int, t: int) -> list[FrequencyRectangle]:
    """Each length-(M+N) vector v defines the q^M x q^N rectangle whose
    cell at row r, column c is the dot product of v with the base-q
    digit strings of r and c (most significant digit first).  Requires a
    t-independent set whose vectors all have a nonzero M-prefix and a
    nonzero N-suffix; the output is t-orthogonal."""
    q = s.q
    if s.length != M + N:
        raise ShapeError(f"vector length {s.length} != M+N = {M + N}")
    for v in s:
        if all(x == 0 for x in v[:M]):
            raise ValidationError(f"vector {v} has all-zero first {M} coordinates",
                                  vector=v)
        if all(x == 0 for x in v[M:]):
            raise ValidationError(f"vector {v} has all-zero last {N} coordinates",
                                  vector=v)
    rep = is_t_independent(s, t)
    if not rep:
        raise ValidationError(f"input is not {t}-independent: subset {rep.subset}",
                              subset=rep.subset)
    row_digits = np.array([_digits(r, q, M) for r in range(q ** M)], dtype=np.int64)
    col_digits = np.array([_digits(c, q, N) for c in range(q ** N)], dtype=np.int64)
    out = []
    for v in s:
        vp = np.array(v[:M], dtype=np.int64)
        vs = np.array(v[M:], dtype=np.int64)
        cells = (row_digits @ vp)[:, None] + (col_digits @ vs)[None, :]
        out.append(validate_fr(cells % q, q))
    return _check_t(out, min(t, len(out)))


def pad_vectors(s: VectorSet, N: int) -> VectorSet:
    """Map each length-M vector v to v + v + zeros(N-M), giving vectors
    of length M+N that keep t-independence and have nonzero prefix and
    suffix halves."""
    M = s.length
    if N < M:
        raise ShapeError(f"need N >= M, got N={N} < M={M}")
    vecs = tuple(v + v + (0,) * (N - M) for v in s)
    return VectorSet(q=s.q, length=M + N, vectors=vecs)


def product_vectors(s: VectorSet, t3: VectorSet) -> VectorSet:
    """All concatenations u + v for u in the first set, v in the second.
    Both inputs must be 3-independent over the same field; the output is
    3-independent and feeds the rectangle construction at t=3."""
    if s.q != t3.q:
        raise ShapeError(f"field mismatch: q={s.q} vs q={t3.q}")
    for name, vs in (("first", s), ("second", t3)):
        rep = is_t_independent(vs, min(3, len(vs)))
        if not rep:
            raise ValidationError(f"{name} input is not 3-independent",
                                  subset=rep.subset)
    vecs = tuple(u + v for u in s for v in t3)
    out = VectorSet(q=s.q, length=s.length + t3.length, vectors=vecs)
    rep = is_t_independent(out, min(3, len(out)))
    if not rep:
        raise ValidationError("product is not 3-independent", subset=rep.subset)
    return out
