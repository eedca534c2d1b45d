"""Checking machinery for rectangle sets and vector sets.

Covers pair-count tables, pairwise and t-orthogonality, t-independence,
the size bound for mutually orthogonal sets, and the incidence-matrix
Gram, rank, and spectrum identities that certify orthogonality at the
linear-algebra level.  Everything is exact integer arithmetic; no check
carries a numerical tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .designs import (
    FrequencyRectangle,
    PairCountTable,
    ShapeError,
    VectorSet,
    _as_grid,
    _freeze,
)
from .gf import rank_exact, rank_gf


def _cells(a) -> np.ndarray:
    if isinstance(a, FrequencyRectangle):
        return a.cells
    return _as_grid(a)


def _set_params(fs) -> tuple[int, int, int]:
    if not fs:
        raise ShapeError("empty rectangle set")
    m, n, q = fs[0].m, fs[0].n, fs[0].q
    for f in fs[1:]:
        if (f.m, f.n, f.q) != (m, n, q):
            raise ShapeError(
                f"mismatched parameters: ({f.m},{f.n},{f.q}) vs ({m},{n},{q})")
    return m, n, q


def pair_counts(a, b, q: int | None = None) -> PairCountTable:
    """Superimpose two same-shaped grids and count each ordered symbol
    pair (x, y) over all cells."""
    ca, cb = _cells(a), _cells(b)
    if ca.shape != cb.shape:
        raise ShapeError(f"shape mismatch: {ca.shape} vs {cb.shape}")
    if q is None:
        qa = a.q if isinstance(a, FrequencyRectangle) else int(ca.max()) + 1
        qb = b.q if isinstance(b, FrequencyRectangle) else int(cb.max()) + 1
        q = max(qa, qb)
    if isinstance(a, FrequencyRectangle) and isinstance(b, FrequencyRectangle):
        if a.q != b.q:
            raise ShapeError(f"symbol count mismatch: q={a.q} vs q={b.q}")
    codes = (ca * q + cb).ravel()
    counts = np.bincount(codes, minlength=q * q).reshape(q, q)
    return PairCountTable(q=q, counts=counts)


def is_orthogonal_pair(a: FrequencyRectangle, b: FrequencyRectangle) -> bool:
    """True iff every ordered symbol pair appears exactly mn/q^2 times."""
    if (a.m, a.n, a.q) != (b.m, b.n, b.q):
        raise ShapeError("rectangles must share (m, n, q)")
    m, n, q = a.m, a.n, a.q
    if (m * n) % (q * q):
        return False
    t = pair_counts(a, b)
    return bool(np.all(t.counts == (m * n) // (q * q)))


@dataclass(frozen=True)
class OrthogonalityReport:
    ok: bool
    reason: str = ""
    subset: tuple = ()
    symbol_tuple: tuple = ()
    found: int = 0
    expected: int = 0

    def __bool__(self) -> bool:
        return self.ok


def is_t_orthogonal(fs, t: int) -> OrthogonalityReport:
    """Check every t-subset of the set: its superimposition must produce
    each of the q^t ordered tuples exactly mn/q^t times.  On failure the
    report names the offending subset (by index) and tuple."""
    m, n, q = _set_params(fs)
    if not 1 <= t <= len(fs):
        raise ShapeError(f"need 1 <= t <= {len(fs)}, got t={t}")
    if (m * n) % q ** t:
        return OrthogonalityReport(False, reason="divisibility",
                                   expected=0, found=m * n)
    expected = (m * n) // q ** t
    flat = [f.cells.ravel() for f in fs]
    for sub in combinations(range(len(fs)), t):
        codes = np.zeros(m * n, dtype=np.int64)
        for idx in sub:
            codes = codes * q + flat[idx]
        counts = np.bincount(codes, minlength=q ** t)
        bad = np.flatnonzero(counts != expected)
        if bad.size:
            code = int(bad[0])
            tup = tuple((code // q ** (t - 1 - i)) % q for i in range(t))
            return OrthogonalityReport(
                False, reason="count", subset=sub, symbol_tuple=tup,
                found=int(counts[code]), expected=expected)
    return OrthogonalityReport(True, expected=expected)


def is_mutually_orthogonal(fs) -> OrthogonalityReport:
    """Pairwise (t=2) orthogonality of a whole set."""
    return is_t_orthogonal(fs, 2)


@dataclass(frozen=True)
class IndependenceReport:
    ok: bool
    subset: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def is_t_independent(s: VectorSet, t: int) -> IndependenceReport:
    """True iff every t-subset of the vectors is linearly independent over
    the q-element field.  Sets with fewer than t vectors pass vacuously."""
    if t < 1:
        raise ShapeError(f"need t >= 1, got t={t}")
    vecs = list(s)
    for sub in combinations(range(len(vecs)), t):
        mat = [vecs[i] for i in sub]
        if rank_gf(mat, s.q) != t:
            return IndependenceReport(False, subset=sub)
    return IndependenceReport(True)


def mofr_upper_bound(m: int, n: int, q: int) -> int:
    """Largest possible size of a mutually orthogonal set of m x n
    rectangles over q symbols: floor((m-1)(n-1)/(q-1))."""
    if q < 2:
        raise ShapeError(f"need q >= 2, got q={q}")
    return (m - 1) * (n - 1) // (q - 1)


# -- incidence matrices -----------------------------------------------------

@dataclass(frozen=True)
class IncidenceBundle:
    """Per-rectangle (mn) x q 0/1 indicator matrices and their horizontal
    concatenation M of shape (mn) x (kq)."""

    H_blocks: tuple
    M: np.ndarray
    k: int
    m: int
    n: int
    q: int


def build_incidence(fs) -> IncidenceBundle:
    """Row-major cell order; column b of block a marks the cells where
    rectangle a holds symbol b."""
    m, n, q = _set_params(fs)
    blocks = []
    for f in fs:
        flat = f.cells.ravel()
        h = np.zeros((m * n, q), dtype=np.int64)
        h[np.arange(m * n), flat] = 1
        blocks.append(_freeze(h))
    M = _freeze(np.hstack(blocks))
    return IncidenceBundle(H_blocks=tuple(blocks), M=M,
                           k=len(fs), m=m, n=n, q=q)


def verify_gram(fs) -> bool:
    """M^T M must have diagonal blocks (mn/q) I and off-diagonal blocks
    (mn/q^2) J.  The off-diagonal form is equivalent to pairwise
    orthogonality, so non-orthogonal sets simply return False."""
    bundle = build_incidence(fs)
    k, m, n, q = bundle.k, bundle.m, bundle.n, bundle.q
    if (m * n) % (q * q):
        return False
    gram = bundle.M.T @ bundle.M
    c = (m * n) // q
    d = (m * n) // (q * q)
    for r in range(k):
        for s in range(k):
            block = gram[r * q:(r + 1) * q, s * q:(s + 1) * q]
            want = c * np.eye(q, dtype=np.int64) if r == s \
                else d * np.ones((q, q), dtype=np.int64)
            if not np.array_equal(block, want):
                return False
    return True


def incidence_rank(fs) -> int:
    """Exact integer rank of the concatenated incidence matrix; equals
    kq - k + 1 for any mutually orthogonal set."""
    return rank_exact(build_incidence(fs).M)


def block_matrix_spectrum(a: int, b: int, q: int) -> dict[int, int]:
    """Eigenvalue multiplicities of aI + bJ (q x q): a+bq once, a with
    multiplicity q-1.  Coinciding values are merged."""
    out: dict[int, int] = {}
    for e, mult in ((a + b * q, 1), (a, q - 1)):
        if mult:
            out[e] = out.get(e, 0) + mult
    return out


def expected_spectrum(k: int, m: int, n: int, q: int) -> dict[int, int]:
    """Eigenvalue multiplicities of M^T M for a k-member mutually
    orthogonal set: c + q(k-1)d once, c - qd with multiplicity k-1, c
    with multiplicity k(q-1), where c = mn/q and d = mn/q^2."""
    c = (m * n) // q
    d = (m * n) // (q * q)
    out: dict[int, int] = {}
    for e, mult in ((c + q * (k - 1) * d, 1), (c - q * d, k - 1), (c, k * (q - 1))):
        if mult:
            out[e] = out.get(e, 0) + mult
    return out


def verify_spectrum(fs) -> bool:
    """Confirm the claimed eigenvalue multiplicities of M^T M exactly:
    for each claimed eigenvalue e, nullity(M^T M - eI) must equal the
    claimed multiplicity (rank deficiency over exact integers)."""
    bundle = build_incidence(fs)
    k, m, n, q = bundle.k, bundle.m, bundle.n, bundle.q
    if (m * n) % (q * q):
        return False
    gram = bundle.M.T @ bundle.M
    dim = k * q
    claimed = expected_spectrum(k, m, n, q)
    if sum(claimed.values()) != dim:
        return False
    for e, mult in claimed.items():
        shifted = gram - e * np.eye(dim, dtype=np.int64)
        if dim - rank_exact(shifted) != mult:
            return False
    return True
