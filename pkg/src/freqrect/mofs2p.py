"""p-1 mutually orthogonal binary frequency squares of order 2p, for
any odd prime p.

The build pipeline: cyclic shifts of a base vector of weight (p+1)/2
give p x p arrays A_alpha (one per nonzero residue alpha); specific
2 x 2 sub-arrays in the first two rows are flipped to form the repaired
variants A* and A'; a permutation rho of the nonzero residues and a
star decomposition of the complete graph on them certify which pairs
each repair fixes; the final squares are 2 x 2 block arrays combining
A*, complements, and A' pieces.  ``build_mofs2p`` verifies that every
pair of output squares superimposes each ordered bit pair exactly p^2
times.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .designs import (
    FrequencyRectangle,
    ShapeError,
    ValidationError,
    complement,
    validate_fr,
)
from .gf import FieldError, is_prime
from .verify import is_orthogonal_pair


def _check_p(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise FieldError(f"need an odd prime, got p={p}")


def omega(p: int) -> range:
    """Nonzero residues 1..p-1."""
    return range(1, p)


def half_range(p: int) -> range:
    """K = 1..(p-1)/2."""
    return range(1, (p - 1) // 2 + 1)


@dataclass(frozen=True)
class ShiftVector:
    """Length-p binary vector: the base pattern 1^{(p+1)/2} 0^{(p-1)/2}
    rotated right i times."""

    p: int
    i: int
    entries: tuple

    def __post_init__(self):
        _check_p(self.p)
        if not 0 <= self.i < self.p:
            raise ShapeError(f"shift {self.i} outside [0, {self.p})")
        want = tuple(1 if (c - self.i) % self.p <= (self.p - 1) // 2 else 0
                     for c in range(self.p))
        if tuple(self.entries) != want:
            raise ValidationError(f"entries do not match shift {self.i}")


def base_vector(p: int) -> ShiftVector:
    _check_p(p)
    half = (p + 1) // 2
    return ShiftVector(p=p, i=0, entries=(1,) * half + (0,) * (p - half))


def shift(v: ShiftVector, j: int) -> ShiftVector:
    """Rotate right j more positions: result[c] = v[(c - j) mod p]."""
    p = v.p
    ent = tuple(v.entries[(c - j) % p] for c in range(p))
    return ShiftVector(p=p, i=(v.i + j) % p, entries=ent)


@dataclass(frozen=True)
class AlphaArray:
    """p x p binary array whose row i is the (alpha * i mod p)-th shift
    of the base vector."""

    p: int
    alpha: int
    grid: np.ndarray

    def __post_init__(self):
        _check_p(self.p)
        if self.alpha not in omega(self.p):
            raise ShapeError(f"alpha={self.alpha} outside 1..{self.p - 1}")


def alpha_entry(p: int, alpha: int, i: int, j: int) -> int:
    """Closed form for the (i, j) entry of A_alpha: 1 iff
    (j - alpha*i) mod p lies in 0..(p-1)/2."""
    return 1 if (j - alpha * i) % p <= (p - 1) // 2 else 0


def build_A(p: int, alpha: int) -> AlphaArray:
    _check_p(p)
    if alpha not in omega(p):
        raise ShapeError(f"alpha={alpha} outside 1..{p - 1}")
    base = np.array(base_vector(p).entries, dtype=np.int64)
    grid = np.empty((p, p), dtype=np.int64)
    for i in range(p):
        r = (alpha * i) % p
        grid[i] = np.roll(base, r)
    return AlphaArray(p=p, alpha=alpha, grid=grid)


def _s_cols(p: int, h: int) -> tuple[int, int]:
    return h, (p - 1) // 2 + h


def subarray_s(p: int, alpha: int, h: int) -> np.ndarray:
    """The 2 x 2 sub-array of A_alpha at rows 0, 1 and columns h and
    (p-1)/2 + h, for h in 1..(p-1)/2."""
    if h not in half_range(p):
        raise ShapeError(f"h={h} outside 1..{(p - 1) // 2}")
    grid = build_A(p, alpha).grid
    c0, c1 = _s_cols(p, h)
    return grid[np.ix_([0, 1], [c0, c1])].copy()


def _flip_s(grid: np.ndarray, p: int, h: int) -> None:
    c0, c1 = _s_cols(p, h)
    for r in (0, 1):
        for c in (c0, c1):
            grid[r, c] ^= 1


def build_A_star(p: int) -> list[AlphaArray]:
    """A_alpha with the coincident sub-array s_(h+k, h) complemented for
    every h, k in 1..(p-1)/2; the flips for fixed alpha touch disjoint
    cells."""
    _check_p(p)
    half = (p - 1) // 2
    out = []
    for alpha in omega(p):
        grid = build_A(p, alpha).grid.copy()
        for h in half_range(p):
            k = alpha - h
            if 1 <= k <= half:
                _flip_s(grid, p, h)
        out.append(AlphaArray(p=p, alpha=alpha, grid=grid))
    return out


def build_A_prime(p: int) -> list[AlphaArray]:
    """Same flips as A*, but h restricted to 1..(p-3)/2; for p=3 the
    range is empty and A' = A."""
    _check_p(p)
    half = (p - 1) // 2
    out = []
    for alpha in omega(p):
        grid = build_A(p, alpha).grid.copy()
        for h in range(1, (p - 3) // 2 + 1):
            k = alpha - h
            if 1 <= k <= half:
                _flip_s(grid, p, h)
        out.append(AlphaArray(p=p, alpha=alpha, grid=grid))
    return out


def rho(p: int, z: int) -> int:
    """Permutation of the nonzero residues: (p+1)/2 and (p-1)/2 map to
    themselves and to 1 respectively; every other z maps to
    (z + (p+1)/2) mod p, which never lands on 0."""
    _check_p(p)
    if z not in omega(p):
        raise ShapeError(f"z={z} outside 1..{p - 1}")
    if z == (p + 1) // 2:
        return z
    if z == (p - 1) // 2:
        return 1
    out = (z + (p + 1) // 2) % p
    assert out != 0
    return out


def rho_inverse(p: int, z: int) -> int:
    _check_p(p)
    if z not in omega(p):
        raise ShapeError(f"z={z} outside 1..{p - 1}")
    for w in omega(p):
        if rho(p, w) == z:
            return w
    raise AssertionError("rho is a bijection; unreachable")


@dataclass(frozen=True)
class StarPartition:
    """Edge-disjoint stars covering the complete graph on 1..p-1."""

    p: int
    stars: tuple


def star_partition(p: int) -> StarPartition:
    """Stars f(S_i) = {{i, i+1}, ..., {i, i+(p-1)/2}} for i in
    1..(p-1)/2, plus their images under rho for i in 1..(p-3)/2;
    together they partition the edges of the complete graph on the
    nonzero residues."""
    _check_p(p)
    half = (p - 1) // 2
    stars = []
    for i in half_range(p):
        stars.append(frozenset(frozenset((i, i + j)) for j in range(1, half + 1)))
    for i in range(1, (p - 3) // 2 + 1):
        stars.append(frozenset(frozenset(rho(p, v) for v in e) for e in stars[i - 1]))
    all_edges = [e for s in stars for e in s]
    want = {frozenset((a, b)) for a in omega(p) for b in omega(p) if a < b}
    if len(all_edges) != len(set(all_edges)) or set(all_edges) != want:
        raise AssertionError("star decomposition failed to partition the edges")
    return StarPartition(p=p, stars=tuple(stars))


def build_L(p: int, alpha: int) -> FrequencyRectangle:
    """The unrepaired 2p x 2p square [[A, comp(A)], [comp(A), A]]; for
    distinct alpha, beta these are only almost orthogonal (pair counts
    p^2 +/- 1)."""
    A = build_A(p, alpha).grid
    comp = complement(A)
    return validate_fr(np.block([[A, comp], [comp, A]]), 2)


def build_mofs2p(p: int) -> list[FrequencyRectangle]:
    """The p-1 mutually orthogonal binary frequency squares of order 2p:
    F_alpha = [[A*_alpha, comp(A_alpha)], [comp(A_alpha), A'_beta]] with
    beta the rho-preimage of alpha, for alpha = 1..p-1."""
    _check_p(p)
    plain = {a.alpha: a.grid for a in (build_A(p, al) for al in omega(p))}
    star = {a.alpha: a.grid for a in build_A_star(p)}
    prime = {a.alpha: a.grid for a in build_A_prime(p)}
    out = []
    for alpha in omega(p):
        comp = complement(plain[alpha])
        F = np.block([[star[alpha], comp],
                      [comp, prime[rho_inverse(p, alpha)]]])
        out.append(validate_fr(F, 2))
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            if not is_orthogonal_pair(out[i], out[j]):
                raise ValidationError(
                    f"squares {i} and {j} are not orthogonal", pair=(i, j))
    return out
