"""Hadamard matrix generators, normalization, and conversion to
orthogonal arrays.

Implemented generators: Sylvester doubling (orders 2^k), the
quadratic-residue construction for orders p+1 with p prime and
p = 3 (mod 4), and Kronecker products of the two.  ``build`` resolves
an order to whichever of these applies and fails loudly for orders
outside that reach (the smallest such multiple of 4 is 92).
"""

from __future__ import annotations

import numpy as np

from .designs import (
    HadamardMatrix,
    OrthogonalArray,
    ShapeError,
    validate_hadamard,
    validate_oa,
)
from .gf import FieldError, is_prime


def sylvester(k: int) -> HadamardMatrix:
    """Order 2^k by repeated doubling: H(2n) = [[H, H], [H, -H]]."""
    if k < 0:
        raise ShapeError(f"need k >= 0, got k={k}")
    h = np.array([[1]], dtype=np.int64)
    base = np.array([[1, 1], [1, -1]], dtype=np.int64)
    for _ in range(k):
        h = np.kron(base, h)
    return validate_hadamard(h)


def paley_I(p: int) -> HadamardMatrix:
    """Order p+1 from quadratic residues mod p, for prime p = 3 (mod 4)."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if p % 4 != 3:
        raise FieldError(f"need p = 3 (mod 4), got p={p}")
    chi = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        chi[(x * x) % p] = 1
    chi = 2 * chi - 1
    chi[0] = 0
    q = np.empty((p, p), dtype=np.int64)
    for i in range(p):
        for j in range(p):
            q[i, j] = chi[(i - j) % p]
    h = np.empty((p + 1, p + 1), dtype=np.int64)
    h[0, :] = 1
    h[1:, 0] = -1
    h[1:, 1:] = q + np.eye(p, dtype=np.int64)
    return validate_hadamard(h)


def kronecker(a: HadamardMatrix, b: HadamardMatrix) -> HadamardMatrix:
    return validate_hadamard(np.kron(a.entries, b.entries))


def normalize(h: HadamardMatrix) -> HadamardMatrix:
    """Make the first row and first column all +1: negate every column
    whose first entry is -1, then every row whose first entry is -1."""
    a = h.entries.copy()
    a = a * a[0, :]
    a = a * a[:, 0][:, None]
    return validate_hadamard(a)


def build(order: int) -> HadamardMatrix:
    """Construct a Hadamard matrix of the given order, trying Sylvester,
    then quadratic residues, then Kronecker factorizations."""
    if order < 1:
        raise ShapeError(f"need order >= 1, got {order}")
    if order in (1, 2) or (order & (order - 1)) == 0:
        return sylvester(order.bit_length() - 1)
    if order % 4:
        raise ShapeError(f"no Hadamard matrix of order {order} (not 1, 2, or 4a)")
    if is_prime(order - 1) and (order - 1) % 4 == 3:
        return paley_I(order - 1)
    for d in range(2, order):
        if order % d:
            continue
        try:
            a = build(d)
            b = build(order // d)
        except (ShapeError, FieldError):
            continue
        return kronecker(a, b)
    raise ShapeError(f"no construction available for order {order}")


def hadamard_to_oa(h: HadamardMatrix) -> OrthogonalArray:
    """Normalize, drop the all-ones first column, and map +1 -> 1,
    -1 -> 0; gives an OA(4a, 4a-1, 2, 2)."""
    n = h.order
    if n % 4:
        raise ShapeError(f"order {n} is not divisible by 4")
    a = normalize(h).entries[:, 1:]
    return validate_oa((a + 1) // 2, 2, 2)


def full_factorial_oa(k: int, parity: bool = False) -> OrthogonalArray:
    """All 2^k binary k-tuples in lexicographic order, strength k.
    With parity=True an XOR column is appended; the result still has
    strength k (any k of the k+1 columns determine the last)."""
    if k < 1:
        raise ShapeError(f"need k >= 1, got k={k}")
    rows = np.array([[(r >> (k - 1 - i)) & 1 for i in range(k)]
                     for r in range(2 ** k)], dtype=np.int64)
    if parity:
        rows = np.hstack([rows, rows.sum(axis=1, keepdims=True) % 2])
    return validate_oa(rows, 2, k)
