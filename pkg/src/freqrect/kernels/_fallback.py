"""Pure-Python backend for the hot kernels.

Same algorithms and traversal order as the compiled backend; results are
bit-identical.  Selected when numba is unavailable or when
``FREQRECT_BACKEND=numpy`` is set.
"""

from __future__ import annotations


def gf2_rank_rows(rows, ncols: int) -> int:
    """Rank over GF(2) of rows given as int bitsets (bit j = column j)."""
    work = [int(r) for r in rows]
    rank = 0
    top = 0
    for col in range(ncols):
        pivot = None
        for r in range(top, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        for r in range(top + 1, len(work)):
            if (work[r] >> col) & 1:
                work[r] ^= work[top]
        rank += 1
        top += 1
        if top == len(work):
            break
    return rank


class _XorState:
    """Counts, per symbol value, how many subsets of the chosen set of
    size <= t-1 XOR to that value.  A candidate w extends the set iff
    forb[w] == 0 (no dependent subset of size <= t would be created)."""

    def __init__(self, nsym: int, t: int):
        self.t = t
        self.forb = [0] * nsym
        self.sub_xor: list[int] = []
        self.sub_size: list[int] = []

    def add(self, w: int) -> int:
        mark = len(self.sub_xor)
        for idx in range(mark):
            if self.sub_size[idx] <= self.t - 2:
                x = self.sub_xor[idx] ^ w
                self.sub_xor.append(x)
                self.sub_size.append(self.sub_size[idx] + 1)
                self.forb[x] += 1
        self.sub_xor.append(w)
        self.sub_size.append(1)
        self.forb[w] += 1
        return mark

    def undo(self, mark: int) -> None:
        for idx in range(mark, len(self.sub_xor)):
            self.forb[self.sub_xor[idx]] -= 1
        del self.sub_xor[mark:]
        del self.sub_size[mark:]


def ind_search_span(n_bits: int, t: int, budget: int):
    """Exhaustive search for a maximum t-independent subset of the nonzero
    vectors of GF(2)^n_bits, with span canonicalization: a vector outside
    the span of the current choices is only admitted if it is the least
    such vector (a power of two), so spans are always prefix intervals.
    """
    nsym = 1 << n_bits
    state = _XorState(nsym, t)
    chosen: list[int] = []
    stack: list[tuple[int, int, int]] = []  # (value, sub mark, dim)
    best: list[int] = []
    dim = 0
    w = 1
    nodes = 0
    exhausted = True
    while True:
        lim = min(1 << dim, nsym - 1)
        if w <= lim and len(chosen) + (nsym - w) > len(best):
            if state.forb[w] == 0:
                nodes += 1
                if nodes > budget:
                    exhausted = False
                    break
                stack.append((w, state.add(w), dim))
                chosen.append(w)
                if w == (1 << dim):
                    dim += 1
                if len(chosen) > len(best):
                    best = chosen.copy()
            w += 1
        else:
            if not stack:
                break
            value, mark, dim = stack.pop()
            chosen.pop()
            state.undo(mark)
            w = value + 1
    return len(best), best, nodes, exhausted


def ind_search_plain(n_bits: int, t: int, cand, budget: int):
    """Exhaustive search over an explicit ascending candidate list, no
    symmetry reduction (used when constraints break the symmetry)."""
    nsym = 1 << n_bits
    cand = list(cand)
    state = _XorState(nsym, t)
    chosen: list[int] = []
    stack: list[tuple[int, int]] = []  # (position, sub mark)
    best: list[int] = []
    pos = 0
    nodes = 0
    exhausted = True
    while True:
        if pos < len(cand) and len(chosen) + (len(cand) - pos) > len(best):
            w = cand[pos]
            if state.forb[w] == 0:
                nodes += 1
                if nodes > budget:
                    exhausted = False
                    break
                stack.append((pos, state.add(w)))
                chosen.append(w)
                if len(chosen) > len(best):
                    best = chosen.copy()
            pos += 1
        else:
            if not stack:
                break
            pos, mark = stack.pop()
            chosen.pop()
            state.undo(mark)
            pos += 1
    return len(best), best, nodes, exhausted
