"""Exhaustive search for maximum t-independent vector sets, plus the
closed-form values and bounds that do not need a search.

Over F_2 the search runs on the compiled kernels with an incremental
forbidden-XOR table; the unconstrained variant additionally applies a
span canonicalization (any vector outside the span of the earlier
choices must be the least such vector), which keeps the tree small
enough to exhaust every case with N <= 8 in milliseconds.  For odd
prime q a plain depth-first search over monic representatives (first
nonzero coordinate 1) is used.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .designs import ShapeError, VectorSet
from .gf import FieldError, is_prime, rank_gf
from .kernels import ind_search_plain, ind_search_span
from .verify import is_t_independent

DEFAULT_BUDGET = 50_000_000

# Exact maximum for the constrained problem at M=2, N=2, t=3, q=2,
# established by full enumeration over the 9 admissible vectors.
MAX_CONSTRAINED_2_2_3_2 = 6


@dataclass(frozen=True)
class SearchReport:
    length: int
    t: int
    q: int
    best_size: int
    witness: VectorSet
    exhaustive: bool
    nodes: int
    wall_time: float
    prefix: int | None = None  # constrained mode: M of the (M, N) split

    @property
    def nontrivial(self) -> bool:
        """A witness of size >= t exists (a maximum below t means no
        t-subset can even be formed)."""
        return self.best_size >= self.t


def _bits_to_vec(w: int, length: int) -> tuple:
    return tuple((w >> (length - 1 - i)) & 1 for i in range(length))


def _int_to_digits(w: int, q: int, length: int) -> tuple:
    return tuple((w // q ** (length - 1 - i)) % q for i in range(length))


def _check_params(length: int, t: int, q: int) -> None:
    if t < 1:
        raise ShapeError(f"need t >= 1, got t={t}")
    if length < 1:
        raise ShapeError(f"need length >= 1, got {length}")
    if not is_prime(q):
        raise FieldError(f"{q} is not prime")


def _finish(length, t, q, best, exhaustive, nodes, start, prefix=None):
    witness = VectorSet(q=q, length=length, vectors=tuple(best))
    rep = is_t_independent(witness, min(t, len(witness)))
    if not rep:
        raise AssertionError(f"search produced a dependent witness: {rep.subset}")
    return SearchReport(length=length, t=t, q=q, best_size=len(witness),
                        witness=witness, exhaustive=exhaustive, nodes=nodes,
                        wall_time=time.perf_counter() - start, prefix=prefix)


def _dfs_generic(q: int, length: int, t: int, cand: list[tuple], budget: int):
    """Plain depth-first branch-and-bound over an explicit candidate
    list of q-ary vectors, checking independence of every new t-subset
    through the candidate."""
    chosen: list[tuple] = []
    best: list[tuple] = []
    nodes = 0
    exhausted = True

    def admissible(w) -> bool:
        if len(chosen) < t - 1:
            subs = [tuple(chosen)]
        else:
            subs = combinations(chosen, t - 1)
        for sub in subs:
            mat = list(sub) + [w]
            if rank_gf(mat, q) != len(mat):
                return False
        return True

    def rec(pos: int) -> bool:
        nonlocal nodes, exhausted, best
        for i in range(pos, len(cand)):
            if len(chosen) + (len(cand) - i) <= len(best):
                return True
            w = cand[i]
            if not admissible(w):
                continue
            nodes += 1
            if nodes > budget:
                exhausted = False
                return False
            chosen.append(w)
            if len(chosen) > len(best):
                best = chosen.copy()
            ok = rec(i + 1)
            chosen.pop()
            if not ok:
                return False
        return True

    rec(0)
    return best, nodes, exhausted


def _monic_vectors(q: int, length: int) -> list[tuple]:
    out = []
    for w in range(1, q ** length):
        v = _int_to_digits(w, q, length)
        first = next(x for x in v if x)
        if first == 1:
            out.append(v)
    return out


def max_t_independent(length: int, t: int, q: int = 2,
                      budget: int = DEFAULT_BUDGET) -> SearchReport:
    """Maximum size of a set of length-`length` vectors over F_q in
    which every t vectors are linearly independent.  The report is the
    exact maximum when `exhaustive` is set; otherwise a lower bound
    with a verified witness."""
    start = time.perf_counter()
    _check_params(length, t, q)
    if t == 1:
        # any set of nonzero vectors qualifies: take all of them
        vecs = [_int_to_digits(w, q, length) for w in range(1, q ** length)]
        return _finish(length, t, q, vecs, True, 0, start)
    if q == 2:
        _, best, nodes, exhausted = ind_search_span(length, t, budget)
        vecs = [_bits_to_vec(w, length) for w in best]
        return _finish(length, t, q, vecs, exhausted, nodes, start)
    # odd prime: scaling freedom makes monic representatives exhaustive
    cand = _monic_vectors(q, length)
    best, nodes, exhausted = _dfs_generic(q, length, t, cand, budget)
    return _finish(length, t, q, best, exhausted, nodes, start)


def max_constrained(M: int, N: int, t: int, q: int = 2,
                    budget: int = DEFAULT_BUDGET) -> SearchReport:
    """Same search restricted to vectors of length M+N whose first M
    and last N coordinates are not all zero (the admissible inputs of
    the linear-form rectangle construction)."""
    start = time.perf_counter()
    if M < 1 or N < 1:
        raise ShapeError(f"need M, N >= 1, got M={M}, N={N}")
    length = M + N
    _check_params(length, t, q)
    if q == 2:
        mask = (1 << N) - 1
        cand = [w for w in range(1, 1 << length)
                if (w >> N) and (w & mask)]
        if t == 1:
            best, nodes, exhausted = cand, 0, True
        else:
            _, best, nodes, exhausted = ind_search_plain(length, t, cand, budget)
        vecs = [_bits_to_vec(w, length) for w in best]
        return _finish(length, t, q, vecs, exhausted, nodes, start, prefix=M)
    cand = [v for v in _monic_vectors(q, length)
            if any(v[:M]) and any(v[M:])]
    if t == 1:
        cand = [_int_to_digits(w, q, length) for w in range(1, q ** length)]
        cand = [v for v in cand if any(v[:M]) and any(v[M:])]
        return _finish(length, t, q, cand, True, 0, start, prefix=M)
    best, nodes, exhausted = _dfs_generic(q, length, t, cand, budget)
    return _finish(length, t, q, best, exhausted, nodes, start, prefix=M)


@dataclass(frozen=True)
class BoundEntry:
    kind: str  # "exact", "upper", or "lower"
    value: int
    source: str


def ind_formula_bounds(length: int, t: int, q: int = 2) -> list[BoundEntry]:
    """Closed-form values and bounds on the maximum t-independent set
    size that apply to (length, t, q), each tagged with its source
    rule.  An empty list means no formula applies."""
    _check_params(length, t, q)
    N = length
    out = []
    if t == 2:
        out.append(BoundEntry("exact", (q ** N - 1) // (q - 1), "pairwise"))
    if q == 2 and t == 3 and N >= 3:
        out.append(BoundEntry("exact", 2 ** (N - 1), "halfspace"))
    if 2 <= t <= N and q * (N + 1) <= t * (q + 1):
        out.append(BoundEntry("exact", N + 1, "threshold"))
    if q == 2 and t < N:
        r = N - t
        if r >= 2 and N in (3 * r, 3 * r + 1):
            out.append(BoundEntry("exact", N + 2, "threshold-edge"))
    if t == N and N >= 2:
        if N <= q:
            out.append(BoundEntry("upper", q + 1, "full-strength-cap"))
        elif N <= 2 * q - 2:
            if q % 2 == 0 and (N == 3 or N == q - 1):
                out.append(BoundEntry("upper", q + 2, "full-strength-cap"))
            else:
                out.append(BoundEntry("upper", q + 1, "full-strength-cap"))
    return out


def code_to_ind(n: int, k: int, d: int, mode: str) -> tuple[int, int, str, int]:
    """Translate linear [n, k, d]-code parameters into a bound on the
    maximum t-independent set size: (length, t, relation, value).

    mode='lower': an existing [n, k, d]-code gives a set of n columns
    of its parity-check matrix, any d-1 of which are independent.
    mode='upper': if d is the best minimum distance attainable at
    (n, k), no set of n vectors of length n-k can be d-independent.
    """
    if not (0 < k < n and 1 < d <= n):
        raise ShapeError(f"bad code parameters [{n},{k},{d}]")
    if mode == "lower":
        return (n - k, d - 1, ">=", n)
    if mode == "upper":
        return (n - k, d, "<=", n - 1)
    raise ValueError(f"mode must be 'lower' or 'upper', got {mode!r}")
