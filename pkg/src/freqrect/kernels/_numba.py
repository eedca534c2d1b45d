"""Numba-compiled backend for the hot kernels.

Mirrors ``_fallback`` exactly: same traversal order, same results.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_SUB_CAP = 1 << 22  # subsets of size <= t-1 tracked during search


@njit(cache=True)
def _gf2_rank_words(words, ncols):
    n, nw = words.shape
    work = words.copy()
    rank = 0
    top = 0
    for col in range(ncols):
        wi = col >> 6
        bit = np.uint64(1) << np.uint64(col & 63)
        pivot = -1
        for r in range(top, n):
            if work[r, wi] & bit:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != top:
            for j in range(nw):
                tmp = work[top, j]
                work[top, j] = work[pivot, j]
                work[pivot, j] = tmp
        for r in range(top + 1, n):
            if work[r, wi] & bit:
                for j in range(nw):
                    work[r, j] ^= work[top, j]
        rank += 1
        top += 1
        if top == n:
            break
    return rank


@njit(cache=True)
def _search_span(n_bits, t, budget):
    nsym = 1 << n_bits
    forb = np.zeros(nsym, dtype=np.int32)
    sub_xor = np.zeros(_SUB_CAP, dtype=np.int64)
    sub_size = np.zeros(_SUB_CAP, dtype=np.int8)
    n_subs = 0
    max_depth = nsym
    chosen = np.zeros(max_depth, dtype=np.int64)
    stack_val = np.zeros(max_depth, dtype=np.int64)
    stack_sub = np.zeros(max_depth, dtype=np.int64)
    stack_dim = np.zeros(max_depth, dtype=np.int64)
    best = np.zeros(max_depth, dtype=np.int64)
    best_size = 0
    sp = 0
    dim = 0
    w = 1
    nodes = 0
    exhausted = True
    overflow = False
    while True:
        lim = 1 << dim
        if lim > nsym - 1:
            lim = nsym - 1
        if w <= lim and sp + (nsym - w) > best_size:
            if forb[w] == 0:
                nodes += 1
                if nodes > budget:
                    exhausted = False
                    break
                stack_val[sp] = w
                stack_sub[sp] = n_subs
                stack_dim[sp] = dim
                old = n_subs
                if 2 * old + 1 >= _SUB_CAP:
                    overflow = True
                    break
                for idx in range(old):
                    if sub_size[idx] <= t - 2:
                        x = sub_xor[idx] ^ w
                        sub_xor[n_subs] = x
                        sub_size[n_subs] = sub_size[idx] + 1
                        forb[x] += 1
                        n_subs += 1
                sub_xor[n_subs] = w
                sub_size[n_subs] = 1
                forb[w] += 1
                n_subs += 1
                chosen[sp] = w
                if w == (1 << dim):
                    dim += 1
                sp += 1
                if sp > best_size:
                    best_size = sp
                    for i in range(sp):
                        best[i] = chosen[i]
            w += 1
        else:
            if sp == 0:
                break
            sp -= 1
            w = stack_val[sp] + 1
            dim = stack_dim[sp]
            tgt = stack_sub[sp]
            for idx in range(tgt, n_subs):
                forb[sub_xor[idx]] -= 1
            n_subs = tgt
    return best_size, best[:best_size].copy(), nodes, exhausted, overflow


@njit(cache=True)
def _search_plain(n_bits, t, cand, budget):
    nsym = 1 << n_bits
    ncand = cand.shape[0]
    forb = np.zeros(nsym, dtype=np.int32)
    sub_xor = np.zeros(_SUB_CAP, dtype=np.int64)
    sub_size = np.zeros(_SUB_CAP, dtype=np.int8)
    n_subs = 0
    max_depth = ncand + 1
    chosen = np.zeros(max_depth, dtype=np.int64)
    stack_pos = np.zeros(max_depth, dtype=np.int64)
    stack_sub = np.zeros(max_depth, dtype=np.int64)
    best = np.zeros(max_depth, dtype=np.int64)
    best_size = 0
    sp = 0
    pos = 0
    nodes = 0
    exhausted = True
    overflow = False
    while True:
        if pos < ncand and sp + (ncand - pos) > best_size:
            w = cand[pos]
            if forb[w] == 0:
                nodes += 1
                if nodes > budget:
                    exhausted = False
                    break
                stack_pos[sp] = pos
                stack_sub[sp] = n_subs
                old = n_subs
                if 2 * old + 1 >= _SUB_CAP:
                    overflow = True
                    break
                for idx in range(old):
                    if sub_size[idx] <= t - 2:
                        x = sub_xor[idx] ^ w
                        sub_xor[n_subs] = x
                        sub_size[n_subs] = sub_size[idx] + 1
                        forb[x] += 1
                        n_subs += 1
                sub_xor[n_subs] = w
                sub_size[n_subs] = 1
                forb[w] += 1
                n_subs += 1
                chosen[sp] = w
                sp += 1
                if sp > best_size:
                    best_size = sp
                    for i in range(sp):
                        best[i] = chosen[i]
            pos += 1
        else:
            if sp == 0:
                break
            sp -= 1
            pos = stack_pos[sp] + 1
            tgt = stack_sub[sp]
            for idx in range(tgt, n_subs):
                forb[sub_xor[idx]] -= 1
            n_subs = tgt
    return best_size, best[:best_size].copy(), nodes, exhausted, overflow


def gf2_rank_rows(rows, ncols: int) -> int:
    nw = max(1, (ncols + 63) // 64)
    words = np.zeros((len(rows), nw), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, r in enumerate(rows):
        r = int(r)
        for j in range(nw):
            words[i, j] = (r >> (64 * j)) & mask
    return int(_gf2_rank_words(words, ncols))


def ind_search_span(n_bits: int, t: int, budget: int):
    best_size, best, nodes, exhausted, overflow = _search_span(n_bits, t, budget)
    if overflow:
        raise RuntimeError("search subset table overflow")
    return int(best_size), [int(x) for x in best], int(nodes), bool(exhausted)


def ind_search_plain(n_bits: int, t: int, cand, budget: int):
    arr = np.asarray(list(cand), dtype=np.int64)
    best_size, best, nodes, exhausted, overflow = _search_plain(n_bits, t, arr, budget)
    if overflow:
        raise RuntimeError("search subset table overflow")
    return int(best_size), [int(x) for x in best], int(nodes), bool(exhausted)
