"""Compiled inner loops: bitmask list coloring, canonical list enumeration, sampled trials.

Graphs are passed as int64 arrays of neighbor bitmasks and lists as int64 color
bitmasks, so every kernel is limited to 63 vertices and 63 colors.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _lowbit(m):
    c = 0
    while not (m >> c) & 1:
        c += 1
    return c


@njit(cache=True)
def _popcount(m):
    k = 0
    while m:
        m &= m - 1
        k += 1
    return k


@njit(cache=True)
def solve_masks(nbr, lists, color):
    """Backtracking with most-constrained-vertex choice. Fills `color` (color index per vertex) on success."""
    n = lists.shape[0]
    for v in range(n):
        color[v] = -1
    stack_v = np.empty(n, np.int64)
    stack_m = np.empty(n, np.int64)
    depth = 0
    while True:
        if depth == n:
            return True
        best = -1
        best_k = 99
        best_m = 0
        for v in range(n):
            if color[v] >= 0:
                continue
            forb = 0
            nb = nbr[v]
            u = 0
            while nb:
                if nb & 1 and color[u] >= 0:
                    forb |= 1 << color[u]
                nb >>= 1
                u += 1
            avail = lists[v] & ~forb
            k = _popcount(avail)
            if k < best_k:
                best, best_k, best_m = v, k, avail
                if k == 0:
                    break
        if best_k > 0:
            c = _lowbit(best_m)
            stack_v[depth] = best
            stack_m[depth] = best_m & ~(1 << c)
            color[best] = c
            depth += 1
            continue
        # backtrack to the deepest level with an untried color
        resumed = False
        while depth > 0:
            depth -= 1
            v = stack_v[depth]
            color[v] = -1
            m = stack_m[depth]
            if m:
                c = _lowbit(m)
                stack_m[depth] = m & ~(1 << c)
                color[v] = c
                depth += 1
                resumed = True
                break
        if not resumed:
            return False


@njit(cache=True)
def _constraints_ok(lists, ckind, cverts, cbound):
    for i in range(ckind.shape[0]):
        vm = cverts[i]
        if ckind[i] == 0:
            a = _lowbit(vm)
            b = _lowbit(vm & ~(1 << a))
            if lists[a] == lists[b]:
                return False
        else:
            u = 0
            v = 0
            while vm:
                if vm & 1:
                    u |= lists[v]
                vm >>= 1
                v += 1
            if _popcount(u) < cbound[i]:
                return False
    return True


@njit(cache=True)
def canonical_check(nbr, opt_mask, opt_newm, offsets, counts, ckind, cverts, cbound, witness):
    """Walk every canonical assignment; returns (assignments checked, found counterexample).

    Options for vertex i when m colors are in use live at offsets[i, m] .. + counts[i, m].
    On failure `witness` holds the uncolorable lists.
    """
    n = nbr.shape[0]
    lists = np.zeros(n, np.int64)
    ms = np.zeros(n + 1, np.int64)
    idx = np.zeros(n, np.int64)
    color = np.empty(n, np.int64)
    checked = 0
    i = 0
    idx[0] = -1
    while i >= 0:
        idx[i] += 1
        if idx[i] >= counts[i, ms[i]]:
            i -= 1
            continue
        o = offsets[i, ms[i]] + idx[i]
        lists[i] = opt_mask[o]
        ms[i + 1] = opt_newm[o]
        if i + 1 < n:
            i += 1
            idx[i] = -1
            continue
        if not _constraints_ok(lists, ckind, cverts, cbound):
            continue
        checked += 1
        if not solve_masks(nbr, lists, color):
            for v in range(n):
                witness[v] = lists[v]
            return checked, True
    return checked, False


@njit(cache=True)
def batch_check(nbr, lists_batch, ckind, cverts, cbound, valid_out, witness):
    """Solve each row of `lists_batch`; rows violating a constraint are marked invalid and skipped.

    Returns the index of the first uncolorable row, or -1.
    """
    rows, n = lists_batch.shape
    color = np.empty(n, np.int64)
    for r in range(rows):
        lists = lists_batch[r]
        if not _constraints_ok(lists, ckind, cverts, cbound):
            valid_out[r] = False
            continue
        valid_out[r] = True
        if not solve_masks(nbr, lists, color):
            for v in range(n):
                witness[v] = lists[v]
            return r
    return -1
