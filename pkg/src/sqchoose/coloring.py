"""List coloring: solvers, Hall's SDR step, canonical list enumeration and choosability checks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

import networkx as nx
import numpy as np

from . import _kernels
from .graph import Graph

# (kind, vertex indices, bound); kind is "distinct" or "union"
ConstraintSpec = tuple[str, tuple[int, ...], int]

EXHAUSTIVE_LIMIT = 10**8
DEFAULT_TRIALS = 100_000
DEFAULT_SEED = 0
PALETTE_CAP = 14
_BATCH = 20_000


@dataclass(frozen=True)
class ListAssignment:
    lists: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, lists) -> "ListAssignment":
        return cls(tuple(frozenset(l) for l in lists))

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(l) for l in self.lists)

    def satisfies(self, constraints: Sequence[ConstraintSpec]) -> bool:
        for kind, verts, bound in constraints:
            if kind == "distinct":
                a, b = verts
                if self.lists[a] == self.lists[b]:
                    return False
            elif len(frozenset().union(*(self.lists[v] for v in verts))) < bound:
                return False
        return True

    def __str__(self) -> str:
        return " ".join("{" + ",".join(map(str, sorted(l))) + "}" for l in self.lists)


def _as_lists(lists) -> tuple[frozenset[int], ...]:
    if isinstance(lists, ListAssignment):
        return lists.lists
    return tuple(frozenset(l) for l in lists)


def _nbr_masks(g: Graph) -> np.ndarray:
    return np.array([sum(1 << u for u in g.adj[v]) for v in range(g.n)], dtype=np.int64)


def _is_proper(g: Graph, coloring: Sequence[int]) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges())


def solve_list_coloring(g: Graph, lists) -> tuple[int, ...] | None:
    """A proper coloring with c[v] in lists[v], or None when none exists."""
    lists = _as_lists(lists)
    if len(lists) != g.n:
        raise ValueError("one list per vertex required")
    if g.n == 0:
        return ()
    palette = sorted(frozenset().union(*lists))
    if g.n > 63 or len(palette) > 63:
        return _solve_python(g, lists)
    pos = {c: i for i, c in enumerate(palette)}
    masks = np.array([sum(1 << pos[c] for c in l) for l in lists], dtype=np.int64)
    out = np.empty(g.n, dtype=np.int64)
    if not _kernels.solve_masks(_nbr_masks(g), masks, out):
        return None
    return tuple(palette[i] for i in out)


def _solve_python(g: Graph, lists) -> tuple[int, ...] | None:
    color: list[int | None] = [None] * g.n
    order = sorted(range(g.n), key=lambda v: len(lists[v]))

    def rec(k: int) -> bool:
        if k == g.n:
            return True
        v = order[k]
        used = {color[u] for u in g.adj[v]}
        for c in sorted(lists[v]):
            if c not in used:
                color[v] = c
                if rec(k + 1):
                    return True
        color[v] = None
        return False

    return tuple(color) if rec(0) else None


def greedy_color(g: Graph, order: Sequence[int], lists) -> tuple[int, ...] | None:
    """Color in `order`, each vertex taking its least list color unused by colored neighbors."""
    lists = _as_lists(lists)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    color: list[int | None] = [None] * g.n
    for v in order:
        used = {color[u] for u in g.adj[v]}
        free = [c for c in sorted(lists[v]) if c not in used]
        if not free:
            return None
        color[v] = free[0]
    return tuple(color)


@dataclass(frozen=True)
class SDRResult:
    sdr: tuple[int, ...] | None
    violator: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.sdr is not None


def hall_sdr(sets: Sequence[Sequence[int]]) -> SDRResult:
    """Distinct representatives, one per set, via maximum bipartite matching.

    When none exist, `violator` lists set indices S with |union of S| < |S|,
    read off a minimum vertex cover.
    """
    b = nx.Graph()
    left = [("s", i) for i in range(len(sets))]
    b.add_nodes_from(left)
    for i, s in enumerate(sets):
        for c in s:
            b.add_edge(("s", i), ("c", c))
    matching = nx.bipartite.hopcroft_karp_matching(b, top_nodes=left)
    if all(node in matching for node in left):
        return SDRResult(tuple(matching[node][1] for node in left))
    cover = nx.bipartite.to_vertex_cover(b, matching, top_nodes=left)
    return SDRResult(None, tuple(i for i in range(len(sets)) if ("s", i) not in cover))


# canonical enumeration

def enumerate_canonical_lists(sizes: Sequence[int], constraints: Sequence[ConstraintSpec] = ()) -> Iterator[ListAssignment]:
    """At least one assignment from every color-renaming class, colors 1..sum(sizes).

    Reading vertices in order, the colors new to list i are exactly the next unused
    integers. Renamings that permute colors inside a list are not factored out, so a
    class may appear more than once.
    """
    sizes = tuple(sizes)
    n = len(sizes)
    cur: list[frozenset[int]] = []

    def rec(i: int, m: int):
        if i == n:
            la = ListAssignment(tuple(cur))
            if la.satisfies(constraints):
                yield la
            return
        s = sizes[i]
        for j in range(min(s, m), -1, -1):
            fresh = frozenset(range(m + 1, m + s - j + 1))
            for old in combinations(range(1, m + 1), j):
                cur.append(frozenset(old) | fresh)
                yield from rec(i + 1, m + s - j)
                cur.pop()

    yield from rec(0, 0)


def count_canonical(sizes: Sequence[int]) -> int:
    """Number of canonical assignments, ignoring constraints."""
    sizes = tuple(sizes)

    @lru_cache(maxsize=None)
    def count(i: int, m: int) -> int:
        if i == len(sizes):
            return 1
        s = sizes[i]
        return sum(comb(m, j) * count(i + 1, m + s - j) for j in range(min(s, m) + 1))

    return count(0, 0)


def _option_tables(sizes: Sequence[int]):
    n = len(sizes)
    total = sum(sizes)
    masks: list[int] = []
    newm: list[int] = []
    offsets = np.zeros((n, total + 1), dtype=np.int64)
    counts = np.zeros((n, total + 1), dtype=np.int64)
    reach = {0}
    for i, s in enumerate(sizes):
        nxt = set()
        for m in sorted(reach):
            offsets[i, m] = len(masks)
            for j in range(min(s, m), -1, -1):
                fresh = sum(1 << c for c in range(m, m + s - j))
                for old in combinations(range(m), j):
                    masks.append(sum(1 << c for c in old) | fresh)
                    newm.append(m + s - j)
                nxt.add(m + s - j)
            counts[i, m] = len(masks) - offsets[i, m]
        reach = nxt
    return np.array(masks, dtype=np.int64), np.array(newm, dtype=np.int64), offsets, counts


def _constraint_arrays(constraints: Sequence[ConstraintSpec]):
    kinds = np.array([0 if k == "distinct" else 1 for k, _, _ in constraints], dtype=np.int64)
    verts = np.array([sum(1 << v for v in vs) for _, vs, _ in constraints], dtype=np.int64)
    bounds = np.array([b for _, _, b in constraints], dtype=np.int64)
    return kinds, verts, bounds


def _mask_lists(masks: Sequence[int], base: int = 1) -> ListAssignment:
    return ListAssignment(tuple(frozenset(c + base for c in range(63) if (int(m) >> c) & 1) for m in masks))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a choosability check: holds, counterexample or sampled-pass."""

    status: str
    mode: str
    witness: ListAssignment | None = None
    checked: int = 0
    trials: int | None = None
    seed: int | None = None
    palette: int | None = None
    seconds: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return self.status in ("holds", "sampled-pass")


def check_choosability(g: Graph, sizes: Sequence[int], constraints: Sequence[ConstraintSpec] = (),
                       mode: str = "exhaustive", trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                       palette: int | None = None) -> Verdict:
    """Decide (exhaustive) or sample (sampled) colorability of g from every list assignment of the given sizes.

    Lists have exactly the given sizes; a larger list contains one of that size, so this loses nothing.
    """
    sizes = tuple(int(s) for s in sizes)
    if len(sizes) != g.n:
        raise ValueError("one size per vertex required")
    if g.n > 63 or (mode == "exhaustive" and sum(sizes) > 63):
        raise ValueError("kernels support at most 63 vertices and 63 colors")
    t0 = time.perf_counter()
    nbr = _nbr_masks(g)
    kinds, verts, bounds = _constraint_arrays(constraints)
    witness = np.zeros(g.n, dtype=np.int64)
    if mode == "exhaustive":
        masks, newm, offsets, counts = _option_tables(sizes)
        checked, failed = _kernels.canonical_check(nbr, masks, newm, offsets, counts, kinds, verts, bounds, witness)
        return Verdict("counterexample" if failed else "holds", mode,
                       _mask_lists(witness) if failed else None, int(checked),
                       seconds=time.perf_counter() - t0)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode}")
    if palette is None:
        palette = min(sum(sizes), PALETTE_CAP)
    if not max(sizes) <= palette <= 63:
        raise ValueError("palette must hold every list and at most 63 colors")
    rng = np.random.default_rng(seed)
    size_arr = np.array(sizes)
    take = np.arange(max(sizes))[None, :] < size_arr[:, None]
    weights = (np.int64(1) << np.arange(palette, dtype=np.int64))
    done = 0
    while done < trials:
        batch = min(_BATCH, max(trials - done, 1) * (2 if constraints else 1))
        perm = np.argsort(rng.random((batch, g.n, palette)), axis=2)[:, :, :max(sizes)]
        chosen = np.zeros((batch, g.n, palette), dtype=bool)
        np.put_along_axis(chosen, perm, take[None, :, :].repeat(batch, 0), axis=2)
        lists = (chosen * weights).sum(axis=2).astype(np.int64)
        valid = np.zeros(batch, dtype=np.bool_)
        bad = _kernels.batch_check(nbr, lists, kinds, verts, bounds, valid, witness)
        if bad >= 0:
            return Verdict("counterexample", mode, _mask_lists(witness), done + int(valid[:bad + 1].sum()),
                           trials, seed, palette, time.perf_counter() - t0)
        # keep exactly `trials` valid samples
        cum = np.cumsum(valid)
        done += int(min(cum[-1], trials - done))
    return Verdict("sampled-pass", mode, None, done, trials, seed, palette, time.perf_counter() - t0)
