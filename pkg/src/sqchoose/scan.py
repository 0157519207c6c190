"""Exact chromatic numbers and corpus scans of squares of subcubic planar graphs."""

from __future__ import annotations

import multiprocessing
import os
import time
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ScanFailure, SizeBound
from .formats import read_graph6
from .graph import Graph, complete_graph, cube_graph, cycle_graph, has_five_cycle, is_planar, is_subcubic, petersen_graph, prism_graph, square

SQUARE_BOUND = 7
DEFAULT_SIZE_BOUND = 30


def is_k_colorable(g: Graph, k: int) -> tuple[int, ...] | None:
    """A proper k-coloring found by DSATUR-ordered backtracking, or None."""
    n = g.n
    if n == 0:
        return ()
    if k <= 0:
        return None
    color = [-1] * n
    # seen[v][c]: how many colored neighbors of v use color c
    seen = [[0] * k for _ in range(n)]
    sat = [0] * n

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                kv = (sat[v], len(g.adj[v]))
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def assign(v: int, c: int, delta: int) -> None:
        for u in g.adj[v]:
            before = seen[u][c]
            seen[u][c] += delta
            if before == 0 and delta > 0:
                sat[u] += 1
            elif seen[u][c] == 0 and delta < 0:
                sat[u] -= 1

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        # symmetry: only one fresh color is worth trying
        for c in range(min(used + 1, k)):
            if seen[v][c]:
                continue
            color[v] = c
            assign(v, c, 1)
            if rec(done + 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            color[v] = -1
        return False

    return tuple(color) if rec(0, 0) else None


def chromatic_number(g: Graph, bound: int = DEFAULT_SIZE_BOUND) -> int:
    """Exact chi(g) by binary search over k between a clique bound and a greedy bound."""
    if g.n > bound:
        raise SizeBound(f"{g.n} vertices exceed the bound {bound}")
    if g.n == 0:
        return 0
    if g.num_edges == 0:
        return 1
    hi = _greedy_colors(g)
    lo = max(2, _greedy_clique(g))
    while lo < hi:
        mid = (lo + hi) // 2
        if is_k_colorable(g, mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _greedy_colors(g: Graph) -> int:
    color: dict[int, int] = {}
    for v in sorted(range(g.n), key=lambda v: -g.degree(v)):
        used = {color[u] for u in g.adj[v] if u in color}
        color[v] = next(c for c in range(g.n + 1) if c not in used)
    return max(color.values()) + 1


def _greedy_clique(g: Graph) -> int:
    best = 1
    for v in range(g.n):
        clique = [v]
        for u in sorted(g.adj[v], key=lambda u: -g.degree(u)):
            if all(g.has_edge(u, w) for w in clique):
                clique.append(u)
        best = max(best, len(clique))
    return best


@dataclass(frozen=True)
class ScanRecord:
    index: int
    status: str
    n: int
    edges: int
    chi_square: int | None = None
    chi: int | None = None
    seconds: float = 0.0

    @property
    def kept(self) -> bool:
        return self.status == "kept"

    @property
    def passed(self) -> bool | None:
        return None if self.chi_square is None else self.chi_square <= SQUARE_BOUND

    def as_dict(self, timings: bool = False) -> dict:
        d = {"kind": "scan", "index": self.index, "status": self.status, "n": self.n, "edges": self.edges}
        if self.kept:
            d.update(chi_square=self.chi_square, chi=self.chi, passed=self.passed)
        if timings:
            d["seconds"] = round(self.seconds, 3)
        return d


def classify(g: Graph) -> str:
    """kept, or the first failed hypothesis."""
    if not is_subcubic(g):
        return "rejected:not-subcubic"
    if not is_planar(g):
        return "rejected:not-planar"
    if has_five_cycle(g):
        return "rejected:has-5-cycle"
    return "kept"


def scan_graph(item: tuple[int, Graph], bound: int = DEFAULT_SIZE_BOUND) -> ScanRecord:
    index, g = item
    t0 = time.perf_counter()
    status = classify(g)
    if status != "kept":
        return ScanRecord(index, status, g.n, g.num_edges, seconds=time.perf_counter() - t0)
    chi2 = chromatic_number(square(g), bound)
    chi = chromatic_number(g, bound)
    return ScanRecord(index, status, g.n, g.num_edges, chi2, chi, time.perf_counter() - t0)


def scan_corpus(graphs: Iterable[Graph], jobs: int = 1, bound: int = DEFAULT_SIZE_BOUND) -> Iterator[ScanRecord]:
    """One record per graph, in input order; raises ScanFailure on a kept graph with chi(G^2) > 7."""
    items = enumerate(graphs, start=1)
    if jobs <= 1:
        records: Iterable[ScanRecord] = (scan_graph(item, bound) for item in items)
        pool = None
    else:
        pool = multiprocessing.get_context("spawn").Pool(jobs)
        records = pool.imap(scan_graph, items, chunksize=4)
    try:
        for rec in records:
            if rec.kept and not rec.passed:
                raise ScanFailure(f"graph {rec.index}: chi(G^2) = {rec.chi_square} > {SQUARE_BOUND}")
            yield rec
    finally:
        if pool is not None:
            pool.terminate()


def scan_graph6(lines: Iterable[bytes | str], jobs: int = 1, bound: int = DEFAULT_SIZE_BOUND) -> Iterator[ScanRecord]:
    return scan_corpus(read_graph6(lines), jobs, bound)


def default_jobs() -> int:
    return os.cpu_count() or 1


def smoke_corpus() -> dict[str, Graph]:
    """Tiny built-in corpus for smoke runs."""
    return {
        "K4": complete_graph(4),
        "Q3": cube_graph(),
        "prism3": prism_graph(3),
        "prism4": prism_graph(4),
        "prism6": prism_graph(6),
        "Petersen": petersen_graph(),
        "C5": cycle_graph(5),
    }


def summary_table(records: Iterable[ScanRecord]) -> str:
    rows = ["index  status                 n   |E|  chi(G^2)"]
    for r in records:
        chi = "-" if r.chi_square is None else str(r.chi_square)
        rows.append(f"{r.index:<6} {r.status:<22} {r.n:<3} {r.edges:<4} {chi}")
    return "\n".join(rows) + "\n"
