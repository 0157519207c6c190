"""Graphs, plane graphs, the square operator and structural predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .errors import MalformedRotation


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with optional labels."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from n")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count differs from n")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs or len(set(nbrs)) != len(nbrs):
                raise ValueError(f"vertex {v} has a loop or repeated neighbor")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise ValueError(f"adjacency not symmetric at {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), tuple(labels) if labels is not None else None)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        nodes = list(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (min, max) pairs in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Induced subgraph on `keep`, relabelled 0..len(keep)-1 in the given order."""
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        labels = [self.label(v) for v in keep] if self.labels is not None else None
        return Graph.from_edges(len(keep), edges, labels)

    def distances_from(self, s: int) -> list[int]:
        dist = [-1] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        return self.n == 0 or min(self.distances_from(0)) >= 0

    def girth(self) -> int | None:
        """Length of a shortest cycle, or None for a forest."""
        best = None
        for s in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        cyc = dist[u] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
        return best


def square(g: Graph) -> Graph:
    """G^2: u ~ v iff 1 <= dist_G(u, v) <= 2. Labels are kept."""
    nbrs = []
    for v in range(g.n):
        s = set(g.adj[v])
        for u in g.adj[v]:
            s.update(g.adj[u])
        s.discard(v)
        nbrs.append(tuple(sorted(s)))
    return Graph(g.n, tuple(nbrs), g.labels)


def is_subcubic(g: Graph) -> bool:
    return g.max_degree <= 3


def is_cubic(g: Graph) -> bool:
    return all(len(a) == 3 for a in g.adj)


def has_five_cycle(g: Graph) -> bool:
    """True iff g contains a cycle on exactly five vertices.

    Paths start at their smallest vertex, so each cycle is met from one start only.
    """
    adj = g.adj
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(u: int) -> bool:
            if len(path) == 5:
                return s in adj[u]
            for w in adj[u]:
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    if extend(w):
                        return True
                    path.pop()
                    on_path.discard(w)
            return False

        if extend(s):
            return True
    return False


@dataclass(frozen=True)
class PlaneGraph:
    """A graph with a rotation system (cyclic neighbor order at every vertex)."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        g = self.graph
        if len(self.rotation) != g.n:
            raise MalformedRotation("rotation must list every vertex")
        for v in range(g.n):
            rot = self.rotation[v]
            if len(set(rot)) != len(rot):
                raise MalformedRotation(f"dart repeated at vertex {v}")
            if set(rot) != set(g.adj[v]):
                raise MalformedRotation(f"rotation at vertex {v} does not match its neighbors")

    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> "PlaneGraph":
        n = len(rotation)
        edges = set()
        for v, rot in enumerate(rotation):
            for u in rot:
                if u == v:
                    raise MalformedRotation(f"loop at vertex {v}")
                edges.add((min(u, v), max(u, v)))
        for u, v in edges:
            if u not in rotation[v] or v not in rotation[u]:
                raise MalformedRotation(f"dart {u}-{v} appears in one direction only")
        g = Graph.from_edges(n, edges, labels)
        return cls(g, tuple(tuple(r) for r in rotation))

    @cached_property
    def _succ(self) -> dict[tuple[int, int], int]:
        succ = {}
        for v, rot in enumerate(self.rotation):
            k = len(rot)
            for i, u in enumerate(rot):
                succ[(v, u)] = rot[(i + 1) % k]
        return succ

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Face boundary walks as vertex sequences; each dart lies on exactly one face."""
        seen: set[tuple[int, int]] = set()
        faces = []
        for u in range(self.graph.n):
            for v in self.rotation[u]:
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = b, self._succ[(b, a)]
                if (a, b) != (u, v):
                    raise MalformedRotation("face trace did not close")
                faces.append(tuple(walk))
        return tuple(faces)

    def face_lengths(self) -> list[int]:
        return [len(f) for f in self.faces]

    @cached_property
    def dart_face(self) -> dict[tuple[int, int], int]:
        """Face index of every dart (u, v)."""
        out = {}
        for i, walk in enumerate(self.faces):
            k = len(walk)
            for j in range(k):
                out[(walk[j], walk[(j + 1) % k])] = i
        return out

    def euler_characteristic(self) -> int:
        return self.graph.n - self.graph.num_edges + len(self.faces)


def faces(pg: PlaneGraph) -> list[tuple[tuple[int, ...], int]]:
    return [(f, len(f)) for f in pg.faces]


def embed(g: Graph) -> PlaneGraph | None:
    """A planar rotation system for g, or None if g is not planar."""
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        return None
    rotation = [tuple(emb.neighbors_cw_order(v)) if g.adj[v] else () for v in range(g.n)]
    return PlaneGraph(g, tuple(rotation))


def is_planar(g: Graph, witness: bool = False):
    """Planarity test; with `witness=True` returns (flag, embedding or None)."""
    pg = embed(g)
    if witness:
        return pg is not None, pg
    return pg is not None


# named graphs used by smoke tests and demos

def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def cycle_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cube_graph() -> Graph:
    return Graph.from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def prism_graph(k: int) -> Graph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph.from_edges(2 * k, edges)


def petersen_graph() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def dodecahedron_graph() -> Graph:
    return Graph.from_networkx(nx.dodecahedral_graph())


def builtin_embeddings() -> dict[str, PlaneGraph]:
    """Small embedded corpus: K4, cube, dodecahedron and prisms."""
    graphs = {
        "K4": complete_graph(4),
        "cube": cube_graph(),
        "dodecahedron": dodecahedron_graph(),
        "prism3": prism_graph(3),
        "prism5": prism_graph(5),
        "prism6": prism_graph(6),
    }
    return {name: embed(g) for name, g in graphs.items()}
