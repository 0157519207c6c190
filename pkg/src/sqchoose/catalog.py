"""Named configurations, their case variants, occurrence detection and the list-size audit.

Vertex labels follow the figures: ``v1``, ``v2``, ... plus auxiliary outside
vertices ``w`` and ``z``. A vertex with a list size is part of the coloring
problem; a vertex without one is an already-colored neighbor that only shapes
the square. Case variants carry suffixed names such as ``H3.case3.2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UnknownConfiguration
from .graph import Graph, PlaneGraph, square

MODES = ("cn-certificate", "exhaustive", "sampled", "detection-only")


@dataclass(frozen=True)
class Constraint:
    """Side condition on lists: ``distinct`` (L(a) != L(b)) or ``union`` (|union of lists| >= bound)."""

    kind: str
    vertices: tuple[str, ...]
    bound: int = 0

    def describe(self) -> str:
        if self.kind == "distinct":
            a, b = self.vertices
            return f"L({a})!=L({b})"
        return "|" + "+".join(f"L({v})" for v in self.vertices) + f"|>={self.bound}"


@dataclass(frozen=True)
class Configuration:
    name: str
    lemma: str
    pattern: Graph
    sizes: tuple[tuple[str, int], ...]
    mode: str
    constraints: tuple[Constraint, ...] = ()
    faces: tuple[tuple[str, ...], ...] = ()
    condition: str = ""
    monomial: tuple[int, ...] | None = None
    expected: int | None = None
    source: str = "figure"
    note: str = ""

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode}")
        labels = set(self.pattern.labels or ())
        for label, size in self.sizes:
            if label not in labels or size < 1:
                raise ValueError(f"{self.name}: bad size entry {label}={size}")
        for c in self.constraints:
            if not set(c.vertices) <= labels:
                raise ValueError(f"{self.name}: constraint on unknown vertex")

    @property
    def sized_labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.sizes)

    @property
    def list_sizes(self) -> tuple[int, ...]:
        return tuple(size for _, size in self.sizes)

    @property
    def face_based(self) -> bool:
        return bool(self.faces)

    def coloring_graph(self) -> Graph:
        """Square of the pattern restricted to the vertices that still need a color."""
        sq = square(self.pattern)
        return sq.induced([self.pattern.index(label) for label in self.sized_labels])

    def constraint_indices(self) -> list[tuple[str, tuple[int, ...], int]]:
        pos = {label: i for i, label in enumerate(self.sized_labels)}
        return [(c.kind, tuple(pos[v] for v in c.vertices), c.bound) for c in self.constraints]


def _label(token: str) -> str:
    return f"v{token}" if token.isdigit() else token


def _sort_key(label: str):
    return (0, int(label[1:]), "") if label[0] == "v" and label[1:].isdigit() else (1, 0, label)


def _pattern(edges: str) -> Graph:
    pairs = [tuple(_label(t) for t in e.split("-")) for e in edges.split()]
    labels = sorted({v for e in pairs for v in e}, key=_sort_key)
    pos = {v: i for i, v in enumerate(labels)}
    return Graph.from_edges(len(labels), [(pos[a], pos[b]) for a, b in pairs], labels)


def _sizes(spec: str) -> tuple[tuple[str, int], ...]:
    """``"3 5 4"`` sizes v1, v2, v3; ``"w:4"`` sizes an auxiliary vertex; ``"v6:-"`` leaves one unsized."""
    out = []
    i = 1
    for tok in spec.split():
        if ":" in tok:
            label, val = tok.split(":")
            label = _label(label)
            if val != "-":
                out.append((label, int(val)))
            if label == f"v{i}":
                i += 1
        else:
            out.append((f"v{i}", int(tok)))
            i += 1
    return tuple(sorted(out, key=lambda p: _sort_key(p[0])))


def _faces(spec: str) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(_label(t) for t in cyc.split(",")) for cyc in spec.split())


def _mono(spec: str) -> tuple[int, ...]:
    return tuple(int(t) for t in spec.split())


# base patterns
_F1 = "1-2 1-3 2-3 2-4 3-4"
_F1_C4 = "1-2 1-3 2-3 2-4 4-5 3-5"
_F2 = "1-2 1-3 2-3 3-4 4-5 4-7 5-6 6-7"
_F3 = "1-2 1-3 2-3 2-4 4-5 5-6 6-7 1-7"
_T = "1-2 1-3 2-3 3-4 4-5 4-6 5-6"
_W1 = "1-2 1-3 1-10 2-3 3-4 4-5 5-6 5-8 6-7 7-8 8-9 9-10"
_W2 = "1-2 1-3 1-11 2-3 3-4 4-5 5-6 5-8 6-7 7-8 8-9 9-10 10-11"
_H1 = "1-2 1-4 2-3 2-5 3-6 4-5 5-6"
_H2 = "1-2 1-5 2-3 2-6 3-4 3-9 4-10 5-6 6-7 7-8 8-9 9-10"
_H3 = "1-2 1-5 2-3 3-4 4-6 4-7 5-6 5-8 6-9 7-11 8-9 9-10 10-11"
_J6 = "1-2 1-5 2-3 2-6 3-4 4-8 5-6 6-7 7-8 7-10 8-9 9-12 10-11 10-13 11-12 11-14 13-14"
_H4 = _J6 + " 5-15 13-17 15-16 16-17"
_H5 = "1-2 1-6 2-3 2-7 3-4 4-5 4-10 5-11 6-7 7-8 8-9 9-10 10-11"
_H6 = "1-2 1-5 2-3 2-6 3-4 3-10 4-11 5-6 6-7 7-8 8-9 9-10 10-11"
_C6 = "1-2 2-3 3-4 4-5 5-6 1-6"
_J3 = "1-2 1-4 2-3 2-5 3-4 3-6 4-5 5-8 6-7 7-8"
_J4 = "1-2 1-4 2-3 2-5 3-4 3-6 4-5 5-9 6-7 7-8 8-9"
_J5 = "1-2 1-6 2-3 2-7 3-4 4-5 4-9 5-10 6-7 7-8 8-9 9-10"
_J7 = "1-2 1-3 2-4 3-4 4-5"
_J8 = "1-2 1-3 2-4 3-4 4-5 5-6 5-8 6-7 7-8"

# (name, lemma, edges, sizes, mode, extras)
_TABLE: list[tuple] = [
    # triangle configurations
    ("F1", "C3-C6", _F1, "1 1 1 1", "detection-only",
     dict(faces="1,2,3 2,4,3", source="structural", condition="3-cycle sharing an edge with a 3-cycle")),
    ("F1.c4", "C3-C6", _F1_C4, "1 1 1 1 1", "detection-only",
     dict(faces="1,2,3 2,4,5,3", source="structural", condition="3-cycle sharing an edge with a 4-cycle")),
    ("F2", "reducible-F2", _F2, "3 3 5 5 3 2 3", "sampled", dict(faces="1,2,3 4,5,6,7")),
    ("F3", "C3-C6", _F3, "1 1 1 1 1 1 1", "detection-only",
     dict(faces="1,2,3 2,4,5,6,7,1", source="structural", condition="3-cycle sharing an edge with a 6-cycle")),
    ("F4", "reducible-F4", _W1, "5 4 5 4 5 3 3 5 3 3", "detection-only",
     dict(faces="1,2,3 5,6,7,8 1,3,4,5,8,9,10", condition="7-face carrying a 3-face and a 4-face at distance 2",
          note="verified through W1 and W2")),
    ("F4.8", "reducible-F4", _W2, "5 4 5 4 5 3 3 5 3 2 3", "detection-only",
     dict(faces="1,2,3 5,6,7,8 1,3,4,5,8,9,10,11", condition="8-face carrying a 3-face and a 4-face at distance 2",
          note="verified through W1 and W2")),
    ("T", "C3-C6", _T, "1 1 1 1 1 1", "detection-only",
     dict(source="structural", condition="two 3-cycles at distance 1")),
    # F4 as a 7-face (W1) and an 8-face (W2)
    ("W1", "reducible-F4", _W1, "5 4 5 4 5 3 3 5 3 3", "sampled", dict(condition="Subcase 1.1")),
    ("W1.case1.2.1", "reducible-F4", _W1 + " 2-w 7-w", "5 5 5 4 5 3 4 5 3 3", "sampled",
     dict(condition="v2 and v7 have a common neighbor w")),
    ("W1.case1.2.2a", "reducible-F4", _W1 + " 6-w 10-w", "5 4 5 4 5 3 3 5 3 3", "sampled",
     dict(condition="v6 and v10 have a common neighbor w", source="text")),
    ("W1.case1.2.2b", "reducible-F4", _W1 + " 6-9", "5 4 5 4 5 3 3 5 3 3", "sampled",
     dict(condition="v6v9 in E(G)", source="text")),
    ("W2", "reducible-F4", _W2, "5 4 5 4 5 3 3 5 3 2 3", "sampled", dict(condition="Subcase 2.1")),
    ("W2.case2.2.1", "reducible-F4", _W2 + " 2-w 7-w", "5 5 5 4 5 3 4 5 3 2 3", "sampled",
     dict(condition="v2 and v7 have a common neighbor w")),
    ("W2.case2.2.2ii", "reducible-F4", _W2 + " 6-w 10-w", "5 4 5 4 5 3 3 5 3 2 3", "sampled",
     dict(condition="v6 and v10 have a common neighbor w", source="text")),
    ("W2.case2.2.2iii", "reducible-F4", _W2 + " 6-w 11-w", "5 4 5 4 5 3 3 5 3 2 3", "sampled",
     dict(condition="v6 and v11 have a common neighbor w", source="text")),
    ("W2.case2.2.2iv", "reducible-F4", _W2 + " 7-w 11-w", "5 4 5 4 5 3 3 5 3 2 3", "sampled",
     dict(condition="v7 and v11 have a common neighbor w", source="text")),
    ("W2.case2.2.2v", "reducible-F4", _W2 + " 6-9", "5 4 5 4 5 3 3 5 3 2 3", "sampled",
     dict(condition="v6v9 in E(G)", source="text")),
    # 4-cycle configurations
    ("H1", "reducible-H0", _H1, "3 5 3 3 5 3", "sampled",
     dict(faces="1,2,5,4 2,3,6,5", condition="Case 1")),
    ("H1.case2", "reducible-H0", _H1 + " 3-4", "4 5 5 5 5 v6:-", "sampled",
     dict(condition="v3v4 in E(G); v6 keeps its color")),
    ("H2", "reducible-H2", _H2, "3 6 6 3 3 5 3 3 5 3", "sampled",
     dict(faces="1,2,6,5 3,4,10,9 2,3,9,8,7,6", condition="Case 1")),
    ("H2.case2", "reducible-H2", _H2 + " 5-10", "4 6 6 4 6 6 3 3 6 6", "sampled",
     dict(condition="v5v10 in E(G)")),
    ("H2.case3.1", "reducible-H2", _H2 + " 5-w 10-w", "3 6 6 3 4 5 3 3 5 4", "sampled",
     dict(condition="v5 and v10 have a common neighbor w")),
    ("H2.case3.2", "reducible-H2", _H2 + " 4-w 5-w", "3 6 6 4 4 5 3 3 5 3", "sampled",
     dict(condition="v4 and v5 have a common neighbor w")),
    ("H2.case3.3", "reducible-H2", _H2 + " 4-w 7-w", "3 6 6 4 3 5 4 3 5 3", "sampled",
     dict(condition="v4 and v7 have a common neighbor w")),
    ("H3", "reducible-H3", _H3, "3 2 3 5 5 7 3 4 5 3 2", "cn-certificate",
     dict(faces="5,6,9,8 1,2,3,4,6,5 4,6,9,10,11,7", condition="Case 1",
          monomial="2 1 2 4 4 5 2 3 4 2 1", expected=2)),
    ("H3.case2", "reducible-H3", _H3 + " 2-10", "4 5 4 5 5 7 3 4 6 6 3", "sampled",
     dict(condition="v2v10 in E(G)")),
    ("H3.case3.1.1", "reducible-H3", _H3 + " 1-w 10-w 3-w", "5 3 5 5 5 7 3 4 5 5 2", "cn-certificate",
     dict(condition="v1 and v10 have a common neighbor w adjacent to v3",
          monomial="3 1 3 4 4 5 2 3 4 2 1", expected=3)),
    ("H3.case3.1.2", "reducible-H3", _H3 + " 1-w 10-w 2-z 11-z", "4 3 3 5 5 7 3 4 5 4 3", "cn-certificate",
     dict(condition="v1, v10 share w and v2, v11 share z",
          monomial="3 2 2 4 4 5 2 3 4 2 1", expected=2)),
    ("H3.case3.1.3", "reducible-H3", _H3 + " 1-w 10-w", "4 2 3 5 5 7 3 4 5 4 2", "cn-certificate",
     dict(condition="v1 and v10 have a common neighbor w",
          monomial="3 1 2 4 4 5 2 3 4 2 1", expected=2)),
    ("H3.case3.2", "reducible-H3", _H3 + " 2-w 10-w", "3 3 3 5 5 7 3 4 5 4 2", "cn-certificate",
     dict(condition="v2 and v10 have a common neighbor w",
          monomial="2 1 2 4 4 5 2 3 4 3 1", expected=-4)),
    ("H3.case3.3", "reducible-H3", _H3 + " 3-w 10-w", "3 2 4 5 5 7 3 4 5 4 2", "cn-certificate",
     dict(condition="v3 and v10 have a common neighbor w",
          monomial="2 1 3 4 4 5 2 3 4 2 1", expected=2)),
    ("H3.case3.4", "reducible-H3", _H3 + " 7-w 8-w", "3 2 3 5 5 7 4 5 5 3 2", "cn-certificate",
     dict(condition="v7 and v8 have a common neighbor w",
          monomial="2 1 2 4 4 5 2 4 4 2 1", expected=-3)),
    ("H3.case3.5", "reducible-H3", _H3 + " 2-w 11-w", "3 3 3 5 5 7 3 4 5 3 3", "cn-certificate",
     dict(condition="v2 and v11 have a common neighbor w",
          monomial="2 2 2 4 4 5 2 3 4 2 1", expected=2)),
    ("H4", "reducible-H4", _H4, "4 5 3 3 5 7 7 5 3 7 5 3 5 4 3 2 3", "sampled",
     dict(faces="1,2,6,5 10,11,14,13 2,3,4,8,7,6 7,8,9,12,11,10 5,6,7,10,13,17,16,15",
          condition="Subcase 1.1")),
    ("H4.case1.2.1a", "reducible-H4", _H4 + " 3-16", "4 6 6 4 5 7 7 5 3 7 5 3 5 4 4 5 4", "sampled",
     dict(condition="v3v16 in E(G)")),
    ("H4.case1.2.1b", "reducible-H4", _H4 + " 3-17", "4 6 6 4 5 7 7 5 3 7 5 3 6 4 3 3 6", "sampled",
     dict(condition="v3v17 in E(G)")),
    ("H4.case1.2.2a", "reducible-H4", _H4 + " 4-15", "4 5 4 6 6 7 7 6 3 7 5 3 5 4 6 3 3", "sampled",
     dict(condition="v4v15 in E(G)")),
    ("H4.case1.2.2b", "reducible-H4", _H4 + " 4-16", "4 5 4 6 5 7 7 6 3 7 5 3 5 4 4 5 4", "sampled",
     dict(condition="v4v16 in E(G)")),
    ("H4.case1.2.3", "reducible-H4", _H4 + " 3-w 15-w", "4 6 5 4 6 7 7 5 3 7 5 3 5 4 5 3 3 w:4", "sampled",
     dict(condition="v3 and v15 have a common neighbor w, left uncolored")),
    ("H5", "reducible-H6", _H5, "3 5 4 5 3 3 5 3 3 5 3", "cn-certificate",
     dict(faces="1,2,7,6 4,5,11,10 2,3,4,10,9,8,7", condition="Case 1",
          monomial="2 4 2 4 2 2 3 2 2 3 2", expected=-2)),
    ("H5.case2", "reducible-H6", _H5 + " 5-6", "4 5 4 6 6 6 6 3 3 5 4", "cn-certificate",
     dict(condition="v5v6 in E(G)", monomial="3 4 2 4 2 4 3 2 2 4 3", expected=-5)),
    ("H5.case3.1", "reducible-H6", _H5 + " 6-w 11-w", "3 5 4 5 3 4 5 3 3 5 4", "cn-certificate",
     dict(condition="v6 and v11 have a common neighbor w", monomial="2 4 2 4 2 2 3 2 2 3 3", expected=1)),
    ("H5.case3.2", "reducible-H6", _H5 + " 5-w 6-w", "3 5 4 5 4 4 5 3 3 5 3", "cn-certificate",
     dict(condition="v5 and v6 have a common neighbor w", monomial="2 4 2 4 3 2 3 2 2 3 2", expected=-1)),
    ("H5.case3.3", "reducible-H6", _H5 + " 5-w 8-w", "3 5 4 5 4 3 5 4 3 5 3", "cn-certificate",
     dict(condition="v5 and v8 have a common neighbor w", monomial="2 4 2 4 3 2 3 2 2 3 2", expected=-3)),
    ("H6", "reducible-H7", _H6, "3 6 6 3 3 5 3 2 3 5 3", "sampled",
     dict(faces="1,2,6,5 3,4,11,10 2,3,10,9,8,7,6", condition="Case 1")),
    ("H6.case2", "reducible-H7", _H6 + " 5-11", "4 6 6 4 6 6 3 2 3 6 6", "sampled",
     dict(condition="v5v11 in E(G)")),
    ("H6.case3.1", "reducible-H7", _H6 + " 5-w 11-w", "3 6 6 3 4 5 3 2 3 5 4", "sampled",
     dict(condition="v5 and v11 have a common neighbor w")),
    ("H6.case3.1w", "reducible-H7", _H6 + " 5-w 11-w", "4 6 6 4 5 6 3 2 3 6 5 w:4", "sampled",
     dict(condition="v5 and v11 have a common neighbor w, left uncolored")),
    ("H6.case3.2", "reducible-H7", _H6 + " 4-w 5-w", "3 6 6 4 4 5 3 2 3 5 3", "sampled",
     dict(condition="v4 and v5 have a common neighbor w")),
    ("H6.case3.3", "reducible-H7", _H6 + " 7-w 11-w", "3 6 6 3 3 5 4 2 3 5 4", "sampled",
     dict(condition="v7 and v11 have a common neighbor w")),
    ("H6.case3.4", "reducible-H7", _H6 + " 4-w 8-w", "3 6 6 4 3 5 3 3 3 5 3", "sampled",
     dict(condition="v4 and v8 have a common neighbor w")),
    # 6-cycle list lemmas
    ("J1", "cycle-six-original", _C6, "3 3 2 2 3 3", "exhaustive",
     dict(constraints=[Constraint("distinct", ("v3", "v4"))])),
    ("J2", "cycle-six-original-second", _C6, "3 2 3 2 3 3", "exhaustive",
     dict(constraints=[Constraint("distinct", ("v2", "v4"))])),
    ("cycle-six", "cycle-six", _C6, "3 3 3 2 3 3", "exhaustive", dict()),
    # two 4-cycles sharing structure
    ("J3", "C4-share-two-edge", _J3, "4 6 6 6 6 3 2 3", "sampled", dict()),
    ("J4", "C4-share-two-edge", _J4, "4 6 6 6 6 3 2 2 3", "sampled", dict()),
    ("J5", "H2-type-two-reducible", _J5, "3 5 4 5 3 3 5 4 5 3", "sampled", dict(condition="Case 1")),
    ("J5.case2a", "H2-type-two-reducible", _J5 + " 1-10", "6 6 4 5 4 4 5 4 6 6", "sampled",
     dict(condition="v1v10 in E(G)")),
    ("J5.case2b", "H2-type-two-reducible", _J5 + " 1-11 5-11", "5 6 4 6 5 4 5 4 5 4 4", "sampled",
     dict(condition="v1 and v5 have a common neighbor v11, left uncolored")),
    ("J6", "reducible-H4", _J6, "3 5 3 3 3 6 7 5 3 6 5 3 3 3", "detection-only",
     dict(source="audit", note="sizes from the degree audit; no figure annotates J6 alone")),
    ("J6.case2a", "reducible-H4", _J6 + " 1-14 3-w 12-w", "6 6 4 3 4 6 7 5 3 6 6 4 4 6", "sampled",
     dict(condition="v1v14 in E(G), v3 and v12 share w")),
    ("J6.case2b", "reducible-H4", _J6 + " 1-14", "6 6 3 3 4 6 7 5 3 6 6 3 4 6", "sampled",
     dict(condition="v1v14 in E(G)")),
    ("J6.case2c", "reducible-H4", _J6 + " 1-12", "6 6 3 3 4 6 7 5 4 6 6 6 3 3", "sampled",
     dict(condition="v1v12 in E(G)")),
    ("J6.case2d", "reducible-H4", _J6 + " 1-9", "6 6 3 3 4 6 7 6 6 6 5 4 3 3", "sampled",
     dict(condition="v1v9 in E(G)")),
    ("J6.case3.1a", "reducible-H4", _J6 + " 1-w 14-w", "4 5 3 3 3 6 7 5 3 6 5 3 3 4", "sampled",
     dict(condition="v1 and v14 have a common neighbor w")),
    ("J6.case3.1b", "reducible-H4", _J6 + " 1-w 12-w", "4 5 3 3 3 6 7 5 3 6 5 4 3 3", "sampled",
     dict(condition="v1 and v12 have a common neighbor w")),
    ("J6.case3.1c", "reducible-H4", _J6 + " 1-w 9-w", "4 5 3 3 3 6 7 5 4 6 5 3 3 3", "sampled",
     dict(condition="v1 and v9 have a common neighbor w")),
    ("J6.case3.2a", "reducible-H4", _J6 + " 3-w 12-w", "3 6 5 4 3 6 7 5 4 6 6 5 3 3 w:4", "sampled",
     dict(condition="v3 and v12 share w, left uncolored")),
    ("J6.case3.2b", "reducible-H4", _J6 + " 3-w 12-w 1-z 14-z", "4 6 5 4 3 6 7 5 4 6 6 5 3 4 w:4", "sampled",
     dict(condition="v3, v12 share w (uncolored) and v1, v14 share z")),
    ("J6.case3.2c", "reducible-H4", _J6 + " 3-w 13-w", "3 6 5 4 3 6 7 5 3 7 5 3 5 4 w:4", "sampled",
     dict(condition="v3 and v13 share w, left uncolored")),
    ("J6.case3.2d", "reducible-H4", _J6 + " 3-w 13-w 4-z 14-z", "3 6 5 5 3 6 7 5 3 7 5 3 5 5 w:4", "sampled",
     dict(condition="v3, v13 share w (uncolored) and v4, v14 share z")),
    ("J6.case3.3a", "reducible-H4", _J6 + " 4-w 13-w", "3 5 4 5 3 6 7 6 3 7 5 3 5 4 w:4", "sampled",
     dict(condition="v4 and v13 share w, left uncolored")),
    ("J6.case3.3b", "reducible-H4", _J6 + " 4-w 5-w w-16 16-17 13-17",
     "4 5 4 6 6 7 7 6 3 7 5 3 5 4 16:3 17:3 w:6", "sampled",
     dict(condition="v4 and v5 share w; w, v16, v17 uncolored")),
    ("J6.case3.3c", "reducible-H4", _J6 + " 4-w 5-w w-16 9-z 13-z z-16",
     "4 5 4 6 6 7 7 7 6 7 5 4 6 4 16:4 w:6 z:6", "sampled",
     dict(condition="v4, v5 share w and v9, v13 share z; w, v16, z uncolored")),
    # pendant 4-cycle lemmas
    ("J7", "lem-4cycle-pendent", _J7, "2 3 3 3 2", "exhaustive",
     dict(constraints=[Constraint("union", ("v2", "v3", "v4"), 4), Constraint("union", ("v1", "v3"), 5)],
          condition="|L(v1)|=2 with |L(v1)+L(v3)|>=5")),
    ("J7.a", "lem-4cycle-pendent", _J7, "3 3 3 3 2", "exhaustive",
     dict(constraints=[Constraint("union", ("v2", "v3", "v4"), 4)], condition="|L(v1)|>=3")),
    ("J8", "lem-two-4cycle", _J8, "3 3 3 5 5 3 2 3", "exhaustive",
     dict(monomial="2 2 1 4 4 1 1 2", expected=1, source="figure",
          note="canonical enumeration exceeds 10^13 classes; decided by the stored certificate")),
]

# base identifiers
BASE_NAMES = ("F1", "F2", "F3", "F4", "H1", "H2", "H3", "H4", "H5", "H6",
              "J1", "J2", "J3", "J4", "J5", "J6", "J7", "J8", "T", "W1", "W2")

# detection families used for hypothesis checks on whole graphs
DETECTION_FAMILIES = {
    "F1": ("F1", "F1.c4"),
    "F2": ("F2",),
    "F3": ("F3",),
    "F4": ("F4", "F4.8"),
    "H1": ("H1",),
    "H2": ("H2",),
    "H3": ("H3",),
    "H4": ("H4",),
    "H5": ("H5",),
    "H6": ("H6",),
}


def _build(row) -> Configuration:
    name, lemma, edges, sizes, mode, extra = row
    extra = dict(extra)
    return Configuration(
        name=name,
        lemma=lemma,
        pattern=_pattern(edges),
        sizes=_sizes(sizes),
        mode=mode,
        constraints=tuple(extra.get("constraints", ())),
        faces=_faces(extra["faces"]) if "faces" in extra else (),
        condition=extra.get("condition", ""),
        monomial=_mono(extra["monomial"]) if "monomial" in extra else None,
        expected=extra.get("expected"),
        source=extra.get("source", "figure"),
        note=extra.get("note", ""),
    )


@lru_cache(maxsize=None)
def _catalog() -> dict[str, Configuration]:
    return {row[0]: _build(row) for row in _TABLE}


def all_configurations() -> list[Configuration]:
    return list(_catalog().values())


def names() -> list[str]:
    return list(_catalog())


def build_config(name: str) -> Configuration:
    try:
        return _catalog()[name]
    except KeyError:
        raise UnknownConfiguration(name) from None


def variants(lemma: str) -> list[Configuration]:
    """Every catalogued case variant belonging to a lemma, in table order."""
    return [c for c in _catalog().values() if c.lemma == lemma and c.mode != "detection-only"]


def lemma_ids() -> list[str]:
    seen = []
    for c in _catalog().values():
        if c.lemma not in seen:
            seen.append(c.lemma)
    return seen


# occurrence detection

@dataclass(frozen=True)
class Occurrence:
    config: str
    mapping: tuple[tuple[str, int], ...]

    def as_dict(self) -> dict[str, int]:
        return dict(self.mapping)


def _subgraph_maps(pattern: Graph, host: Graph):
    """All injective edge-preserving maps pattern -> host (plain backtracking)."""
    order = []
    seen = set()
    # grow the order along edges so every new vertex has a mapped neighbor when possible
    for start in sorted(range(pattern.n), key=lambda v: -pattern.degree(v)):
        if start in seen:
            continue
        stack = [start]
        while stack:
            v = stack.pop(0)
            if v in seen:
                continue
            seen.add(v)
            order.append(v)
            stack.extend(u for u in pattern.adj[v] if u not in seen)
    image = [-1] * pattern.n
    used = [False] * host.n

    def rec(k: int):
        if k == len(order):
            yield tuple(image)
            return
        v = order[k]
        mapped_nbrs = [image[u] for u in pattern.adj[v] if image[u] >= 0]
        if mapped_nbrs:
            candidates = host.adj[mapped_nbrs[0]]
        else:
            candidates = range(host.n)
        for h in candidates:
            if used[h] or host.degree(h) < pattern.degree(v):
                continue
            if any(not host.has_edge(h, m) for m in mapped_nbrs):
                continue
            image[v] = h
            used[h] = True
            yield from rec(k + 1)
            used[h] = False
            image[v] = -1

    yield from rec(0)


def _is_face(cycle: tuple[int, ...], face_set: set) -> bool:
    k = len(cycle)
    rots = {tuple(cycle[i:] + cycle[:i]) for i in range(k)}
    rev = tuple(reversed(cycle))
    rots |= {tuple(rev[i:] + rev[:i]) for i in range(k)}
    return bool(rots & face_set)


def find_occurrences(host: PlaneGraph | Graph, cfg: Configuration | str, limit: int | None = None) -> list[Occurrence]:
    """Occurrences of `cfg` in `host`, one per image edge set (pattern automorphisms collapse).

    For face-based configurations on an embedded host, each listed cycle must bound a face.
    """
    if isinstance(cfg, str):
        cfg = build_config(cfg)
    pg = host if isinstance(host, PlaneGraph) else None
    g = host.graph if isinstance(host, PlaneGraph) else host
    face_set = set(tuple(f) for f in pg.faces) if (pg is not None and cfg.face_based) else None
    pat = cfg.pattern
    face_idx = [tuple(pat.index(v) for v in cyc) for cyc in cfg.faces]
    found = {}
    for image in _subgraph_maps(pat, g):
        key = frozenset(frozenset((image[u], image[v])) for u, v in pat.edges())
        if key in found:
            continue
        if face_set is not None and not all(_is_face(tuple(image[i] for i in cyc), face_set) for cyc in face_idx):
            continue
        found[key] = Occurrence(cfg.name, tuple((pat.label(i), image[i]) for i in range(pat.n)))
        if limit is not None and len(found) >= limit:
            break
    return sorted(found.values(), key=lambda o: tuple(h for _, h in o.mapping))


def detect_family(host: PlaneGraph | Graph, family: str) -> Occurrence | None:
    for name in DETECTION_FAMILIES[family]:
        occ = find_occurrences(host, name, limit=1)
        if occ:
            return occ[0]
    return None


# list-size audit

def audit_sizes(cfg: Configuration, palette: int = 7) -> dict[str, int]:
    """Recompute each size as palette minus colored G^2-neighbors of a generic cubic completion.

    Every pattern vertex below degree 3 gets fresh outside neighbors, and those get
    fresh neighbors again, so nothing outside the pattern is shared.
    """
    pat = cfg.pattern
    n = pat.n
    adj = [set(a) for a in pat.adj]
    nxt = n

    def new_vertex(attach: int) -> int:
        nonlocal nxt
        adj.append({attach})
        adj[attach].add(nxt)
        nxt += 1
        return nxt - 1

    for v in range(n):
        while len(adj[v]) < 3:
            stub = new_vertex(v)
            for _ in range(2):
                new_vertex(stub)
    sized = {pat.index(label) for label in cfg.sized_labels}
    out = {}
    for label in cfg.sized_labels:
        v = pat.index(label)
        ball = set(adj[v])
        for u in adj[v]:
            ball |= adj[u]
        ball.discard(v)
        out[label] = palette - len(ball - sized)
    return out


def audit_report(cfg: Configuration) -> list[tuple[str, int, int]]:
    """(label, stored, audited) for every vertex where the two disagree."""
    audited = audit_sizes(cfg)
    return [(label, size, audited[label]) for label, size in cfg.sizes if audited[label] != size]


# text export

def export_record(cfg: Configuration) -> str:
    pat = cfg.pattern
    edges = " ".join(f"{pat.label(u)}-{pat.label(v)}" for u, v in pat.edges())
    sizes = " ".join(f"{label}={s}" for label, s in cfg.sizes)
    cons = " ".join(c.describe() for c in cfg.constraints) or "-"
    fields = [
        f"name={cfg.name}",
        f"lemma={cfg.lemma}",
        f"mode={cfg.mode}",
        f"edges=[{edges}]",
        f"sizes=[{sizes}]",
        f"constraints=[{cons}]",
    ]
    if cfg.faces:
        fields.append("faces=[" + " ".join(",".join(c) for c in cfg.faces) + "]")
    if cfg.condition:
        fields.append(f"case=[{cfg.condition}]")
    if cfg.monomial is not None:
        fields.append("monomial=[" + " ".join(map(str, cfg.monomial)) + f"] expected={cfg.expected}")
    fields.append(f"source={cfg.source}")
    return "\t".join(fields)


def export_catalog() -> str:
    return "".join(export_record(c) + "\n" for c in all_configurations())
