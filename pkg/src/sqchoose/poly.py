"""Exact graph polynomials, coefficient extraction and Nullstellensatz certificates."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from .errors import ExponentExceedsList, UnknownLemma
from .graph import Graph

Exps = tuple[int, ...]

# int64 is exact when the sum of |coefficients| stays below 2**63
_DENSE_EDGE_LIMIT = 62
_DENSE_CELL_LIMIT = 50_000_000


@dataclass(frozen=True)
class SparsePoly:
    """Polynomial in x_0..x_{nvars-1} with exact integer coefficients."""

    nvars: int
    terms: Mapping[Exps, int]

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e}")
            if c:
                clean[e] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "SparsePoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.nvars, out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        out: dict[Exps, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(self.nvars, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePoly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, t: Sequence[int]) -> int:
        return self.terms.get(tuple(t), 0)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= int(x) ** k
            total += term
        return total


def _factors(g: Graph, order: Sequence[int] | None) -> list[tuple[int, int]]:
    """(first, second) variable pairs for each factor (x_first - x_second), edges in lexicographic order."""
    if order is None:
        return g.edges()
    rank = {v: i for i, v in enumerate(order)}
    if sorted(rank) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    return [(u, v) if rank[u] < rank[v] else (v, u) for u, v in g.edges()]


def graph_polynomial(g: Graph, order: Sequence[int] | None = None) -> SparsePoly:
    """Product of (x_u - x_v) over edges, u before v in `order` (default: index order)."""
    n = g.n
    terms: dict[Exps, int] = {(0,) * n: 1}
    for a, b in _factors(g, order):
        nxt: dict[Exps, int] = {}
        for e, c in terms.items():
            ea = list(e)
            ea[a] += 1
            ka = tuple(ea)
            nxt[ka] = nxt.get(ka, 0) + c
            ea[a] -= 1
            ea[b] += 1
            kb = tuple(ea)
            nxt[kb] = nxt.get(kb, 0) - c
        terms = {e: c for e, c in nxt.items() if c}
    return SparsePoly(n, terms)


def _coefficient_dense(factors: list[tuple[int, int]], t: Sequence[int]) -> int:
    # box[e] holds the coefficient of x^e among partial products, truncated at e <= t
    box = np.zeros(tuple(k + 1 for k in t), dtype=np.int64)
    box[(0,) * len(t)] = 1
    full = slice(None)
    for a, b in factors:
        new = np.zeros_like(box)
        src = [full] * len(t)
        dst = [full] * len(t)
        src[a], dst[a] = slice(0, t[a]), slice(1, t[a] + 1)
        new[tuple(dst)] += box[tuple(src)]
        src[a], dst[a] = full, full
        src[b], dst[b] = slice(0, t[b]), slice(1, t[b] + 1)
        new[tuple(dst)] -= box[tuple(src)]
        box = new
    return int(box[tuple(t)])


def _coefficient_sparse(factors: list[tuple[int, int]], t: Sequence[int]) -> int:
    terms: dict[Exps, int] = {(0,) * len(t): 1}
    for a, b in factors:
        nxt: dict[Exps, int] = {}
        for e, c in terms.items():
            if e[a] < t[a]:
                k = e[:a] + (e[a] + 1,) + e[a + 1:]
                nxt[k] = nxt.get(k, 0) + c
            if e[b] < t[b]:
                k = e[:b] + (e[b] + 1,) + e[b + 1:]
                nxt[k] = nxt.get(k, 0) - c
        terms = {e: c for e, c in nxt.items() if c}
    return terms.get(tuple(t), 0)


def coefficient(g: Graph, t: Sequence[int], order: Sequence[int] | None = None) -> int:
    """Exact coefficient of prod x_i^t_i in the graph polynomial.

    Partial products are truncated at the target exponents, since exponents only grow.
    """
    t = tuple(int(k) for k in t)
    if len(t) != g.n:
        raise ValueError(f"monomial has {len(t)} exponents for {g.n} variables")
    if min(t, default=0) < 0:
        raise ValueError("negative exponent")
    factors = _factors(g, order)
    if sum(t) != len(factors):
        return 0
    cells = int(np.prod([k + 1 for k in t], dtype=np.float64))
    if len(factors) <= _DENSE_EDGE_LIMIT and cells <= _DENSE_CELL_LIMIT:
        return _coefficient_dense(factors, t)
    return _coefficient_sparse(factors, t)


def brute_coefficient(g: Graph, t: Sequence[int]) -> int:
    """Reference oracle: expand by choosing one endpoint per factor (2^|E| terms)."""
    factors = g.edges()
    if sum(t) != len(factors):
        return 0
    total = 0
    for choice in product((0, 1), repeat=len(factors)):
        e = [0] * g.n
        sign = 1
        for (a, b), pick in zip(factors, choice):
            if pick:
                e[b] += 1
                sign = -sign
            else:
                e[a] += 1
        if tuple(e) == tuple(t):
            total += sign
    return total


def order_sign(g: Graph, order: Sequence[int]) -> int:
    """Sign relating the polynomial under `order` to the index-order polynomial."""
    rank = {v: i for i, v in enumerate(order)}
    flips = sum(1 for u, v in g.edges() if rank[u] > rank[v])
    return -1 if flips % 2 else 1


# certificates

@dataclass(frozen=True)
class Certificate:
    lemma: str
    config: str
    monomial: tuple[int, ...]
    sizes: tuple[int, ...]
    coefficient: int
    expected: int | None = None

    @property
    def verdict(self) -> str:
        ok = self.coefficient != 0 and all(k <= s - 1 for k, s in zip(self.monomial, self.sizes))
        return "pass" if ok else "fail"

    @property
    def agreement(self) -> str:
        """match, sign-only or magnitude against the stored value."""
        if self.expected is None or self.coefficient == self.expected:
            return "match"
        if abs(self.coefficient) == abs(self.expected):
            return "sign-only"
        return "magnitude"

    def as_dict(self) -> dict:
        d = {"kind": "certificate", "lemma": self.lemma, "config": self.config, "monomial": list(self.monomial),
             "sizes": list(self.sizes), "coefficient": self.coefficient, "verdict": self.verdict}
        if self.agreement != "match":
            d["stored"] = self.expected
            d["disagreement"] = self.agreement
        return d


def cn_certificate(g: Graph, sizes: Sequence[int], t: Sequence[int], *, lemma: str = "", name: str = "",
                   expected: int | None = None) -> Certificate:
    """Check one certificate: nonzero coefficient and t_v <= |L(v)| - 1 everywhere."""
    sizes = tuple(int(s) for s in sizes)
    t = tuple(int(k) for k in t)
    if len(sizes) != g.n or len(t) != g.n:
        raise ValueError("sizes and monomial must cover every vertex")
    for v, (k, s) in enumerate(zip(t, sizes)):
        if k >= s:
            raise ExponentExceedsList(g.label(v), k, s)
    return Certificate(lemma, name, t, sizes, coefficient(g, t), expected)


CN_LEMMAS = ("reducible-H3", "reducible-H6")


def certificate_suite(lemma: str) -> list[Certificate]:
    """Every stored certificate of a coefficient lemma, in catalog order."""
    from .catalog import all_configurations

    if lemma not in CN_LEMMAS:
        raise UnknownLemma(lemma)
    out = []
    for cfg in all_configurations():
        if cfg.lemma == lemma and cfg.mode == "cn-certificate":
            out.append(config_certificate(cfg))
    return out


def config_certificate(cfg) -> Certificate:
    return cn_certificate(cfg.coloring_graph(), cfg.list_sizes, cfg.monomial,
                          lemma=cfg.lemma, name=cfg.name, expected=cfg.expected)
