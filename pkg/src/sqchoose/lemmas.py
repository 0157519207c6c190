"""Lemma verification driver: dispatches each case variant to a certificate, exhaustive or sampled check."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .catalog import Configuration, build_config, lemma_ids, variants
from .coloring import (DEFAULT_SEED, DEFAULT_TRIALS, EXHAUSTIVE_LIMIT, ListAssignment, Verdict,
                       check_choosability, count_canonical, solve_list_coloring)
from .errors import DetectionOnly, SizeBound, UnknownLemma
from .poly import config_certificate

DETECTION_ONLY_LEMMAS = ("C3-C6", "6-face")

# configuration names accepted in place of lemma ids
ALIASES = {
    "H1": "reducible-H0",
    "F2": "reducible-F2",
    "F4": "reducible-F4",
    "W1": "reducible-F4",
    "W2": "reducible-F4",
    "H2": "reducible-H2",
    "H3": "reducible-H3",
    "H4": "reducible-H4",
    "J6": "reducible-H4",
    "H5": "reducible-H6",
    "H6": "reducible-H7",
    "J1": "cycle-six-original",
    "J2": "cycle-six-original-second",
    "J3": "C4-share-two-edge",
    "J4": "C4-share-two-edge",
    "J5": "H2-type-two-reducible",
    "J7": "lem-4cycle-pendent",
    "J8": "lem-two-4cycle",
    "F1": "C3-C6",
    "F3": "C3-C6",
    "T": "C3-C6",
}


def resolve_lemma(name: str) -> str:
    lemma = ALIASES.get(name, name)
    if lemma in DETECTION_ONLY_LEMMAS:
        raise DetectionOnly(lemma)
    if lemma not in lemma_ids():
        raise UnknownLemma(name)
    return lemma


@dataclass(frozen=True)
class VariantRecord:
    lemma: str
    variant: str
    mode: str
    verdict: str
    detail: dict
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.verdict in ("holds", "pass", "sampled-pass")

    def as_dict(self, timings: bool = False) -> dict:
        d = {"kind": "lemma", "lemma": self.lemma, "variant": self.variant, "mode": self.mode,
             "verdict": self.verdict, **self.detail}
        if timings:
            d["seconds"] = round(self.seconds, 3)
        return d


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    records: tuple[VariantRecord, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def as_dicts(self, timings: bool = False) -> list[dict]:
        return [r.as_dict(timings) for r in self.records]


def _sampled_detail(v: Verdict) -> dict:
    detail = {"trials": v.checked, "seed": v.seed, "palette": v.palette}
    if v.witness is not None:
        detail["witness"] = str(v.witness)
    return detail


def verify_variant(cfg: Configuration, mode: str | None = None, trials: int = DEFAULT_TRIALS,
                   seed: int = DEFAULT_SEED) -> VariantRecord:
    """Check one case variant.

    A stored certificate always wins: it settles every list assignment at once.
    Otherwise exhaustive enumeration runs when the canonical count is within
    EXHAUSTIVE_LIMIT, and sampling covers the rest.
    """
    t0 = time.perf_counter()
    if cfg.monomial is not None:
        cert = config_certificate(cfg)
        detail = {"monomial": list(cert.monomial), "coefficient": cert.coefficient}
        if cert.agreement != "match":
            detail.update(stored=cert.expected, disagreement=cert.agreement)
        return VariantRecord(cfg.lemma, cfg.name, "cn-certificate", cert.verdict, detail, time.perf_counter() - t0)
    want = mode or cfg.mode
    g = cfg.coloring_graph()
    cons = cfg.constraint_indices()
    if want == "exhaustive":
        total = count_canonical(cfg.list_sizes)
        if total > EXHAUSTIVE_LIMIT:
            raise SizeBound(f"{cfg.name}: {total} canonical assignments exceed {EXHAUSTIVE_LIMIT}")
        v = check_choosability(g, cfg.list_sizes, cons, "exhaustive")
        detail = {"assignments": v.checked}
        if v.witness is not None:
            detail["witness"] = str(v.witness)
        return VariantRecord(cfg.lemma, cfg.name, "exhaustive", v.status, detail, time.perf_counter() - t0)
    v = check_choosability(g, cfg.list_sizes, cons, "sampled", trials=trials, seed=seed)
    return VariantRecord(cfg.lemma, cfg.name, "sampled", v.status, _sampled_detail(v), time.perf_counter() - t0)


def verify_lemma(lemma_id: str, mode: str | None = None, trials: int = DEFAULT_TRIALS,
                 seed: int = DEFAULT_SEED) -> LemmaReport:
    """Verify every catalogued case variant of a lemma; one record per variant."""
    lemma = resolve_lemma(lemma_id)
    recs = [verify_variant(cfg, mode, trials, seed) for cfg in variants(lemma)]
    return LemmaReport(lemma, tuple(recs))


def verifiable_lemmas() -> list[str]:
    return [l for l in lemma_ids() if l not in DETECTION_ONLY_LEMMAS and variants(l)]


# reduction from the 3,3,3,2,3,3 cycle lemma to the one with two 2-lists

def reduce_third_list(lists: ListAssignment) -> ListAssignment:
    """Drop one color from L(v3) so the shrunken list differs from L(v4)."""
    l3, l4 = sorted(lists[2]), lists[3]
    for c in l3:
        smaller = frozenset(l3) - {c}
        if smaller != l4:
            return ListAssignment(lists.lists[:2] + (smaller,) + lists.lists[3:])
    raise AssertionError("a 3-list always has a 2-subset other than L(v4)")


def check_reduction(samples: int = 10_000, seed: int = DEFAULT_SEED) -> tuple[bool, int]:
    """Every sampled (3,3,3,2,3,3) assignment reduces into the J1 domain and its coloring lifts back.

    Returns (all good, number checked).
    """
    j1 = build_config("J1")
    g = j1.coloring_graph()
    sizes = build_config("cycle-six").list_sizes
    palette = sum(sizes)
    rng = np.random.default_rng(seed)
    for k in range(samples):
        lists = ListAssignment.of(rng.choice(palette, size=s, replace=False).tolist() for s in sizes)
        reduced = reduce_third_list(lists)
        if not reduced.satisfies(j1.constraint_indices()) or reduced.sizes() != j1.list_sizes:
            return False, k
        col = solve_list_coloring(g, reduced)
        if col is None or any(c not in lists[v] for v, c in enumerate(col)):
            return False, k
    return True, samples
