"""End-to-end acceptance checks; each prints one PASS/FAIL line."""

import dataclasses
import itertools
import random
import time

import networkx as nx
import numpy as np
import pytest

from sqchoose.catalog import build_config, variants
from sqchoose.coloring import EXHAUSTIVE_LIMIT, check_choosability, count_canonical, hall_sdr, solve_list_coloring
from sqchoose.discharging import (apply_rules, enumerate_local_cases, initial_charges, random_cubic_embedding,
                                  verify_graph_discharge)
from sqchoose.errors import HypothesisViolation, SizeBound
from sqchoose.graph import Graph, PlaneGraph, builtin_embeddings, cube_graph, cycle_graph, embed, petersen_graph
from sqchoose.lemmas import verify_lemma, verify_variant
from sqchoose.poly import certificate_suite, coefficient, graph_polynomial
from sqchoose.report import dumps
from sqchoose.scan import scan_corpus
from sqchoose.suite import run_suite

H3_VALUES = [2, 3, 2, 2, -4, 2, -3, 2]
H5_VALUES = [-2, -5, 1, -1, -3]


def test_criterion_1_certificates(acceptance_line):
    rows = []
    for lemma, want in (("reducible-H3", H3_VALUES), ("reducible-H6", H5_VALUES)):
        t0 = time.perf_counter()
        certs = certificate_suite(lemma)
        per = (time.perf_counter() - t0) / len(certs)
        rows.append((lemma, [c.coefficient for c in certs], want, per, certs))
    ok = all(got == want and per < 10 and all(c.verdict == "pass" for c in certs)
             for _, got, want, per, certs in rows)
    slowest = max(per for *_, per, _ in rows)
    acceptance_line(1, ok, f"13 certificates exact incl. sign, mean {slowest:.2f}s each")
    assert ok


def test_criterion_2_homogeneity(acceptance_line):
    h3 = graph_polynomial(build_config("H3").coloring_graph())
    h5 = build_config("H5").coloring_graph()
    # a product of |E| linear forms is homogeneous of degree |E|; H5^2 is checked through its edge count
    ok = h3.is_homogeneous() and h3.degrees() == {30} and h5.num_edges == 28
    ok &= coefficient(h5, (2, 4, 2, 4, 2, 2, 3, 2, 2, 3, 2)) != 0 and sum((2, 4, 2, 4, 2, 2, 3, 2, 2, 3, 2)) == 28
    acceptance_line(2, ok, f"H3^2 homogeneous of degree 30 ({len(h3)} terms); H5^2 has 28 edges")
    assert ok


def _random_planar(rng: random.Random) -> PlaneGraph:
    while True:
        n = rng.randint(4, 12)
        g = nx.gnm_random_graph(n, rng.randint(n - 1, 3 * n - 6), seed=rng.randrange(10**9))
        if nx.is_connected(g) and nx.check_planarity(g)[0]:
            return embed(Graph.from_networkx(g))


def test_criterion_3_euler_identity(acceptance_line):
    rng = random.Random(0)
    cubic = list(builtin_embeddings().values()) + [random_cubic_embedding(rng.randint(0, 20), rng) for _ in range(100)]
    general = [_random_planar(rng) for _ in range(100)]
    ok = True
    for pg in cubic:
        ledger = initial_charges(pg)
        ok &= ledger.total() == -12 and apply_rules(pg, ledger).final_total() == -12
    for pg in general:
        ok &= initial_charges(pg).total() == -12
    acceptance_line(3, ok, f"{len(cubic)} cubic embeddings conserve -12 through the rules, {len(general)} general planar sum to -12")
    assert ok


def test_criterion_4_local_minima(acceptance_line):
    t0 = time.perf_counter()
    minima = {}
    for d in range(3, 13):
        cases = enumerate_local_cases(d)
        minima[d] = min((c.final for c in cases), default=None)
    elapsed = time.perf_counter() - t0
    ok = all(m is None or m >= 0 for m in minima.values())
    ok &= all(minima[d] == 0 for d in (3, 4, 7, 8)) and elapsed < 60
    shown = " ".join(f"{d}:{'-' if m is None else m}" for d, m in minima.items())
    acceptance_line(4, ok, f"minima {shown} in {elapsed:.1f}s")
    assert ok


EXHAUSTIVE = ("cycle-six-original", "cycle-six-original-second", "cycle-six", "lem-4cycle-pendent")


def test_criterion_5_exhaustive(acceptance_line):
    t0 = time.perf_counter()
    records = [r for lemma in EXHAUSTIVE for r in verify_lemma(lemma).records]
    explore = check_choosability(build_config("J1").coloring_graph(), build_config("J1").list_sizes)
    elapsed = time.perf_counter() - t0
    ok = all(r.mode == "exhaustive" and r.verdict == "holds" for r in records) and elapsed < 900
    j8 = build_config("J8")
    j8_count = count_canonical(j8.list_sizes)
    j8_cert = verify_lemma("lem-two-4cycle").records[0]
    enumerable = j8_count <= EXHAUSTIVE_LIMIT
    detail = (f"{len(records)} variants hold by enumeration in {elapsed:.0f}s; J8 has {j8_count:.2e} canonical "
              f"assignments, not enumerable, settled by certificate instead ({j8_cert.verdict}); "
              f"J1 without L(v3)!=L(v4): {explore.status} after {explore.checked}")
    acceptance_line(5, ok and enumerable, detail)
    assert ok and j8_cert.verdict == "pass"


@pytest.mark.xfail(raises=SizeBound, strict=True, reason="J8 canonical stream is about 2.3e13 assignments")
def test_criterion_5_j8_enumeration():
    verify_variant(dataclasses.replace(build_config("J8"), monomial=None), mode="exhaustive")


SAMPLED_LEMMAS = ("reducible-F2", "reducible-F4", "reducible-H0", "C4-share-two-edge", "reducible-H2",
                  "H2-type-two-reducible", "reducible-H4", "reducible-H7", "reducible-H3")


def test_criterion_6_sampled(acceptance_line):
    recs = [r for lemma in SAMPLED_LEMMAS for r in verify_lemma(lemma).records if r.mode == "sampled"]
    ok = bool(recs) and all(r.verdict == "sampled-pass" and r.detail["trials"] >= 100_000 and r.detail["seed"] == 0
                            for r in recs)
    bad = [f"{r.variant}: {r.detail.get('witness')}" for r in recs if r.verdict != "sampled-pass"]
    acceptance_line(6, ok, f"{len(recs)} variants sampled-pass at 1e5 trials, seed 0" + (f"; {bad}" if bad else ""))
    assert ok, bad


def _dense_expansion(g: Graph) -> dict:
    out = {}
    for choice in itertools.product((0, 1), repeat=g.num_edges):
        e = [0] * g.n
        sign = 1
        for (a, b), pick in zip(g.edges(), choice):
            e[b if pick else a] += 1
            sign = -sign if pick else sign
        out[tuple(e)] = out.get(tuple(e), 0) + sign
    return out


def _monomials(total, bounds):
    if not bounds:
        if total == 0:
            yield ()
        return
    for k in range(min(total, bounds[0]) + 1):
        for rest in _monomials(total - k, bounds[1:]):
            yield (k,) + rest


def _brute_colorable(g: Graph, lists) -> bool:
    grid = np.array(list(itertools.product(*[sorted(l) for l in lists])), dtype=np.int64).reshape(-1, g.n)
    ok = np.ones(len(grid), dtype=bool)
    for u, v in g.edges():
        ok &= grid[:, u] != grid[:, v]
    return bool(ok.any())


def test_criterion_7_oracles(acceptance_line):
    rng = random.Random(0)
    disagreements = 0
    monomials = 0
    for _ in range(50):
        n = rng.randint(2, 7)
        pairs = list(itertools.combinations(range(n), 2))
        g = Graph.from_edges(n, rng.sample(pairs, min(len(pairs), rng.randint(1, 12))))
        dense = _dense_expansion(g)
        for t in _monomials(g.num_edges, [g.degree(v) for v in range(n)]):
            monomials += 1
            disagreements += coefficient(g, t) != dense.get(t, 0)
    graphs = 0
    for nxg in nx.graph_atlas_g()[1:]:
        if nxg.number_of_nodes() > 7:
            continue
        g = Graph.from_networkx(nxg)
        graphs += 1
        for _ in range(3):
            lists = [frozenset(rng.sample(range(1, 5), rng.randint(1, 4))) for _ in range(g.n)]
            disagreements += (solve_list_coloring(g, lists) is not None) != _brute_colorable(g, lists)
    hall_cases = 0
    for _ in range(2000):
        sets = [frozenset(rng.sample(range(6), rng.randint(0, 4))) for _ in range(rng.randint(0, 6))]
        brute = any(len(set(p)) == len(p) for p in itertools.product(*[sorted(s) for s in sets]))
        hall_cases += 1
        disagreements += bool(hall_sdr(sets)) != brute
    ok = disagreements == 0
    acceptance_line(7, ok, f"{monomials} monomials, {graphs} atlas graphs x3 list draws, {hall_cases} Hall cases; "
                           f"{disagreements} disagreements")
    assert ok


def test_criterion_8_scan_smoke(acceptance_line):
    t0 = time.perf_counter()
    q3, c5, pet = scan_corpus([cube_graph(), cycle_graph(5), petersen_graph()])
    reasons = []
    for name in ("cube", "K4"):
        try:
            verify_graph_discharge(builtin_embeddings()[name])
            reasons.append(None)
        except HypothesisViolation as exc:
            reasons.append(exc.reason)
    elapsed = time.perf_counter() - t0
    ok = (q3.kept and q3.chi_square == 4 and c5.status == "rejected:has-5-cycle"
          and pet.status == "rejected:not-planar" and reasons == ["H1", "F1"] and elapsed < 10)
    acceptance_line(8, ok, f"chi(Q3^2)={q3.chi_square}, C5 {c5.status}, Petersen {pet.status}, "
                           f"cube->{reasons[0]}, K4->{reasons[1]} in {elapsed:.1f}s")
    assert ok


def test_criterion_9_determinism(acceptance_line):
    first = "\n".join(dumps(r) for r in run_suite("all").records)
    second = "\n".join(dumps(r) for r in run_suite("all").records)
    ok = first == second and len(first) > 0
    acceptance_line(9, ok, f"suite all twice: {first.count(chr(10)) + 1} records, byte-identical={first == second}")
    assert ok
