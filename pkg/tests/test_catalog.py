import itertools
import random

import pytest

from sqchoose.catalog import (BASE_NAMES, all_configurations, audit_report, audit_sizes, build_config, export_catalog,
                              find_occurrences, names, variants)
from sqchoose.discharging import random_cubic_embedding
from sqchoose.errors import UnknownConfiguration
from sqchoose.graph import PlaneGraph, builtin_embeddings, cycle_graph, embed, square


def naive_occurrences(host: PlaneGraph, cfg):
    """All injective edge-preserving maps, deduplicated by image edge set, faces checked when required."""
    g, pat = host.graph, cfg.pattern
    faces = {f[i:] + f[:i] for f in host.faces for i in range(len(f))}
    faces |= {tuple(reversed(f)) for f in faces}
    seen = set()
    for image in itertools.permutations(range(g.n), pat.n):
        if not all(g.has_edge(image[u], image[v]) for u, v in pat.edges()):
            continue
        if cfg.faces and not all(tuple(image[pat.index(x)] for x in cyc) in faces for cyc in cfg.faces):
            continue
        seen.add(frozenset(frozenset((image[u], image[v])) for u, v in pat.edges()))
    return seen


def test_h1_matches_figure():
    h1 = build_config("H1")
    assert h1.pattern.n == 6 and h1.pattern.num_edges == 7
    assert h1.list_sizes == (3, 5, 3, 3, 5, 3)


def test_j1_has_list_condition():
    j1 = build_config("J1")
    assert j1.pattern.num_edges == 6 and all(j1.pattern.degree(v) == 2 for v in range(6))
    assert j1.list_sizes == (3, 3, 2, 2, 3, 3)
    assert [c.describe() for c in j1.constraints] == ["L(v3)!=L(v4)"]


def test_w1_sizes():
    w1 = build_config("W1")
    assert w1.pattern.n == 10
    assert w1.list_sizes == (5, 4, 5, 4, 5, 3, 3, 5, 3, 3)


def test_unknown_configuration():
    with pytest.raises(UnknownConfiguration):
        build_config("H9")


def test_every_base_name_exists():
    for name in BASE_NAMES:
        assert build_config(name).name == name


def test_catalog_invariants():
    for cfg in all_configurations():
        assert cfg.pattern.is_connected(), cfg.name
        assert all(s >= 1 for s in cfg.list_sizes)
        if cfg.monomial is not None:
            assert len(cfg.monomial) == len(cfg.sizes)


def test_square_edge_counts():
    assert square(build_config("H3").pattern).num_edges == 30
    assert square(build_config("H5").pattern).num_edges == 28


def test_h5_case2_extra_square_edges():
    base = build_config("H5")
    case2 = build_config("H5.case2")
    lab = case2.pattern.label
    extra = set(case2.coloring_graph().edges()) - set(base.coloring_graph().edges())
    assert sorted((lab(u), lab(v)) for u, v in extra) == [
        ("v1", "v5"), ("v4", "v6"), ("v5", "v6"), ("v5", "v7"), ("v6", "v11")]


def test_h3_subcase_extra_edges():
    base = set(build_config("H3").coloring_graph().edges())
    expect = {
        "H3.case3.1.1": {("v1", "v10"), ("v3", "v10")},
        "H3.case3.1.2": {("v1", "v10"), ("v2", "v11")},
        "H3.case3.1.3": {("v1", "v10")},
        "H3.case3.2": {("v2", "v10")},
        "H3.case3.3": {("v3", "v10")},
        "H3.case3.4": {("v7", "v8")},
        "H3.case3.5": {("v2", "v11")},
    }
    for name, pairs in expect.items():
        cfg = build_config(name)
        lab = cfg.coloring_graph().label
        got = {(lab(u), lab(v)) for u, v in set(cfg.coloring_graph().edges()) - base}
        assert got == pairs, name


def test_variant_lists():
    assert [c.name for c in variants("reducible-H6")] == ["H5", "H5.case2", "H5.case3.1", "H5.case3.2", "H5.case3.3"]
    assert len([c for c in variants("reducible-H3") if c.mode == "cn-certificate"]) == 8
    h4 = [c.name for c in variants("reducible-H4") if c.name.startswith("J6.case3")]
    assert len(h4) == 10


def test_occurrence_examples():
    emb = builtin_embeddings()
    assert find_occurrences(emb["cube"], "H1")
    assert not find_occurrences(embed(cycle_graph(6)), "H1")
    assert find_occurrences(emb["K4"], "F1")


def test_h1_occurrences_in_cube_count():
    # 12 edges of the cube, each shared by two adjacent 4-faces
    assert len(find_occurrences(builtin_embeddings()["cube"], "H1")) == 12


@pytest.mark.parametrize("name", ["F1", "F1.c4", "H1", "T", "J7"])
def test_occurrences_match_naive_oracle(name):
    cfg = build_config(name)
    rng = random.Random(hash(name) % 1000)
    hosts = list(builtin_embeddings().values())[:2] + [embed(cycle_graph(6))]
    hosts += [random_cubic_embedding(rng.randrange(0, 3), rng) for _ in range(4)]
    for host in hosts:
        if host.graph.n > 10:
            continue
        got = {frozenset(frozenset((o.as_dict()[cfg.pattern.label(u)], o.as_dict()[cfg.pattern.label(v)]))
                         for u, v in cfg.pattern.edges())
               for o in find_occurrences(host, cfg)}
        assert got == naive_occurrences(host, cfg)


def test_self_detection():
    for cfg in all_configurations():
        host = cfg.pattern
        assert find_occurrences(host, cfg, limit=1), cfg.name


def test_occurrences_are_deduplicated():
    host = builtin_embeddings()["cube"]
    occ = find_occurrences(host, "H1")
    cfg = build_config("H1")
    keys = [frozenset(frozenset((o.as_dict()[cfg.pattern.label(u)], o.as_dict()[cfg.pattern.label(v)]))
                      for u, v in cfg.pattern.edges()) for o in occ]
    assert len(keys) == len(set(keys))


def test_face_check_applies_to_face_configs_only():
    assert not build_config("T").face_based
    assert build_config("H1").face_based
    # a 4-cycle that bounds no face does not count for H1: C8 plus two chords has no 4-faces
    host = embed(cycle_graph(8))
    assert not find_occurrences(host, "H1")


def test_audit_values():
    assert audit_sizes(build_config("H1")) == {"v1": 3, "v2": 5, "v3": 3, "v4": 3, "v5": 5, "v6": 3}
    case2 = audit_sizes(build_config("H1.case2"))
    assert case2["v1"] == 4 and case2["v2"] == 5
    assert audit_sizes(build_config("H2.case3.1")) == dict(build_config("H2.case3.1").sizes)
    assert audit_sizes(build_config("J5.case2b"))["v5"] == 5


def test_audit_agrees_on_figure_sizes():
    mismatched = {cfg.name for cfg in all_configurations() if cfg.source == "figure" and audit_report(cfg)}
    # the list-lemma patterns are abstract: their sizes are hypotheses, not counts
    assert mismatched <= {"J1", "J2", "cycle-six", "J7", "J7.a", "J8"}


def test_export_is_deterministic():
    text = export_catalog()
    assert text == export_catalog()
    assert len(text.splitlines()) == len(names())
    assert text.splitlines()[0].startswith("name=F1\t")
