import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from sqchoose.catalog import build_config
from sqchoose.errors import ExponentExceedsList, UnknownLemma
from sqchoose.graph import Graph, complete_graph, cycle_graph, path_graph
from sqchoose.poly import (SparsePoly, brute_coefficient, certificate_suite, cn_certificate, coefficient,
                           graph_polynomial, order_sign)


def expand_oracle(g):
    """Dense expansion by picking one variable per factor."""
    out = {}
    edges = g.edges()
    for choice in itertools.product((0, 1), repeat=len(edges)):
        e = [0] * g.n
        sign = 1
        for (a, b), pick in zip(edges, choice):
            e[b if pick else a] += 1
            sign *= -1 if pick else 1
        out[tuple(e)] = out.get(tuple(e), 0) + sign
    return {k: v for k, v in out.items() if v}


def compositions(total, bounds):
    if not bounds:
        if total == 0:
            yield ()
        return
    for k in range(min(total, bounds[0]) + 1):
        for rest in compositions(total - k, bounds[1:]):
            yield (k,) + rest


def test_k2_polynomial():
    p = graph_polynomial(path_graph(2))
    assert p.terms == {(1, 0): 1, (0, 1): -1}


def test_triangle_polynomial():
    p = graph_polynomial(complete_graph(3))
    assert len(p) == 6
    assert p.degrees() == {3}
    assert coefficient(complete_graph(3), (2, 1, 0)) == 1


def test_h3_square_is_degree_30():
    g = build_config("H3").coloring_graph()
    p = graph_polynomial(g)
    assert p.is_homogeneous() and p.degrees() == {30}


def test_known_coefficients():
    assert coefficient(build_config("H3").coloring_graph(), (2, 1, 2, 4, 4, 5, 2, 3, 4, 2, 1)) == 2
    assert coefficient(build_config("H5").coloring_graph(), (2, 4, 2, 4, 2, 2, 3, 2, 2, 3, 2)) == -2


def test_wrong_degree_is_zero():
    assert coefficient(complete_graph(3), (1, 1, 0)) == 0


def test_coefficient_rejects_bad_monomials():
    with pytest.raises(ValueError):
        coefficient(complete_graph(3), (1, 1))
    with pytest.raises(ValueError):
        coefficient(complete_graph(3), (4, -1, 0))


def test_sparse_poly_drops_zeros():
    p = SparsePoly(2, {(1, 0): 0, (0, 1): 2})
    assert p.terms == {(0, 1): 2}
    with pytest.raises(ValueError):
        SparsePoly(2, {(1,): 1})


def test_sparse_poly_arithmetic():
    x, y = SparsePoly.variable(2, 0), SparsePoly.variable(2, 1)
    assert (x - y) * (x + y) == x * x - y * y
    assert ((x - y) * (x - y)).evaluate((3, 1)) == 4


@given(graphs(max_n=8, max_edges=12))
def test_homogeneity(g):
    p = graph_polynomial(g)
    assert p.degrees() <= {g.num_edges}


@given(graphs(max_n=7, max_edges=10))
def test_polynomial_matches_oracle(g):
    assert graph_polynomial(g).terms == expand_oracle(g)


@given(graphs(max_n=6, max_edges=9), st.randoms(use_true_random=False))
def test_order_change_flips_sign(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    p0 = graph_polynomial(g)
    p1 = graph_polynomial(g, order)
    sign = order_sign(g, order)
    assert p1.terms == {e: sign * c for e, c in p0.terms.items()}
    for t in list(p0.terms)[:5]:
        assert coefficient(g, t, order) == sign * coefficient(g, t)


@given(graphs(max_n=6, max_edges=9), st.randoms(use_true_random=False))
def test_nonzero_evaluation_iff_proper(g, rnd):
    p = graph_polynomial(g)
    for _ in range(10):
        c = [rnd.randrange(3) for _ in range(g.n)]
        proper = all(c[u] != c[v] for u, v in g.edges())
        assert (p.evaluate(c) != 0) == proper


def test_coefficient_matches_dense_expansion():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(3, 7)
        pairs = list(itertools.combinations(range(n), 2))
        g = Graph.from_edges(n, rng.sample(pairs, min(len(pairs), rng.randint(1, 10))))
        full = expand_oracle(g)
        for t in compositions(g.num_edges, [g.degree(v) for v in range(n)]):
            assert coefficient(g, t) == full.get(t, 0) == brute_coefficient(g, t)


def test_sparse_fallback_matches_dense(monkeypatch):
    import sqchoose.poly as poly

    g = build_config("H5.case3.3").coloring_graph()
    t = (2, 4, 2, 4, 3, 2, 3, 2, 2, 3, 2)
    monkeypatch.setattr(poly, "_DENSE_EDGE_LIMIT", 0)
    assert poly.coefficient(g, t) == -3


def test_cn_certificate_pass():
    cfg = build_config("H3")
    cert = cn_certificate(cfg.coloring_graph(), (3, 2, 3, 5, 5, 7, 3, 4, 5, 3, 2), (2, 1, 2, 4, 4, 5, 2, 3, 4, 2, 1))
    assert cert.verdict == "pass" and cert.coefficient == 2


def test_cn_certificate_exponent_too_large():
    with pytest.raises(ExponentExceedsList) as exc:
        cn_certificate(complete_graph(3), (3, 3, 2), (1, 0, 2))
    assert exc.value.exponent == 2 and exc.value.size == 2


def test_cn_certificate_zero_coefficient_fails():
    # odd cycles are not 2-choosable, so the all-ones coefficient of a triangle vanishes
    cert = cn_certificate(cycle_graph(3), (2, 2, 2), (1, 1, 1))
    assert cert.coefficient == 0 and cert.verdict == "fail"


def test_h5_case2_certificate():
    cfg = build_config("H5.case2")
    cert = cn_certificate(cfg.coloring_graph(), cfg.list_sizes, (3, 4, 2, 4, 2, 4, 3, 2, 2, 4, 3))
    assert cert.verdict == "pass" and cert.coefficient == -5


def test_certificate_suites():
    h3 = certificate_suite("reducible-H3")
    assert [c.coefficient for c in h3] == [2, 3, 2, 2, -4, 2, -3, 2]
    h6 = certificate_suite("reducible-H6")
    assert [c.coefficient for c in h6] == [-2, -5, 1, -1, -3]
    assert all(c.verdict == "pass" and c.agreement == "match" for c in h3 + h6)
    with pytest.raises(UnknownLemma):
        certificate_suite("cycle-six")


def test_other_j8_monomials():
    # neighbouring monomials with nonzero coefficient, frozen as regression values
    g = build_config("J8").coloring_graph()
    assert g.num_edges == 17
    assert coefficient(g, (2, 2, 1, 4, 4, 1, 1, 2)) == 1
    assert coefficient(g, (2, 2, 1, 4, 4, 2, 1, 1)) == -1
    assert coefficient(g, (2, 1, 2, 4, 4, 1, 1, 2)) == -1
    assert coefficient(g, (2, 1, 2, 4, 4, 2, 1, 1)) == 1


def test_certificate_record_keys():
    rec = certificate_suite("reducible-H6")[0].as_dict()
    assert list(rec) == ["kind", "lemma", "config", "monomial", "sizes", "coefficient", "verdict"]
