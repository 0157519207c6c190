import pytest

from sqchoose.catalog import build_config, variants
from sqchoose.coloring import ListAssignment
from sqchoose.errors import DetectionOnly, SizeBound, UnknownLemma
from sqchoose.lemmas import (check_reduction, reduce_third_list, resolve_lemma, verifiable_lemmas, verify_lemma,
                             verify_variant)


def test_aliases_resolve():
    assert resolve_lemma("H3") == "reducible-H3"
    assert resolve_lemma("J8") == "lem-two-4cycle"
    assert resolve_lemma("reducible-H6") == "reducible-H6"


@pytest.mark.parametrize("name", ["F1", "T", "C3-C6", "6-face"])
def test_detection_only(name):
    with pytest.raises(DetectionOnly):
        resolve_lemma(name)


def test_unknown_lemma():
    with pytest.raises(UnknownLemma) as exc:
        verify_lemma("no-such-lemma")
    assert "no-such-lemma" in str(exc.value)


def test_verifiable_lemmas():
    ids = verifiable_lemmas()
    assert len(ids) == 15
    assert "C3-C6" not in ids and "6-face" not in ids


def test_certificate_lemma():
    report = verify_lemma("reducible-H3", trials=2000)
    assert report.ok
    certs = [r for r in report.records if r.mode == "cn-certificate"]
    assert [r.detail["coefficient"] for r in certs] == [2, 3, 2, 2, -4, 2, -3, 2]
    assert [r.variant for r in report.records if r.mode == "sampled"] == ["H3.case2"]


def test_j8_is_settled_by_certificate():
    (rec,) = verify_lemma("J8").records
    assert rec.mode == "cn-certificate" and rec.verdict == "pass" and rec.detail["coefficient"] == 1


def test_exhaustive_lemma():
    report = verify_lemma("J7")
    assert report.ok
    counts = {r.variant: r.detail["assignments"] for r in report.records}
    assert counts == {"J7": 26_101, "J7.a": 217_573}


def test_sampled_lemma_small_run():
    report = verify_lemma("reducible-H2", mode="sampled", trials=500, seed=3)
    assert report.ok
    assert all(r.verdict == "sampled-pass" and r.detail["trials"] == 500 for r in report.records)
    again = verify_lemma("reducible-H2", mode="sampled", trials=500, seed=3)
    assert report.as_dicts() == again.as_dicts()


def test_exhaustive_refuses_large_streams():
    big = next(c for c in variants("reducible-H2"))
    with pytest.raises(SizeBound):
        verify_variant(big, mode="exhaustive")


def test_records_omit_timings_by_default():
    rec = verify_lemma("J8").as_dicts()[0]
    assert "seconds" not in rec
    assert "seconds" in verify_lemma("J8").as_dicts(timings=True)[0]


def test_reduce_third_list_avoids_neighbor():
    lists = ListAssignment.of([{1, 2, 3}, {1, 2, 4}, {1, 2, 3}, {1, 2}, {5, 6, 7}, {1, 5, 6}])
    reduced = reduce_third_list(lists)
    assert reduced[2] < lists[2] and len(reduced[2]) == 2
    assert reduced[2] != lists[3]


def test_reduction_check():
    ok, checked = check_reduction(samples=2000, seed=1)
    assert ok and checked == 2000


def test_j1_constraints_matter():
    cfg = build_config("J1")
    assert cfg.constraints
