"""Named suites bundling the certificate, lemma and discharging checks into one report."""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import build_config
from .coloring import check_choosability
from .discharging import check_hypotheses, local_minimum
from .errors import HypothesisViolation, SqchooseError
from .graph import builtin_embeddings
from .lemmas import check_reduction, verifiable_lemmas, verify_lemma
from .poly import CN_LEMMAS, certificate_suite

SUITES = ("certificates", "lemmas", "discharging", "all")
LOCAL_RANGE = range(3, 13)


@dataclass
class SuiteResult:
    records: list[dict]
    failures: list[str]

    @property
    def exit_code(self) -> int:
        return 0 if not self.failures else 1


def _certificates(out: SuiteResult) -> None:
    for lemma in CN_LEMMAS:
        for cert in certificate_suite(lemma):
            out.records.append(cert.as_dict())
            if cert.verdict != "pass" or cert.agreement == "magnitude":
                out.failures.append(f"certificate {cert.config}")


def _lemmas(out: SuiteResult, timings: bool) -> None:
    for lemma in verifiable_lemmas():
        report = verify_lemma(lemma)
        for rec in report.records:
            out.records.append(rec.as_dict(timings))
            if not rec.ok:
                out.failures.append(f"lemma {rec.variant}")
    # exploratory: J1 without its list condition; reported, never a failure
    j1 = build_config("J1")
    v = check_choosability(j1.coloring_graph(), j1.list_sizes, (), "exhaustive")
    rec = {"kind": "exploratory", "variant": "J1.unconstrained", "verdict": v.status, "assignments": v.checked}
    if v.witness is not None:
        rec["witness"] = str(v.witness)
    out.records.append(rec)
    ok, n = check_reduction()
    out.records.append({"kind": "reduction", "from": "cycle-six", "to": "cycle-six-original",
                        "samples": n, "verdict": "holds" if ok else "fails"})
    if not ok:
        out.failures.append("reduction cycle-six -> cycle-six-original")


def _discharging(out: SuiteResult) -> None:
    for d in LOCAL_RANGE:
        lm = local_minimum(d)
        out.records.append(lm.as_dict())
        if lm.minimum is not None and lm.minimum < 0:
            out.failures.append(f"local minimum d={d}")
    for name, pg in builtin_embeddings().items():
        try:
            check_hypotheses(pg)
            rec = {"kind": "hypotheses", "graph": name, "violation": None}
        except HypothesisViolation as exc:
            rec = {"kind": "hypotheses", "graph": name, "violation": exc.reason}
        out.records.append(rec)


def run_suite(name: str, timings: bool = False) -> SuiteResult:
    """Run a suite; exit code 0 iff every exact check passes and every sampled check is a sampled-pass."""
    if name not in SUITES:
        raise SqchooseError(f"unknown suite {name}; choose from {', '.join(SUITES)}")
    out = SuiteResult([], [])
    if name in ("certificates", "all"):
        _certificates(out)
    if name in ("lemmas", "all"):
        _lemmas(out, timings)
    if name in ("discharging", "all"):
        _discharging(out)
    out.records.append({"kind": "summary", "suite": name, "records": len(out.records),
                        "failures": out.failures, "status": "pass" if not out.failures else "fail"})
    return out
