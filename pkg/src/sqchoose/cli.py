"""Command-line front end."""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

from .catalog import build_config, export_catalog
from .coloring import DEFAULT_SEED, DEFAULT_TRIALS
from .discharging import enumerate_local_cases, local_minimum, verify_graph_discharge
from .errors import HypothesisViolation, SqchooseError
from .formats import read_planar_code
from .lemmas import verify_lemma
from .poly import CN_LEMMAS, certificate_suite, coefficient
from .report import dumps
from .scan import default_jobs, scan_graph6, summary_table
from .suite import SUITES, run_suite


@contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _parse_monomial(text: list[str]) -> tuple[int, ...]:
    return tuple(int(tok) for part in text for tok in part.replace(",", " ").split())


def cmd_coeff(args, out) -> int:
    cfg = build_config(args.config)
    t = _parse_monomial(args.monomial)
    c = coefficient(cfg.coloring_graph(), t)
    out.write(dumps({"kind": "coefficient", "config": cfg.name, "monomial": list(t), "coefficient": c}) + "\n")
    return 0


def cmd_certify(args, out) -> int:
    from .lemmas import ALIASES

    lemma = ALIASES.get(args.lemma, args.lemma)
    if lemma not in CN_LEMMAS:
        from .errors import UnknownLemma

        raise UnknownLemma(args.lemma)
    certs = certificate_suite(lemma)
    for cert in certs:
        out.write(dumps(cert.as_dict()) + "\n")
    return 0 if all(c.verdict == "pass" for c in certs) else 1


def cmd_lemma(args, out) -> int:
    report = verify_lemma(args.id, args.mode, args.trials, args.seed)
    for rec in report.as_dicts(args.timings):
        out.write(dumps(rec) + "\n")
    return 0 if report.ok else 1


def cmd_discharge(args, out) -> int:
    if args.graph:
        with open(args.graph, "rb") as fh:
            graphs = read_planar_code(fh.read())
        status = 0
        for i, pg in enumerate(graphs, start=1):
            try:
                rep = verify_graph_discharge(pg)
                rec = {"kind": "discharge", "index": i, "violation": None, "negative_faces": list(rep.negative),
                       "total": str(rep.total), "message": rep.message}
                if rep.negative:
                    status = 1
            except HypothesisViolation as exc:
                rec = {"kind": "discharge", "index": i, "violation": exc.reason,
                       "witness": exc.witness if isinstance(exc.witness, (dict, int)) else None}
            out.write(dumps(rec) + "\n")
        return status
    ds = [args.local] if args.local is not None else list(range(3, 13))
    status = 0
    for d in ds:
        if args.cases:
            for case in enumerate_local_cases(d):
                out.write(dumps(case.as_dict()) + "\n")
        lm = local_minimum(d)
        out.write(dumps(lm.as_dict()) + "\n")
        if lm.minimum is not None and lm.minimum < 0:
            status = 1
    return status


def cmd_scan(args, out) -> int:
    with open(args.file, "rb") as fh:
        lines = fh.read().splitlines()
    records = list(scan_graph6(lines, jobs=args.jobs))
    if args.summary:
        out.write(summary_table(records))
    else:
        for rec in records:
            out.write(dumps(rec.as_dict(args.timings)) + "\n")
    return 0


def cmd_suite(args, out) -> int:
    result = run_suite(args.name, timings=args.timings)
    for rec in result.records:
        out.write(dumps(rec) + "\n")
    if result.failures:
        print(f"first failure: {result.failures[0]}", file=sys.stderr)
    return result.exit_code


def cmd_catalog(args, out) -> int:
    out.write(export_catalog())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sqchoose", description="Checks for 7-choosability of squares of subcubic planar graphs without 5-cycles.")
    p.add_argument("--out", help="report file (default: standard output)")
    p.add_argument("--timings", action="store_true", help="add wall times to records (breaks byte-identical reruns)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("coeff", help="coefficient of a monomial in a configuration's graph polynomial")
    s.add_argument("config")
    s.add_argument("monomial", nargs="+", help="exponents, space or comma separated")
    s.set_defaults(func=cmd_coeff)

    s = sub.add_parser("certify", help="recompute every stored certificate of a lemma")
    s.add_argument("lemma")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("lemma", help="verify every case variant of a lemma")
    s.add_argument("id")
    s.add_argument("--mode", choices=("exhaustive", "sampled"))
    s.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_lemma)

    s = sub.add_parser("discharge", help="local face cases, or discharging on embedded graphs")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--local", type=int, metavar="D")
    g.add_argument("--graph", metavar="FILE.pc")
    s.add_argument("--cases", action="store_true", help="list every local case, not just the minimum")
    s.set_defaults(func=cmd_discharge)

    s = sub.add_parser("scan", help="scan a graph6 corpus for chi(G^2) <= 7")
    s.add_argument("file")
    s.add_argument("--jobs", type=int, default=default_jobs())
    s.add_argument("--summary", action="store_true")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("suite", help="run a named suite")
    s.add_argument("name", choices=SUITES)
    s.set_defaults(func=cmd_suite)

    s = sub.add_parser("catalog", help="export the configuration catalog")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with _output(args.out) as out:
            return args.func(args, out)
    except SqchooseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
