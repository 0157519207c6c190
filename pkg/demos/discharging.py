"""Charges on small cubic plane graphs and the local face-case minima."""

import random

from sqchoose.discharging import (apply_rules, check_hypotheses, initial_charges, local_minimum,
                                  random_cubic_embedding)
from sqchoose.errors import HypothesisViolation
from sqchoose.graph import builtin_embeddings

for name, pg in builtin_embeddings().items():
    ledger = apply_rules(pg, initial_charges(pg))
    try:
        check_hypotheses(pg)
        verdict = "satisfies every hypothesis"
    except HypothesisViolation as exc:
        verdict = f"excluded by {exc.reason}"
    print(f"{name:<13} faces={sorted(pg.face_lengths())}  total={ledger.final_total()}  {verdict}")

rng = random.Random(1)
pg = random_cubic_embedding(15, rng)
ledger = apply_rules(pg, initial_charges(pg))
print(f"random embedding: n={pg.graph.n}, {len(ledger.transfers)} transfers, total {ledger.final_total()}")

for d in range(3, 14):
    m = local_minimum(d)
    shown = "-" if m.minimum is None else m.minimum
    print(f"d={d:<2} cases={m.cases:<5} minimum={shown}")
