"""Scan a handful of small graphs for chi(G^2) <= 7."""

from sqchoose.scan import scan_corpus, smoke_corpus, summary_table

corpus = smoke_corpus()
print("  ".join(f"{i}={name}" for i, name in enumerate(corpus, start=1)))
print(summary_table(scan_corpus(corpus.values())), end="")
