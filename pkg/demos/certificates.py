"""Recompute the coefficient certificates and show what one of them proves."""

from sqchoose.catalog import build_config
from sqchoose.coloring import check_choosability
from sqchoose.poly import certificate_suite, coefficient

for lemma in ("reducible-H3", "reducible-H6"):
    print(lemma)
    for cert in certificate_suite(lemma):
        print(f"  {cert.config:<14} t={' '.join(map(str, cert.monomial))}  coefficient={cert.coefficient:>3}  {cert.verdict}")

# a nonzero coefficient with t_v < |L(v)| settles every list assignment at once;
# the small J7 case can also be enumerated outright, which gives the same answer the slow way
j7 = build_config("J7")
v = check_choosability(j7.coloring_graph(), j7.list_sizes, j7.constraint_indices())
print(f"J7 by enumeration: {v.status} over {v.checked} canonical assignments")

j8 = build_config("J8")
print(f"J8 coefficient at {j8.monomial}: {coefficient(j8.coloring_graph(), j8.monomial)}")
