#!/usr/bin/env python3
"""Rewriting a parameter by complementary-series induction.

Inserting a shift-1/2 factor of size a adds the column (a; a) to the
string-pair matrix, with both rows re-sorting.  Repeated insertions drive
any matrix onto a staircase; keeping the leftmost staircase violation fixed
instead isolates a minimal non-unitarity core, whose known indefinite
K-type becomes the witness for the original parameter.
"""

from spindual import classify, full_staircase, normalize_to_base
from spindual.spinclass import StringPairs, pairs_to_param

print("Full staircase rewriting of (5 4 4; 2 2 0):")
steps, final = full_staircase(StringPairs("D", ((5, 2), (4, 2), (4, 0))))
for s in steps:
    print(f"  {s}")
print(f"  induced sizes: {[s.label for s in steps]}\n")

print("Normalizing violated parameters onto a base block:")
for fam, cols in [("D", ((1, 2), (1, 0))), ("D", ((2, 0), (2, 0))),
                  ("B", ((0, 1), (0, 1))), ("D", ((1, 2), (1, 2)))]:
    pairs = StringPairs(fam, cols)
    nb = normalize_to_base(pairs)
    verdict = classify(pairs_to_param(pairs))
    print(f"  {fam} {pairs}: base {nb.base}, staircase columns {nb.stein_columns},"
          f" witness eta({verdict.witness.q})")
