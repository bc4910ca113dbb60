#!/usr/bin/env python3
"""Rank-one intertwining scalars and the injectivity bookkeeping.

Moving a signed entry x^e past an ascending step-2 block acts on the
one-dimensional isotypic subspaces by an explicit rational scalar; its zero
and pole are the excluded values of the injectivity predicates.  The replay
engine certifies whole reduction scripts move by move.
"""

from fractions import Fraction as F

from spindual.halfint import fmt_vec
from spindual.intertwine import (
    case_i_script_d, gl_move_scalar, verify_chain, word_scalar, word_action,
    WordSystem,
)

chain = (F(-3, 2), F(1, 2))
print(f"scalar of passing x over the block {fmt_vec(chain)}:")
for x in (F(9, 2), F(-7, 2), F(5, 2)):
    try:
        s = gl_move_scalar(chain, x, False)
        print(f"  x = {x}: scalar {s}"
              + ("  (kernel: move not injective)" if s == 0 else ""))
    except Exception as exc:
        print(f"  x = {x}: pole ({exc})")

print("\nReplaying the single-string reduction for (2; 4) and (4; 2):")
for a, b in [(2, 4), (4, 2)]:
    print(f"  string pair ({a}; {b}):")
    for name, start, script in case_i_script_d(a, b):
        reports = verify_chain(script, start)
        for r in reports:
            mark = "ok  " if r.ok else "FAIL"
            print(f"    [{name}] {mark} {r.description}")

print("\nScalar products agree along different words for one group element:")
system = WordSystem("A2")
nu = (F(3, 7), F(12, 77), F(-4, 11))
w1 = ("s1", "s2", "s1")
w2 = ("s2", "s1", "s2")
print(f"  word {w1}: {word_scalar(system, w1, nu)}")
print(f"  word {w2}: {word_scalar(system, w2, nu)}")
assert word_action(system, w1, nu) == word_action(system, w2, nu)
