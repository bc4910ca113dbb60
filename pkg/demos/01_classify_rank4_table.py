#!/usr/bin/env python3
"""Walk through the classification of every rank-4 parameter of family D.

Each string-pair matrix encodes the half-integral part of a genuine
parameter of Spin(16,C); the staircase inequalities decide unitarity, and
failures are witnessed on an explicit spin-relevant K-type.
"""

from spindual import Status, classify, enumerate_pairs, unitarity_test
from spindual.spinclass import pairs_to_param
from spindual.weyl import to_langlands
from spindual.halfint import fmt_vec

print("All genuine rank-4 parameters of Spin(16,C) with half-integral core:\n")
for pairs in enumerate_pairs("D", 4):
    param = pairs_to_param(pairs)
    verdict = classify(param)
    lp = to_langlands(param)
    if verdict.status is Status.UNITARY:
        strict = unitarity_test(pairs).strict
        label = "unitary (isolated unipotent)" if strict else "unitary"
        extra = ""
        if verdict.certificate.core is not None:
            orbit = verdict.certificate.orbit
            extra = f"  core {verdict.certificate.core} -> orbit {orbit}"
    else:
        label = "NOT unitary"
        w = verdict.witness
        extra = f"  indefinite on eta({w.q}) = {fmt_vec(w.weight)}"
    print(f"{str(pairs):<22} {label}{extra}")
    print(f"{'':<22} lambda_L = {fmt_vec(lp.lambda_l)}")
print("\n9 of the 12 parameters are unitary; the three failures are detected")
print("on the K-types eta(2), eta(3), eta(3).")
