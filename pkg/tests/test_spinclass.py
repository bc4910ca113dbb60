"""Tests for string pairs, extraction, the staircase criterion and classify."""

import random
from fractions import Fraction

import pytest

from spindual.glclass import CompParams
from spindual.spinclass import (
    MalformedParameter, Status, StringPairs, classify, decompose_alpha_beta,
    enumerate_pairs, eta_weight, extract_pairs_B, extract_pairs_D,
    pairs_to_param, partition_nt, peel_stein_factors, unitarity_test,
)
from spindual.weyl import GenuineParam, GroupTag, apply, hermitian_dual
from tests.test_weyl import rnd_weyl

F = Fraction
H = F(1, 2)


def halves(*numerators):
    return tuple(F(n, 2) for n in numerators)


def test_partition_nt():
    assert partition_nt(halves(5, 1)) == {H: halves(5, 1)}
    assert partition_nt((F(-5, 2),)) == {-H: (F(-5, 2),)}
    assert partition_nt((F(3), F(0), F(1))) == {
        F(1): (F(3), F(1)), F(0): (F(0),)}


def test_string_pairs_invariants():
    p = StringPairs("D", ((1, 0), (2, 1)))
    assert p.pairs == ((2, 1), (1, 0))  # sorted doubly non-increasing
    assert p.n == 4 and p.k == 2
    with pytest.raises(MalformedParameter):
        StringPairs("D", ((2, 0), (1, 1)))
    with pytest.raises(MalformedParameter):
        StringPairs("D", ((0, 1),))  # family D needs x >= 1
    StringPairs("B", ((0, 1),))
    with pytest.raises(MalformedParameter):
        StringPairs("B", ((2, 0), (0, 1)))  # mixing both zero kinds


def test_extract_pairs_d_examples():
    got = extract_pairs_D(halves(9, 5, 1, -3, -7, 5, 1))
    assert got.pairs == ((3, 2), (2, 0))
    got = extract_pairs_D(halves(5, 1, -3, -7, -11, -15))
    assert got.pairs == ((2, 4),)
    got = extract_pairs_D(halves(13, 9, 5, 1))
    assert got.pairs == ((4, 0),)


def test_extract_pairs_d_malformed():
    with pytest.raises(MalformedParameter):
        extract_pairs_D(halves(-3, -7))  # no string through 1/2
    with pytest.raises(MalformedParameter):
        extract_pairs_D(halves(5))  # bottom above 1/2
    with pytest.raises(MalformedParameter):
        extract_pairs_D((F(1), F(-1)))  # wrong residue


def test_extract_pairs_d_roundtrip():
    for n in range(1, 9):
        for pairs in enumerate_pairs("D", n):
            assert extract_pairs_D(pairs.half_class()) == pairs


def test_decompose_alpha_beta_golden():
    alpha, betas = decompose_alpha_beta(halves(13, 5, 1, -3, -7, -7, -11))
    assert betas == (halves(-11, -7, -3, 1, 5),)
    assert alpha == halves(-7, 13)


def test_extract_pairs_b():
    assert extract_pairs_B(halves(5, 1, -3)).pairs == ((2, 1),)
    assert extract_pairs_B(halves(-3, -7)).pairs == ((0, 2),)
    assert extract_pairs_B(halves(9, 5, 1, 5, 1)).pairs == ((3, 0), (2, 0))
    with pytest.raises(MalformedParameter):
        extract_pairs_B(halves(13, 5, 1, -3, -7, -7, -11))


def test_extract_pairs_b_roundtrip():
    for n in range(1, 9):
        for pairs in enumerate_pairs("B", n):
            assert extract_pairs_B(pairs.half_class()) == pairs


def test_unitarity_test_examples():
    assert unitarity_test(StringPairs("D", ((4, 0),))).strict
    r = unitarity_test(StringPairs("D", ((2, 0), (2, 0))))
    assert not r and r.kind == "gap" and r.index == 1
    r = unitarity_test(StringPairs("B", ((2, 0),)))
    assert not r and r.kind == "column"
    assert unitarity_test(StringPairs("B", ((1, 1),))).strict
    assert unitarity_test(StringPairs("B", ((0, 1),))).strict
    r = unitarity_test(StringPairs("D", ((3, 1),)))
    assert r and r.strict
    r = unitarity_test(StringPairs("D", ((3, 1), (1, 0))))
    assert r and r.strict  # 3 > 1 >= 1 > 0
    r = unitarity_test(StringPairs("D", ((3, 0), (1, 0))))
    assert r and not r.strict  # the gap equality y_1 + 1 = x_2


def test_peel_examples():
    factors, core = peel_stein_factors(StringPairs("D", ((3, 0), (1, 0))))
    assert [f.a for f in factors] == [1]
    assert core.pairs == ((3, 0),)

    factors, core = peel_stein_factors(StringPairs("D", ((2, 2),)))
    assert [f.a for f in factors] == [4] and core is None

    factors, core = peel_stein_factors(StringPairs("D", ((1, 1), (1, 1))))
    assert [f.a for f in factors] == [2, 2] and core is None

    factors, core = peel_stein_factors(StringPairs("B", ((1, 0),)))
    assert [f.a for f in factors] == [1] and core is None

    for f in factors:
        assert isinstance(f, CompParams) and f.t == H and abs(f.t) < 1


def test_peel_size_conservation():
    for fam in ("D", "B"):
        for n in range(1, 7):
            for pairs in enumerate_pairs(fam, n):
                if not unitarity_test(pairs):
                    continue
                factors, core = peel_stein_factors(pairs)
                total = sum(f.a for f in factors) + (core.n if core else 0)
                assert total == n
                if core is not None:
                    assert unitarity_test(core).strict


def test_eta_weight():
    assert eta_weight("D", 4, 2) == (F(3, 2), F(3, 2), H, H)
    assert eta_weight("D", 4, 1) == (F(3, 2), H, H, -H)
    assert eta_weight("B", 3, 2) == (F(3, 2), F(3, 2), H)


# ---------------------------------------------------------------------------
# the classify pipeline

def classify_pairs(fam, cols):
    return classify(pairs_to_param(StringPairs(fam, cols)))


def test_classify_table_rows():
    v = classify_pairs("D", ((4, 0),))
    assert v.status is Status.UNITARY
    assert v.certificate.core.pairs == ((4, 0),)
    assert v.certificate.orbit.cols == (8, 7, 1)

    v = classify_pairs("D", ((2, 1), (1, 0)))
    assert v.status is Status.UNITARY
    assert v.certificate.core.pairs == ((2, 1), (1, 0))
    assert not v.certificate.stein_factors

    v = classify_pairs("D", ((2, 1), (1, 0), (1, 0)))
    assert v.status is Status.UNITARY and v.certificate.stein_factors

    v = classify_pairs("D", ((1, 3),))
    assert v.status is Status.NON_UNITARY and v.witness.q == 3

    v = classify_pairs("B", ((0, 1), (0, 1)))
    assert v.status is Status.NON_UNITARY and v.witness.q == 1

    v = classify_pairs("B", ((2, 0),))
    assert v.status is Status.NON_UNITARY and v.witness.q == 2


def test_classify_not_genuine():
    p = GenuineParam(GroupTag("D", 2), (F(1), F(0)), (F(1), F(0)))
    assert classify(p).status is Status.NOT_GENUINE


def test_classify_not_hermitian():
    p = GenuineParam(GroupTag("D", 2), (H, H), (F(3), F(1)))
    assert classify(p).status is Status.NOT_HERMITIAN


def test_classify_gl_block_failure_lifts():
    # mu-block at 3/2 whose continuous part is a too-wide deformation pair
    mu = (F(3, 2), F(3, 2), H, H)
    nu = (F(5, 2), F(-5, 2), H, -H)
    v = classify(GenuineParam(GroupTag("D", 4), mu, nu))
    assert v.status is Status.NON_UNITARY
    assert v.witness.q is None
    assert v.witness.weight == (F(5, 2), H, H, H)


def test_classify_residue_class_failure():
    # the class t=1/4 holds a pair at shift 9/4: eta(1) on the half block
    mu = (H,) * 4
    nu = (F(9, 4), F(-9, 4), H, -H)
    v = classify(GenuineParam(GroupTag("D", 4), mu, nu))
    assert v.status is Status.NON_UNITARY
    assert v.witness.q == 1
    assert v.witness.weight == (F(3, 2), H, H, -H)


def test_classify_malformed_half_class():
    # half-integral class not of string shape: adjoint witness
    mu = (H,) * 2
    nu = (F(-3, 2), F(3, 2))
    v = classify(GenuineParam(GroupTag("D", 2), mu, nu))
    assert v.status is Status.NON_UNITARY
    assert v.witness.q == 1


def test_classify_unitary_character_class():
    # classes away from +-1/2 made of centered strings: unitary
    mu = (H,) * 3
    nu = (F(2), F(0), F(-2))
    v = classify(GenuineParam(GroupTag("D", 3), mu, nu))
    assert v.status is Status.UNITARY
    assert any(isinstance(f, object) for _, f in v.certificate.gl_factors)


def test_classify_weyl_invariance():
    rng = random.Random(41)
    pool = []
    for fam in ("B", "D"):
        for n in (2, 4, 6):
            pool.extend((fam, p) for p in enumerate_pairs(fam, n // 2))
    count = 0
    while count < 1000:
        fam, pairs = pool[rng.randrange(len(pool))]
        p = pairs_to_param(pairs)
        w = rnd_weyl(rng, p.group.rank, fam)
        q = GenuineParam(p.group, apply(w, p.mu), apply(w, p.nu))
        assert classify(q).status == classify(p).status, (fam, pairs, w)
        count += 1


def test_classify_dual_invariance():
    for fam in ("B", "D"):
        for n in range(1, 5):
            for pairs in enumerate_pairs(fam, n):
                p = pairs_to_param(pairs)
                assert classify(p).status == classify(hermitian_dual(p)).status


def test_witness_parity():
    # family D: odd index for single-column bases, even for gap bases;
    # family B the other way around
    for fam in ("B", "D"):
        for n in range(1, 7):
            for pairs in enumerate_pairs(fam, n):
                if unitarity_test(pairs):
                    continue
                v = classify(pairs_to_param(pairs))
                assert v.status is Status.NON_UNITARY
                assert v.witness is not None, (fam, pairs)
                base = v.normalized.base if v.normalized else None
                kind = type(base).__name__ if base else None
                if fam == "D":
                    assert v.witness.q % 2 == (1 if kind == "CaseI" else 0)
                else:
                    assert v.witness.q % 2 == (0 if kind == "CaseI" else 1)


def test_enumerate_counts_and_order():
    rows = list(enumerate_pairs("D", 4))
    assert len(rows) == 12
    assert rows[0].pairs == ((4, 0),)
    assert [str(r) for r in rows[:3]] == ["(4; 0)", "(3 1; 0 0)", "(3; 1)"]
    assert list(enumerate_pairs("D", 1))[0].pairs == ((1, 0),)
    b1 = [r.pairs for r in enumerate_pairs("B", 1)]
    assert b1 == [((1, 0),), ((0, 1),)]
    for fam in ("B", "D"):
        for n in range(1, 7):
            rows = list(enumerate_pairs(fam, n))
            assert len(set(r.pairs for r in rows)) == len(rows)
            assert all(r.n == n for r in rows)


def test_build_certificate_surface():
    from spindual.spinclass import build_certificate
    cert = build_certificate(StringPairs("D", ((3, 0), (1, 0))))
    assert [f.a for f in cert.stein_factors] == [1]
    assert cert.core.pairs == ((3, 0),)
    assert cert.orbit.cols == (6, 5, 1)
    cert = build_certificate(StringPairs("D", ((2, 2),)))
    assert cert.core is None and cert.orbit is None


def test_witness_direct():
    from spindual.rewriter import normalize_to_base
    from spindual.spinclass import witness
    pairs = StringPairs("D", ((2, 0), (2, 0)))
    w = witness(pairs, normalize_to_base(pairs))
    assert w.q == 2 and w.weight == eta_weight("D", 8, 2)
    pairs = StringPairs("D", ((1, 2), (1, 0)))
    w = witness(pairs, normalize_to_base(pairs))
    assert w.q == 3
    pairs = StringPairs("B", ((2, 0),))
    w = witness(pairs, normalize_to_base(pairs))
    assert w.q == 2 and w.weight == eta_weight("B", 4, 2)


def test_classify_without_half_block():
    # every mu-value above 1/2: pure GL-blocks, no string-pair core
    p = GenuineParam(GroupTag("D", 2), (F(3, 2), F(3, 2)), (H, -H))
    v = classify(p)
    assert v.status is Status.UNITARY
    assert v.certificate.core is None and v.certificate.gl_factors


def test_certificate_reconstitutes_half_class():
    # the strings of the peeled factors plus the core strings recover the
    # half-integral class as a multiset
    from spindual.glclass import comp_nu
    for fam in ("B", "D"):
        for n in range(1, 7):
            for pairs in enumerate_pairs(fam, n):
                if not unitarity_test(pairs):
                    continue
                factors, core = peel_stein_factors(pairs)
                values = list(core.half_class()) if core else []
                for f in factors:
                    # a shift-1/2 factor of size a occupies the string of a
                    # column (s, t) with s + t = a and s - t in {0, 1}
                    from spindual.spinclass import string_of_column
                    s, t = (f.a + 1) // 2, f.a // 2
                    values.extend(string_of_column(s, t))
                assert sorted(values) == sorted(pairs.half_class()), (fam, pairs)


def test_pipeline_matches_staircase_criterion():
    # the full pipeline (doubling, residue classes, extraction) lands on the
    # same verdict as the staircase test applied to the pairs directly
    for fam in ("B", "D"):
        for n in range(1, 7):
            for pairs in enumerate_pairs(fam, n):
                verdict = classify(pairs_to_param(pairs))
                if unitarity_test(pairs):
                    assert verdict.status is Status.UNITARY
                else:
                    assert verdict.status is Status.NON_UNITARY


def test_classify_rank_one():
    p = GenuineParam(GroupTag("D", 1), (H,), (F(0),))
    assert classify(p).status is Status.UNITARY
    p = GenuineParam(GroupTag("B", 1), (H,), (H,))
    # half-class (1/2) is the column (1, 0); its dual class is empty, so the
    # parameter is not Hermitian
    assert classify(p).status is Status.NOT_HERMITIAN
