"""Tests for the Weyl-action and parameter layer."""

import random
from fractions import Fraction

import pytest

from spindual.weyl import (
    DimensionError, GenuineParam, GroupTag, WeylElement, apply, dominantize,
    enumerate_weyl, from_langlands, hermitian_dual, hermitian_witness,
    is_conjugate, rho, to_langlands,
)

F = Fraction
H = F(1, 2)


def rnd_weyl(rng, n, family="D"):
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    if family == "D" and signs.count(-1) % 2 == 1:
        signs[0] *= -1
    return WeylElement(tuple(perm), tuple(signs))


def test_apply_examples():
    w = WeylElement.identity(2)
    assert apply(w, (H, -H)) == (H, -H)
    swap = WeylElement((1, 0), (1, 1))
    assert apply(swap, (F(3), F(-3))) == (F(-3), F(3))
    flips = WeylElement((0, 1), (-1, -1))
    assert apply(flips, (H, H)) == (-H, -H)


def test_apply_length_mismatch():
    with pytest.raises(DimensionError):
        apply(WeylElement.identity(2), (F(1),))


def test_apply_is_group_action():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 8)
        w1, w2 = rnd_weyl(rng, n), rnd_weyl(rng, n)
        v = tuple(F(rng.randint(-9, 9), rng.choice((1, 2))) for _ in range(n))
        assert apply(w1.compose(w2), v) == apply(w1, apply(w2, v))
        assert apply(w1.compose(w1.inverse()), v) == v
        assert apply(w1.inverse(), apply(w1, v)) == v


def test_dominantize_examples():
    p = GenuineParam(GroupTag("D", 4), (H, H, H, H), (F(5, 2), F(5, 2), H, H))
    dom = dominantize(p)
    assert dom.param == p and not dom.outer_applied

    p = GenuineParam(GroupTag("D", 2), (H, -H), (F(1), F(2)))
    dom = dominantize(p)
    assert dom.param.mu == (H, H)
    assert dom.param.nu == (F(1), F(-2))
    assert dom.outer_applied

    p = GenuineParam(GroupTag("D", 4), (H, F(3, 2), H, H), (F(1), F(2), F(3), F(4)))
    dom = dominantize(p)
    assert dom.param.mu == (F(3, 2), H, H, H)
    assert dom.param.nu == (F(2), F(1), F(3), F(4))


def test_dominantize_idempotent_and_conjugate():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 6)
        fam = rng.choice(("B", "D"))
        mu = tuple(rng.choice((1, -1)) * F(2 * rng.randint(1, 3) - 1, 2)
                   for _ in range(n))
        nu = tuple(F(rng.randint(-6, 6), rng.choice((1, 2))) for _ in range(n))
        p = GenuineParam(GroupTag(fam, n), mu, nu)
        dom = dominantize(p)
        again = dominantize(dom.param)
        assert again.param == dom.param and not again.outer_applied
        mus = list(dom.param.mu)
        assert mus == sorted(mus, reverse=True) and all(m > 0 for m in mus)
        if not dom.outer_applied:
            assert is_conjugate(p, dom.param)


def test_langlands_roundtrip_golden():
    # assembled from string pairs (4; 0): the classification-table row
    mu = (H,) * 8
    nu = (F(13, 2), F(9, 2), F(5, 2), H, -H, F(-5, 2), F(-9, 2), F(-13, 2))
    lp = to_langlands(GenuineParam(GroupTag("D", 8), mu, nu))
    assert lp.lambda_l == (F(7, 2), F(5, 2), F(3, 2), H, F(0), F(-1), F(-2), F(-3))
    assert lp.lambda_r == (F(3), F(2), F(1), F(0), -H, F(-3, 2), F(-5, 2), F(-7, 2))


def test_langlands_roundtrip_random():
    rng = random.Random(3)
    for _ in range(10_000):
        n = rng.randint(1, 6)
        fam = rng.choice(("B", "D"))
        mu = tuple(F(2 * rng.randint(-3, 3) + 1, 2) for _ in range(n))
        nu = tuple(F(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(n))
        p = GenuineParam(GroupTag(fam, n), mu, nu)
        assert from_langlands(to_langlands(p)) == p


def test_hermitian_dual():
    p = GenuineParam(GroupTag("D", 2), (H, H), (F(5, 2), H))
    assert hermitian_dual(p).nu == (F(-5, 2), -H)
    assert hermitian_dual(hermitian_dual(p)) == p
    # a doubled parameter is conjugate to its dual
    mu = (H,) * 4
    nu = (F(5, 2), H, -H, F(-5, 2))
    q = GenuineParam(GroupTag("D", 4), mu, nu)
    assert is_conjugate(q, hermitian_dual(q))


def test_hermitian_witness_examples():
    p = GenuineParam(GroupTag("D", 2), (H, H), (F(3), F(-3)))
    w = hermitian_witness(p)
    assert w is not None and apply(w, p.nu) == (F(-3), F(3))
    p = GenuineParam(GroupTag("D", 2), (H, H), (F(3), F(1)))
    assert hermitian_witness(p) is None
    p = GenuineParam(GroupTag("B", 3), (F(3, 2), H, H), (F(0), F(0), F(0)))
    w = hermitian_witness(p)
    assert w is not None


def _brute_witness(p):
    for w in enumerate_weyl(p.group):
        if apply(w, p.mu) == p.mu and apply(w, p.nu) == tuple(-x for x in p.nu):
            return w
    return None


def test_hermitian_witness_vs_bruteforce():
    rng = random.Random(19)
    for _ in range(150):
        n = rng.randint(1, 4)
        fam = rng.choice(("B", "D"))
        mu = sorted(
            (rng.choice((F(0), H, H, F(3, 2))) for _ in range(n)), reverse=True
        )
        pool = [F(0), H, -H, F(1), F(-1), F(3), F(-3)]
        nu = tuple(rng.choice(pool) for _ in range(n))
        p = GenuineParam(GroupTag(fam, n), tuple(mu), nu)
        got = hermitian_witness(p)
        want = _brute_witness(p)
        assert (got is None) == (want is None), p
        if got is not None:
            assert apply(got, p.mu) == p.mu
            assert apply(got, p.nu) == tuple(-x for x in p.nu)
            if fam == "D":
                assert got.flip_count() % 2 == 0


def _brute_conjugate(p1, p2):
    for w in enumerate_weyl(p1.group):
        if apply(w, p1.mu) == p2.mu and apply(w, p1.nu) == p2.nu:
            return True
    return False


def test_is_conjugate_examples():
    g = GroupTag("D", 2)
    p = GenuineParam(g, (H, H), (F(1), F(2)))
    assert is_conjugate(p, GenuineParam(g, (H, H), (F(2), F(1))))
    assert not is_conjugate(p, GenuineParam(g, (H, H), (F(1), F(3))))
    p = GenuineParam(GroupTag("D", 3), (H, F(3, 2), H), (F(1), F(2), F(3)))
    assert is_conjugate(p, dominantize(p).param)


def test_is_conjugate_vs_bruteforce():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(1, 3)
        fam = rng.choice(("B", "D"))
        g = GroupTag(fam, n)
        pool_mu = [F(0), H, -H, F(3, 2)]
        pool_nu = [F(0), F(1), F(-1), F(2)]
        p1 = GenuineParam(g, tuple(rng.choice(pool_mu) for _ in range(n)),
                          tuple(rng.choice(pool_nu) for _ in range(n)))
        p2 = GenuineParam(g, tuple(rng.choice(pool_mu) for _ in range(n)),
                          tuple(rng.choice(pool_nu) for _ in range(n)))
        assert is_conjugate(p1, p2) == _brute_conjugate(p1, p2), (p1, p2)


def test_rho():
    assert rho(GroupTag("D", 4)) == (F(3), F(2), F(1), F(0))
    assert rho(GroupTag("B", 2)) == (F(3, 2), H)
