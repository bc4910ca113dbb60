"""Weyl groups of types A/B/D in coordinates, and Langlands-style parameters.

A parameter for Spin(2n,C) (family ``D``) or Spin(2n+1,C) (family ``B``) is a
pair of exact vectors (mu, nu) of length n.  mu is the lowest K-type
coordinate, nu the continuous part; the representation is *genuine* (does not
factor through SO) exactly when every mu-entry is strictly half-integral.

The group W acts by permutations and sign flips (an even number of flips in
family D).  Everything here is exact and immutable.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .halfint import frac, is_half_odd, vec


class DimensionError(ValueError):
    """Vector lengths do not match the declared rank."""


@dataclass(frozen=True)
class GroupTag:
    """``D n`` means Spin(2n,C); ``B n`` means Spin(2n+1,C)."""
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("B", "D"):
            raise ValueError(f"family must be 'B' or 'D', got {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class WeylElement:
    """A signed permutation: position j is sent to perm[j], picking up signs[perm[j]]."""
    perm: tuple
    signs: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ValueError("invalid signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1/-1")

    @staticmethod
    def identity(n: int) -> "WeylElement":
        return WeylElement(tuple(range(n)), (1,) * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    def flip_count(self) -> int:
        return sum(1 for s in self.signs if s == -1)

    def inverse(self) -> "WeylElement":
        n = self.n
        inv = [0] * n
        for j, i in enumerate(self.perm):
            inv[i] = j
        signs = tuple(self.signs[self.perm[k]] for k in range(n))
        return WeylElement(tuple(inv), signs)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self o other (apply ``other`` first)."""
        if self.n != other.n:
            raise DimensionError("rank mismatch in composition")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.n))
        signs = tuple(
            self.signs[i] * other.signs[_preimage(self.perm, i)] for i in range(self.n)
        )
        return WeylElement(perm, signs)


def _preimage(perm, i):
    for j, pj in enumerate(perm):
        if pj == i:
            return j
    raise ValueError


def apply(w: WeylElement, v) -> tuple:
    """Entry i of the result is signs[i] * v[perm^{-1}(i)]."""
    v = vec(v)
    if len(v) != w.n:
        raise DimensionError(f"vector of length {len(v)} under rank-{w.n} element")
    out = [None] * w.n
    for j in range(w.n):
        i = w.perm[j]
        out[i] = w.signs[i] * v[j]
    return tuple(out)


@dataclass(frozen=True)
class GenuineParam:
    """Group tag plus the (mu, nu) pair."""
    group: GroupTag
    mu: tuple
    nu: tuple

    def __post_init__(self):
        object.__setattr__(self, "mu", vec(self.mu))
        object.__setattr__(self, "nu", vec(self.nu))
        if len(self.mu) != self.group.rank or len(self.nu) != self.group.rank:
            raise DimensionError(
                f"mu/nu must have length {self.group.rank}, "
                f"got {len(self.mu)}/{len(self.nu)}"
            )

    def is_genuine(self) -> bool:
        return all(is_half_odd(m) for m in self.mu)

    def __str__(self):
        from .halfint import fmt_vec
        return f"{self.group}: mu={fmt_vec(self.mu)}, nu={fmt_vec(self.nu)}"


@dataclass(frozen=True)
class LanglandsPair:
    group: GroupTag
    lambda_l: tuple
    lambda_r: tuple

    def __post_init__(self):
        object.__setattr__(self, "lambda_l", vec(self.lambda_l))
        object.__setattr__(self, "lambda_r", vec(self.lambda_r))
        if len(self.lambda_l) != len(self.lambda_r):
            raise DimensionError("lambda_L and lambda_R must have equal length")


def to_langlands(p: GenuineParam) -> LanglandsPair:
    """(lambda_L, lambda_R) = ((mu+nu)/2, (nu-mu)/2)."""
    lam_l = tuple((m + n) / 2 for m, n in zip(p.mu, p.nu))
    lam_r = tuple((n - m) / 2 for m, n in zip(p.mu, p.nu))
    return LanglandsPair(p.group, lam_l, lam_r)


def from_langlands(lp: LanglandsPair) -> GenuineParam:
    mu = tuple(a - b for a, b in zip(lp.lambda_l, lp.lambda_r))
    nu = tuple(a + b for a, b in zip(lp.lambda_l, lp.lambda_r))
    return GenuineParam(lp.group, mu, nu)


def hermitian_dual(p: GenuineParam) -> GenuineParam:
    """The dual parameter (mu, -nu); an involution for real nu."""
    return GenuineParam(p.group, p.mu, tuple(-x for x in p.nu))


@dataclass(frozen=True)
class DominantForm:
    param: GenuineParam
    weyl: WeylElement
    outer_applied: bool


def dominantize(p: GenuineParam) -> DominantForm:
    """Conjugate so that mu is dominant (sorted non-increasing, entries >= 0).

    For family D only an even number of sign flips is available; when an odd
    number would be needed the diagram flip of the last coordinate is applied
    on top and reported in ``outer_applied``.
    """
    n = p.group.rank
    signs = [1] * n
    for j, m in enumerate(p.mu):
        if m < 0:
            signs[j] = -1
    outer = False
    if p.group.family == "D":
        if sum(1 for s in signs if s == -1) % 2 == 1:
            # leave the flip of smallest |mu| undone; D-dominance allows a
            # single negative last coordinate, removed below by the outer flip
            j_min = min(range(n), key=lambda j: (abs(p.mu[j]), signs[j]))
            if signs[j_min] == -1:
                signs[j_min] = 1
            else:
                signs[j_min] = -1
    flipped_mu = [s * m for s, m in zip(signs, p.mu)]
    order = sorted(range(n), key=lambda j: (-flipped_mu[j],))
    # stable sort: order[i] is the source position landing at slot i
    perm = [0] * n
    out_signs = [1] * n
    for i, j in enumerate(order):
        perm[j] = i
        out_signs[i] = signs[j]
    w = WeylElement(tuple(perm), tuple(out_signs))
    mu2 = apply(w, p.mu)
    nu2 = apply(w, p.nu)
    if p.group.family == "D" and mu2[-1] < 0:
        mu2 = mu2[:-1] + (-mu2[-1],)
        nu2 = nu2[:-1] + (-nu2[-1],)
        outer = True
    return DominantForm(GenuineParam(p.group, mu2, nu2), w, outer)


def _mu_blocks(mu):
    """Runs of equal mu-values as (value, start, stop)."""
    blocks = []
    start = 0
    for i in range(1, len(mu) + 1):
        if i == len(mu) or mu[i] != mu[start]:
            blocks.append((mu[start], start, i))
            start = i
    return blocks


def hermitian_witness(p: GenuineParam):
    """Some w with w mu = mu and w nu = -nu, or None.

    Requires mu dominant.  Within each constant-mu block the nu-multiset is
    matched against its negative; sign flips are available only on zero
    mu-entries (a flip would negate a nonzero entry), and for family D the
    total number of flips must be even.
    """
    n = p.group.rank
    if list(p.mu) != sorted(p.mu, reverse=True):
        raise ValueError("hermitian_witness expects dominant mu")
    perm = [None] * n
    signs = [1] * n
    flips = 0
    free_parity_slot = None
    for value, start, stop in _mu_blocks(p.mu):
        idx = list(range(start, stop))
        by_value = {}
        for i in idx:
            by_value.setdefault(p.nu[i], []).append(i)
        if value != 0:
            # no flips possible: nu restricted to the block must be symmetric
            for v, positions in by_value.items():
                mates = by_value.get(-v, [])
                if len(mates) != len(positions):
                    return None
                for i, j in zip(positions, mates):
                    perm[j] = i  # slot i receives nu[j] = -nu[i]
        else:
            # flips allowed on zero mu-entries: swap +v/-v pairs, flip the rest
            done = set()
            for v, positions in by_value.items():
                if v in done:
                    continue
                done.add(v)
                if v == 0:
                    for i in positions:
                        perm[i] = i
                    free_parity_slot = positions[0]
                    continue
                done.add(-v)
                mates = by_value.get(-v, [])
                k = min(len(positions), len(mates))
                for i, j in zip(positions[:k], mates[:k]):
                    perm[j] = i
                    perm[i] = j
                for i in positions[k:] + mates[k:]:
                    perm[i] = i
                    signs[i] = -1
                    flips += 1
    if p.group.family == "D" and flips % 2 == 1:
        if free_parity_slot is None:
            return None
        signs[free_parity_slot] *= -1
    w = WeylElement(tuple(perm), tuple(signs))
    assert apply(w, p.mu) == p.mu and apply(w, p.nu) == tuple(-x for x in p.nu)
    return w


def is_conjugate(p1: GenuineParam, p2: GenuineParam) -> bool:
    """True iff a single Weyl element carries (mu1, nu1) to (mu2, nu2)."""
    if p1.group != p2.group:
        raise ValueError("parameters live in different groups")
    from collections import Counter
    c1 = Counter(zip(p1.mu, p1.nu))
    c2 = Counter(zip(p2.mu, p2.nu))
    seen = set()
    parity = 0
    has_free = c1[(Fraction(0), Fraction(0))] > 0
    for key in set(c1) | set(c2):
        if key in seen:
            continue
        a, b = key
        mate = (-a, -b)
        seen.add(key)
        seen.add(mate)
        u, v = c1[key], c1[mate]
        u2, v2 = c2[key], c2[mate]
        if u + v != u2 + v2:
            return False
        if key == mate:
            continue
        parity += (u + u2) % 2
    if p1.group.family == "D" and parity % 2 == 1 and not has_free:
        return False
    return True


def rho(group: GroupTag) -> tuple:
    """Half sum of positive roots: D n -> (n-1,...,1,0); B n -> (n-1/2,...,1/2)."""
    n = group.rank
    if group.family == "D":
        return tuple(Fraction(n - 1 - i) for i in range(n))
    return tuple(Fraction(2 * (n - i) - 1, 2) for i in range(n))


def enumerate_weyl(group: GroupTag):
    """All elements of W(B_n) or W(D_n); for tests at small rank only."""
    n = group.rank
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            if group.family == "D" and signs.count(-1) % 2 == 1:
                continue
            yield WeylElement(perm, signs)
