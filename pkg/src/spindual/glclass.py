"""(Pseudo-)spherical unitary dual of GL(n,C) by chain combinatorics.

A real continuous parameter nu decomposes into *chains*: repeatedly take the
longest strictly-descending subsequence whose consecutive differences lie in
{2, 4, 6, ...} (ties: largest top value, then lexicographically largest).
Equivalently, chains are the multiplicity layers of each residue class mod 2.

The irreducible module attached to nu is unitarily induced from the modules
attached to the chains.  It is unitary exactly when

* every chain is an arithmetic string of step exactly 2 (otherwise the form
  is indefinite at the trivial and adjoint K-types), and
* every chain is either centered at 0 (a one-dimensional character) or pairs
  with its negative as a complementary-series deformation with |shift| < 1
  (Stein's range).

Failures report the K-type shift pattern (1,...,1,0,...,0,-1,...,-1) that
detects indefiniteness, relative to the block's lowest K-type.

The genuine variant carries a +-1 twist on each coordinate (the character
(det/|det|)^{+-1/2} on the corresponding block); chains must then be
constant-twist and pair with matching twist.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .halfint import frac, vec, residue_mod2, fmt, fmt_vec, HALF


class NotHermitianInput(ValueError):
    """The chain system does not pair with its negative."""


@dataclass(frozen=True)
class Chain:
    """A strictly descending run with even positive gaps, carrying a twist.

    ``sign`` is the det^{+-1/2}-twist of the block (+1 for untwisted
    spherical usage).
    """
    values: tuple
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "values", vec(self.values))
        if not self.values:
            raise ValueError("chain must be nonempty")
        for a, b in zip(self.values, self.values[1:]):
            gap = a - b
            if gap <= 0 or gap % 2 != 0:
                raise ValueError(f"invalid chain gap {fmt(gap)} in {fmt_vec(self.values)}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1/-1")

    def __len__(self):
        return len(self.values)

    @property
    def is_string(self) -> bool:
        """All gaps exactly 2 (the attached module is one-dimensional)."""
        return all(a - b == 2 for a, b in zip(self.values, self.values[1:]))

    @property
    def center(self) -> Fraction:
        return sum(self.values, Fraction(0)) / len(self.values)

    @property
    def is_centered(self) -> bool:
        return self.center == 0

    def negated(self) -> "Chain":
        return Chain(tuple(-v for v in reversed(self.values)), self.sign)


@dataclass(frozen=True)
class ChainDecomposition:
    chains: tuple

    def __iter__(self):
        return iter(self.chains)

    def __len__(self):
        return len(self.chains)


def decompose_chains(nu, signs=None) -> ChainDecomposition:
    """Greedy longest-chain decomposition of the multiset nu.

    Within each (residue mod 2, twist) class the k-th chain consists of the
    distinct values of multiplicity >= k, in descending order; this realizes
    the greedy longest-subsequence rule with deterministic tie-breaking.
    """
    nu = vec(nu)
    if signs is None:
        signs = (1,) * len(nu)
    groups = {}
    for v, s in zip(nu, signs):
        key = (residue_mod2(v), s)
        groups.setdefault(key, []).append(v)
    chains = []
    for (res, s), values in groups.items():
        from collections import Counter
        counts = Counter(values)
        k = 1
        while True:
            layer = sorted((v for v, c in counts.items() if c >= k), reverse=True)
            if not layer:
                break
            chains.append(Chain(tuple(layer), s))
            k += 1
    chains.sort(key=lambda c: (-len(c), tuple(-v for v in c.values)))
    return ChainDecomposition(tuple(chains))


def comp_nu(a: int, t) -> tuple:
    """The deformation string (a-1+t, a-3+t, ..., -a+1+t)."""
    if a < 1:
        raise ValueError("a must be a positive integer")
    t = frac(t)
    return tuple(Fraction(a - 1 - 2 * k) + t for k in range(a))


@dataclass(frozen=True)
class CompParams:
    """A complementary-series deformation comp_r(a, t) of GL(2a)."""
    a: int
    t: Fraction
    r: Fraction = HALF

    def __post_init__(self):
        object.__setattr__(self, "t", frac(self.t))
        object.__setattr__(self, "r", frac(self.r))
        if self.a < 1:
            raise ValueError("a must be positive")

    @property
    def is_stein(self) -> bool:
        """Unitary range: |t| < 1 as an exact rational."""
        return abs(self.t) < 1

    @property
    def is_reducible(self) -> bool:
        """Integer |t| >= 1: the endpoint parameter names no irreducible deformation."""
        return self.t.denominator == 1 and abs(self.t) >= 1

    def nu(self) -> tuple:
        return comp_nu(self.a, self.t)


class GLStatus(Enum):
    UNITARY_FACTORS = "UnitaryFactors"
    NON_UNITARY = "NonUnitary"
    NOT_HERMITIAN = "NotHermitian"
    REDUCIBLE = "Reducible"


@dataclass(frozen=True)
class TrivialString:
    """A one-dimensional unitary character factor on GL(a): a centered string."""
    a: int
    twist: int = 1


@dataclass(frozen=True)
class SteinPair:
    """A dual pair of deformed characters on GL(2a) with shift t, |t| < 1."""
    a: int
    t: Fraction
    twist: int = 1


@dataclass(frozen=True)
class GLVerdict:
    status: GLStatus
    factors: tuple = ()
    witness: tuple = None      # shift vector relative to the lowest K-type
    q: int = None              # number of +1 entries in the shift
    reason: str = ""


def _adjoint_shift(n: int) -> tuple:
    return (1,) + (0,) * (n - 2) + (-1,)


def _shift(n: int, q: int) -> tuple:
    return (1,) * q + (0,) * (n - 2 * q) + (-1,) * q


def _classify_chain_system(chains, n: int) -> GLVerdict:
    """Shared classifier: chains must be strings and pair as characters/Stein."""
    # step gaps first: a chain that is not a pure step-2 string is attached to
    # a module that is not one-dimensional
    for c in chains:
        if not c.is_string:
            return GLVerdict(
                GLStatus.NON_UNITARY, witness=_adjoint_shift(n), q=1,
                reason=f"chain {fmt_vec(c.values)} has a gap larger than 2",
            )
    pool = list(chains)
    factors = []
    while pool:
        c = pool.pop(0)
        if c.is_centered:
            factors.append(TrivialString(len(c), c.sign))
            continue
        mate = c.negated()
        match = next(
            (d for d in pool if d.values == mate.values and d.sign == c.sign), None
        )
        if match is None:
            return GLVerdict(
                GLStatus.NOT_HERMITIAN,
                reason=f"chain {fmt_vec(c.values)} has no dual partner",
            )
        pool.remove(match)
        a = len(c)
        t = max(c.center, match.center)
        if abs(t) < 1:
            factors.append(SteinPair(a, t, c.sign))
            continue
        if t.denominator == 1:
            return GLVerdict(
                GLStatus.REDUCIBLE,
                reason=f"integer deformation |t|={fmt(abs(t))} names no irreducible factor",
            )
        q = abs(t).__floor__()
        if q <= a:
            qw = a - q + 1
        else:
            qw = 1
        return GLVerdict(
            GLStatus.NON_UNITARY, witness=_shift(n, qw), q=qw,
            reason=f"deformation pair of size {a} at |t|={fmt(abs(t))} outside the unitary range",
        )
    order = {TrivialString: 0, SteinPair: 1}
    factors.sort(key=lambda f: (order[type(f)], -f.a))
    return GLVerdict(GLStatus.UNITARY_FACTORS, factors=tuple(factors))


def classify_gl(nu, signs=None) -> GLVerdict:
    """Unitarity of the spherical module attached to nu (optionally twisted).

    A constant twist (the pseudo-spherical case) does not affect unitarity.
    Mixed twists are routed through the genuine-block classifier.
    """
    nu = vec(nu)
    if signs is not None and len(set(signs)) > 1:
        return classify_gl_genuine_block(list(zip(nu, signs)))
    if sorted(nu) != sorted(-v for v in nu):
        return GLVerdict(GLStatus.NOT_HERMITIAN, reason="nu is not symmetric under negation")
    chains = decompose_chains(nu)
    return _classify_chain_system(chains.chains, len(nu))


def classify_gl_genuine_block(signed_nu) -> GLVerdict:
    """Classifier for a mixed-twist block: entries are (value, +-1) pairs.

    Chains are formed within constant-twist classes; a chain is a unitary
    factor when centered (a genuine unitary character) or when it pairs with
    its negative at the same twist inside Stein's range.
    """
    values = vec(v for v, _ in signed_nu)
    signs = tuple(s for _, s in signed_nu)
    if any(s not in (1, -1) for s in signs):
        raise ValueError("twists must be +1/-1")
    pairs = sorted(zip(values, signs))
    dual = sorted(zip((-v for v in values), signs))
    if pairs != dual:
        return GLVerdict(GLStatus.NOT_HERMITIAN, reason="signed nu is not symmetric under negation")
    chains = decompose_chains(values, signs)
    return _classify_chain_system(chains.chains, len(values))
