"""Exact symmetric-function evaluation and the R(a,b) index family.

Schur polynomials are evaluated two independent ways:

* ``schur_nk`` — determinant of elementary symmetric functions over the
  conjugate shape (the "dual" Jacobi-Trudi form).  Division-free, so it
  accepts repeated evaluation points, in particular all-ones
  specializations.
* ``schur_bidet`` — ratio of two alternants det(x_j^(lam_i+n-i)) /
  det(x_j^(n-i)).  Requires pairwise distinct points.

``generate_rab`` produces the family R(a,b) of partition pairs (lambda, mu)
indexed by (k; i_1..i_{a+1}) that the summation identities range over, and
``lemma8_check`` verifies the structural property linking each pair to a
subset of {0..a+b} paired around the midpoint (a+b)/2.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from .core import Partition, conjugate, determinant

# EvalPoint: a tuple of evaluation values x_1..x_n (ints or Fractions).
# Identity checks need pairwise-distinct points only where an alternant
# ratio divides by the Vandermonde; the e-determinant route has no such
# restriction.
EvalPoint = Tuple[Fraction, ...]


def as_points(pts: Iterable) -> EvalPoint:
    return tuple(Fraction(x) for x in pts)


def distinct(pts: Sequence) -> bool:
    return len(set(pts)) == len(pts)


def seeded_points(count: int, seed: int) -> EvalPoint:
    """Deterministic pseudo-random pairwise-distinct positive rationals.

    Numerators and denominators are drawn from 1..13 with
    ``random.Random(seed)``; duplicates are re-drawn.  Fixed seeds make
    every randomized identity check reproducible.
    """
    rng = random.Random(seed)
    out: List[Fraction] = []
    seen = set()
    while len(out) < count:
        x = Fraction(rng.randint(1, 13), rng.randint(1, 13))
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


# ---------------------------------------------------------------------------
# elementary symmetric functions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _elementary_all(pts: EvalPoint) -> Tuple[Fraction, ...]:
    """(e_0, e_1, ..., e_n) at pts, by the one-variable-at-a-time recurrence."""
    e = [Fraction(1)] + [Fraction(0)] * len(pts)
    m = 0
    for x in pts:
        m += 1
        for s in range(m, 0, -1):
            e[s] += x * e[s - 1]
    return tuple(e)


def elementary_sym(s: int, pts: Iterable) -> Fraction:
    """e_s evaluated at pts; e_0 = 1 and e_s = 0 outside 0 <= s <= n."""
    p = as_points(pts)
    if s < 0 or s > len(p):
        return Fraction(0)
    return _elementary_all(p)[s]


# ---------------------------------------------------------------------------
# Schur evaluation
# ---------------------------------------------------------------------------

def schur_nk(p, pts: Iterable) -> Fraction:
    """Schur value via the dual Jacobi-Trudi determinant.

    s_lambda = det( e_{lambda'_i - i + j} )_{1<=i,j<=m} with m = max(1, lambda_1).
    Works at arbitrary (possibly repeated) points; a shape with more rows
    than there are points correctly evaluates to 0.
    """
    lam = p if isinstance(p, Partition) else Partition(p)
    points = as_points(pts)
    m = max(1, lam.part(1))
    lam_c = conjugate(lam)
    ev = _elementary_all(points)
    nmax = len(points)

    def e(s: int) -> Fraction:
        return ev[s] if 0 <= s <= nmax else Fraction(0)

    mat = [[e(lam_c.part(i) - i + j) for j in range(1, m + 1)] for i in range(1, m + 1)]
    return determinant(mat)


def schur_bidet(p, pts: Iterable) -> Fraction:
    """Schur value as a ratio of alternants.

    s_lambda(x_1..x_n) = det(x_j^(lam_i + n - i)) / det(x_j^(n - i)).
    The denominator is the Vandermonde alternant, so the points must be
    pairwise distinct; shapes longer than n are rejected (use schur_nk,
    which returns 0 for them).
    """
    lam = p if isinstance(p, Partition) else Partition(p)
    points = as_points(pts)
    n = len(points)
    if not distinct(points):
        raise ValueError("schur_bidet requires pairwise distinct points")
    if len(lam) > n:
        raise ValueError("schur_bidet requires at least length(lambda) points")
    num = [[points[j] ** (lam.part(i + 1) + n - (i + 1)) for j in range(n)] for i in range(n)]
    den = [[points[j] ** (n - (i + 1)) for j in range(n)] for i in range(n)]
    return determinant(num) / determinant(den)


@lru_cache(maxsize=None)
def _schur_cached(parts: Tuple[int, ...], pts: EvalPoint) -> Fraction:
    lam = Partition(parts)
    if len(lam) > len(pts):
        return Fraction(0)
    if distinct(pts):
        return schur_bidet(lam, pts)
    return schur_nk(lam, pts)


def schur_eval(p, pts: Iterable) -> Fraction:
    """Memoized Schur evaluation: alternant ratio at distinct points,
    e-determinant otherwise (repeated points, e.g. all-ones)."""
    lam = p if isinstance(p, Partition) else Partition(p)
    return _schur_cached(lam.parts, as_points(pts))


def vandermonde_product(pts: Iterable) -> Fraction:
    """Delta(X_n) = prod_{i<j} (x_j - x_i)."""
    p = as_points(pts)
    out = Fraction(1)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            out *= p[j] - p[i]
    return out


# ---------------------------------------------------------------------------
# the index family R(a,b)
# ---------------------------------------------------------------------------

class RabIndex:
    """Index datum (k; i_1..i_{a+1}) with
    -(a+b)/2 <= i_1 < ... < i_k < i_{k+1} = 0 < i_{k+2} < ... <= (a+b)/2.

    k counts the strictly negative entries; a and b are carried along so a
    pair can be checked without outside context.
    """

    __slots__ = ("a", "b", "k", "i")

    def __init__(self, a: int, b: int, k: int, i: Sequence[int]):
        self.a = a
        self.b = b
        self.k = k
        self.i = tuple(i)
        half = (a + b) // 2
        if len(self.i) != a + 1:
            raise ValueError("index vector must have a+1 entries")
        if not 0 <= k <= a:
            raise ValueError("k out of range")
        if self.i[k] != 0:
            raise ValueError("entry k+1 must be 0")
        for t in range(a):
            if self.i[t] >= self.i[t + 1]:
                raise ValueError("index vector must be strictly increasing")
        if self.i[0] < -half or self.i[-1] > half:
            raise ValueError("index vector out of bounds")

    def __repr__(self) -> str:
        return f"RabIndex(a={self.a}, b={self.b}, k={self.k}, i={self.i})"


class RabPair:
    """A pair (lambda, mu) of R(a,b) together with its source index."""

    __slots__ = ("lam", "mu", "source")

    def __init__(self, lam: Partition, mu: Partition, source: RabIndex):
        self.lam = lam
        self.mu = mu
        self.source = source

    def __repr__(self) -> str:
        return f"RabPair(lam={self.lam.parts}, mu={self.mu.parts})"


def _colex_subsets(pool: Sequence[int], k: int):
    """k-subsets of pool (ascending tuples) in colexicographic order."""
    return sorted(combinations(sorted(pool), k), key=lambda s: s[::-1])


def _pair_from_index(idx: RabIndex) -> RabPair:
    a, b, k, i = idx.a, idx.b, idx.k, idx.i
    half_diff = (b - a) // 2
    lam_conj = []
    for h in range(1, a + 1):
        t = a + 1 - h
        if t >= k + 1:
            t += 1
        lam_conj.append(half_diff + i[t - 1] + h)
    mu_conj = [half_diff - i[h - 1] + h - 1 for h in range(1, a + 2)]
    lam = conjugate(Partition(lam_conj))
    mu = conjugate(Partition(mu_conj))
    return RabPair(lam, mu, idx)


def generate_rab(a: int, b: int) -> List[RabPair]:
    """All pairs (lambda, mu) of R(a,b), in a fixed deterministic order.

    Enumeration order: k ascending; for each k the negative entries run
    over k-subsets of {-(a+b)/2..-1} in colex order, then the positive
    entries over (a-k)-subsets of {1..(a+b)/2} in colex order.  The number
    of pairs is sum_k C((a+b)/2, k) * C((a+b)/2, a-k) = C(a+b, a).
    """
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if a % 2 != b % 2:
        raise ValueError("generate_rab requires a and b of equal parity")
    half = (a + b) // 2
    negatives_pool = list(range(-half, 0))
    positives_pool = list(range(1, half + 1))
    out: List[RabPair] = []
    for k in range(0, a + 1):
        if k > half or a - k > half:
            continue
        for negs in _colex_subsets(negatives_pool, k):
            for poss in _colex_subsets(positives_pool, a - k):
                i = tuple(negs) + (0,) + tuple(poss)
                out.append(_pair_from_index(RabIndex(a, b, k, i)))
    return out


def lemma8_check(pair: RabPair) -> bool:
    """Structural check on a pair (lambda, mu) of R(a,b).

    Build J = { lambda_{b+2-h} + h - 1 : h = 1..b+1 } and
          J' = { mu_{b+1-h} + h - 1 : h = 1..b },
    reading parts beyond the length as 0.  The pair passes iff
    (1) (a+b)/2 is an element of J, and
    (2) J' = { a+b-j : j in J, j != (a+b)/2 }.
    """
    a, b = pair.source.a, pair.source.b
    s = (a + b) // 2
    J = [pair.lam.part(b + 2 - h) + h - 1 for h in range(1, b + 2)]
    Jp = [pair.mu.part(b + 1 - h) + h - 1 for h in range(1, b + 1)]
    if len(set(J)) != b + 1 or len(set(Jp)) != b:
        return False
    if s not in J:
        return False
    expected = {a + b - j for j in J if j != s}
    return set(Jp) == expected


# ---------------------------------------------------------------------------
# rectangular-shape product decomposition
# ---------------------------------------------------------------------------

def rect_product_decomposition_check(s: int, t: int, m: int, n: int, pts: Iterable) -> bool:
    """Verify s_{(s^m)} * s_{(t^n)} = sum of s_lambda over the staircase-
    complementary family, evaluated exactly at pts.

    The sum ranges over partitions lambda of length <= m+n with
    lambda_i + lambda_{m+n-i+1} = s+t for i <= m, lambda_m >= max(s,t),
    and lambda_{m+1} = ... = lambda_n = t.  Requires m <= n.
    """
    if m > n:
        raise ValueError("rect_product_decomposition_check requires m <= n")
    points = as_points(pts)
    lhs = schur_eval(Partition([s] * m), points) * schur_eval(Partition([t] * n), points)
    total = Fraction(0)
    lo, hi = max(s, t), s + t
    # weakly decreasing choices for the first m parts, each in [lo, hi]
    from itertools import combinations_with_replacement

    for head_desc in combinations_with_replacement(range(lo, hi + 1), m):
        head = tuple(reversed(head_desc))
        tail_mid = [t] * (n - m)
        tail_end = [s + t - x for x in reversed(head)]
        lam = Partition(list(head) + tail_mid + tail_end)
        total += schur_eval(lam, points)
    return lhs == total
