"""Tests for symmetric-function evaluation and the paired-partition family."""

import random
from fractions import Fraction

from punchex.core import Partition, binomial
from punchex.symfun import (
    RabIndex,
    RabPair,
    elementary_sym,
    generate_rab,
    lemma8_check,
    rect_product_decomposition_check,
    schur_bidet,
    schur_eval,
    schur_nk,
    seeded_points,
    vandermonde_product,
)
from punchex.boxcount import macmahon_box


def _expect_value_error(fn, *args):
    try:
        fn(*args)
    except ValueError:
        return
    raise AssertionError(f"expected ValueError from {fn.__name__}{args}")


F = Fraction


# ---------------------------------------------------------------------------
# elementary symmetric polynomials and Schur evaluation
# ---------------------------------------------------------------------------

def test_elementary_sym():
    pts = (F(2), F(3))
    assert elementary_sym(0, pts) == 1
    assert elementary_sym(1, pts) == 5
    assert elementary_sym(2, pts) == 6
    assert elementary_sym(3, pts) == 0
    assert elementary_sym(-1, pts) == 0
    assert elementary_sym(0, ()) == 1
    # e_s(1,...,1) = C(n, s)
    ones = tuple(F(1) for _ in range(6))
    for s in range(0, 7):
        assert elementary_sym(s, ones) == binomial(6, s)


def test_schur_known_values():
    pts = (F(2), F(3))
    assert schur_eval(Partition([1]), pts) == 5
    assert schur_eval(Partition([1, 1]), pts) == 6
    assert schur_eval(Partition([2]), pts) == 19
    assert schur_eval(Partition([2]), (F(1), F(2))) == 7
    assert schur_eval(Partition([2, 1]), (F(1), F(1), F(1))) == 8
    assert schur_eval(Partition([]), pts) == 1
    # more variables than parts: evaluates to 0
    assert schur_eval(Partition([1, 1, 1]), pts) == 0


def test_schur_two_routes_agree():
    rng = random.Random(23)
    for trial in range(40):
        npts = rng.randint(1, 4)
        # distinct points so both evaluators apply
        pool = [F(n, d) for n in range(1, 8) for d in range(1, 5)]
        pts = tuple(rng.sample(sorted(set(pool)), npts))
        parts = sorted((rng.randint(0, 4) for _ in range(rng.randint(0, npts))),
                       reverse=True)
        p = Partition(parts)
        assert schur_nk(p, pts) == schur_bidet(p, pts), (trial, p, pts)


def test_schur_bidet_validation():
    _expect_value_error(schur_bidet, Partition([1]), (F(2), F(2)))
    _expect_value_error(schur_bidet, Partition([1, 1, 1]), (F(2), F(3)))


def test_schur_handles_repeated_and_zero_points():
    # the dual Jacobi-Trudi route has no distinctness requirement
    assert schur_eval(Partition([2, 1]), (F(2), F(2), F(2))) != 0
    # appending a zero variable does not change the value
    p = Partition([2, 1])
    assert schur_eval(p, (F(2), F(3), F(0))) == schur_eval(p, (F(2), F(3)))
    # all-ones principal specialization of a rectangle counts boxed
    # plane partitions
    for (A, B, n) in [(2, 2, 4), (3, 2, 5), (1, 3, 4)]:
        ones = tuple(F(1) for _ in range(n))
        assert schur_eval(Partition([A] * B), ones) == macmahon_box(A, B, n - B)


def test_schur_homogeneity():
    # s_lambda(t*x) = t^|lambda| s_lambda(x)
    p = Partition([3, 1])
    pts = (F(1, 2), F(2), F(5, 3))
    t = F(7, 4)
    scaled = tuple(t * x for x in pts)
    assert schur_eval(p, scaled) == t ** 4 * schur_eval(p, pts)


def test_seeded_points():
    pts = seeded_points(4, 9)
    assert pts == seeded_points(4, 9)
    assert len(pts) == 4 == len(set(pts))
    assert all(1 <= x.numerator <= 13 and 1 <= x.denominator <= 13 for x in pts)
    assert seeded_points(4, 10) != pts


def test_vandermonde_product():
    assert vandermonde_product((F(2),)) == 1
    assert vandermonde_product((F(2), F(3))) == 1
    assert vandermonde_product((F(1), F(2), F(4))) == (2 - 1) * (4 - 1) * (4 - 2)


# ---------------------------------------------------------------------------
# the paired-partition family R(a, b)
# ---------------------------------------------------------------------------

def test_generate_rab_small_golden():
    pairs = generate_rab(1, 1)
    assert len(pairs) == 2
    assert pairs[0].lam == (1, 1) and pairs[0].mu == ()
    assert pairs[1].lam == () and pairs[1].mu == (2,)
    assert pairs[0].source.k == 0 and pairs[0].source.i == (0, 1)
    assert pairs[1].source.k == 1 and pairs[1].source.i == (-1, 0)


def test_generate_rab_counts_and_bounds():
    for a in range(1, 5):
        for b in range(1, 5):
            if a % 2 != b % 2:
                _expect_value_error(generate_rab, a, b)
                continue
            pairs = generate_rab(a, b)
            assert len(pairs) == binomial(a + b, a), (a, b)
            seen = set()
            for pr in pairs:
                key = (pr.lam.parts, pr.mu.parts)
                assert key not in seen
                seen.add(key)
                assert pr.lam.part(1) <= a
                assert pr.mu.part(1) <= a + 1
                assert len(pr.lam) <= b + 1
                assert len(pr.mu) <= b


def test_generate_rab_deterministic():
    once = [(p.lam.parts, p.mu.parts) for p in generate_rab(2, 4)]
    again = [(p.lam.parts, p.mu.parts) for p in generate_rab(2, 4)]
    assert once == again


def test_lemma8_holds_on_generated_pairs():
    for (a, b) in [(1, 1), (2, 2), (1, 3), (3, 1), (3, 3), (2, 4)]:
        assert all(lemma8_check(p) for p in generate_rab(a, b)), (a, b)


def test_lemma8_rejects_corrupted_pair():
    src = RabIndex(1, 1, 0, (0, 1))
    bad = RabPair(Partition([1]), Partition([1]), src)
    assert not lemma8_check(bad)
    # swapping lambda and mu of a valid pair also fails
    good = generate_rab(1, 1)[0]
    swapped = RabPair(good.mu, good.lam, good.source)
    assert not lemma8_check(swapped)


def test_rab_index_validation():
    try:
        RabIndex(1, 1, 0, (1, 0))  # not increasing
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
    try:
        RabIndex(1, 1, 1, (0, 1))  # entry k+1 not zero
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
    try:
        RabIndex(1, 1, 0, (0, 7))  # out of bounds
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


# ---------------------------------------------------------------------------
# rectangular product decomposition
# ---------------------------------------------------------------------------

def test_rect_product_decomposition():
    pts = seeded_points(4, 2)
    assert rect_product_decomposition_check(2, 1, 1, 2, pts)
    assert rect_product_decomposition_check(1, 1, 2, 2, pts)
    assert rect_product_decomposition_check(3, 2, 2, 2, pts)
    assert rect_product_decomposition_check(2, 3, 1, 3, pts)
    _expect_value_error(rect_product_decomposition_check, 1, 1, 3, 2, pts)


def test_rect_product_decomposition_all_ones():
    for n in range(2, 5):
        ones = tuple(F(1) for _ in range(n))
        for s in range(1, 4):
            for t in range(1, 4):
                for m in range(1, n + 1):
                    assert rect_product_decomposition_check(s, t, m, n, ones), (s, t, m, n)
