import random
from fractions import Fraction as Q
from math import comb, factorial

import pytest

from riordan import exact
from riordan.fps import DomainError, Poly


def test_binom_integer_cases():
    assert exact.binom(5, 2) == 10
    assert exact.binom(-1, 3) == -1
    assert exact.binom(Q(1, 2), 2) == Q(-1, 8)
    assert exact.binom(7, 0) == 1
    assert exact.binom(Q(3, 4), -1) == 0


def test_binom_matches_factorial_formula_for_integers():
    for n in range(0, 12):
        for k in range(0, n + 1):
            assert exact.binom(n, k) == comb(n, k)


def test_binom_pascal_recurrence_random_rational():
    rng = random.Random(7)
    for _ in range(50):
        phi = Q(rng.randint(-20, 20), rng.randint(1, 7))
        for k in range(1, 13):
            assert exact.binom(phi, k) == (exact.binom(phi - 1, k - 1)
                                           + exact.binom(phi - 1, k))


def test_falling_and_rising_values():
    assert exact.falling(3, 2) == 6
    assert exact.falling(Q(1, 2), 2) == Q(-1, 4)
    assert exact.rising(1, 3) == 6
    assert exact.rising(-2, 2) == 2
    assert exact.rising(Q(1, 2), 2) == Q(3, 4)
    assert exact.rising(Q(5, 3), 0) == 1


def test_falling_poly_expansion():
    # x(x-1)(x-2) = 2x - 3x^2 + x^3
    assert exact.falling_poly(3) == Poly([0, 2, -3, 1])
    assert exact.rising_from(1, 2) == Poly([2, 3, 1])


def test_rising_is_signed_falling():
    rng = random.Random(11)
    for _ in range(50):
        phi = Q(rng.randint(-15, 15), rng.randint(1, 5))
        for n in range(0, 11):
            assert exact.rising(phi, n) == Q(-1) ** n * exact.falling(-phi, n)


def _partitions_into_blocks(n, m):
    """Brute-force count of set partitions of {0..n-1} into m blocks."""
    if n == 0:
        return 1 if m == 0 else 0
    count = 0

    def rec(k, blocks):
        nonlocal count
        if len(blocks) > m:
            return
        if k == n:
            if len(blocks) == m:
                count += 1
            return
        for b in blocks:
            b.append(k)
            rec(k + 1, blocks)
            b.pop()
        blocks.append([k])
        rec(k + 1, blocks)
        blocks.pop()

    rec(0, [])
    return count


def test_stirling_small_values():
    assert exact.stirling1(3, 2) == -3
    assert exact.stirling2(3, 2) == _partitions_into_blocks(3, 2) == 3
    for n in range(0, 11):
        assert exact.stirling1(n, n) == 1


def test_stirling2_matches_bruteforce():
    for n in range(0, 7):
        for m in range(0, n + 1):
            assert exact.stirling2(n, m) == _partitions_into_blocks(n, m)


def test_stirling_orthogonality():
    for n in range(0, 11):
        for k in range(0, n + 1):
            total = sum(exact.stirling1(n, m) * exact.stirling2(m, k)
                        for m in range(k, n + 1))
            assert total == (1 if n == k else 0)


def test_stirling_domain_errors():
    with pytest.raises(DomainError):
        exact.stirling1(2, 3)
    with pytest.raises(DomainError):
        exact.stirling2(4, 5)


def test_eulerian_polynomials():
    want = [[1], [0, 1], [0, 1, 1], [0, 1, 4, 1], [0, 1, 11, 11, 1]]
    for n, coeffs in enumerate(want):
        assert exact.eulerian_poly(n) == Poly(coeffs)
        assert exact.eulerian_poly(n).eval(1) == factorial(n)
