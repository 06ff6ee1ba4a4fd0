import math

import pytest

from hallforge.errors import OutOfRange
from hallforge.families import is_lecture_hall, is_reduced_lh
from hallforge.partition import IncrementVector, Partition, comp_add
from hallforge.trapezoid import (
    factorial_identity_check,
    factorial_product,
    increment,
    skip_order,
    skip_permutation_check,
    trapezoid_number,
    trapezoid_partition,
    triangular_difference,
)


@pytest.mark.parametrize("N, k, expected", [
    (6, 6, 11),
    (7, 6, 22),
    (7, 1, 7),
    (3, 2, 6),
    (6, 4, 21),
])
def test_trapezoid_number(N, k, expected):
    assert trapezoid_number(N, k) == expected


def test_trapezoid_number_range():
    with pytest.raises(OutOfRange):
        trapezoid_number(3, 4)


@pytest.mark.parametrize("N, k, parts", [
    (7, 6, (7, 6, 5, 4)),
    (6, 6, (6, 5)),
    (4, 3, (4, 3, 2, 1)),
    (5, 3, (5, 4, 3, 2, 1)),
    (3, 1, (3,)),
    (3, 2, (3, 2, 1)),
    (3, 3, (3, 2)),
    (1, 1, (1,)),
    (2, 5, ()),
])
def test_trapezoid_partition(N, k, parts):
    assert trapezoid_partition(N, k) == Partition(parts)


@pytest.mark.parametrize("N", range(1, 61))
def test_trapezoid_size_and_quotient(N):
    for k in range(1, N + 1):
        assert trapezoid_partition(N, k).size == trapezoid_number(N, k)
        assert divmod(trapezoid_number(N, k), 2 * k - 1) == (N - k + 1, 0)


@pytest.mark.parametrize("N", range(2, 13))
def test_trapezoid_is_lecture_hall(N):
    for k in range(1, N + 1):
        assert is_lecture_hall(trapezoid_partition(N, k), N)


@pytest.mark.parametrize("N", range(1, 9))
def test_trapezoid_is_never_reduced(N):
    for k in range(1, N + 1):
        assert not is_reduced_lh(trapezoid_partition(N, k), N)


@pytest.mark.parametrize("i, k, entries", [
    (1, 6, (6, 5)),
    (2, 5, (1, 1, 4, 3)),
    (3, 4, (1, 1, 1, 1, 2, 1)),
    (4, 2, (1, 1, 1)),
    (1, 1, (1,)),
    (5, 1, (1,)),
])
def test_increment(i, k, entries):
    assert increment(i, k).stripped() == entries


@pytest.mark.parametrize("k", range(1, 31))
def test_increment_total_is_the_odd_part(k):
    for i in range(1, 31):
        assert increment(i, k).total == 2 * k - 1


@pytest.mark.parametrize("k", range(1, 8))
def test_increments_telescope(k):
    total = IncrementVector()
    for i in range(1, 9):
        total = comp_add(total, increment(i, k))
        assert total.to_partition() == trapezoid_partition(k + i - 1, k)


@pytest.mark.parametrize("n, k, expected", [(5, 1, 15), (5, 5, 5), (6, 6, 6)])
def test_triangular_difference(n, k, expected):
    assert triangular_difference(n, k) == expected


def test_skip_display_at_six():
    report = skip_permutation_check(6)
    assert report.passed
    assert report.details["trapezoidal"] == [6, 15, 20, 21, 18, 11]
    assert sorted(report.details["triangular"]) == sorted([6, 15, 20, 21, 18, 11])


@pytest.mark.parametrize("n", range(1, 61))
def test_skip_multisets_agree(n):
    assert skip_permutation_check(n).passed
    assert sorted(skip_order(n)) == list(range(1, n + 1))


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)])
def test_factorial_values(n, expected):
    assert factorial_product(n) == expected


@pytest.mark.parametrize("n", range(1, 21))
def test_factorial_identity(n):
    report = factorial_identity_check(n)
    assert report.passed
    assert report.details["value"] == math.factorial(n)


def test_factorial_overflow_is_reported():
    report = factorial_identity_check(21)
    assert not report.passed
    assert report.details["overflow"] is True
