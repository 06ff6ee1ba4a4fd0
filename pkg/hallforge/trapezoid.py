"""
Trapezoidal numbers, trapezoid partitions and the increments built from them.

The trapezoid partition [◇]_{N,k} is the descending run starting at N whose
total is (2k-1)(N-k+1); the increment A_{i,k} is the step between two
consecutive trapezoids of the same k.
"""

import logging
import math
from collections import Counter
from functools import lru_cache

from .errors import OutOfRange
from .partition import INT64_MAX, IncrementVector, Partition, comp_sub
from .protocol import Identity, VerificationReport


logger = logging.getLogger(__name__)


def _check_key(N: int, k: int) -> None:
    if not 1 <= k <= N:
        raise OutOfRange("k", k, f"1 <= k <= N={N}")


def trapezoid_number(N: int, k: int) -> int:
    """◇_{N,k} = (2k-1)(N-k+1)."""
    _check_key(N, k)
    return (2 * k - 1) * (N - k + 1)


def trapezoid_run(N: int, k: int) -> range:
    """The raw descending run for [◇]_{N,k}; its last entry may be 0."""
    if 2 * k <= N:
        end = N - 2 * k + 2
    else:
        end = 2 * k - N - 1
    return range(N, end - 1, -1)


@lru_cache(maxsize=4096)
def trapezoid_partition(N: int, k: int) -> Partition:
    """[◇]_{N,k}; a trailing 0 is dropped and k > N gives short or empty runs."""
    if N < 0 or k < 1:
        raise OutOfRange("(N, k)", (N, k), "N >= 0 and k >= 1")
    return Partition(tuple(x for x in trapezoid_run(N, k) if x > 0))


@lru_cache(maxsize=4096)
def increment(i: int, k: int) -> IncrementVector:
    """A_{i,k} = [◇]_{k+i-1,k} - [◇]_{k+i-2,k}."""
    if i < 1 or k < 1:
        raise OutOfRange("(i, k)", (i, k), "i >= 1 and k >= 1")
    return comp_sub(trapezoid_partition(k + i - 1, k), trapezoid_partition(k + i - 2, k))


def triangular_difference(n: int, k: int) -> int:
    """C(n+1, 2) - C(k, 2)."""
    if not 1 <= k <= n:
        raise OutOfRange("k", k, f"1 <= k <= n={n}")
    return math.comb(n + 1, 2) - math.comb(k, 2)


def skip_order(n: int) -> list[int]:
    """
    Triangular differences rearranged so position k holds ◇_{n,k}.

    For each k the matching difference is the one with C(n+1,2) - C(j,2) equal
    to (2k-1)(n-k+1); the rearrangement is a permutation of 1..n.
    """
    if n < 1:
        raise OutOfRange("n", n, ">= 1")
    by_value = {triangular_difference(n, j): j for j in range(1, n + 1)}
    return [by_value.get(trapezoid_number(n, k), 0) for k in range(1, n + 1)]


def skip_multisets(n: int) -> tuple[Counter, Counter]:
    triangular = Counter(triangular_difference(n, k) for k in range(1, n + 1))
    trapezoidal = Counter(trapezoid_number(n, k) for k in range(1, n + 1))
    return triangular, trapezoidal


def factorial_product(n: int) -> int:
    """
    ∏ (C(n+1,2) - C(k,2)) / (2k-1), evaluated in the skip order.

    In that order every factor is ◇_{n,k}/(2k-1) = n-k+1, so each step is an exact
    integer division and no rational arithmetic is needed.
    """
    order = skip_order(n)
    value = 1
    for k, j in enumerate(order, start=1):
        if j == 0:
            raise ArithmeticError(f"no triangular difference matches ◇_{{{n},{k}}}")
        numerator = triangular_difference(n, j)
        quotient, remainder = divmod(numerator, 2 * k - 1)
        if remainder:
            raise ArithmeticError(f"{numerator} is not divisible by {2 * k - 1}")
        value *= quotient
    logger.debug("factorial product n=%d -> %d", n, value)
    return value


def skip_permutation_check(n: int) -> VerificationReport:
    """{C(n+1,2) - C(k,2)} and {◇_{n,k}} agree as multisets."""
    triangular, trapezoidal = skip_multisets(n)
    passed = triangular == trapezoidal
    counterexample = None
    if not passed:
        counterexample = {
            "only_triangular": sorted((triangular - trapezoidal).elements()),
            "only_trapezoidal": sorted((trapezoidal - triangular).elements()),
        }
    return VerificationReport(
        identity=Identity.SKIP.value,
        params={"n": n},
        passed=passed,
        counterexample=counterexample,
        details={
            "triangular": [triangular_difference(n, k) for k in range(1, n + 1)],
            "trapezoidal": [trapezoid_number(n, k) for k in range(1, n + 1)],
        },
    )


def factorial_identity_check(n: int) -> VerificationReport:
    """∏ (C(n+1,2) - C(k,2)) / (2k-1) = n!, with an int64 overflow check."""
    expected = math.factorial(n)
    try:
        value = factorial_product(n)
    except ArithmeticError as e:
        return VerificationReport(
            identity=Identity.THM_2_1.value,
            params={"n": n},
            passed=False,
            counterexample={"n": n, "error": str(e)},
        )
    overflow = value > INT64_MAX
    passed = value == expected and not overflow
    details = {"value": value, "factorial": expected}
    if overflow:
        details["overflow"] = True
    return VerificationReport(
        identity=Identity.THM_2_1.value,
        params={"n": n},
        passed=passed,
        counterexample=None if passed else {"n": n, "value": value, "factorial": expected},
        details=details,
    )
