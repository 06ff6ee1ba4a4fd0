"""
Membership tests and exhaustive enumerators for the four partition families of width N:

    L_N    lecture hall partitions       mu_1/N >= mu_2/(N-1) >= ...
    RL_N   reduced lecture hall          no single part can lose N-i+1 and stay in L_N
    OP_N   N-party odd partitions        odd parts <= 2N-1
    ROP_N  reduced N-party odd           additionally m_{2k-1} <= N-k

All ratio comparisons are cross-multiplied integers.
"""

import logging
import threading
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .errors import NotLectureHall, OutOfRange, SizeTooLarge, WidthTooLarge
from .partition import IncrementVector, Partition, canonical_order
from .protocol import Family


logger = logging.getLogger(__name__)

MAX_WIDTH = 9
MAX_SIZE = 200


def check_width(N: int, limit: int = MAX_WIDTH) -> None:
    if N < 1:
        raise OutOfRange("N", N, ">= 1")
    if N > limit:
        raise WidthTooLarge(N, limit)


def check_size(nmax: int, limit: int = MAX_SIZE) -> None:
    if nmax < 0:
        raise OutOfRange("nmax", nmax, ">= 0")
    if nmax > limit:
        raise SizeTooLarge(nmax, limit)


def _entries(mu) -> tuple[int, ...]:
    if isinstance(mu, Partition):
        return mu.parts
    if isinstance(mu, IncrementVector):
        return mu.stripped()
    return IncrementVector(tuple(mu)).stripped()


def _chain_holds(entries: tuple[int, ...], N: int) -> bool:
    for index in range(len(entries) - 1):
        # mu_j / (N-j+1) >= mu_{j+1} / (N-j) with j = index + 1
        if entries[index] * (N - index - 1) < entries[index + 1] * (N - index):
            return False
    return True


def is_lecture_hall(mu, N: int) -> bool:
    """
    Ratio-chain membership for any integer sequence.

    Trailing zeros are ignored; a negative entry, an interior zero or more than N
    entries means the sequence is not in L_N.
    """
    if N < 1:
        raise OutOfRange("N", N, ">= 1")
    entries = _entries(mu)
    if len(entries) > N:
        return False
    if any(x <= 0 for x in entries):
        return False
    return _chain_holds(entries, N)


def is_reduced_lh(mu, N: int) -> bool:
    entries = _entries(mu)
    if not is_lecture_hall(entries, N):
        raise NotLectureHall(mu, N)
    for index in range(len(entries)):
        perturbed = list(entries)
        perturbed[index] -= N - index
        if is_lecture_hall(perturbed, N):
            return False
    return True


def is_odd_party(lam: Partition, N: int) -> bool:
    return all(p % 2 == 1 and p <= 2 * N - 1 for p in lam.parts)


def is_reduced_odd(lam: Partition, N: int) -> bool:
    if not is_odd_party(lam, N):
        return False
    return all(count <= N - (part + 1) // 2 for part, count in lam.multiplicities.items())


def max_reduced_size(N: int) -> int:
    """Largest size in RL_N (and ROP_N): Σ_k (2k-1)(N-k)."""
    return sum((2 * k - 1) * (N - k) for k in range(1, N + 1))


# Reduced families

_reduced_lock = threading.Lock()


@lru_cache(maxsize=None)
def _reduced_lh_tuples(N: int) -> tuple[tuple[int, ...], ...]:
    if N == 0:
        return ((),)
    result = []
    for tail in _reduced_lh_tuples(N - 1):
        if tail:
            # least head with head/N >= tail_1/(N-1)
            least = -(-tail[0] * N // (N - 1))
        else:
            # head 0 stands for "no new part"
            least = 0
        for head in range(least, least + N):
            result.append((head,) + tail if head else tail)
    return tuple(result)


def enumerate_reduced_lh(N: int) -> frozenset[Partition]:
    """RL_N by recursion on the tail: each tail in RL_{N-1} takes N consecutive heads."""
    check_width(N)
    with _reduced_lock:
        tuples = _reduced_lh_tuples(N)
    logger.debug("RL_%d: %d elements", N, len(tuples))
    return frozenset(Partition(t) for t in tuples)


def enumerate_reduced_lh_by_filter(N: int) -> frozenset[Partition]:
    """RL_N as the reduced members of L_N up to the maximal reduced size."""
    return frozenset(
        mu for mu in enumerate_lh_up_to(N, max_reduced_size(N)) if is_reduced_lh(mu, N)
    )


def iter_reduced_odd(N: int) -> Iterator[Partition]:
    ranges = [range(N - k + 1) for k in range(1, N + 1)]
    for counts in product(*ranges):
        yield Partition.from_multiplicities(
            {2 * k - 1: m for k, m in enumerate(counts, start=1) if m}
        )


def enumerate_reduced_odd(N: int) -> frozenset[Partition]:
    """ROP_N as the direct product of multiplicity ranges m_{2k-1} in [0, N-k]."""
    check_width(N)
    return frozenset(iter_reduced_odd(N))


# Size-truncated families

def _extend_lh(prefix: list[int], N: int, budget: int) -> Iterator[tuple[int, ...]]:
    yield tuple(prefix)
    j = len(prefix)
    if j >= N:
        return
    if j == 0:
        bound = budget
    else:
        bound = min(budget, prefix[-1] * (N - j) // (N - j + 1))
    for part in range(1, bound + 1):
        prefix.append(part)
        yield from _extend_lh(prefix, N, budget - part)
        prefix.pop()


def iter_lh_up_to(N: int, nmax: int) -> Iterator[Partition]:
    check_width(N)
    check_size(nmax)
    for parts in _extend_lh([], N, nmax):
        yield Partition(parts)


def enumerate_lh_up_to(N: int, nmax: int) -> frozenset[Partition]:
    """Every mu in L_N with |mu| <= nmax, by depth-first extension along the chain."""
    return frozenset(iter_lh_up_to(N, nmax))


def _extend_odd(prefix: list[int], largest: int, budget: int) -> Iterator[tuple[int, ...]]:
    yield tuple(prefix)
    top = min(largest, budget)
    for part in range(top if top % 2 else top - 1, 0, -2):
        prefix.append(part)
        yield from _extend_odd(prefix, part, budget - part)
        prefix.pop()


def iter_op_up_to(N: int, nmax: int) -> Iterator[Partition]:
    check_width(N)
    check_size(nmax)
    for parts in _extend_odd([], 2 * N - 1, nmax):
        yield Partition(parts)


def enumerate_op_up_to(N: int, nmax: int) -> frozenset[Partition]:
    """Every lam in OP_N with |lam| <= nmax."""
    return frozenset(iter_op_up_to(N, nmax))


def iter_partitions_up_to(nmax: int, max_length: int | None = None,
                          max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of size <= nmax, optionally bounded in length and largest part."""
    def extend(prefix: list[int], largest: int, budget: int):
        yield tuple(prefix)
        if max_length is not None and len(prefix) >= max_length:
            return
        for part in range(min(largest, budget), 0, -1):
            prefix.append(part)
            yield from extend(prefix, part, budget - part)
            prefix.pop()

    top = nmax if max_part is None else min(nmax, max_part)
    for parts in extend([], top, nmax):
        yield Partition(parts)


def enumerate_family(family: Family | str, N: int, max_size: int | None = None) -> list[Partition]:
    """Members of a family in canonical order; L_N and OP_N need a size bound."""
    family = Family(family)
    if family is Family.REDUCED_LECTURE_HALL:
        items: Iterable[Partition] = enumerate_reduced_lh(N)
    elif family is Family.REDUCED_ODD_PARTY:
        items = enumerate_reduced_odd(N)
    elif max_size is None:
        raise OutOfRange("max-size", None, f"an explicit bound for family {family.value}")
    elif family is Family.LECTURE_HALL:
        items = enumerate_lh_up_to(N, max_size)
    else:
        items = enumerate_op_up_to(N, max_size)
    if max_size is not None:
        items = [lam for lam in items if lam.size <= max_size]
    return canonical_order(items)


__all__ = [
    "MAX_WIDTH",
    "MAX_SIZE",
    "is_lecture_hall",
    "is_reduced_lh",
    "is_odd_party",
    "is_reduced_odd",
    "max_reduced_size",
    "enumerate_reduced_lh",
    "enumerate_reduced_lh_by_filter",
    "enumerate_reduced_odd",
    "enumerate_lh_up_to",
    "enumerate_op_up_to",
    "enumerate_family",
]
