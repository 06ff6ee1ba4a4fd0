"""
The growth map from N-party odd partitions to lecture hall partitions of width N.

Parts are fed largest first. Each part 2k-1 adds the increment A_{i,k}, where the
row i is the first zero position of the counter I:

    I_j <- I_j - 1          for j < i
    I_i <- N - k - i + 1
    d_i <- d_i + 1          (action count)

Also here: the two reductions (odd side and hall side) and the inverse map.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    CounterUnderflow,
    EvenPart,
    InvariantViolation,
    NotLectureHall,
    NotOddParty,
    OrderViolation,
    OutOfRange,
    PartTooLarge,
    TableMiss,
)
from .families import check_width, is_lecture_hall, is_odd_party, iter_reduced_odd
from .partition import EMPTY, IncrementVector, Partition, comp_add, comp_sub, union
from .trapezoid import increment, trapezoid_partition


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrowthState:
    """Value-semantics snapshot of the growth machine; feed() returns a new one."""
    N: int
    counter: tuple[int, ...]
    actions: tuple[int, ...]
    mu: IncrementVector = IncrementVector()
    last_part: int | None = None  # None means nothing fed yet (+inf)

    @property
    def image(self) -> Partition:
        return self.mu.to_partition()

    @property
    def next_row(self) -> int:
        """i = min{ j : I_j = 0 }, 1-based."""
        for j, value in enumerate(self.counter, start=1):
            if value == 0:
                return j
        # I_N is always 0, so this means the state was built by hand
        raise CounterUnderflow(self.N, self.counter[-1])


@dataclass(frozen=True)
class TraceStep:
    part: int
    k: int
    row: int
    increment: IncrementVector
    counter: tuple[int, ...]
    actions: tuple[int, ...]
    mu: Partition

    def to_json(self) -> dict:
        return {
            "part": self.part,
            "k": self.k,
            "i": self.row,
            "A": list(self.increment.entries),
            "I": list(self.counter),
            "d": list(self.actions),
            "mu": list(self.mu.parts),
        }


@dataclass(frozen=True)
class ReductionResult:
    reduced: Partition
    counts: tuple[int, ...]  # c_1..c_N, extracted blocks per k

    def to_json(self) -> dict:
        return {"reduced": list(self.reduced.parts), "counts": list(self.counts)}


def new_state(N: int) -> GrowthState:
    if N < 1:
        raise OutOfRange("N", N, ">= 1")
    zeros = (0,) * N
    return GrowthState(N=N, counter=zeros, actions=zeros)


def feed(state: GrowthState, part: int, check: bool = False) -> GrowthState:
    """Append one part, no larger than the previous one."""
    N = state.N
    if part < 1 or part % 2 == 0:
        raise EvenPart(part)
    if part > 2 * N - 1:
        raise PartTooLarge(part, N)
    if state.last_part is not None and part > state.last_part:
        raise OrderViolation(part, state.last_part)

    k = (part + 1) // 2
    i = state.next_row
    reset = N - k - i + 1
    if reset < 0:
        raise CounterUnderflow(i, reset)

    counter = list(state.counter)
    for j in range(i - 1):
        counter[j] -= 1
    counter[i - 1] = reset
    actions = list(state.actions)
    actions[i - 1] += 1

    new = GrowthState(
        N=N,
        counter=tuple(counter),
        actions=tuple(actions),
        mu=comp_add(state.mu, increment(i, k)),
        last_part=part,
    )
    if check:
        check_state(new)
    return new


def check_state(state: GrowthState) -> None:
    """Raise InvariantViolation unless every growth invariant holds."""
    problems = state_violations(state)
    if problems:
        raise InvariantViolation(f"N={state.N} I={state.counter} mu={state.mu}: " + "; ".join(problems))


def state_violations(state: GrowthState) -> list[str]:
    N = state.N
    I, d = state.counter, state.actions
    problems = []

    for j, value in enumerate(I, start=1):
        if not 0 <= value <= N - j:
            problems.append(f"I_{j}={value} outside [0, {N - j}]")
    if state.last_part is not None:
        k = (state.last_part + 1) // 2
        if any(I[N - k:]):
            problems.append(f"I_{N - k + 1}..I_{N} not all zero after part {state.last_part}")
    else:
        k = N

    if not state.mu.is_partition():
        problems.append("image is not a partition")
        return problems
    if not is_lecture_hall(state.mu, N):
        problems.append("image is not in L_N")

    problems.extend(step_identity_violations(state.mu, I, d, N, k))
    return problems


def step_identity_violations(mu: IncrementVector, I, d, N: int, k: int) -> list[str]:
    """
    The linear identities tying the image to counter and action counts:

        mu_{2j-1} = (N-2j+2) d_j - I_j    for j <= k
        mu_{2j}   = (N-2j+1) d_j - I_j    for j <  k

    plus the congruences they imply, wherever the modulus is positive.
    """
    entries = mu.entries

    def at(position: int) -> int:
        return entries[position - 1] if position <= len(entries) else 0

    problems = []

    def check(position: int, modulus: int, count: int, counter: int) -> None:
        if modulus > 0 and (at(position) + counter) % modulus:
            problems.append(f"mu_{position} not congruent to -I mod {modulus}")
        expected = modulus * count - counter
        if at(position) != expected:
            problems.append(f"mu_{position}={at(position)} != {expected}")

    for j in range(1, min(k, N) + 1):
        check(2 * j - 1, N - 2 * j + 2, d[j - 1], I[j - 1])
        if j < k:
            check(2 * j, N - 2 * j + 1, d[j - 1], I[j - 1])
    return problems


def _require_odd_party(N: int, lam: Partition) -> None:
    if N < 1 or not is_odd_party(lam, N):
        raise NotOddParty(lam, N)


def grow(N: int, lam: Partition, check: bool = False) -> GrowthState:
    """Final growth state after feeding every part of lam."""
    _require_odd_party(N, lam)
    state = new_state(N)
    for part in lam.parts:
        state = feed(state, part, check=check)
    return state


def phi(N: int, lam: Partition, check: bool = False) -> Partition:
    """Φ_N(lam); preserves size and sends the length of lam to the alternating size."""
    return grow(N, lam, check=check).image


def trace(N: int, lam: Partition, check: bool = False) -> list[TraceStep]:
    _require_odd_party(N, lam)
    state = new_state(N)
    steps = []
    for part in lam.parts:
        row = state.next_row
        k = (part + 1) // 2
        state = feed(state, part, check=check)
        steps.append(TraceStep(
            part=part,
            k=k,
            row=row,
            increment=increment(row, k),
            counter=state.counter,
            actions=state.actions,
            mu=state.image,
        ))
    return steps


def phi_infinite(k: int, m: int) -> Partition:
    """Infinite-width image of (2k-1)^m: the trapezoid [◇]_{k+m-1,k}."""
    return trapezoid_partition(k + m - 1, k)


# Reductions

def reduce_odd(N: int, lam: Partition) -> ReductionResult:
    """Strip blocks (2k-1)^{N-k+1} until every m_{2k-1} <= N-k."""
    _require_odd_party(N, lam)
    counts = []
    remaining = {}
    for k in range(1, N + 1):
        block = N - k + 1
        c, rest = divmod(lam.multiplicity(2 * k - 1), block)
        counts.append(c)
        if rest:
            remaining[2 * k - 1] = rest
    return ReductionResult(Partition.from_multiplicities(remaining), tuple(counts))


def odd_blocks(N: int, counts: Iterable[int]) -> Partition:
    """⨆_k (2k-1)^{c_k (N-k+1)}."""
    return Partition.from_multiplicities({
        2 * k - 1: c * (N - k + 1) for k, c in enumerate(counts, start=1) if c
    })


def staircase_index(N: int, j: int) -> int:
    """k with [◇]_{N,k} = (N, N-1, ..., N-j+1)."""
    return (j + 1) // 2 if j % 2 else N + 1 - j // 2


def _staircase_rows(entries: list[int], N: int) -> list[int]:
    """Every j where mu_j/(N-j+1) - 1 >= mu_{j+1}/(N-j), 1-based."""
    rows = []
    for j in range(1, len(entries) + 1):
        following = entries[j] if j < len(entries) else 0
        if (entries[j - 1] - (N - j + 1)) * (N - j) >= following * (N - j + 1):
            rows.append(j)
    return rows


def reduce_lh(N: int, mu: Partition, order: str = "smallest") -> ReductionResult:
    """
    Subtract prefix staircases (N, ..., N-j+1) until none fits.

    The staircase of length j is the trapezoid [◇]_{N,k} with k = (j+1)/2 for odd j
    and k = N+1-j/2 for even j; counts[k-1] records how often each was removed.
    """
    if not is_lecture_hall(mu, N):
        raise NotLectureHall(mu, N)
    entries = list(mu.parts)
    counts = [0] * N
    while True:
        rows = _staircase_rows(entries, N)
        if not rows:
            break
        j = rows[0] if order == "smallest" else rows[-1]
        for index in range(j):
            entries[index] -= N - index
        while entries and entries[-1] == 0:
            entries.pop()
        counts[staircase_index(N, j) - 1] += 1
    return ReductionResult(Partition(tuple(entries)), tuple(counts))


def restore_lh(N: int, result: ReductionResult) -> Partition:
    """reduced + Σ_k c_k [◇]_{N,k}, componentwise."""
    total = result.reduced.as_vector()
    for k, c in enumerate(result.counts, start=1):
        for _ in range(c):
            total = comp_add(total, trapezoid_partition(N, k))
    return total.to_partition()


def restore_odd(N: int, result: ReductionResult) -> Partition:
    return union(result.reduced, odd_blocks(N, result.counts))


# Inverse

class InverseTable:
    """Images of ROP_N under Φ_N, built once per width on first use."""

    def __init__(self, N: int):
        check_width(N)
        self.N = N
        self._table: dict[Partition, Partition] | None = None
        self._lock = threading.Lock()

    def _load(self) -> dict[Partition, Partition]:
        if self._table is not None:
            return self._table
        with self._lock:
            if self._table is None:
                table = {}
                for lam in iter_reduced_odd(self.N):
                    table[phi(self.N, lam)] = lam
                logger.debug("inverse table N=%d: %d entries", self.N, len(table))
                self._table = table
        return self._table

    def __len__(self) -> int:
        return len(self._load())

    def preimage(self, reduced: Partition) -> Partition:
        try:
            return self._load()[reduced]
        except KeyError:
            raise TableMiss(reduced, self.N) from None


_tables: dict[int, InverseTable] = {}
_tables_lock = threading.Lock()


def inverse_table(N: int) -> InverseTable:
    with _tables_lock:
        table = _tables.get(N)
        if table is None:
            table = _tables[N] = InverseTable(N)
    return table


def phi_inverse(N: int, mu: Partition) -> Partition:
    """Preimage of mu: reduce, look the reduced part up, put the odd blocks back."""
    check_width(N)
    if not is_lecture_hall(mu, N):
        raise NotLectureHall(mu, N)
    if not mu:
        return EMPTY
    result = reduce_lh(N, mu)
    base = inverse_table(N).preimage(result.reduced)
    return union(base, odd_blocks(N, result.counts))


def block_law_holds(N: int, lam: Partition, k: int) -> bool:
    """Φ_N(lam ⊔ (2k-1)^{N-k+1}) = Φ_N(lam) + [◇]_{N,k}."""
    block = Partition(((2 * k - 1),) * (N - k + 1))
    grown = phi(N, union(lam, block))
    expected = comp_add(phi(N, lam), trapezoid_partition(N, k))
    return comp_sub(grown, expected).stripped() == ()


__all__ = [
    "GrowthState",
    "TraceStep",
    "ReductionResult",
    "InverseTable",
    "new_state",
    "feed",
    "grow",
    "phi",
    "trace",
    "phi_infinite",
    "reduce_odd",
    "reduce_lh",
    "restore_lh",
    "restore_odd",
    "odd_blocks",
    "phi_inverse",
    "inverse_table",
    "block_law_holds",
    "check_state",
    "state_violations",
    "staircase_index",
]
