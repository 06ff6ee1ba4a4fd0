"""
Structural checks on the growth map: the step identities, the block law, bijectivity
and roundtrips, cardinalities, and the alternating sizes of trapezoids.
"""

import logging
import math

import numpy as np

from ..bijection import (
    block_law_holds,
    grow,
    phi,
    phi_inverse,
    reduce_lh,
    reduce_odd,
    restore_lh,
    restore_odd,
    staircase_index,
)
from ..errors import HallforgeError, InvariantViolation
from ..families import (
    enumerate_lh_up_to,
    enumerate_op_up_to,
    enumerate_reduced_lh,
    enumerate_reduced_lh_by_filter,
    enumerate_reduced_odd,
    is_lecture_hall,
    is_reduced_lh,
    is_reduced_odd,
)
from ..partition import Partition, canonical_order, union
from ..protocol import Identity, VerificationReport
from ..trapezoid import increment, trapezoid_partition
from .base import BaseVerifier


logger = logging.getLogger(__name__)


def random_odd_partitions(N: int, count: int, max_size: int, seed: int) -> list[Partition]:
    """Reproducible sample of OP_N with sizes <= max_size."""
    rng = np.random.default_rng(seed)
    sample = []
    for _ in range(count):
        budget = int(rng.integers(0, max_size + 1))
        multiplicities = {}
        for k in rng.permutation(np.arange(1, N + 1)):
            part = 2 * int(k) - 1
            m = int(rng.integers(0, budget // part + 1))
            if m:
                multiplicities[part] = m
                budget -= m * part
        sample.append(Partition.from_multiplicities(multiplicities))
    return sample


def action_step_violations(actions: tuple[int, ...]) -> list[str]:
    return [
        f"d_{j}-d_{j + 1}={actions[j - 1] - actions[j]}"
        for j in range(1, len(actions))
        if not 0 <= actions[j - 1] - actions[j] <= 1
    ]


class StepIdentityVerifier(BaseVerifier):
    """
    Step identities and congruences after every feed (exhaustive ROP_N plus a random
    OP_N sample), unit steps of the action counts on ROP_N, and the block law with
    counter restoration for every k.
    """
    max_parameter = 7
    uses_qmax = True
    default_qmax = 60

    def __init__(self, samples: int = 10_000, seed: int = 0, block_samples: int = 200):
        self.samples = samples
        self.seed = seed
        self.block_samples = block_samples

    @property
    def name(self) -> str:
        return Identity.LEMMAS.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        N = value
        qmax = self.default_qmax if qmax is None else qmax
        reduced = canonical_order(enumerate_reduced_odd(N))
        sample = random_odd_partitions(N, self.samples, qmax, seed=self.seed + N)
        counterexample = None

        for lam in reduced + sample:
            try:
                state = grow(N, lam, check=True)
            except InvariantViolation as e:
                counterexample = {"check": "step identities", "input": str(lam), "error": str(e)}
                break
            if is_reduced_odd(lam, N):
                problems = action_step_violations(state.actions)
                if problems:
                    counterexample = {"check": "action count steps", "input": str(lam),
                                      "d": list(state.actions), "error": "; ".join(problems)}
                    break

        block_inputs = reduced + sample[: self.block_samples]
        if counterexample is None:
            counterexample = self._block_law(N, block_inputs)

        return VerificationReport(
            identity=self.name,
            params={"N": N, "qmax": qmax},
            passed=counterexample is None,
            window={"qmax": qmax, "tmax": 0},
            counterexample=counterexample,
            details={
                "reduced_inputs": len(reduced),
                "random_inputs": len(sample),
                "block_law_inputs": len(block_inputs),
                "seed": self.seed + N,
            },
        )

    @staticmethod
    def _block_law(N: int, inputs: list[Partition]) -> dict | None:
        for k in range(1, N + 1):
            block = Partition((2 * k - 1,) * (N - k + 1))
            for lam in inputs:
                if not block_law_holds(N, lam, k):
                    return {"check": "block law", "input": str(lam), "k": k}
                if grow(N, union(lam, block)).counter != grow(N, lam).counter:
                    return {"check": "counter restoration", "input": str(lam), "k": k}
        return None


class BijectionVerifier(BaseVerifier):
    """
    Exhaustive: ROP_N -> RL_N is a size-preserving bijection sending length to alternating size.
    Truncated at qmax: inverse roundtrips both ways, reductions commute with the map, and
    the hall-side reduction does not depend on which violation is removed first.
    """
    max_parameter = 7
    uses_qmax = True
    default_qmax = 40

    @property
    def name(self) -> str:
        return Identity.BIJECTION.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        N = value
        qmax = self.default_qmax if qmax is None else qmax
        odd = canonical_order(enumerate_op_up_to(N, qmax))
        hall = canonical_order(enumerate_lh_up_to(N, qmax))
        counterexample = (
            self._reduced_bijection(N)
            or self._odd_side(N, odd)
            or self._hall_side(N, hall)
        )
        return VerificationReport(
            identity=self.name,
            params={"N": N, "qmax": qmax},
            passed=counterexample is None,
            window={"qmax": qmax, "tmax": 0},
            counterexample=counterexample,
            details={
                "reduced_pairs": math.factorial(N),
                "odd_inputs": len(odd),
                "hall_inputs": len(hall),
            },
        )

    @staticmethod
    def _reduced_bijection(N: int) -> dict | None:
        images = {}
        for lam in canonical_order(enumerate_reduced_odd(N)):
            mu = phi(N, lam)
            if mu.size != lam.size or mu.alt_size != lam.length:
                return {"check": "statistics", "input": str(lam), "image": str(mu)}
            if mu in images:
                return {"check": "injectivity", "input": str(lam), "other": str(images[mu]), "image": str(mu)}
            images[mu] = lam
        missing = canonical_order(enumerate_reduced_lh(N) - set(images))
        if missing:
            return {"check": "surjectivity", "missing": str(missing[0])}
        return None

    @staticmethod
    def _odd_side(N: int, odd: list[Partition]) -> dict | None:
        seen = set()
        for lam in odd:
            mu = phi(N, lam)
            if not is_lecture_hall(mu, N) or mu.size != lam.size or mu.alt_size != lam.length:
                return {"check": "image in L_N", "input": str(lam), "image": str(mu)}
            if mu in seen:
                return {"check": "injectivity", "input": str(lam), "image": str(mu)}
            seen.add(mu)
            if is_reduced_odd(lam, N) != is_reduced_lh(mu, N):
                return {"check": "reduced preserved", "input": str(lam), "image": str(mu)}
            try:
                back = phi_inverse(N, mu)
            except HallforgeError as e:
                return {"check": "inverse", "input": str(lam), "error": str(e)}
            if back != lam:
                return {"check": "inverse after map", "input": str(lam), "result": str(back)}
            stripped = reduce_odd(N, lam)
            if restore_odd(N, stripped) != lam:
                return {"check": "odd reduction restores", "input": str(lam)}
            folded = reduce_lh(N, mu)
            if folded.counts != stripped.counts or folded.reduced != phi(N, stripped.reduced):
                return {"check": "reductions commute", "input": str(lam),
                        "odd": stripped.to_json(), "hall": folded.to_json()}
        return None

    @staticmethod
    def _hall_side(N: int, hall: list[Partition]) -> dict | None:
        for mu in hall:
            smallest = reduce_lh(N, mu, order="smallest")
            largest = reduce_lh(N, mu, order="largest")
            if smallest != largest:
                return {"check": "reduction order", "input": str(mu),
                        "smallest": smallest.to_json(), "largest": largest.to_json()}
            if restore_lh(N, smallest) != mu:
                return {"check": "hall reduction restores", "input": str(mu)}
            if phi(N, phi_inverse(N, mu)) != mu:
                return {"check": "map after inverse", "input": str(mu)}
        return None


class CardinalityVerifier(BaseVerifier):
    """|RL_N| = |ROP_N| = N!; the recursion is cross-checked against filtering L_N for N <= 6."""
    max_parameter = 8
    filter_limit = 6

    @property
    def name(self) -> str:
        return Identity.CARDINALITY.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        N = value
        expected = math.factorial(N)
        hall = enumerate_reduced_lh(N)
        odd = enumerate_reduced_odd(N)
        counterexample = None
        if len(hall) != expected or len(odd) != expected:
            counterexample = {"check": "count", "rl": len(hall), "rop": len(odd), "factorial": expected}

        filtered = None
        if N <= self.filter_limit:
            filtered = enumerate_reduced_lh_by_filter(N) == hall
            if not filtered and counterexample is None:
                counterexample = {"check": "recursion vs filter"}

        return VerificationReport(
            identity=self.name,
            params={"N": N},
            passed=counterexample is None,
            counterexample=counterexample,
            details={
                "rl": len(hall),
                "rop": len(odd),
                "factorial": expected,
                "filter_agrees": filtered,
                "op": "infinite",
            },
            notes=["OP_N is infinite; the finite count N! is that of ROP_N"],
        )


class ErrataVerifier(BaseVerifier):
    """
    Alternating sizes and staircase indices of trapezoids at width N:
    |[◇]_{N,k}|_a = N-k+1 (never k unless 2k = N+1), |A_{i,k}|_a = 1, and the staircase of
    length j is [◇]_{N,k} with k = (j+1)/2 (j odd) or N+1-j/2 (j even).
    """
    max_parameter = 20

    @property
    def name(self) -> str:
        return Identity.ERRATA.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        N = value
        counterexample = None
        alt_sizes = [trapezoid_partition(N, k).alt_size for k in range(1, N + 1)]
        for k, a in enumerate(alt_sizes, start=1):
            if a != N - k + 1:
                counterexample = {"check": "trapezoid alternating size", "k": k, "alt_size": a,
                                  "expected": N - k + 1}
                break

        if counterexample is None:
            for k in range(1, N + 1):
                for i in range(1, N + 1):
                    if increment(i, k).alt_size != 1:
                        counterexample = {"check": "increment alternating size", "i": i, "k": k}
                        break
                if counterexample is not None:
                    break

        if counterexample is None:
            for j in range(1, N + 1):
                staircase = Partition(tuple(range(N, N - j, -1)))
                k = staircase_index(N, j)
                if trapezoid_partition(N, k) != staircase:
                    counterexample = {"check": "staircase index", "j": j, "k": k}
                    break

        claimed_k = next(
            ({"k": k, "alt_size": a} for k, a in enumerate(alt_sizes, start=1) if a != k), None
        )
        notes = []
        if claimed_k is not None:
            notes.append(
                f"alternating size of the trapezoid is N-k+1, not k: "
                f"at N={N}, k={claimed_k['k']} it is {claimed_k['alt_size']}"
            )
        even_indices = [2 * N - j + 1 for j in range(2, N + 1, 2)]
        return VerificationReport(
            identity=self.name,
            params={"N": N},
            passed=counterexample is None,
            counterexample=counterexample,
            details={
                "alt_sizes": alt_sizes,
                "equals_k": claimed_k is None,
                "first_k_mismatch": claimed_k,
                "even_staircase_odd_parts": even_indices,
                "even_staircase_indices": [staircase_index(N, j) for j in range(2, N + 1, 2)],
            },
            notes=notes,
        )
