"""
Generating-function identities: both sides computed independently, the set side by
enumeration and the product side by series arithmetic, then compared coefficient by
coefficient inside a window.

Polynomial identities are compared on a window wider than their degree, so the check
also confirms that nothing survives past the degree.
"""

import logging
import math

from ..families import (
    enumerate_lh_up_to,
    enumerate_op_up_to,
    enumerate_reduced_lh,
    enumerate_reduced_odd,
)
from ..protocol import Identity, StatKind, VerificationReport
from ..series import (
    BiSeries,
    bounded_multiplicity_product,
    gf_of_partitions,
    q_analogue_product,
    reduced_degree,
    reduced_t_degree,
    rhs_lhp,
    rhs_reduced_lhp,
    rhs_refined_lhp,
    rhs_refined_rlhp,
    rhs_trapezoid_blocks,
)
from ..trapezoid import trapezoid_number, triangular_difference
from .base import BaseVerifier


logger = logging.getLogger(__name__)


def compare(label: str, lhs: BiSeries, rhs: BiSeries) -> dict | None:
    """First differing coefficient as a counterexample, or None."""
    diff = lhs.first_difference(rhs)
    if diff is None:
        return None
    a, b, left, right = diff
    logger.debug("%s differs at t^%d q^%d: %d != %d", label, a, b, left, right)
    return {"comparison": label, "t": a, "q": b, "lhs": left, "rhs": right}


def first_counterexample(*results: dict | None) -> dict | None:
    return next((r for r in results if r is not None), None)


def q_coefficients(series: BiSeries, degree: int) -> list[int]:
    return [series.coefficient(0, b) for b in range(degree + 1)]


class ReducedLectureHallVerifier(BaseVerifier):
    """Σ_{RL_N} q^|μ| = Σ_{ROP_N} q^|λ| = ∏_k (1 - q^{◇_{N,k}}) / (1 - q^{2k-1})."""
    max_parameter = 8

    @property
    def name(self) -> str:
        return Identity.RLHP.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        N = value
        degree = reduced_degree(N)
        wide = degree + 2 * N
        rhs = rhs_reduced_lhp(N, qmax=wide)
        hall = gf_of_partitions(enumerate_reduced_lh(N), qmax=wide)
        odd = gf_of_partitions(enumerate_reduced_odd(N), qmax=wide)
        counterexample = first_counterexample(
            compare("RL_N vs product", hall, rhs),
            compare("ROP_N vs product", odd, rhs),
        )
        coefficient_sum = rhs.total()
        if counterexample is None and coefficient_sum != math.factorial(N):
            counterexample = {"comparison": "coefficient sum vs N!", "lhs": coefficient_sum,
                              "rhs": math.factorial(N)}
        return VerificationReport(
            identity=self.name,
            params={"N": N},
            passed=counterexample is None,
            window={"qmax": degree, "tmax": 0},
            counterexample=counterexample,
            details={
                "degree": degree,
                "checked_through": wide,
                "coefficients": q_coefficients(rhs, degree),
                "coefficient_sum": coefficient_sum,
            },
        )


class LectureHallVerifier(BaseVerifier):
    """Σ_{L_N} q^|μ| = Σ_{OP_N} q^|λ| = ∏_k 1 / (1 - q^{2k-1}), truncated at qmax."""
    max_parameter = 6
    uses_qmax = True
    default_qmax = 60

    @property
    def name(self) -> str:
        return Identity.LHP.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        N = value
        qmax = self.default_qmax if qmax is None else qmax
        rhs = rhs_lhp(N, qmax)
        hall = gf_of_partitions(enumerate_lh_up_to(N, qmax), qmax=qmax)
        odd = gf_of_partitions(enumerate_op_up_to(N, qmax), qmax=qmax)
        counterexample = first_counterexample(
            compare("L_N vs product", hall, rhs),
            compare("OP_N vs product", odd, rhs),
        )
        return VerificationReport(
            identity=self.name,
            params={"N": N, "qmax": qmax},
            passed=counterexample is None,
            window={"qmax": qmax, "tmax": 0},
            counterexample=counterexample,
            details={"terms": rhs.total()},
        )


class RefinedLectureHallVerifier(BaseVerifier):
    """Σ_{OP_N} t^ℓ(λ) q^|λ| = Σ_{L_N} t^|μ|_a q^|μ| = ∏_k 1 / (1 - t q^{2k-1})."""
    max_parameter = 5
    uses_qmax = True
    default_qmax = 40

    @property
    def name(self) -> str:
        return Identity.REFINED_LHP.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        N = value
        qmax = self.default_qmax if qmax is None else qmax
        rhs = rhs_refined_lhp(N, qmax, qmax)
        odd = gf_of_partitions(enumerate_op_up_to(N, qmax), StatKind.LENGTH, qmax, qmax)
        hall = gf_of_partitions(enumerate_lh_up_to(N, qmax), StatKind.ALT_SIZE, qmax, qmax)
        counterexample = first_counterexample(
            compare("OP_N by length vs product", odd, rhs),
            compare("L_N by alternating size vs product", hall, rhs),
            compare("t=1 vs unrefined product", rhs.at_t_equals_one(), rhs_lhp(N, qmax)),
        )
        return VerificationReport(
            identity=self.name,
            params={"N": N, "qmax": qmax},
            passed=counterexample is None,
            window={"qmax": qmax, "tmax": qmax},
            counterexample=counterexample,
            details={"terms": rhs.total()},
        )


class RefinedReducedVerifier(BaseVerifier):
    """Σ_{ROP_N} t^ℓ(λ) q^|λ| = Σ_{RL_N} t^|μ|_a q^|μ| = ∏_k (1 - t^{N-k+1} q^{◇_{N,k}}) / (1 - t q^{2k-1})."""
    max_parameter = 8

    @property
    def name(self) -> str:
        return Identity.REFINED_RLHP.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        N = value
        degree, t_degree = reduced_degree(N), reduced_t_degree(N)
        wide, t_wide = degree + 2 * N, t_degree + N
        rhs = rhs_refined_rlhp(N, wide, t_wide)
        odd = gf_of_partitions(enumerate_reduced_odd(N), StatKind.LENGTH, wide, t_wide)
        hall = gf_of_partitions(enumerate_reduced_lh(N), StatKind.ALT_SIZE, wide, t_wide)
        counterexample = first_counterexample(
            compare("ROP_N by length vs product", odd, rhs),
            compare("RL_N by alternating size vs product", hall, rhs),
            compare("t=1 vs unrefined product", rhs.at_t_equals_one(), rhs_reduced_lhp(N, wide)),
        )
        exact = rhs.truncate(degree, t_degree)
        return VerificationReport(
            identity=self.name,
            params={"N": N},
            passed=counterexample is None,
            window={"qmax": degree, "tmax": t_degree},
            counterexample=counterexample,
            details={
                "checked_through": {"qmax": wide, "tmax": t_wide},
                "polynomial": str(exact) if N <= 4 else None,
                "coefficient_sum": exact.total(),
            },
        )


class QAnalogueVerifier(BaseVerifier):
    """
    ∏_k (1 - q^{e_k}) / (1 - q^{2k-1}) = ∏_k Σ_{i=0}^{n-k} q^{i(2k-1)} = Σ_{ROP_n} q^|λ|.

    The exponents e_k = ◇_{n,k} (equivalently C(n+1,2) - C(k,2), a rearrangement of the
    same multiset) give the identity. The exponents C(n,2) - C(k-1,2) are evaluated too
    and their outcome is recorded, not used for the verdict.
    """
    parameter = "n"
    max_parameter = 9
    uses_qmax = True
    default_qmax = 40

    @property
    def name(self) -> str:
        return Identity.Q_ANALOGUE_2.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        n = value
        qmax = self.default_qmax if qmax is None else qmax
        trapezoidal = [trapezoid_number(n, k) for k in range(1, n + 1)]
        triangular = [triangular_difference(n, k) for k in range(1, n + 1)]
        shifted = [math.comb(n, 2) - math.comb(k - 1, 2) for k in range(1, n + 1)]

        bounded = bounded_multiplicity_product(n, qmax)
        odd = gf_of_partitions(
            (lam for lam in enumerate_reduced_odd(n) if lam.size <= qmax), qmax=qmax
        )
        counterexample = first_counterexample(
            compare("trapezoidal exponents vs bounded product", q_analogue_product(trapezoidal, n, qmax), bounded),
            compare("triangular exponents vs bounded product", q_analogue_product(triangular, n, qmax), bounded),
            compare("ROP_n vs bounded product", odd, bounded),
        )
        shifted_difference = compare(
            "shifted exponents vs bounded product", q_analogue_product(shifted, n, qmax), bounded
        )
        notes = []
        if shifted_difference is not None:
            notes.append(
                f"exponents C(n,2)-C(k-1,2) = {shifted} do not give the generating function; "
                f"the trapezoidal exponents {trapezoidal} do"
            )
        return VerificationReport(
            identity=self.name,
            params={"n": n, "qmax": qmax},
            passed=counterexample is None,
            window={"qmax": qmax, "tmax": 0},
            counterexample=counterexample,
            details={
                "exponents": trapezoidal,
                "shifted_exponents": {
                    "exponents": shifted,
                    "holds": shifted_difference is None,
                    "first_difference": shifted_difference,
                },
            },
            notes=notes,
        )


class FactorizationVerifier(BaseVerifier):
    """
    Stripping trapezoid blocks factors both full families through the reduced ones:

        Σ_{OP_N} q^|λ| = ∏_k 1 / (1 - q^{◇_{N,k}}) · Σ_{ROP_N} q^|λ|
        Σ_{L_N}  q^|μ| = ∏_k 1 / (1 - q^{◇_{N,k}}) · Σ_{RL_N}  q^|μ|
    """
    max_parameter = 6
    uses_qmax = True
    default_qmax = 40

    @property
    def name(self) -> str:
        return Identity.FACTORIZATION.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        N = value
        qmax = self.default_qmax if qmax is None else qmax
        blocks = rhs_trapezoid_blocks(N, qmax)
        reduced_odd = gf_of_partitions(
            (lam for lam in enumerate_reduced_odd(N) if lam.size <= qmax), qmax=qmax
        )
        reduced_hall = gf_of_partitions(
            (mu for mu in enumerate_reduced_lh(N) if mu.size <= qmax), qmax=qmax
        )
        odd = gf_of_partitions(enumerate_op_up_to(N, qmax), qmax=qmax)
        hall = gf_of_partitions(enumerate_lh_up_to(N, qmax), qmax=qmax)
        counterexample = first_counterexample(
            compare("OP_N vs blocks * ROP_N", odd, blocks * reduced_odd),
            compare("L_N vs blocks * RL_N", hall, blocks * reduced_hall),
        )
        return VerificationReport(
            identity=self.name,
            params={"N": N, "qmax": qmax},
            passed=counterexample is None,
            window={"qmax": qmax, "tmax": 0},
            counterexample=counterexample,
            details={"block_sizes": [trapezoid_number(N, k) for k in range(1, N + 1)]},
        )
