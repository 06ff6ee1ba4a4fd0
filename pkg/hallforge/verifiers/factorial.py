"""
Factorial identity over trapezoidal numbers, and the multiset identity behind it.
"""

from ..protocol import Identity, VerificationReport
from ..trapezoid import factorial_identity_check, skip_permutation_check
from .base import BaseVerifier


class FactorialVerifier(BaseVerifier):
    parameter = "n"
    max_parameter = 20

    @property
    def name(self) -> str:
        return Identity.THM_2_1.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        return factorial_identity_check(value)


class SkipVerifier(BaseVerifier):
    parameter = "n"
    max_parameter = 60

    @property
    def name(self) -> str:
        return Identity.SKIP.value

    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        return skip_permutation_check(value)
