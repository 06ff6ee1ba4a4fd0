"""
Base verifier interface.
Every identity driver inherits from BaseVerifier and checks one parameter point at a time.
"""

import logging
import time
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor

from ..errors import HallforgeError
from ..protocol import ReportBundle, VerificationReport


logger = logging.getLogger(__name__)


class VerificationError(HallforgeError):
    """Unknown identity or parameters outside the identity's guard."""
    pass


class BaseVerifier(ABC):
    """Abstract base class for identity verifiers."""

    # name of the grid parameter ("N" for widths, "n" for the factorial identity)
    parameter: str = "N"
    max_parameter: int = 9
    uses_qmax: bool = False
    default_qmax: int | None = None

    @property
    @abstractmethod
    def name(self) -> str:
        """Identity name as used on the command line."""
        pass

    @abstractmethod
    def check(self, value: int, qmax: int | None = None) -> VerificationReport:
        """
        Verify the identity at one parameter point.

        Args:
            value: width N (or order n)
            qmax: truncation order in q, for identities that need one

        Returns:
            VerificationReport with the first counterexample on failure
        """
        pass

    def validate(self, value: int, qmax: int | None) -> None:
        if not 1 <= value <= self.max_parameter:
            raise VerificationError(
                f"{self.name}: {self.parameter}={value} outside [1, {self.max_parameter}]"
            )
        if qmax is not None and qmax < 0:
            raise VerificationError(f"{self.name}: qmax={qmax} must be non-negative")

    def timed_check(self, value: int, qmax: int | None = None) -> VerificationReport:
        start = time.time()
        report = self.check(value, qmax)
        report.wall_time = time.time() - start
        logger.info(
            "%s %s=%d: %s in %.3fs",
            self.name, self.parameter, value, "pass" if report.passed else "FAIL", report.wall_time,
        )
        return report

    def run(self, values: list[int], qmax: int | None = None, threads: int = 1) -> ReportBundle:
        """Check every parameter point; reports come back in parameter order."""
        if self.uses_qmax and qmax is None:
            qmax = self.default_qmax
        for value in values:
            self.validate(value, qmax)
        if threads <= 1 or len(values) <= 1:
            reports = [self.timed_check(v, qmax) for v in values]
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                reports = list(pool.map(lambda v: self.timed_check(v, qmax), values))
        return ReportBundle(identity=self.name, reports=reports)
