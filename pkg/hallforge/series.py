"""
Truncated bivariate formal series in t (statistic) and q (size).

A BiSeries keeps the exact integer coefficients of t^a q^b for a <= tmax and
b <= qmax in an int64 array. Products check a coefficient bound before
convolving, so the window never wraps silently.
"""

import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DivergentFactor, OutOfRange, SeriesOverflow, WindowMismatch, WindowOverflow
from .families import check_width, max_reduced_size
from .partition import INT64_MAX, Partition
from .protocol import StatKind
from .trapezoid import trapezoid_number


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BiSeries:
    """Coefficients indexed [t-degree, q-degree]."""
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.int64, copy=True)
        if coeffs.ndim != 2:
            raise ValueError("BiSeries needs a 2-D coefficient array")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def tmax(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def qmax(self) -> int:
        return self.coeffs.shape[1] - 1

    @property
    def window(self) -> tuple[int, int]:
        return (self.qmax, self.tmax)

    @classmethod
    def zero(cls, qmax: int, tmax: int = 0) -> "BiSeries":
        if qmax < 0 or tmax < 0:
            raise OutOfRange("window", (qmax, tmax), "non-negative")
        return cls(np.zeros((tmax + 1, qmax + 1), dtype=np.int64))

    @classmethod
    def one(cls, qmax: int, tmax: int = 0) -> "BiSeries":
        coeffs = np.zeros((tmax + 1, qmax + 1), dtype=np.int64)
        coeffs[0, 0] = 1
        return cls(coeffs)

    @classmethod
    def monomial(cls, a_t: int, b_q: int, qmax: int, tmax: int = 0, coeff: int = 1) -> "BiSeries":
        coeffs = np.zeros((tmax + 1, qmax + 1), dtype=np.int64)
        if a_t <= tmax and b_q <= qmax:
            coeffs[a_t, b_q] = coeff
        return cls(coeffs)

    def coefficient(self, a: int, b: int) -> int:
        return int(self.coeffs[a, b])

    def _check_window(self, other: "BiSeries") -> None:
        if self.window != other.window:
            raise WindowMismatch(self.window, other.window)

    def l1_norm(self) -> int:
        return sum(abs(int(x)) for x in self.coeffs.flat if x)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check_window(other)
        if self.l1_norm() + other.l1_norm() > INT64_MAX:
            raise SeriesOverflow(self.l1_norm() + other.l1_norm())
        return BiSeries(self.coeffs + other.coeffs)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        self._check_window(other)
        if self.l1_norm() + other.l1_norm() > INT64_MAX:
            raise SeriesOverflow(self.l1_norm() + other.l1_norm())
        return BiSeries(self.coeffs - other.coeffs)

    def __neg__(self) -> "BiSeries":
        return BiSeries(-self.coeffs)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        self._check_window(other)
        # Every windowed coefficient is bounded by the product of the l1 norms
        bound = self.l1_norm() * other.l1_norm()
        if bound > INT64_MAX:
            raise SeriesOverflow(bound)
        tmax, qmax = self.tmax, self.qmax
        result = np.zeros_like(self.coeffs)
        for a, b in zip(*np.nonzero(self.coeffs)):
            result[a:, b:] += self.coeffs[a, b] * other.coeffs[: tmax + 1 - a, : qmax + 1 - b]
        return BiSeries(result)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.window == other.window and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.window, self.coeffs.tobytes()))

    def at_t_equals_one(self) -> "BiSeries":
        """Collapse the t marker: coefficients of q^b summed over t-degree."""
        return BiSeries(self.coeffs.sum(axis=0, keepdims=True))

    def total(self) -> int:
        """Sum of all windowed coefficients (evaluation at t = q = 1 for polynomials)."""
        return sum(int(x) for x in self.coeffs.flat)

    def truncate(self, qmax: int, tmax: int | None = None) -> "BiSeries":
        tmax = self.tmax if tmax is None else tmax
        return BiSeries(self.coeffs[: tmax + 1, : qmax + 1])

    def first_difference(self, other: "BiSeries") -> tuple[int, int, int, int] | None:
        """(a, b, self coefficient, other coefficient) at the first differing index."""
        self._check_window(other)
        # scan by q-degree first so the report names the smallest size
        diff = np.argwhere((self.coeffs != other.coeffs).T)
        if len(diff) == 0:
            return None
        b, a = diff[0]
        return int(a), int(b), self.coefficient(a, b), other.coefficient(a, b)

    def terms(self) -> list[tuple[int, int, int]]:
        """Nonzero (t-degree, q-degree, coefficient), ordered by q then t."""
        found = [(int(a), int(b), int(self.coeffs[a, b])) for a, b in zip(*np.nonzero(self.coeffs))]
        return sorted(found, key=lambda term: (term[1], term[0]))

    def to_json(self) -> dict:
        return {
            "qmax": self.qmax,
            "tmax": self.tmax,
            "terms": [list(term) for term in self.terms()],
        }

    def __str__(self) -> str:
        pieces = []
        for a, b, c in self.terms():
            monomial = "".join(
                name if deg == 1 else f"{name}^{deg}"
                for name, deg in (("t", a), ("q", b)) if deg
            )
            if not monomial:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(monomial)
            elif c == -1:
                pieces.append("-" + monomial)
            else:
                pieces.append(f"{c}{monomial}")
        return " + ".join(pieces).replace("+ -", "- ") if pieces else "0"


def one(qmax: int, tmax: int = 0) -> BiSeries:
    return BiSeries.one(qmax, tmax)


def add(a: BiSeries, b: BiSeries) -> BiSeries:
    return a + b


def mul(a: BiSeries, b: BiSeries) -> BiSeries:
    return a * b


def product(factors: Iterable[BiSeries], qmax: int, tmax: int = 0) -> BiSeries:
    result = BiSeries.one(qmax, tmax)
    for factor in factors:
        result = result * factor
    return result


def geometric_factor(a_t: int, b_q: int, qmax: int, tmax: int = 0) -> BiSeries:
    """1 / (1 - t^{a_t} q^{b_q}) = Σ_j t^{j a_t} q^{j b_q}, truncated."""
    if b_q < 1:
        raise DivergentFactor()
    coeffs = np.zeros((tmax + 1, qmax + 1), dtype=np.int64)
    j = 0
    while j * b_q <= qmax and j * a_t <= tmax:
        coeffs[j * a_t, j * b_q] = 1
        j += 1
    return BiSeries(coeffs)


def finite_factor(a_t: int, b_q: int, qmax: int, tmax: int = 0) -> BiSeries:
    """1 - t^{a_t} q^{b_q}."""
    return BiSeries.one(qmax, tmax) - BiSeries.monomial(a_t, b_q, qmax, tmax)


def statistic(lam: Partition, t_stat: StatKind | str) -> int:
    kind = StatKind(t_stat)
    if kind is StatKind.LENGTH:
        return lam.length
    if kind is StatKind.ALT_SIZE:
        return lam.alt_size
    return 0


def gf_of_partitions(items: Iterable[Partition], t_stat: StatKind | str = StatKind.NONE,
                     qmax: int = 0, tmax: int = 0) -> BiSeries:
    """Σ t^{stat} q^{size} over items; every item must fall inside the window."""
    coeffs = np.zeros((tmax + 1, qmax + 1), dtype=np.int64)
    count = 0
    for lam in items:
        stat = statistic(lam, t_stat)
        if lam.size > qmax or not 0 <= stat <= tmax:
            raise WindowOverflow(lam, stat, lam.size, (qmax, tmax))
        coeffs[stat, lam.size] += 1
        count += 1
    logger.debug("generating function of %d partitions, window q<=%d t<=%d", count, qmax, tmax)
    return BiSeries(coeffs)


# Product sides

def reduced_degree(N: int) -> int:
    return max_reduced_size(N)


def reduced_t_degree(N: int) -> int:
    """Largest alternating size in RL_N: Σ_k (N-k)."""
    return N * (N - 1) // 2


def rhs_reduced_lhp(N: int, qmax: int | None = None) -> BiSeries:
    """∏_k (1 - q^{◇_{N,k}}) / (1 - q^{2k-1}); the default window is its exact degree."""
    check_width(N, limit=8)
    qmax = reduced_degree(N) if qmax is None else qmax
    factors = []
    for k in range(1, N + 1):
        factors.append(finite_factor(0, trapezoid_number(N, k), qmax))
        factors.append(geometric_factor(0, 2 * k - 1, qmax))
    return product(factors, qmax)


def rhs_lhp(N: int, qmax: int) -> BiSeries:
    """∏_k 1 / (1 - q^{2k-1}), truncated at qmax."""
    check_width(N)
    return product((geometric_factor(0, 2 * k - 1, qmax) for k in range(1, N + 1)), qmax)


def rhs_refined_lhp(N: int, qmax: int, tmax: int | None = None) -> BiSeries:
    """∏_k 1 / (1 - t q^{2k-1}); tmax defaults to qmax, which loses nothing."""
    check_width(N)
    tmax = qmax if tmax is None else tmax
    return product((geometric_factor(1, 2 * k - 1, qmax, tmax) for k in range(1, N + 1)), qmax, tmax)


def rhs_refined_rlhp(N: int, qmax: int | None = None, tmax: int | None = None) -> BiSeries:
    """∏_k (1 - t^{N-k+1} q^{◇_{N,k}}) / (1 - t q^{2k-1}), at its exact bidegree."""
    check_width(N, limit=8)
    qmax = reduced_degree(N) if qmax is None else qmax
    tmax = reduced_t_degree(N) if tmax is None else tmax
    factors = []
    for k in range(1, N + 1):
        factors.append(finite_factor(N - k + 1, trapezoid_number(N, k), qmax, tmax))
        factors.append(geometric_factor(1, 2 * k - 1, qmax, tmax))
    return product(factors, qmax, tmax)


def rhs_trapezoid_blocks(N: int, qmax: int) -> BiSeries:
    """∏_k 1 / (1 - q^{◇_{N,k}}): one geometric series per extracted block size."""
    check_width(N)
    return product((geometric_factor(0, trapezoid_number(N, k), qmax) for k in range(1, N + 1)), qmax)


def q_analogue_product(exponents: Iterable[int], n: int, qmax: int) -> BiSeries:
    """∏_k (1 - q^{e_k}) / (1 - q^{2k-1}) for the given numerator exponents."""
    factors = []
    for k, e in enumerate(exponents, start=1):
        factors.append(finite_factor(0, e, qmax))
        factors.append(geometric_factor(0, 2 * k - 1, qmax))
    return product(factors, qmax)


def bounded_multiplicity_product(n: int, qmax: int) -> BiSeries:
    """∏_k Σ_{i=0}^{n-k} q^{i(2k-1)}."""
    factors = []
    for k in range(1, n + 1):
        coeffs = np.zeros((1, qmax + 1), dtype=np.int64)
        for i in range(n - k + 1):
            if i * (2 * k - 1) <= qmax:
                coeffs[0, i * (2 * k - 1)] = 1
        factors.append(BiSeries(coeffs))
    return product(factors, qmax)
