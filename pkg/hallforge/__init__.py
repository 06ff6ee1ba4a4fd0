"""
Lecture hall partitions of width N, the growth bijection from N-party odd partitions,
and machine checks of the identities around them.
"""

from .bijection import grow, phi, phi_infinite, phi_inverse, reduce_lh, reduce_odd, trace
from .families import (
    enumerate_family,
    enumerate_lh_up_to,
    enumerate_op_up_to,
    enumerate_reduced_lh,
    enumerate_reduced_odd,
    is_lecture_hall,
    is_odd_party,
    is_reduced_lh,
    is_reduced_odd,
)
from .partition import EMPTY, IncrementVector, Partition, parse_partition
from .trapezoid import increment, trapezoid_number, trapezoid_partition

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "IncrementVector",
    "Partition",
    "parse_partition",
    "trapezoid_number",
    "trapezoid_partition",
    "increment",
    "is_lecture_hall",
    "is_reduced_lh",
    "is_odd_party",
    "is_reduced_odd",
    "enumerate_reduced_lh",
    "enumerate_reduced_odd",
    "enumerate_lh_up_to",
    "enumerate_op_up_to",
    "enumerate_family",
    "grow",
    "phi",
    "phi_infinite",
    "phi_inverse",
    "trace",
    "reduce_odd",
    "reduce_lh",
]
